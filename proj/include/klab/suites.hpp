#ifndef KLAB_SUITES_HPP
#define KLAB_SUITES_HPP

#include <atomic>
#include <functional>
#include <thread>

#include "io.hpp"

namespace klab {

struct SuiteConfig {
    PrimeField field{kDefaultCharacteristic};
    int stages = 12;
    std::uint64_t seed = 0;
    std::size_t trials = 500;
    unsigned jobs = 1;
};

struct CaseResult {
    std::string name;
    bool ok = false;
    Json data;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;
    bool ok() const {
        for (const auto& c : cases)
            if (!c.ok) return false;
        return true;
    }
};

using CaseFn = std::function<CaseResult()>;

/// Runs cases on up to `jobs` threads; results keep the input order.
inline std::vector<CaseResult> run_cases(const std::vector<std::pair<std::string, CaseFn>>& cases, unsigned jobs) {
    std::vector<CaseResult> out(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < cases.size();) {
            try {
                out[i] = cases[i].second();
            } catch (const Error& e) {
                out[i] = {"", false, Json{{"error", e.kind()}, {"message", e.what()}}};
            }
            out[i].name = cases[i].first;
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cases.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

inline Json to_json(const SuiteReport& r) {
    Json j;
    j["suite"] = r.suite;
    j["ok"] = r.ok();
    Json cases = Json::array();
    for (const auto& c : r.cases) cases.push_back({{"name", c.name}, {"ok", c.ok}, {"data", c.data}});
    j["cases"] = std::move(cases);
    return j;
}

// ---------------------------------------------------------------------------
// corpus

inline std::vector<std::pair<std::string, AlgebraPtr>> corpus_algebras(const PrimeField& F) {
    auto k = exterior_algebra(0, F);
    return {
        {"k", k},
        {"ext1", exterior_algebra(1, F)},
        {"ext2", exterior_algebra(2, F)},
        {"ext3", exterior_algebra(3, F)},
        {"k+Sk^2", trivial_extension(k, 1, {2})},
        {"T+Sk", table_algebra({TableClass::T, {}, {1}}, F)},
        {"B+Sk", table_algebra({TableClass::B, {}, {1}}, F)},
        {"G(2)", table_algebra({TableClass::G, {2}, {}}, F)},
        {"H(2,1)+Sk", table_algebra({TableClass::H, {2, 1}, {1}}, F)},
        {"S+Sk^3+S^2k^2", table_algebra({TableClass::S, {}, {3, 2}}, F)},
    };
}

inline std::vector<std::pair<std::string, RingPresentation>> corpus_rings(const PrimeField& F) {
    auto R = [&](std::vector<std::string> v, std::vector<std::string> I) { return RingPresentation::parse(F, std::move(v), I); };
    return {
        {"k[x]/(x^2)", R({"x"}, {"x^2"})},
        {"k[x]/(x^3)", R({"x"}, {"x^3"})},
        {"k[x,y]/(x^2,xy,y^2)", R({"x", "y"}, {"x^2", "x*y", "y^2"})},
        {"k[x,y]/(x^2,y^2)", R({"x", "y"}, {"x^2", "y^2"})},
        {"k[x,y]/(x^2,xy,y^3)", R({"x", "y"}, {"x^2", "x*y", "y^3"})},
        {"k[x,y,z]/(x^2,y^2,z^2)", R({"x", "y", "z"}, {"x^2", "y^2", "z^2"})},
        {"k[x,y,z]/(x,y,z)^2", R({"x", "y", "z"}, {"x^2", "y^2", "z^2", "x*y", "x*z", "y*z"})},
        {"k[x,y,z]/(x^2,y^2,z^2,xyz)", R({"x", "y", "z"}, {"x^2", "y^2", "z^2", "x*y*z"})},
        {"k[x,y,z]/(x^2,xy,y^2,z^2)", R({"x", "y", "z"}, {"x^2", "x*y", "y^2", "z^2"})},
        {"k[x,y,z]/(x^2,y^2,z^2,xy)", R({"x", "y", "z"}, {"x^2", "y^2", "z^2", "x*y"})},
    };
}

namespace detail {

inline Json dims_json(const std::vector<std::size_t>& v) { return Json(v); }

}  // namespace detail

// ---------------------------------------------------------------------------
// suites

inline SuiteReport suite_lemma33(const SuiteConfig& cfg) {
    const auto& F = cfg.field;
    auto k = exterior_algebra(0, F);
    std::vector<std::pair<std::string, AlgebraPtr>> bases{
        {"k", k}, {"ext1", exterior_algebra(1, F)}, {"ext2", exterior_algebra(2, F)}, {"k+Sk^2", trivial_extension(k, 1, {2})}};
    std::vector<std::pair<std::string, CaseFn>> cases;
    std::uint64_t idx = 0;
    for (const auto& [bname, B] : bases)
        for (int n = 0; n <= 3; ++n) {
            auto ext = std::make_shared<TrivialExtensionByK>(extend_by_k(B, n));
            std::vector<std::pair<std::string, DGModule>> mods{{"k", residue_module(B)}};
            if (B->top_degree() > 0) mods.push_back({"B+", augmentation_ideal(B).module});
            for (int i = 0; i < 3; ++i) {
                Rng rng = split_rng(cfg.seed, idx++);
                mods.push_back({"random" + std::to_string(i), random_module(B, rng)});
            }
            std::vector<std::pair<std::string, std::pair<DGModule, DGModule>>> pairs;
            for (const auto& [xn, X] : mods)
                for (const auto& [yn, Y] : mods) pairs.push_back({xn + "," + yn, {X, Y}});
            for (auto& [pname, XY] : pairs) {
                auto XYc = XY;
                int N = cfg.stages;
                cases.push_back({"B=" + bname + " n=" + std::to_string(n) + " " + pname, [ext, n, XYc, N] {
                                     auto r = check_lemma33(*ext, n, XYc.first, XYc.second, N);
                                     Json d{{"window", window_json(r.window_lo, r.window_hi)}, {"left", r.left}, {"tor_B", r.tor_B}, {"convolution", r.convolution}};
                                     return CaseResult{"", r.ok(), d};
                                 }});
            }
        }
    return {"lemma33", run_cases(cases, cfg.jobs)};
}

inline SuiteReport suite_prop31(const SuiteConfig& cfg) {
    std::vector<std::pair<std::string, CaseFn>> cases;
    std::uint64_t idx = 0;
    for (const auto& [aname, A] : corpus_algebras(cfg.field)) {
        if (A->top_degree() == 0) continue;
        std::vector<std::pair<std::string, DGModule>> mods{{"k", residue_module(A)}, {"D", dualizing_module(A)}, {"A+", augmentation_ideal(A).module}};
        for (int i = 0; i < 2; ++i) {
            Rng rng = split_rng(cfg.seed, idx++);
            mods.push_back({"random" + std::to_string(i), random_module(A, rng)});
        }
        for (const auto& [mname, X] : mods) {
            cases.push_back({aname + " X=" + mname, [X] {
                                 auto sup = homology(X).sup();
                                 if (!sup) return CaseResult{"", true, Json{{"note", "X is acyclic"}}};
                                 auto s = prop31_sequence(X, *sup + 1 - X.lo());
                                 Json d{{"s", s.s}, {"semibasis", s.semibasis}, {"L_dims", s.L.dims()}, {"X_tilde_dims", s.X_tilde.dims()},
                                        {"X_prime_dims", s.X_prime.dims()}, {"exact", s.exact}, {"image_in_A_plus_L", s.image_in_A_plus_L},
                                        {"quasi_iso", s.quasi_iso}, {"annihilated", s.annihilated}};
                                 return CaseResult{"", s.ok(), d};
                             }});
        }
    }
    return {"prop31", run_cases(cases, cfg.jobs)};
}

inline SuiteReport suite_dualizing(const SuiteConfig& cfg) {
    std::vector<std::pair<std::string, CaseFn>> cases;
    for (const auto& [aname, A] : corpus_algebras(cfg.field)) {
        const int N = std::min(cfg.stages, A->top_degree() + 3);
        cases.push_back({aname + " D^A", [A, N] {
                             auto v = is_semidualizing(dualizing_module(A), N);
                             return CaseResult{"", v.kind == SemidualizingVerdict::Kind::Verified, to_json(v)};
                         }});
        cases.push_back({aname + " A", [A, N] {
                             auto v = is_semidualizing(regular_module(A), N);
                             return CaseResult{"", v.kind == SemidualizingVerdict::Kind::Verified, to_json(v)};
                         }});
        if (A->top_degree() > 0)
            cases.push_back({aname + " k refuted", [A, N] {
                                 auto v = is_semidualizing(residue_module(A), N);
                                 return CaseResult{"", v.kind == SemidualizingVerdict::Kind::Refuted, to_json(v)};
                             }});
    }
    for (int r = 1; r <= 4; ++r) {
        auto A = table_algebra({TableClass::G, {r}, {}}, cfg.field);
        cases.push_back({"G(" + std::to_string(r) + ") A ~ S^3 D^A", [A] {
                             auto iso = find_isomorphism(regular_module(A), shift(dualizing_module(A), A->top_degree()));
                             return CaseResult{"", iso.has_value(), Json{{"isomorphism_found", iso.has_value()}}};
                         }});
    }
    return {"dualizing", run_cases(cases, cfg.jobs)};
}

inline SuiteReport suite_biduality(const SuiteConfig& cfg) {
    std::vector<std::pair<std::string, CaseFn>> cases;
    std::uint64_t idx = 0;
    for (const auto& [aname, A] : corpus_algebras(cfg.field)) {
        std::vector<std::pair<std::string, DGModule>> mods{{"k", residue_module(A)}, {"A", regular_module(A)}, {"D", dualizing_module(A)}, {"A+", augmentation_ideal(A).module}};
        for (int i = 0; i < 3; ++i) {
            Rng rng = split_rng(cfg.seed, idx++);
            mods.push_back({"random" + std::to_string(i), random_module(A, rng)});
        }
        for (const auto& [mname, M] : mods)
            cases.push_back({aname + " M=" + mname, [M] { return CaseResult{"", check_biduality(M), Json{{"dims", M.dims()}, {"lo", M.lo()}}}; }});
    }
    return {"biduality", run_cases(cases, cfg.jobs)};
}

inline SuiteReport suite_dagger(const SuiteConfig& cfg) {
    std::vector<std::pair<std::string, CaseFn>> cases;
    for (const auto& [aname, A] : corpus_algebras(cfg.field)) {
        const int N = std::min(cfg.stages, std::max(10, A->top_degree() + 3));
        for (const auto& [mname, X] : std::vector<std::pair<std::string, DGModule>>{{"A", regular_module(A)}, {"D", dualizing_module(A)}})
            cases.push_back({aname + " X=" + mname, [X, N] {
                                 auto r = check_dagger_duality(X, N);
                                 Json d{{"vacuous", r.vacuous}, {"window", window_json(r.window_lo, r.window_hi)}, {"tor_dims", r.lhs}, {"D_dims", r.rhs},
                                        {"dagger_verdict", r.dagger_verdict.name()}};
                                 return CaseResult{"", r.ok && !r.vacuous, d};
                             }});
    }
    return {"dagger", run_cases(cases, cfg.jobs)};
}

inline SuiteReport suite_table_roundtrip(const SuiteConfig& cfg) {
    std::vector<std::pair<std::string, CaseFn>> cases;
    const PrimeField F = cfg.field;
    for (const auto& s : constructor_grid()) {
        std::string name = s.name() + " W=" + Json(s.w_dims).dump();
        cases.push_back({name, [s, F] {
                             auto e = classify_grid_point(s, F);
                             auto A = table_algebra(s, F);
                             const std::string text = algebra_to_json(*A).dump();
                             auto back = algebra_from_json(parse_json_text(text));
                             bool json_ok = back->same_tables(*A) && algebra_to_json(*back).dump() == text;
                             Json d{{"expected", to_json(e.expected)}, {"got", to_json(e.got)}, {"invariants", to_json(e.record)}, {"json_roundtrip", json_ok}};
                             if (!e.error.empty()) d["error"] = e.error;
                             return CaseResult{"", e.ok() && json_ok, d};
                         }});
    }
    cases.push_back({"collision audit", [F] {
                         auto a = audit_grid(constructor_grid(), F);
                         return CaseResult{"", a.collisions.empty(), Json{{"collisions", a.collisions}}};
                     }});
    for (const auto& [rname, R] : corpus_rings(F)) {
        const std::string ring_name = rname;
        const Json ideal = ring_to_json(R);
        cases.push_back({ring_name + " characteristic invariance", [ideal] {
                             std::vector<std::string> labels;
                             for (std::uint32_t p : {32003u, 101u, 7u}) {
                                 Json j = ideal;
                                 j["char"] = p;
                                 auto c = classify_ring(ring_from_json(j));
                                 labels.push_back(c.cls.label() + " W=" + Json(c.cls.spec.w_dims).dump());
                             }
                             bool same = labels[0] == labels[1] && labels[1] == labels[2];
                             return CaseResult{"", same, Json{{"labels", labels}}};
                         }});
    }
    return {"table-roundtrip", run_cases(cases, cfg.jobs)};
}

inline SuiteReport suite_thm34(const SuiteConfig& cfg) {
    std::vector<std::pair<std::string, CaseFn>> cases;
    const auto& F = cfg.field;
    std::vector<std::tuple<std::string, AlgebraPtr, int>> runs{{"B=k n=1", exterior_algebra(0, F), 1}, {"B=ext1 n=2", exterior_algebra(1, F), 2}};
    std::uint64_t idx = 0;
    for (const auto& [name, B, n] : runs) {
        const std::uint64_t seed = cfg.seed + 0x9e3779b97f4a7c15ull * idx++;
        const std::size_t trials = cfg.trials;
        const int N = cfg.stages;
        auto Bc = B;
        const int nc = n;
        cases.push_back({name, [Bc, nc, trials, N, seed] {
                             auto r = search_thm34_counterexample(Bc, nc, trials, N, seed);
                             Json d{{"trials", r.trials}, {"finite_pd", r.finite_pd}, {"tor_nonvanishing", r.tor_nonvanishing}, {"annihilated", r.annihilated},
                                    {"result", r.none_found() ? "NoneFound" : "Candidate"}, {"window", window_json(N / 2, N)}};
                             if (!r.none_found()) {
                                 Json c = Json::array();
                                 for (const auto& [X, Y] : r.candidates) c.push_back({{"X_dims", X.dims()}, {"X_lo", X.lo()}, {"Y_dims", Y.dims()}, {"Y_lo", Y.lo()}});
                                 d["candidates"] = std::move(c);
                             }
                             return CaseResult{"", r.none_found(), d};
                         }});
    }
    return {"thm34-search", run_cases(cases, cfg.jobs)};
}

inline SuiteReport suite_base_change(const SuiteConfig& cfg) {
    std::vector<std::pair<std::string, CaseFn>> cases;
    const auto& F = cfg.field;
    const int N = std::min(cfg.stages, 8);
    struct Run {
        std::string name;
        RingPresentation R;
        std::vector<std::size_t> t;
        bool expect_sd;
        bool residue;
    };
    auto R1 = RingPresentation::parse(F, {"x"}, {"x^2"});
    auto R2 = RingPresentation::parse(F, {"x", "y"}, {"x^2", "y^2"});
    auto R3 = RingPresentation::parse(F, {"x", "y"}, {"x^2", "x*y", "y^2"});
    auto R0 = RingPresentation::parse(F, {}, {});
    std::vector<Run> runs{
        {"R=k t=() X=R", R0, {}, true, false},
        {"R=k[x]/(x^2) t=(x) X=R", R1, {0}, true, false},
        {"R=k[x]/(x^2) t=(x) X=k", R1, {0}, false, true},
        {"R=k[x,y]/(x^2,y^2) t=(x) X=R", R2, {0}, true, false},
        {"R=k[x,y]/(x^2,y^2) t=(x,y) X=k", R2, {0, 1}, false, true},
        {"R=k[x,y]/(x,y)^2 t=(y) X=R", R3, {1}, true, false},
        {"R=k[x,y]/(x,y)^2 t=(x,y) X=k", R3, {0, 1}, false, true},
    };
    for (const auto& run : runs) {
        auto C = ring_algebra(run.R);
        DGModule X = run.residue ? residue_module(C) : regular_module(C);
        auto t = run.t;
        const bool expect = run.expect_sd;
        cases.push_back({run.name, [X, t, N, expect] {
                             auto r = check_base_change(t, X, N);
                             auto want = expect ? SemidualizingVerdict::Kind::Verified : SemidualizingVerdict::Kind::Refuted;
                             Json d{{"over_C", to_json(r.over_C)}, {"over_B", to_json(r.over_B)}};
                             return CaseResult{"", r.agree() && r.over_C.kind == want, d};
                         }});
    }
    return {"base-change", run_cases(cases, cfg.jobs)};
}

inline SuiteReport suite_euler(const SuiteConfig& cfg) {
    std::vector<std::pair<std::string, CaseFn>> cases;
    for (const auto& [rname, R] : corpus_rings(cfg.field)) {
        auto Rc = R;
        cases.push_back({rname + " chi(K) = 0", [Rc] {
                             auto K = koszul_complex(Rc);
                             auto H = homology_algebra(K);
                             long long chiK = euler_characteristic(*K), chiH = euler_characteristic(*H.algebra);
                             return CaseResult{"", Rc.is_regular() ? chiK == 1 : (chiK == 0 && chiH == 0),
                                               Json{{"chi_K", chiK}, {"chi_H", chiH}, {"koszul_dims", K->dims()}, {"homology_dims", H.algebra->dims()}}};
                         }});
        cases.push_back({rname + " T/B rows need W != 0", [Rc] {
                             auto c = classify_ring(Rc);
                             bool tb = c.cls.spec.cls == TableClass::T || c.cls.spec.cls == TableClass::B;
                             bool ok = !tb || !c.cls.spec.w_dims.empty();
                             return CaseResult{"", ok, Json{{"class", c.cls.label()}, {"w_dims", c.cls.spec.w_dims}}};
                         }});
    }
    for (auto cls : {TableClass::T, TableClass::B}) {
        auto body = table_body(cls, {}, cfg.field);
        cases.push_back({"chi(" + class_name(cls) + " body) = 1", [body] {
                             long long chi = euler_characteristic(*body);
                             return CaseResult{"", chi == 1, Json{{"chi", chi}, {"dims", body->dims()}}};
                         }});
    }
    return {"euler", run_cases(cases, cfg.jobs)};
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lemma33", "prop31", "dualizing", "biduality", "dagger", "table-roundtrip", "thm34-search", "base-change", "euler"};
    return names;
}

inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    if (name == "lemma33") return suite_lemma33(cfg);
    if (name == "prop31") return suite_prop31(cfg);
    if (name == "dualizing") return suite_dualizing(cfg);
    if (name == "biduality") return suite_biduality(cfg);
    if (name == "dagger") return suite_dagger(cfg);
    if (name == "table-roundtrip") return suite_table_roundtrip(cfg);
    if (name == "thm34-search") return suite_thm34(cfg);
    if (name == "base-change") return suite_base_change(cfg);
    if (name == "euler") return suite_euler(cfg);
    throw ParameterOutOfRange("unknown suite '" + name + "'");
}

}  // namespace klab

#endif
