// Acceptance run: one PASS/FAIL line per criterion, with wall time and limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <thread>

#include "klab/klab.hpp"

using namespace klab;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

unsigned jobs() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

SuiteConfig config(int stages, std::size_t trials = 500) {
    SuiteConfig c;
    c.stages = stages;
    c.trials = trials;
    c.seed = 0;
    c.jobs = jobs();
    return c;
}

Outcome from_suite(const SuiteReport& r) {
    std::size_t passed = 0;
    std::string failed;
    for (const auto& c : r.cases) {
        passed += c.ok;
        if (!c.ok && failed.size() < 300) failed += " [" + c.name + "]";
    }
    return {r.ok(), std::to_string(passed) + "/" + std::to_string(r.cases.size()) + " cases" + failed};
}

// 1
Outcome square_zero_tor() { return from_suite(run_suite("lemma33", config(12))); }

// 2: T_i = [i == 0] + T_{i-n-1}, solved independently of the resolution code
Outcome poincare_recursion() {
    auto k = exterior_algebra(0);
    std::string bad;
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::size_t> T(13, 0);
        for (int i = 0; i <= 12; ++i) T[i] = (i == 0 ? 1 : 0) + (i - n - 1 >= 0 ? T[i - n - 1] : 0);
        auto A = trivial_extension(k, n, {1}, "x");
        auto p = poincare(residue_module(A), 12);
        for (int i = 0; i <= 12; ++i)
            if (p.at(i) != T[i]) bad += " n=" + std::to_string(n) + ",i=" + std::to_string(i);
    }
    return {bad.empty(), bad.empty() ? "n=1..3 through degree 12" : "mismatch" + bad};
}

// 3
Outcome euler() {
    std::string bad;
    std::size_t rings = 0;
    for (const auto& [name, R] : corpus_rings(PrimeField())) {
        if (R.is_regular()) continue;
        ++rings;
        auto H = homology_algebra(koszul_complex(R));
        if (euler_characteristic(*H.algebra) != 0) bad += " " + name;
    }
    for (auto cls : {TableClass::T, TableClass::B})
        if (euler_characteristic(*table_body(cls, {})) != 1) bad += " chi(" + class_name(cls) + ")";
    return {bad.empty(), std::to_string(rings) + " rings, chi(T) = chi(B) = 1" + (bad.empty() ? "" : "; failed" + bad)};
}

std::vector<TableSpec> dualizing_grid() {
    std::vector<TableSpec> g;
    for (int c = 0; c <= 3; ++c) g.push_back({TableClass::C, {c}, {}});
    std::vector<std::vector<std::size_t>> ws{{}, {1}};
    for (const auto& w : ws) {
        g.push_back({TableClass::S, {}, w});
        g.push_back({TableClass::T, {}, w});
        g.push_back({TableClass::B, {}, w});
        for (int r = 1; r <= 4; ++r) g.push_back({TableClass::G, {r}, w});
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; q <= 3; ++q) g.push_back({TableClass::H, {p, q}, w});
    }
    return g;
}

// 4
Outcome dualizing() {
    auto grid = dualizing_grid();
    std::vector<std::pair<std::string, std::function<CaseResult()>>> cases;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto s = grid[i];
        cases.push_back({s.name() + (s.w_dims.empty() ? "" : "+Sk"), [s, i] {
                             auto A = table_algebra(s);
                             const int N = A->top_degree() + 3;
                             bool ok = is_semidualizing(regular_module(A), N).kind == SemidualizingVerdict::Kind::Verified &&
                                       is_semidualizing(dualizing_module(A), N).kind == SemidualizingVerdict::Kind::Verified;
                             for (std::uint64_t t = 0; t < 10 && ok; ++t) {
                                 Rng rng = split_rng(i, t);
                                 ok = check_biduality(random_module(A, rng));
                             }
                             return CaseResult{"", ok, {}};
                         }});
    }
    return from_suite({"dualizing-grid", run_cases(cases, jobs())});
}

// 5
Outcome gorenstein_self_duality() {
    std::string bad;
    for (int r = 1; r <= 4; ++r) {
        auto A = table_algebra({TableClass::G, {r}, {}});
        auto f = find_isomorphism(regular_module(A), shift(dualizing_module(A), 3));
        if (!f) {
            bad += " r=" + std::to_string(r);
            continue;
        }
        f->validate();
        if (!f->is_isomorphism()) bad += " r=" + std::to_string(r);
    }
    return {bad.empty(), bad.empty() ? "explicit isomorphisms for r=1..4" : "no isomorphism for" + bad};
}

// 6
Outcome exact_sequence() { return from_suite(run_suite("prop31", config(12))); }

// 7
Outcome tor_vanishing() { return from_suite(run_suite("thm34-search", config(12, 500))); }

// 8
Outcome classifier() {
    auto audit = audit_grid(constructor_grid());
    std::string bad;
    for (const auto& e : audit.entries)
        if (!e.ok()) bad += " " + e.input.name();
    for (const auto& c : audit.collisions) bad += " collision:" + c;
    PrimeField F;
    struct Want {
        std::vector<std::string> vars, ideal;
        std::string label;
    };
    std::vector<Want> rings{{{"x", "y", "z"}, {"x^2", "y^2", "z^2"}, "C(3)"},
                            {{"x", "y"}, {"x^2", "x*y", "y^2"}, "S"},
                            {{"x"}, {"x^2"}, "C(1)"}};
    for (const auto& w : rings) {
        auto c = classify_ring(RingPresentation::parse(F, w.vars, w.ideal));
        if (c.cls.label() != w.label) bad += " ring->" + c.cls.label();
    }
    for (const auto& s : constructor_grid()) {
        auto c = classify(*homology_algebra(table_algebra(s)).algebra);
        if (sdc_bound(c).bound != (c.gorenstein ? 1 : 2)) bad += " bound:" + s.name();
    }
    return {bad.empty(), std::to_string(audit.entries.size()) + " grid points, 3 rings" + (bad.empty() ? "" : "; failed" + bad)};
}

// 9
Outcome base_change() {
    PrimeField F;
    auto R0 = RingPresentation::parse(F, {}, {});
    auto R1 = RingPresentation::parse(F, {"x"}, {"x^2"});
    using K = SemidualizingVerdict::Kind;
    struct Case {
        std::string name;
        RingPresentation R;
        std::vector<std::size_t> t;
        bool residue;
        K want;
    };
    std::vector<Case> cases{{"R=k t=()", R0, {}, false, K::Verified},
                            {"R=k[x]/(x^2) t=(x) X=R", R1, {0}, false, K::Verified},
                            {"R=k[x]/(x^2) t=(x) X=k", R1, {0}, true, K::Refuted}};
    std::string bad;
    for (const auto& c : cases) {
        auto C = ring_algebra(c.R);
        auto r = check_base_change(c.t, c.residue ? residue_module(C) : regular_module(C), 8);
        if (!r.agree() || r.over_C.kind != c.want) bad += " [" + c.name + ": " + r.over_C.name() + "/" + r.over_B.name() + "]";
    }
    return {bad.empty(), bad.empty() ? "3 cases agree" : bad};
}

// 10: budget N versus N + 2 on the overlap of the certified windows
Outcome window_soundness() {
    const int N = 8;
    std::vector<std::pair<std::string, std::function<CaseResult()>>> cases;
    for (const auto& [aname, A] : corpus_algebras(PrimeField())) {
        auto Ac = A;
        cases.push_back({aname, [Ac] {
                             std::vector<std::pair<std::string, DGModule>> mods{{"k", residue_module(Ac)}, {"A", regular_module(Ac)}, {"D", dualizing_module(Ac)}};
                             if (Ac->top_degree() > 0) mods.push_back({"A+", augmentation_ideal(Ac).module});
                             std::string bad;
                             std::size_t checks = 0;
                             for (const auto& [xn, X] : mods) {
                                 auto F1 = resolve(X, N), F2 = resolve(X, N + 2);
                                 auto p1 = poincare(F1), p2 = poincare(F2);
                                 int phi = p1.exact ? p1.lo + int(p1.coeffs.size()) - 1 : F1.final_degree();
                                 for (int i = p1.lo; i <= phi; ++i, ++checks)
                                     if (p1.at(i) != p2.at(i)) bad += " poincare(" + xn + ")";
                                 for (const auto& [yn, Y] : mods) {
                                     auto t1 = tor_dims(F1, Y), t2 = tor_dims(F2, Y);
                                     int hi = std::min({t1.window_hi, t2.window_hi, t1.lo + int(t1.dims.size()) + 2});
                                     for (int i = std::min(t1.lo, t2.lo); i <= hi; ++i, ++checks)
                                         if (t1.at(i) != t2.at(i)) bad += " tor(" + xn + "," + yn + ")@" + std::to_string(i);
                                     auto r1 = rhom_dims(F1, Y), r2 = rhom_dims(F2, Y);
                                     int lo = std::max(r1.window_lo, r2.window_lo);
                                     if (lo == INT_MIN) lo = std::min(r1.lo, r2.lo);
                                     int top = std::max(r1.lo + int(r1.dims.size()), r2.lo + int(r2.dims.size()));
                                     for (int i = lo; i <= top; ++i, ++checks)
                                         if (r1.at(i) != r2.at(i)) bad += " rhom(" + xn + "," + yn + ")@" + std::to_string(i);
                                 }
                             }
                             return CaseResult{"", bad.empty(), Json{{"checks", checks}, {"failed", bad}}};
                         }});
    }
    auto r = run_cases(cases, jobs());
    std::size_t checks = 0;
    for (const auto& c : r) checks += c.data.value("checks", std::size_t(0));
    auto o = from_suite({"window", r});
    o.detail += ", " + std::to_string(checks) + " degree comparisons, N=" + std::to_string(N) + " vs " + std::to_string(N + 2);
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double limit_s;  // 0: no limit
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"square-zero-tor-decomposition", 60, square_zero_tor},
        {"poincare-recursion", 0, poincare_recursion},
        {"euler-obstructions", 5, euler},
        {"dualizing-suite", 120, dualizing},
        {"gorenstein-self-duality", 0, gorenstein_self_duality},
        {"semibasis-exact-sequence", 0, exact_sequence},
        {"tor-vanishing-search", 180, tor_vanishing},
        {"classifier-roundtrip", 30, classifier},
        {"base-change", 0, base_change},
        {"window-soundness", 0, window_soundness},
    };
    int failures = 0, idx = 0;
    for (const auto& c : criteria) {
        ++idx;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = c.limit_s == 0 || s < c.limit_s;
        bool ok = o.ok && in_time;
        failures += !ok;
        char time[64];
        if (c.limit_s > 0)
            std::snprintf(time, sizeof time, "%.2fs < %.0fs", s, c.limit_s);
        else
            std::snprintf(time, sizeof time, "%.2fs", s);
        std::cout << (ok ? "PASS " : "FAIL ") << idx << " " << c.name << " (" << time << (in_time ? "" : " EXCEEDED") << "): " << o.detail << std::endl;
    }
    std::cout << (failures ? "FAILED " : "ALL PASSED ") << (10 - failures) << "/10" << std::endl;
    return failures ? 1 : 0;
}
