// klab: construction, computation, classification and verification front end.
//
// exit codes: 0 success, 1 a verified statement failed, 2 bad input or
// arguments, 3 out of scope, 4 stage budget too small for the request.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "klab/klab.hpp"

namespace {

using namespace klab;

enum Exit { kOk = 0, kFailed = 1, kBadInput = 2, kOutOfScope = 3, kBudget = 4 };

struct Options {
    std::uint32_t characteristic = 0;  // 0: take it from the input file, else 32003
    int stages = 12;
    std::uint64_t seed = 0;
    std::size_t trials = 500;
    std::string format = "json";
    unsigned jobs = 0;
    std::string output;
};

class Emitter {
   public:
    explicit Emitter(const Options& o) : opt_(o) {}

    void emit(const Json& j, const std::string& text) const {
        std::string body = opt_.format == "json" ? j.dump(2) + "\n" : text;
        if (opt_.output.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(opt_.output);
            if (!out) throw MalformedDescription("cannot write '" + opt_.output + "'");
            out << body;
        }
    }

   private:
    const Options& opt_;
};

PrimeField field_for(const Options& o, std::uint32_t from_file = kDefaultCharacteristic) {
    return PrimeField(o.characteristic ? o.characteristic : from_file);
}

unsigned resolve_jobs(unsigned flag) {
    if (flag) return flag;
    if (const char* env = std::getenv("KLAB_JOBS")) {
        try {
            int j = std::stoi(env);
            if (j > 0) return static_cast<unsigned>(j);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

RingPresentation load_ring(const std::string& path, const Options& o) {
    Json j = read_json_file(path);
    if (o.characteristic) j["char"] = o.characteristic;
    return ring_from_json(j);
}

/// Algebra files load as given; ring files load as the ring itself (concentrated in degree 0).
AlgebraPtr load_algebra(const std::string& path, const Options& o) {
    Json j = read_json_file(path);
    if (o.characteristic) j["char"] = o.characteristic;
    if (is_ring_json(j)) return ring_algebra(ring_from_json(j));
    return algebra_from_json(j);
}

DGModule named_module(const AlgebraPtr& A, const std::string& name) {
    if (name == "k") return residue_module(A);
    if (name == "A") return regular_module(A);
    if (name == "D") return dualizing_module(A);
    if (name == "A+") return augmentation_ideal(A).module;
    throw ParameterOutOfRange("unknown module '" + name + "' (expected k, A, D or A+)");
}

// ---------------------------------------------------------------------------

int cmd_classify(const std::string& path, const Options& o) {
    auto R = load_ring(path, o);
    auto c = classify_ring(R);
    std::string text = "ring: " + path + "\nkoszul homology dims: " + join(c.koszul_dims) + "\ninvariants: " + c.cls.record.str() + "\nclass: " + c.cls.label() +
                       (c.cls.spec.w_dims.empty() ? "" : " x W, W dims " + join(c.cls.spec.w_dims)) + "\ngolod: " + (c.cls.golod ? "yes" : "no") +
                       "\ngorenstein: " + (c.cls.gorenstein ? "yes" : "no") + "\nsdc_bound: " + std::to_string(c.bound.bound) + " (" + c.bound.attained_by + ")\n";
    Emitter(o).emit(to_json(c, R), text);
    return kOk;
}

int cmd_verify(const std::string& suite, const Options& o) {
    SuiteConfig cfg{field_for(o), o.stages, o.seed, o.trials, resolve_jobs(o.jobs)};
    std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    Json all = Json::array();
    std::string text;
    bool ok = true;
    for (const auto& n : names) {
        auto r = run_suite(n, cfg);
        ok = ok && r.ok();
        all.push_back(to_json(r));
        std::size_t passed = 0;
        for (const auto& c : r.cases) passed += c.ok;
        text += n + ": " + std::to_string(passed) + "/" + std::to_string(r.cases.size()) + (r.ok() ? " pass\n" : " FAIL\n");
        for (const auto& c : r.cases)
            if (!c.ok) text += "  failed: " + c.name + " " + c.data.dump() + "\n";
    }
    Json j{{"ok", ok}, {"char", cfg.field.characteristic()}, {"stages", cfg.stages}, {"seed", cfg.seed}, {"trials", cfg.trials}, {"suites", all}};
    Emitter(o).emit(j, text);
    return ok ? kOk : kFailed;
}

int cmd_table(const std::string& cls_name, const std::vector<int>& params, const std::vector<std::size_t>& w, const Options& o) {
    TableSpec spec{parse_class(cls_name), params, w};
    while (!spec.w_dims.empty() && spec.w_dims.back() == 0) spec.w_dims.pop_back();
    auto A = table_algebra(spec, field_for(o));
    Json j = algebra_to_json(*A);
    Json meta{{"row", spec.name()}, {"w_dims", spec.w_dims}, {"dims", A->dims()}};
    std::string note;
    TableSpec canon = canonical_row(spec);
    if (spec.cls == TableClass::H && params == std::vector<int>{0, 0})
        note = "H(0,0) is S x Sk; with W it coincides with S x (Sk + W)";
    else if (!(canon == spec))
        note = "coincides with " + canon.name() + (canon.w_dims.empty() ? "" : " x W");
    if (!note.empty()) meta["coincidence"] = note;
    j["meta"] = meta;
    Emitter(o).emit(j, spec.name() + " dims " + join(A->dims()) + (note.empty() ? "" : "\nnote: " + note) + "\n");
    return kOk;
}

struct ComputeArgs {
    std::string kind, algebra, ring, module_x = "k", module_y = "k", module = "k";
    std::vector<int> range;
};

int cmd_compute(const ComputeArgs& a, const Options& o) {
    if (a.kind == "koszul") {
        const std::string& path = a.ring.empty() ? a.algebra : a.ring;
        if (path.empty()) throw ParameterOutOfRange("compute koszul needs a ring file");
        auto R = load_ring(path, o);
        auto K = koszul_complex(R);
        auto H = homology_algebra(K);
        Json j{{"ring", ring_to_json(R)}, {"koszul_dims", K->dims()}, {"homology_dims", H.algebra->dims()}, {"euler_characteristic", euler_characteristic(*K)}};
        Emitter(o).emit(j, "K dims " + join(K->dims()) + "\nH dims " + join(H.algebra->dims()) + "\nchi " + std::to_string(euler_characteristic(*K)) + "\n");
        return kOk;
    }
    if (a.algebra.empty()) throw ParameterOutOfRange("--algebra is required for compute " + a.kind);
    auto A = load_algebra(a.algebra, o);
    if (a.kind == "poincare") {
        auto X = named_module(A, a.module);
        auto p = poincare(X, o.stages);
        Json j{{"module", a.module}, {"lo", p.lo}, {"coefficients", p.coeffs}, {"exact", p.exact}, {"window", window_json(p.lo, p.exact ? INT_MAX : p.lo + int(p.coeffs.size()) - 1)}};
        Emitter(o).emit(j, join(p.coeffs) + (p.exact ? " (resolution terminated)" : "") + "\n");
        return kOk;
    }
    if (a.kind == "tor" || a.kind == "rhom") {
        if (a.range.size() != 2 || a.range[0] > a.range[1]) throw ParameterOutOfRange("--range takes two degrees a <= b");
        auto X = named_module(A, a.module_x), Y = named_module(A, a.module_y);
        const int lo = a.range[0], hi = a.range[1];
        std::vector<std::size_t> dims;
        if (a.kind == "tor") {
            dims = tor(X, Y, lo, hi, std::max(o.stages, tor_budget(X, Y, hi)));
        } else {
            dims = rhom(X, Y, lo, hi, o.stages);
        }
        Json j{{"kind", a.kind}, {"X", a.module_x}, {"Y", a.module_y}, {"window", window_json(lo, hi)}, {"dims", dims}};
        Emitter(o).emit(j, join(dims) + "\n");
        return kOk;
    }
    throw ParameterOutOfRange("unknown compute kind '" + a.kind + "' (tor, rhom, poincare, koszul)");
}

int report_error(const Options& o, int code, const Error& e) {
    Json j{{"error", e.kind()}, {"message", e.what()}, {"exit_code", code}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) j["column"] = pe->column();
    if (o.format == "json") std::cout << j.dump(2) << "\n";
    std::cerr << "klab: " << e.kind() << ": " << e.what() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"klab: DG algebras, semidualizing modules and Tor-algebra classes over F_p"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--char", o.characteristic, "prime characteristic (default: from file, else 32003)");
    app.add_option("--stages", o.stages, "resolution stage budget N")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "master seed");
    app.add_option("--trials", o.trials, "trials for random searches");
    app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--jobs", o.jobs, "worker threads (fallback: KLAB_JOBS)");
    app.add_option("--output", o.output, "write output to a file");

    std::string path, suite, cls;
    std::vector<int> params;
    std::vector<std::size_t> w;
    ComputeArgs ca;

    auto* classify = app.add_subcommand("classify", "classify a monomial ring by its Koszul homology");
    classify->add_option("ring", path, "ring JSON file")->required();
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    auto* table = app.add_subcommand("table", "emit a class-table algebra");
    table->add_option("class", cls, "C, S, T, B, G or H")->required();
    table->add_option("params", params, "row parameters");
    table->add_option("--w", w, "dims of W in degrees 1, 2, 3")->delimiter(',');
    auto* compute = app.add_subcommand("compute", "compute tor, rhom, poincare or koszul data");
    compute->add_option("kind", ca.kind, "tor, rhom, poincare or koszul")->required();
    compute->add_option("ring", ca.ring, "ring file (koszul)");
    compute->add_option("--algebra", ca.algebra, "algebra or ring JSON file");
    compute->add_option("--module", ca.module, "module: k, A, D or A+");
    compute->add_option("--module-x", ca.module_x, "first module");
    compute->add_option("--module-y", ca.module_y, "second module");
    compute->add_option("--range", ca.range, "degrees a b")->expected(2);
    for (auto* sub : {classify, verify, table, compute}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*classify) return cmd_classify(path, o);
        if (*verify) {
            if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
                throw ParameterOutOfRange("unknown suite '" + suite + "'");
            return cmd_verify(suite, o);
        }
        if (*table) return cmd_table(cls, params, w, o);
        if (*compute) return cmd_compute(ca, o);
    } catch (const OutOfScope& e) {
        return report_error(o, kOutOfScope, e);
    } catch (const Unrecognized& e) {
        return report_error(o, kOutOfScope, e);
    } catch (const BudgetExceeded& e) {
        return report_error(o, kBudget, e);
    } catch (const Error& e) {
        return report_error(o, kBadInput, e);
    }
    return kBadInput;
}
