#ifndef KLAB_IO_HPP
#define KLAB_IO_HPP

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "classify.hpp"
#include "derived.hpp"
#include "sdmod.hpp"

namespace klab {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field_of(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw MalformedDescription(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

template <class F>
auto json_guard(const char* what, F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw MalformedDescription(std::string(what) + ": " + e.what());
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// algebra format: { "char", "basis": [[labels of degree 0], [degree 1], ...], "unit", "diff": [[from,to,c]], "mult": [[a,b,c,coeff]] }

inline Json to_json(const AlgebraDescription& d) {
    Json j;
    j["char"] = d.characteristic;
    j["basis"] = d.basis;
    j["unit"] = d.unit;
    Json diff = Json::array(), mult = Json::array();
    for (const auto& e : d.diff) diff.push_back({e.from, e.to, e.coeff});
    for (const auto& e : d.mult) mult.push_back({e.a, e.b, e.c, e.coeff});
    j["diff"] = std::move(diff);
    j["mult"] = std::move(mult);
    return j;
}

inline Json algebra_to_json(const DGAlgebra& A) { return to_json(describe(A)); }

inline AlgebraDescription description_from_json(const Json& j) {
    return detail::json_guard("algebra JSON", [&] {
        AlgebraDescription d;
        d.characteristic = detail::field_of(j, "char").get<std::uint32_t>();
        d.basis = detail::field_of(j, "basis").get<std::vector<std::vector<std::string>>>();
        d.unit = detail::field_of(j, "unit").get<std::string>();
        for (const auto& e : j.value("diff", Json::array())) {
            if (!e.is_array() || e.size() != 3) throw MalformedDescription("diff entries are [from, to, coeff]");
            d.diff.push_back({e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::int64_t>()});
        }
        for (const auto& e : j.value("mult", Json::array())) {
            if (!e.is_array() || e.size() != 4) throw MalformedDescription("mult entries are [a, b, c, coeff]");
            d.mult.push_back({e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>(), e[3].get<std::int64_t>()});
        }
        return d;
    });
}

inline AlgebraPtr algebra_from_json(const Json& j) { return make_algebra(description_from_json(j)); }

// ---------------------------------------------------------------------------
// ring format: { "char", "vars": [...], "ideal": ["x^2", "x*y", ...] }

inline Json ring_to_json(const RingPresentation& R) {
    Json j;
    j["char"] = R.field().characteristic();
    j["vars"] = R.variables();
    j["ideal"] = R.ideal_strings();
    return j;
}

inline RingPresentation ring_from_json(const Json& j) {
    return detail::json_guard("ring JSON", [&] {
        PrimeField F(j.value("char", kDefaultCharacteristic));
        auto vars = detail::field_of(j, "vars").get<std::vector<std::string>>();
        auto ideal = detail::field_of(j, "ideal").get<std::vector<std::string>>();
        return RingPresentation::parse(F, std::move(vars), ideal);
    });
}

/// Parses text, reporting syntax errors with the byte offset as column.
inline Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedDescription("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

/// Ring files carry "vars"; algebra files carry "basis".
inline bool is_ring_json(const Json& j) { return j.is_object() && j.contains("vars"); }

// ---------------------------------------------------------------------------
// reports

inline Json to_json(const InvariantRecord& v) {
    return Json{{"h1", v.h1}, {"h2", v.h2}, {"h3", v.h3}, {"p", v.p}, {"q", v.q}, {"r", v.r}, {"z1", v.z1}, {"z2", v.z2}, {"z1_h2", v.z1_h2}};
}

inline Json to_json(const TableSpec& s) {
    return Json{{"class", class_name(s.cls)}, {"params", s.params}, {"w_dims", s.w_dims}};
}

inline Json to_json(const RingClassification& c, const RingPresentation& R) {
    Json j;
    j["ring"] = ring_to_json(R);
    j["koszul_dims"] = c.koszul_dims;
    j["invariants"] = to_json(c.cls.record);
    j["class"] = c.cls.label();
    j["params"] = c.cls.spec.params;
    j["w_dims"] = c.cls.spec.w_dims;
    j["golod"] = c.cls.golod;
    j["gorenstein"] = c.cls.gorenstein;
    j["sdc_bound"] = c.bound.bound;
    j["sdc_representatives"] = c.bound.attained_by;
    return j;
}

inline Json window_json(int lo, int hi) {
    Json w;
    w["lo"] = lo == INT_MIN ? Json(nullptr) : Json(lo);
    w["hi"] = hi == INT_MAX ? Json(nullptr) : Json(hi);
    return w;
}

inline Json to_json(const SemidualizingVerdict& v) {
    Json j;
    j["verdict"] = v.name();
    j["window"] = window_json(v.window_lo, v.window_hi);
    if (v.kind == SemidualizingVerdict::Kind::Refuted) j["degree"] = v.degree;
    if (!v.reason.empty()) j["reason"] = v.reason;
    Json per = Json::array();
    for (const auto& d : v.degrees) per.push_back({{"degree", d.degree}, {"dim_HA", d.dim_HA}, {"dim_Hom", d.dim_Hom}, {"rank", d.rank}});
    j["per_degree"] = std::move(per);
    return j;
}

}  // namespace klab

#endif
