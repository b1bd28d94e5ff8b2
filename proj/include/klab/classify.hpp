#ifndef KLAB_CLASSIFY_HPP
#define KLAB_CLASSIFY_HPP

#include <map>
#include <set>

#include "build.hpp"

namespace klab {

/// Multiplicative invariants of a graded-commutative algebra with zero
/// differential concentrated in degrees 0..3.
/// p = dim H1.H1, q = dim H1.H2, r = rank(H2 -> Hom(H1, H3)); the z's are
/// annihilator dimensions {x in H1 : x H1 = 0}, {y in H2 : H1 y = 0}, {x in H1 : x H2 = 0}.
struct InvariantRecord {
    std::size_t h1 = 0, h2 = 0, h3 = 0;
    std::size_t p = 0, q = 0, r = 0;
    std::size_t z1 = 0, z2 = 0, z1_h2 = 0;

    bool operator==(const InvariantRecord&) const = default;
    auto operator<=>(const InvariantRecord&) const = default;

    std::string str() const {
        return "h=(" + std::to_string(h1) + "," + std::to_string(h2) + "," + std::to_string(h3) + ") p=" + std::to_string(p) + " q=" + std::to_string(q) +
               " r=" + std::to_string(r) + " z=(" + std::to_string(z1) + "," + std::to_string(z2) + "," + std::to_string(z1_h2) + ")";
    }
};

namespace detail {

inline void require_zero_differential(const DGAlgebra& A) {
    if (!A.has_zero_differential()) throw PreconditionViolation("classification expects an algebra with zero differential (pass its homology algebra)");
}

/// Columns: x in A_i |-> (x*y)_{y in A_j}, stacked in A_{i+j} blocks.
inline std::size_t multiplication_rank(const DGAlgebra& A, int i, int j) {
    const std::size_t target = A.dim(i + j);
    std::vector<SparseVec> cols;
    for (std::size_t x = A.begin(i); x < A.end(i); ++x) {
        SparseVec c;
        std::size_t block = 0;
        for (std::size_t y = A.begin(j); y < A.end(j); ++y, ++block)
            for (const auto& t : A.product(x, y)) c.push_back({static_cast<std::uint32_t>(block * target + t.index - A.begin(i + j)), t.coeff});
        normalize(A.field(), c);
        cols.push_back(std::move(c));
    }
    return rank_of_columns(A.field(), target * A.dim(j), cols);
}

/// dim of the span of A_i . A_j inside A_{i+j}.
inline std::size_t product_span(const DGAlgebra& A, int i, int j) {
    std::vector<SparseVec> cols;
    for (std::size_t x = A.begin(i); x < A.end(i); ++x)
        for (std::size_t y = A.begin(j); y < A.end(j); ++y) {
            SparseVec c = A.product(x, y);
            for (auto& t : c) t.index -= static_cast<std::uint32_t>(A.begin(i + j));
            cols.push_back(std::move(c));
        }
    return rank_of_columns(A.field(), A.dim(i + j), cols);
}

}  // namespace detail

inline InvariantRecord invariant_record(const DGAlgebra& A) {
    detail::require_zero_differential(A);
    InvariantRecord v;
    v.h1 = A.dim(1);
    v.h2 = A.dim(2);
    v.h3 = A.dim(3);
    v.p = detail::product_span(A, 1, 1);
    v.q = detail::product_span(A, 1, 2);
    v.r = detail::multiplication_rank(A, 2, 1);
    v.z1 = v.h1 - detail::multiplication_rank(A, 1, 1);
    v.z2 = v.h2 - v.r;
    v.z1_h2 = v.h1 - detail::multiplication_rank(A, 1, 2);
    return v;
}

/// All products of positive-degree elements vanish.
inline bool is_golod_shape(const DGAlgebra& A) {
    for (std::size_t x = A.begin(1); x < A.dim(); ++x)
        for (std::size_t y = A.begin(1); y < A.dim(); ++y)
            if (!A.product(x, y).empty()) return false;
    return true;
}

/// Top homology is one-dimensional and H_i x H_{t-i} -> H_t is perfect for all i.
inline bool is_poincare_duality(const DGAlgebra& A) {
    const int t = A.top_degree();
    if (t < 0 || A.dim(t) != 1) return false;
    for (int i = 0; i <= t; ++i) {
        if (A.dim(i) != A.dim(t - i)) return false;
        if (A.dim(i) && detail::multiplication_rank(A, i, t - i) != A.dim(i)) return false;
    }
    return true;
}

struct ToralgClass {
    TableSpec spec;  // label, parameters and the W summand of the matching table row
    InvariantRecord record;
    bool golod = false;
    bool gorenstein = false;

    std::string label() const { return spec.name(); }
};

namespace detail {

inline std::vector<std::size_t> body_dims(const DGAlgebra& B) {
    return {B.dim(1), B.dim(2), B.dim(3)};
}

/// Candidate table rows for a record, in the canonical priority order C > T > B > G > H > S.
inline std::vector<std::pair<TableClass, std::vector<int>>> candidate_rows(const InvariantRecord& v) {
    std::vector<std::pair<TableClass, std::vector<int>>> out;
    if (v.h1 <= 3) out.push_back({TableClass::C, {static_cast<int>(v.h1)}});
    out.push_back({TableClass::T, {}});
    out.push_back({TableClass::B, {}});
    if (v.r >= 1 && v.r <= 8) out.push_back({TableClass::G, {static_cast<int>(v.r)}});
    if (v.p <= 8 && v.q <= 8 && (v.p || v.q)) out.push_back({TableClass::H, {static_cast<int>(v.p), static_cast<int>(v.q)}});
    out.push_back({TableClass::S, {}});
    return out;
}

}  // namespace detail

/// Identifies the table row of an algebra with zero differential by matching
/// its invariant record against the constructed row algebra.
inline ToralgClass classify(const DGAlgebra& A) {
    detail::require_zero_differential(A);
    if (A.dim(0) != 1) throw OutOfScope("H_0 must be the residue field (dim H_0 = " + std::to_string(A.dim(0)) + ")");
    if (A.top_degree() > 3) throw OutOfScope("homology in degree " + std::to_string(A.top_degree()) + " > 3: embedding codepth exceeds 3");
    ToralgClass out;
    out.record = invariant_record(A);
    out.golod = is_golod_shape(A);
    out.gorenstein = is_poincare_duality(A);
    const std::vector<std::size_t> h{out.record.h1, out.record.h2, out.record.h3};
    for (const auto& [cls, params] : detail::candidate_rows(out.record)) {
        AlgebraPtr body = table_body(cls, params, A.field());
        auto b = detail::body_dims(*body);
        if (body->top_degree() > 3) continue;
        TableSpec spec{cls, params, {}};
        bool fits = true;
        for (int i = 0; i < 3; ++i) {
            if (b[i] > h[i]) fits = false;
            spec.w_dims.push_back(fits ? h[i] - b[i] : 0);
        }
        if (!fits) continue;
        while (!spec.w_dims.empty() && spec.w_dims.back() == 0) spec.w_dims.pop_back();
        if (cls == TableClass::C && !spec.w_dims.empty()) continue;
        if (invariant_record(*table_algebra(spec, A.field())) == out.record) {
            out.spec = std::move(spec);
            return out;
        }
    }
    throw Unrecognized("no table row has invariant record " + out.record.str());
}

inline ToralgClass classify(const HomologyAlgebra& H) { return classify(*H.algebra); }

// ---------------------------------------------------------------------------

struct SdcBound {
    int bound = 2;
    std::string attained_by;
};

/// At most two semidualizing complexes up to shift: R and a dualizing complex,
/// which coincide when R is Gorenstein.
inline SdcBound sdc_bound(const ToralgClass& c) {
    if (c.gorenstein) return {1, "R (Gorenstein: the dualizing complex is a shift of R)"};
    return {2, "R and a dualizing complex D^R"};
}

struct RingClassification {
    std::vector<std::size_t> koszul_dims;    // dim H_i(K^R)
    std::vector<std::size_t> koszul_complex_dims;
    ToralgClass cls;
    SdcBound bound;
};

inline RingClassification classify_ring(const RingPresentation& R) {
    if (R.edim() > 3) throw OutOfScope("embedding dimension " + std::to_string(R.edim()) + " > 3");
    auto K = koszul_complex(R);
    auto H = homology_algebra(K);
    RingClassification out;
    out.koszul_complex_dims = K->dims();
    out.koszul_dims = H.algebra->dims();
    out.cls = classify(H);
    out.bound = sdc_bound(out.cls);
    return out;
}

// ---------------------------------------------------------------------------
// Constructor grid and collision audit

/// Rows that are isomorphic to an earlier row in the priority order, mapped to
/// the row the classifier reports.
inline TableSpec canonical_row(const TableSpec& s) {
    auto total = [](const std::vector<std::size_t>& w) {
        std::size_t t = 0;
        for (auto x : w) t += x;
        return t;
    };
    // S x W with W = 0 or W = Sk is the exterior algebra on 0 or 1 generator.
    if (s.cls == TableClass::S && total(s.w_dims) == 0) return {TableClass::C, {0}, {}};
    if (s.cls == TableClass::S && s.w_dims == std::vector<std::size_t>{1}) return {TableClass::C, {1}, {}};
    // H(1,0) = Lambda(Sk) (x) Lambda(Sk) = C(2).
    if (s.cls == TableClass::H && s.params == std::vector<int>{1, 0} && total(s.w_dims) == 0) return {TableClass::C, {2}, {}};
    // H(0,1) = (k x S^2 k) (x) (k x Sk) = G(1).
    if (s.cls == TableClass::H && s.params == std::vector<int>{0, 1}) return {TableClass::G, {1}, s.w_dims};
    return s;
}

/// Grid: C(c), c <= 3, W = 0; T, B, S, G(r) with r in [1, max_r], H(p,q) with
/// p, q in [0, max_pq] except (0,0), each with W in {0, Sk, Sk^2}.
inline std::vector<TableSpec> constructor_grid(int max_r = 4, int max_pq = 3) {
    const std::vector<std::vector<std::size_t>> ws{{}, {1}, {2}};
    std::vector<TableSpec> g;
    for (int c = 0; c <= 3; ++c) g.push_back({TableClass::C, {c}, {}});
    for (const auto& w : ws) {
        g.push_back({TableClass::T, {}, w});
        g.push_back({TableClass::B, {}, w});
        for (int r = 1; r <= max_r; ++r) g.push_back({TableClass::G, {r}, w});
        for (int p = 0; p <= max_pq; ++p)
            for (int q = 0; q <= max_pq; ++q)
                if (p || q) g.push_back({TableClass::H, {p, q}, w});
        g.push_back({TableClass::S, {}, w});
    }
    return g;
}

struct GridEntry {
    TableSpec input, expected, got;
    InvariantRecord record;
    std::string error;
    bool ok() const { return error.empty() && got == expected; }
};

inline GridEntry classify_grid_point(const TableSpec& s, PrimeField F = PrimeField(kDefaultCharacteristic)) {
    GridEntry e{s, canonical_row(s), {}, {}, {}};
    try {
        auto H = homology_algebra(table_algebra(s, F));
        auto c = classify(H);
        e.got = c.spec;
        e.record = c.record;
    } catch (const Error& err) {
        e.error = err.what();
    }
    return e;
}

struct GridAudit {
    std::vector<GridEntry> entries;
    std::vector<std::string> collisions;  // records shared by rows with different canonical labels
    bool ok() const {
        if (!collisions.empty()) return false;
        for (const auto& e : entries)
            if (!e.ok()) return false;
        return true;
    }
};

inline GridAudit audit_grid(const std::vector<TableSpec>& grid, PrimeField F = PrimeField(kDefaultCharacteristic)) {
    GridAudit a;
    std::map<InvariantRecord, std::set<std::string>> by_record;
    for (const auto& s : grid) {
        a.entries.push_back(classify_grid_point(s, F));
        auto rec = invariant_record(*homology_algebra(table_algebra(s, F)).algebra);
        const auto& c = a.entries.back().expected;
        std::string key = c.name() + " W=";
        for (auto w : c.w_dims) key += std::to_string(w) + ",";
        by_record[rec].insert(key);
    }
    for (const auto& [rec, labels] : by_record)
        if (labels.size() > 1) {
            std::string msg = rec.str() + ":";
            for (const auto& l : labels) msg += " " + l;
            a.collisions.push_back(msg);
        }
    return a;
}

}  // namespace klab

#endif
