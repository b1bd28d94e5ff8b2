#ifndef KLAB_BUILD_HPP
#define KLAB_BUILD_HPP

#include <bit>
#include <functional>

#include "module.hpp"

namespace klab {

namespace detail {

/// Subsets of {0..m-1} as bitmasks, ordered by size and then lexicographically.
inline std::vector<std::uint32_t> ordered_subsets(int m) {
    std::vector<std::uint32_t> out;
    for (int size = 0; size <= m; ++size) {
        std::function<void(int, int, std::uint32_t)> rec = [&](int start, int left, std::uint32_t mask) {
            if (left == 0) {
                out.push_back(mask);
                return;
            }
            for (int i = start; i <= m - left; ++i) rec(i + 1, left - 1, mask | (1u << i));
        };
        rec(0, size, 0);
    }
    return out;
}

/// Exponent of the sign of e_S e_T = +- e_{S u T}: number of pairs s in S, t in T with s > t.
inline int wedge_sign_exponent(std::uint32_t S, std::uint32_t T) {
    int n = 0;
    for (std::uint32_t s = S; s; s &= s - 1) {
        int i = std::countr_zero(s);
        n += std::popcount(T & ((1u << i) - 1));
    }
    return n;
}

inline std::string wedge_label(std::uint32_t S, const std::string& prefix = "e") {
    if (!S) return "1";
    std::string l;
    for (std::uint32_t s = S; s; s &= s - 1) l += prefix + std::to_string(std::countr_zero(s) + 1);
    return l;
}

/// Elements indexed by (subset position, inner index), sorted by total degree,
/// then subset order, then inner order.
struct ProductIndex {
    std::vector<std::uint32_t> subsets;
    std::vector<std::pair<std::size_t, std::size_t>> order;  // global -> (subset pos, inner)
    std::vector<std::size_t> global;                         // subset pos * inner_dim + inner -> global
    std::size_t inner_dim = 0;
    std::map<std::uint32_t, std::size_t> subset_pos;

    ProductIndex(int m, const std::vector<int>& inner_degrees) : subsets(ordered_subsets(m)), inner_dim(inner_degrees.size()) {
        for (std::size_t s = 0; s < subsets.size(); ++s) {
            subset_pos[subsets[s]] = s;
            for (std::size_t c = 0; c < inner_dim; ++c) order.push_back({s, c});
        }
        auto deg = [&](const std::pair<std::size_t, std::size_t>& p) { return std::popcount(subsets[p.first]) + inner_degrees[p.second]; };
        std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) { return deg(a) < deg(b); });
        global.assign(subsets.size() * inner_dim, 0);
        for (std::size_t g = 0; g < order.size(); ++g) global[order[g].first * inner_dim + order[g].second] = g;
    }
    std::uint32_t at(std::uint32_t subset, std::size_t inner) const {
        return static_cast<std::uint32_t>(global[subset_pos.at(subset) * inner_dim + inner]);
    }
};

inline std::vector<BasisElement> sorted_by_degree(std::vector<BasisElement> b) {
    std::stable_sort(b.begin(), b.end(), [](const BasisElement& x, const BasisElement& y) { return x.degree < y.degree; });
    return b;
}

}  // namespace detail

/// Exterior algebra on c generators of degree 1, zero differential.
inline AlgebraPtr exterior_algebra(std::size_t c, PrimeField F = PrimeField(kDefaultCharacteristic)) {
    if (c > 8) throw ParameterOutOfRange("exterior_algebra supports at most 8 generators");
    const auto subs = detail::ordered_subsets(static_cast<int>(c));
    const std::size_t n = subs.size();
    std::map<std::uint32_t, std::uint32_t> pos;
    AlgebraData d{F, {}, 0, std::vector<SparseVec>(n), std::vector<SparseVec>(n * n), std::nullopt};
    for (std::size_t i = 0; i < n; ++i) {
        pos[subs[i]] = static_cast<std::uint32_t>(i);
        d.basis.push_back({detail::wedge_label(subs[i]), std::popcount(subs[i])});
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (!(subs[a] & subs[b])) d.mult[a * n + b] = {{pos[subs[a] | subs[b]], F.sign(detail::wedge_sign_exponent(subs[a], subs[b]))}};
    return make_algebra(std::move(d));
}

/// The ring R = k[x]/I as a DG algebra concentrated in degree 0.
inline AlgebraPtr ring_algebra(const RingPresentation& R) {
    const auto& F = R.field();
    const std::size_t n = R.dim();
    const auto& mons = R.standard_monomials();
    AlgebraData d{F, {}, 0, std::vector<SparseVec>(n), std::vector<SparseVec>(n * n), std::nullopt};
    for (const auto& m : mons) d.basis.push_back({R.format(m), 0});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Exponents e(R.num_variables());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = mons[a][i] + mons[b][i];
            if (auto idx = R.index_of(e)) d.mult[a * n + b] = unit_vector(static_cast<std::uint32_t>(*idx));
        }
    BaseAction base{std::make_shared<const RingPresentation>(R), {}};
    for (std::size_t v = 0; v < R.num_variables(); ++v) {
        Exponents e(R.num_variables(), 0);
        e[v] = 1;
        base.variable_images.push_back(unit_vector(static_cast<std::uint32_t>(*R.index_of(e))));
    }
    d.base = std::move(base);
    return make_algebra(std::move(d));
}

/// K^R(t) (x)_R C for a DG algebra C with a base action of R and a sequence t of
/// variable indices: e_i of degree 1 with d(e_i) = t_i, d extended by Leibniz.
inline AlgebraPtr koszul_extension(const AlgebraPtr& C, const std::vector<std::size_t>& t) {
    if (!C->base_action()) throw PreconditionViolation("koszul_extension needs an algebra with a base ring action");
    const auto& base = *C->base_action();
    for (auto v : t)
        if (v >= base.variable_images.size()) throw PreconditionViolation("Koszul sequence refers to an unknown variable");
    if (t.size() > 12) throw ParameterOutOfRange("Koszul sequence too long");
    const auto& F = C->field();
    const int m = static_cast<int>(t.size());
    std::vector<int> cdeg;
    for (std::size_t c = 0; c < C->dim(); ++c) cdeg.push_back(C->degree(c));
    detail::ProductIndex P(m, cdeg);
    const std::size_t n = P.order.size();
    AlgebraData d{F, {}, 0, std::vector<SparseVec>(n), std::vector<SparseVec>(n * n), std::nullopt};
    for (const auto& [s, c] : P.order) {
        std::uint32_t S = P.subsets[s];
        std::string l = !S ? C->label(c) : detail::wedge_label(S) + (c == C->unit() ? "" : "*" + C->label(c));
        d.basis.push_back({l, std::popcount(S) + C->degree(c)});
    }
    d.unit = P.at(0, C->unit());
    for (std::size_t g = 0; g < n; ++g) {
        const auto [s, c] = P.order[g];
        const std::uint32_t S = P.subsets[s];
        SparseVec out;
        int k = 0;
        for (std::uint32_t bits = S; bits; bits &= bits - 1, ++k) {
            int i = std::countr_zero(bits);
            SparseVec xc = C->multiply(base.variable_images[t[i]], unit_vector(static_cast<std::uint32_t>(c)));
            for (const auto& u : xc) out.push_back({P.at(S & ~(1u << i), u.index), F.mul(F.sign(k), u.coeff)});
        }
        for (const auto& u : C->diff(c)) out.push_back({P.at(S, u.index), F.mul(F.sign(std::popcount(S)), u.coeff)});
        normalize(F, out);
        d.diff[g] = std::move(out);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto [sa, ca] = P.order[a];
            const auto [sb, cb] = P.order[b];
            const std::uint32_t S = P.subsets[sa], T = P.subsets[sb];
            if (S & T) continue;
            Scalar sign = F.sign(detail::wedge_sign_exponent(S, T) + C->degree(ca) * std::popcount(T));
            SparseVec out;
            for (const auto& u : C->product(ca, cb)) out.push_back({P.at(S | T, u.index), F.mul(sign, u.coeff)});
            normalize(F, out);
            d.mult[a * n + b] = std::move(out);
        }
    BaseAction nb{base.ring, {}};
    for (const auto& img : base.variable_images) {
        SparseVec v;
        for (const auto& u : img) v.push_back({P.at(0, u.index), u.coeff});
        normalize(F, v);
        nb.variable_images.push_back(std::move(v));
    }
    d.base = std::move(nb);
    return make_algebra(std::move(d));
}

/// Koszul complex K^R on the variables of R.
inline AlgebraPtr koszul_complex(const RingPresentation& R) {
    std::vector<std::size_t> t(R.num_variables());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
    return koszul_extension(ring_algebra(R), t);
}

/// B (x)_C X = K^R(t) (x)_R X for a DG C-module X, as a module over B = koszul_extension(C, t).
inline DGModule koszul_extension_module(const AlgebraPtr& B, const std::vector<std::size_t>& t, const DGModule& X) {
    const AlgebraPtr& C = X.algebra();
    const auto& base = *C->base_action();
    const auto& F = X.field();
    const int m = static_cast<int>(t.size());
    std::vector<int> cdeg, xdeg;
    for (std::size_t c = 0; c < C->dim(); ++c) cdeg.push_back(C->degree(c));
    for (std::size_t x = 0; x < X.dim(); ++x) xdeg.push_back(X.degree(x));
    detail::ProductIndex PB(m, cdeg), PX(m, xdeg);
    if (PB.order.size() != B->dim()) throw PreconditionViolation("algebra is not the Koszul extension of the module's algebra");
    const std::size_t n = PX.order.size();
    ModuleData d{B, {}, std::vector<SparseVec>(n), std::vector<SparseVec>(B->dim() * n)};
    for (const auto& [s, x] : PX.order) {
        std::uint32_t S = PX.subsets[s];
        d.basis.push_back({!S ? X.label(x) : detail::wedge_label(S) + "*" + X.label(x), std::popcount(S) + X.degree(x)});
    }
    for (std::size_t g = 0; g < n; ++g) {
        const auto [s, x] = PX.order[g];
        const std::uint32_t S = PX.subsets[s];
        SparseVec out;
        int k = 0;
        for (std::uint32_t bits = S; bits; bits &= bits - 1, ++k) {
            int i = std::countr_zero(bits);
            SparseVec tx = X.act(base.variable_images[t[i]], unit_vector(static_cast<std::uint32_t>(x)));
            for (const auto& u : tx) out.push_back({PX.at(S & ~(1u << i), u.index), F.mul(F.sign(k), u.coeff)});
        }
        for (const auto& u : X.diff(x)) out.push_back({PX.at(S, u.index), F.mul(F.sign(std::popcount(S)), u.coeff)});
        normalize(F, out);
        d.diff[g] = std::move(out);
    }
    for (std::size_t a = 0; a < B->dim(); ++a)
        for (std::size_t g = 0; g < n; ++g) {
            const auto [ta, c] = PB.order[a];
            const auto [sx, x] = PX.order[g];
            const std::uint32_t T = PB.subsets[ta], S = PX.subsets[sx];
            if (T & S) continue;
            Scalar sign = F.sign(detail::wedge_sign_exponent(T, S) + C->degree(c) * std::popcount(S));
            SparseVec out;
            for (const auto& u : X.act(c, x)) out.push_back({PX.at(T | S, u.index), F.mul(sign, u.coeff)});
            normalize(F, out);
            d.action[a * n + g] = std::move(out);
        }
    return make_module(std::move(d));
}

/// Graded tensor product C (x)_k D with (c(x)d)(c'(x)d') = (-1)^{|d||c'|} cc' (x) dd'.
inline AlgebraPtr tensor_algebras(const AlgebraPtr& C, const AlgebraPtr& D) {
    if (!(C->field() == D->field())) throw DimensionMismatch("tensor product of algebras over different fields");
    const auto& F = C->field();
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t i = 0; i < C->dim(); ++i)
        for (std::size_t j = 0; j < D->dim(); ++j) order.push_back({i, j});
    std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        return C->degree(a.first) + D->degree(a.second) < C->degree(b.first) + D->degree(b.second);
    });
    const std::size_t n = order.size();
    std::vector<std::uint32_t> pos(n);
    for (std::size_t g = 0; g < n; ++g) pos[order[g].first * D->dim() + order[g].second] = static_cast<std::uint32_t>(g);
    auto at = [&](std::size_t i, std::size_t j) { return pos[i * D->dim() + j]; };
    AlgebraData d{F, {}, at(C->unit(), D->unit()), std::vector<SparseVec>(n), std::vector<SparseVec>(n * n), std::nullopt};
    for (const auto& [i, j] : order) {
        std::string l = j == D->unit() ? C->label(i) : i == C->unit() ? D->label(j) : C->label(i) + "|" + D->label(j);
        d.basis.push_back({l, C->degree(i) + D->degree(j)});
    }
    for (std::size_t g = 0; g < n; ++g) {
        const auto [i, j] = order[g];
        SparseVec out;
        for (const auto& u : C->diff(i)) out.push_back({at(u.index, j), u.coeff});
        for (const auto& u : D->diff(j)) out.push_back({at(i, u.index), F.mul(F.sign(C->degree(i)), u.coeff)});
        normalize(F, out);
        d.diff[g] = std::move(out);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto [i, j] = order[a];
            const auto [i2, j2] = order[b];
            const auto& cc = C->product(i, i2);
            const auto& dd = D->product(j, j2);
            if (cc.empty() || dd.empty()) continue;
            Scalar sign = F.sign(D->degree(j) * C->degree(i2));
            SparseVec out;
            for (const auto& u : cc)
                for (const auto& v : dd) out.push_back({at(u.index, v.index), F.mul(sign, F.mul(u.coeff, v.coeff))});
            normalize(F, out);
            d.mult[a * n + b] = std::move(out);
        }
    return make_algebra(std::move(d));
}

/// B x W with W.W = 0: (b,w)(b',w') = (bb', bw' + (-1)^{|b'||w|} b'w).
inline AlgebraPtr trivial_extension(const AlgebraPtr& B, const DGModule& W) {
    if (W.algebra().get() != B.get() && !W.algebra()->same_tables(*B)) throw PreconditionViolation("module is not over the given algebra");
    if (!W.is_zero() && W.lo() < 0) throw DegreeViolation("trivial extension by a module in negative degrees");
    const auto& F = B->field();
    const std::size_t nb = B->dim(), nw = W.dim();
    // merged order: B first within each degree
    std::vector<std::uint32_t> posB(nb), posW(nw);
    std::vector<BasisElement> basis;
    std::set<std::string> labels;
    for (const auto& b : B->basis()) labels.insert(b.label);
    std::size_t i = 0, j = 0;
    while (i < nb || j < nw) {
        if (j == nw || (i < nb && B->degree(i) <= W.degree(j))) {
            posB[i] = static_cast<std::uint32_t>(basis.size());
            basis.push_back(B->basis()[i++]);
        } else {
            std::string l = W.label(j);
            while (labels.count(l)) l = "s" + l;
            labels.insert(l);
            posW[j] = static_cast<std::uint32_t>(basis.size());
            basis.push_back({l, W.degree(j)});
            ++j;
        }
    }
    const std::size_t n = basis.size();
    auto remap = [&](const SparseVec& v, const std::vector<std::uint32_t>& pos) {
        SparseVec out;
        for (const auto& t : v) out.push_back({pos[t.index], t.coeff});
        normalize(F, out);
        return out;
    };
    AlgebraData d{F, std::move(basis), posB[B->unit()], std::vector<SparseVec>(n), std::vector<SparseVec>(n * n), std::nullopt};
    for (std::size_t b = 0; b < nb; ++b) d.diff[posB[b]] = remap(B->diff(b), posB);
    for (std::size_t w = 0; w < nw; ++w) d.diff[posW[w]] = remap(W.diff(w), posW);
    for (std::size_t a = 0; a < nb; ++a) {
        for (std::size_t b = 0; b < nb; ++b) d.mult[posB[a] * n + posB[b]] = remap(B->product(a, b), posB);
        for (std::size_t w = 0; w < nw; ++w) {
            d.mult[posB[a] * n + posW[w]] = remap(W.act(a, w), posW);
            d.mult[posW[w] * n + posB[a]] = remap(scaled(F, W.act(a, w), F.sign(B->degree(a) * W.degree(w))), posW);
        }
    }
    if (B->base_action()) {
        BaseAction base{B->base_action()->ring, {}};
        for (const auto& img : B->base_action()->variable_images) base.variable_images.push_back(remap(img, posB));
        d.base = std::move(base);
    }
    return make_algebra(std::move(d));
}

/// Trivial extension by a graded vector space W (dims[i] in degree lo+i) on which m_B acts as zero.
inline AlgebraPtr trivial_extension(const AlgebraPtr& B, int lo, const std::vector<std::size_t>& dims, const std::string& prefix = "w") {
    return trivial_extension(B, trivial_module(B, lo, dims, prefix));
}

// ---------------------------------------------------------------------------
// Homology algebra

struct HomologyAlgebra {
    AlgebraPtr algebra;                     // H(A), zero differential
    AlgebraPtr source;                      // A
    std::vector<SparseVec> representatives; // cycle in A for each basis element of H(A)
};

namespace detail {

inline std::vector<SparseVec> algebra_diff_columns(const DGAlgebra& A, int deg) {
    std::vector<SparseVec> cols;
    const std::size_t off = A.begin(deg - 1);
    for (std::size_t x = A.begin(deg); x < A.end(deg); ++x) {
        SparseVec v = A.diff(x);
        for (auto& t : v) t.index -= static_cast<std::uint32_t>(off);
        cols.push_back(std::move(v));
    }
    return cols;
}

inline SparseVec to_global(SparseVec v, std::size_t off) {
    for (auto& t : v) t.index += static_cast<std::uint32_t>(off);
    return v;
}

inline SparseVec to_local(SparseVec v, std::size_t off) {
    for (auto& t : v) t.index -= static_cast<std::uint32_t>(off);
    return v;
}

}  // namespace detail

/// H(A) with the induced product. Products are computed from one choice of
/// representatives and recomputed after perturbing every representative by a
/// boundary; disagreement throws RepresentativeDependence.
inline HomologyAlgebra homology_algebra(const AlgebraPtr& Aptr) {
    const DGAlgebra& A = *Aptr;
    const auto& F = A.field();
    const int top = A.top_degree();
    std::vector<HomologyQuotient> H;
    std::vector<std::size_t> offset;  // global index in H(A) of first class per degree
    std::vector<BasisElement> basis;
    std::vector<SparseVec> reps;      // global vectors in A
    std::set<std::string> used;
    for (int d = 0; d <= top; ++d) {
        HomologyQuotient q(F, A.dim(d));
        for (const auto& b : detail::algebra_diff_columns(A, d + 1)) q.add_relation(b);
        if (d == 0) q.add_cycle(unit_vector(static_cast<std::uint32_t>(A.unit())));
        for (auto& z : kernel_of_columns(F, A.dim(d - 1), detail::algebra_diff_columns(A, d))) q.add_cycle(z);
        offset.push_back(basis.size());
        for (std::size_t k = 0; k < q.dim(); ++k) {
            SparseVec r = detail::to_global(q.representatives()[k], A.begin(d));
            std::string l = (r.size() == 1 && r.front().coeff == 1) ? A.label(r.front().index) : "h" + std::to_string(d) + "_" + std::to_string(k + 1);
            while (used.count(l)) l = "h" + l;
            used.insert(l);
            basis.push_back({l, d});
            reps.push_back(std::move(r));
        }
        H.push_back(std::move(q));
    }
    const std::size_t n = basis.size();
    auto degree_of = [&](std::size_t i) { return basis[i].degree; };
    auto cls = [&](const SparseVec& z, int d) {
        SparseVec c = H[d].classify(detail::to_local(z, A.begin(d)));
        for (auto& t : c) t.index += static_cast<std::uint32_t>(offset[d]);
        return c;
    };
    auto products = [&](const std::vector<SparseVec>& r) {
        std::vector<SparseVec> mult(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                int d = degree_of(a) + degree_of(b);
                if (d > top) continue;
                mult[a * n + b] = cls(A.multiply(r[a], r[b]), d);
            }
        return mult;
    };
    AlgebraData data{F, basis, 0, std::vector<SparseVec>(n), products(reps), std::nullopt};

    // second choice: add the boundary of the first basis element one degree up
    std::vector<SparseVec> alt = reps;
    for (std::size_t i = 0; i < n; ++i) {
        int d = degree_of(i);
        for (std::size_t x = A.begin(d + 1); x < A.end(d + 1); ++x)
            if (!A.diff(x).empty()) {
                axpy(F, alt[i], 1, A.diff(x));
                break;
            }
    }
    if (products(alt) != data.mult) throw RepresentativeDependence("homology product depends on the chosen representatives");

    if (A.base_action()) {
        BaseAction base{A.base_action()->ring, {}};
        for (const auto& img : A.base_action()->variable_images) base.variable_images.push_back(cls(img, 0));
        data.base = std::move(base);
    }
    return {make_algebra(std::move(data)), Aptr, std::move(reps)};
}

// ---------------------------------------------------------------------------
// Table algebras

enum class TableClass { C, S, T, B, G, H };

inline std::string class_name(TableClass c) {
    switch (c) {
        case TableClass::C: return "C";
        case TableClass::S: return "S";
        case TableClass::T: return "T";
        case TableClass::B: return "B";
        case TableClass::G: return "G";
        case TableClass::H: return "H";
    }
    return "?";
}

inline TableClass parse_class(const std::string& s) {
    if (s == "C") return TableClass::C;
    if (s == "S") return TableClass::S;
    if (s == "T") return TableClass::T;
    if (s == "B") return TableClass::B;
    if (s == "G") return TableClass::G;
    if (s == "H") return TableClass::H;
    throw ParameterOutOfRange("unknown table class '" + s + "'");
}

inline std::size_t class_arity(TableClass c) {
    switch (c) {
        case TableClass::C:
        case TableClass::G: return 1;
        case TableClass::H: return 2;
        default: return 0;
    }
}

/// Row of the class table: label, parameters and the graded space W
/// (w_dims[i] in degree i+1) that the body is extended by.
struct TableSpec {
    TableClass cls = TableClass::S;
    std::vector<int> params;
    std::vector<std::size_t> w_dims;

    std::string name() const {
        std::string s = class_name(cls);
        if (!params.empty()) {
            s += "(";
            for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
            s += ")";
        }
        return s;
    }
    bool operator==(const TableSpec&) const = default;
};

/// The body of a table row, before extension by W.
inline AlgebraPtr table_body(TableClass cls, const std::vector<int>& params, PrimeField F = PrimeField(kDefaultCharacteristic)) {
    if (params.size() != class_arity(cls)) throw ParameterOutOfRange("class " + class_name(cls) + " takes " + std::to_string(class_arity(cls)) + " parameter(s)");
    switch (cls) {
        case TableClass::C:
            if (params[0] < 0 || params[0] > 3) throw ParameterOutOfRange("C(c) requires 0 <= c <= 3");
            return exterior_algebra(static_cast<std::size_t>(params[0]), F);
        case TableClass::S: return exterior_algebra(0, F);
        case TableClass::T: {
            auto C = exterior_algebra(2, F);
            std::vector<SparseVec> high;
            for (std::size_t i = C->begin(2); i < C->dim(); ++i) high.push_back(unit_vector(static_cast<std::uint32_t>(i)));
            return trivial_extension(C, shift(quotient(regular_module(C), high).module, 1));
        }
        case TableClass::B: {
            auto C = exterior_algebra(2, F);
            return trivial_extension(C, shift(positive_part(C).module, 1));
        }
        case TableClass::G: {
            if (params[0] < 1 || params[0] > 8) throw ParameterOutOfRange("G(r) requires 1 <= r <= 8");
            auto k = exterior_algebra(0, F);
            auto C = trivial_extension(k, 1, {static_cast<std::size_t>(params[0])}, "u");
            return trivial_extension(C, dual_into_shift(regular_module(C), 3));
        }
        case TableClass::H: {
            if (params[0] < 0 || params[1] < 0 || params[0] > 8 || params[1] > 8) throw ParameterOutOfRange("H(p,q) requires 0 <= p, q <= 8");
            auto k = exterior_algebra(0, F);
            auto C = trivial_extension(k, 1, {static_cast<std::size_t>(params[0]), static_cast<std::size_t>(params[1])}, "u");
            auto D = trivial_extension(k, 1, {1}, "v");
            return tensor_algebras(C, D);
        }
    }
    throw ParameterOutOfRange("unknown class");
}

/// Table row as an algebra: body x W with m_body W = 0. Class C admits only W = 0.
inline AlgebraPtr table_algebra(const TableSpec& spec, PrimeField F = PrimeField(kDefaultCharacteristic)) {
    auto body = table_body(spec.cls, spec.params, F);
    std::size_t wtotal = 0;
    for (auto w : spec.w_dims) wtotal += w;
    if (wtotal == 0) return body;
    if (spec.cls == TableClass::C) throw ParameterOutOfRange("class C(c) has no W summand");
    return trivial_extension(body, 1, spec.w_dims);
}

}  // namespace klab

#endif
