#ifndef KLAB_DERIVED_HPP
#define KLAB_DERIVED_HPP

#include "resolution.hpp"

namespace klab {

/// Homology dimensions of a derived complex, exact for degrees in [window_lo, window_hi].
struct DerivedDims {
    int lo = 0;
    std::vector<std::size_t> dims;  // dims[i] = dim H_{lo+i}
    int window_lo = INT_MIN;
    int window_hi = INT_MAX;

    std::size_t at(int i) const { return (i < lo || i >= lo + int(dims.size())) ? 0 : dims[i - lo]; }
    bool certified(int i) const { return i >= window_lo && i <= window_hi; }
    std::vector<std::size_t> range(int a, int b) const {
        std::vector<std::size_t> out;
        for (int i = a; i <= b; ++i) out.push_back(at(i));
        return out;
    }
};

inline void require_window(const DerivedDims& d, int a, int b, const std::string& what) {
    if (a < d.window_lo || b > d.window_hi)
        throw BudgetExceeded(what + ": requested degrees [" + std::to_string(a) + "," + std::to_string(b) + "] but the certified window is [" +
                             (d.window_lo == INT_MIN ? std::string("-inf") : std::to_string(d.window_lo)) + "," +
                             (d.window_hi == INT_MAX ? std::string("inf") : std::to_string(d.window_hi)) + "]");
}

/// A finite complex given degreewise by sparse differential columns.
struct ChainComplexView {
    PrimeField field;
    int lo, hi;
    std::function<std::size_t(int)> dim;
    std::function<std::vector<SparseVec>(int)> columns;  // from degree n to n-1

    std::size_t homology_dim(int n) const {
        if (n < lo || n > hi) return 0;
        std::size_t out_rank = n - 1 >= lo ? rank_of_columns(field, dim(n - 1), columns(n)) : 0;
        std::size_t in_rank = n + 1 <= hi ? rank_of_columns(field, dim(n), columns(n + 1)) : 0;
        return dim(n) - out_rank - in_rank;
    }
    HomologyQuotient homology(int n) const {
        std::vector<SparseVec> in = n + 1 <= hi ? columns(n + 1) : std::vector<SparseVec>{};
        std::vector<SparseVec> out = n - 1 >= lo ? columns(n) : std::vector<SparseVec>(dim(n));
        return HomologyQuotient::compute(field, dim(n), in, n - 1 >= lo ? dim(n - 1) : 0, out);
    }
};

// ---------------------------------------------------------------------------
// Tor

/// F (x)_A Y for a resolution F of X, with d(e_g (x) y) = d(e_g) (x) y + (-1)^{|e_g|} e_g (x) d(y)
/// where (b e_h) (x) y = (-1)^{|b||e_h|} e_h (x) b y.
class TensorComplex {
   public:
    TensorComplex(const SemifreeResolution& F, const DGModule& Y) : F_(F), Y_(Y) {
        const auto& gens = F.generators();
        for (std::uint32_t g = 0; g < gens.size(); ++g)
            for (std::size_t y = 0; y < Y.dim(); ++y) {
                int n = gens[g].degree + Y.degree(y);
                auto& blk = blocks_[n];
                index_[{g, static_cast<std::uint32_t>(y)}] = static_cast<std::uint32_t>(blk.size());
                blk.push_back({g, static_cast<std::uint32_t>(y)});
            }
    }

    int lo() const { return blocks_.empty() ? 0 : blocks_.begin()->first; }
    int hi() const { return blocks_.empty() ? -1 : blocks_.rbegin()->first; }
    std::size_t dim(int n) const {
        auto it = blocks_.find(n);
        return it == blocks_.end() ? 0 : it->second.size();
    }

    std::vector<SparseVec> columns(int n) const {
        const auto& Fd = F_.field();
        const auto& A = *F_.algebra();
        const auto& gens = F_.generators();
        std::vector<SparseVec> cols;
        auto it = blocks_.find(n);
        if (it == blocks_.end()) return cols;
        for (const auto& [g, y] : it->second) {
            SparseVec out;
            const auto& below = F_.block(gens[g].degree - 1);
            for (const auto& t : gens[g].boundary) {
                const auto [h, b] = below[t.index];
                Scalar c = Fd.mul(t.coeff, Fd.sign(A.degree(b) * gens[h].degree));
                for (const auto& u : Y_.act(b, y)) out.push_back({index_.at({h, u.index}), Fd.mul(c, u.coeff)});
            }
            Scalar s = Fd.sign(gens[g].degree);
            for (const auto& u : Y_.diff(y)) out.push_back({index_.at({g, u.index}), Fd.mul(s, u.coeff)});
            normalize(Fd, out);
            cols.push_back(std::move(out));
        }
        return cols;
    }

    ChainComplexView view() const {
        return {F_.field(), lo(), hi(), [this](int n) { return dim(n); }, [this](int n) { return columns(n); }};
    }

   private:
    const SemifreeResolution& F_;
    const DGModule& Y_;
    std::map<int, std::vector<std::pair<std::uint32_t, std::uint32_t>>> blocks_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> index_;
};

/// dim Tor^A_i(X, Y) from a resolution of X; exact for i <= final_degree + lo(Y) - 1.
inline DerivedDims tor_dims(const SemifreeResolution& F, const DGModule& Y) {
    DerivedDims out;
    if (Y.is_zero() || F.generators().empty()) {
        out.lo = 0;
        if (!F.is_complete() && !Y.is_zero()) out.window_hi = F.final_degree() + Y.lo() - 1;
        return out;
    }
    TensorComplex T(F, Y);
    auto view = T.view();
    out.lo = T.lo();
    out.window_hi = F.is_complete() ? INT_MAX : F.final_degree() + Y.lo() - 1;
    int last = std::min(T.hi(), out.window_hi);
    for (int n = T.lo(); n <= last; ++n) out.dims.push_back(view.homology_dim(n));
    return out;
}

/// Budget needed so that Tor_i(X, Y) is certified for i <= b.
inline int tor_budget(const DGModule& X, const DGModule& Y, int b) { return std::max(0, b - X.lo() - Y.lo() + 1); }

/// dim Tor^A_i(X, Y) for i in [a, b] using stage budget N; BudgetExceeded if the window is too small.
inline std::vector<std::size_t> tor(const DGModule& X, const DGModule& Y, int a, int b, int N) {
    auto F = resolve(X, N);
    auto d = tor_dims(F, Y);
    require_window(d, a, b, "tor");
    return d.range(a, b);
}

// ---------------------------------------------------------------------------
// RHom

/// Hom_A(F, Y): basis delta_{(g, y)} sending e_g to y, of degree |y| - |e_g|;
/// (d phi)(e_g) = d(phi(e_g)) - (-1)^{|phi|} phi(d e_g), phi(b e_h) = (-1)^{|phi||b|} b phi(e_h).
class HomComplex {
   public:
    HomComplex(const SemifreeResolution& F, const DGModule& Y) : F_(F), Y_(Y) {
        const auto& gens = F.generators();
        users_.resize(gens.size());
        for (std::uint32_t g = 0; g < gens.size(); ++g) {
            for (std::size_t y = 0; y < Y.dim(); ++y) {
                int n = Y.degree(y) - gens[g].degree;
                auto& blk = blocks_[n];
                index_[{g, static_cast<std::uint32_t>(y)}] = static_cast<std::uint32_t>(blk.size());
                blk.push_back({g, static_cast<std::uint32_t>(y)});
            }
            const auto& below = F.block(gens[g].degree - 1);
            for (const auto& t : gens[g].boundary) {
                const auto [h, b] = below[t.index];
                users_[h].push_back({g, b, t.coeff});
            }
        }
    }

    int lo() const { return blocks_.empty() ? 0 : blocks_.begin()->first; }
    int hi() const { return blocks_.empty() ? -1 : blocks_.rbegin()->first; }
    std::size_t dim(int n) const {
        auto it = blocks_.find(n);
        return it == blocks_.end() ? 0 : it->second.size();
    }
    std::uint32_t index(std::uint32_t g, std::uint32_t y) const { return index_.at({g, y}); }

    std::vector<SparseVec> columns(int n) const {
        const auto& Fd = F_.field();
        const auto& A = *F_.algebra();
        std::vector<SparseVec> cols;
        auto it = blocks_.find(n);
        if (it == blocks_.end()) return cols;
        for (const auto& [h, y] : it->second) {
            SparseVec out;
            for (const auto& u : Y_.diff(y)) out.push_back({index_.at({h, u.index}), u.coeff});
            for (const auto& [g, b, c] : users_[h]) {
                Scalar s = Fd.neg(Fd.mul(c, Fd.sign(static_cast<long long>(n) * (1 + A.degree(b)))));
                for (const auto& u : Y_.act(b, y)) out.push_back({index_.at({g, u.index}), Fd.mul(s, u.coeff)});
            }
            normalize(Fd, out);
            cols.push_back(std::move(out));
        }
        return cols;
    }

    ChainComplexView view() const {
        return {F_.field(), lo(), hi(), [this](int n) { return dim(n); }, [this](int n) { return columns(n); }};
    }

    /// chi(a): e_g -> a . eps(e_g), as a vector in degree |a| (local coordinates).
    SparseVec homothety(const SparseVec& a) const {
        const auto& Fd = F_.field();
        const auto& gens = F_.generators();
        SparseVec out;
        for (std::uint32_t g = 0; g < gens.size(); ++g)
            for (const auto& u : Y_.act(a, gens[g].augmentation)) out.push_back({index_.at({g, u.index}), u.coeff});
        normalize(Fd, out);
        return out;
    }

   private:
    struct User {
        std::uint32_t g, b;
        Scalar c;
    };
    const SemifreeResolution& F_;
    const DGModule& Y_;
    std::map<int, std::vector<std::pair<std::uint32_t, std::uint32_t>>> blocks_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> index_;
    std::vector<std::vector<User>> users_;
};

/// Lowest Hom degree certified from a resolution with the given final degree.
inline int rhom_window_lo(const SemifreeResolution& F, const DGModule& Y) {
    if (F.is_complete() || Y.is_zero()) return INT_MIN;
    return Y.hi() - F.final_degree() + 1;
}

inline DerivedDims rhom_dims(const SemifreeResolution& F, const DGModule& Y) {
    DerivedDims out;
    out.window_lo = rhom_window_lo(F, Y);
    if (Y.is_zero() || F.generators().empty()) return out;
    HomComplex H(F, Y);
    auto view = H.view();
    int first = std::max(H.lo(), out.window_lo);
    out.lo = first;
    for (int n = first; n <= H.hi(); ++n) out.dims.push_back(view.homology_dim(n));
    return out;
}

inline std::vector<std::size_t> rhom(const DGModule& X, const DGModule& Y, int a, int b, int N) {
    auto F = resolve(X, N);
    auto d = rhom_dims(F, Y);
    require_window(d, a, b, "rhom");
    return d.range(a, b);
}

/// Algebra homology H_n(A) with representatives in local coordinates of A_n.
inline HomologyQuotient algebra_homology_at(const DGAlgebra& A, int n) {
    auto cols = [&](int deg) {
        std::vector<SparseVec> out;
        for (std::size_t x = A.begin(deg); x < A.end(deg); ++x) {
            SparseVec v = A.diff(x);
            for (auto& t : v) t.index -= static_cast<std::uint32_t>(A.begin(deg - 1));
            out.push_back(std::move(v));
        }
        return out;
    };
    return HomologyQuotient::compute(A.field(), A.dim(n), cols(n + 1), A.dim(n - 1), cols(n));
}

/// Per-degree data of the homothety H(chi): H(A) -> H(Hom_A(F, X)).
struct HomothetyDegree {
    int degree;
    std::size_t dim_HA;
    std::size_t dim_Hom;
    std::size_t rank;
    bool bijective() const { return dim_HA == dim_Hom && rank == dim_HA; }
};

inline std::vector<HomothetyDegree> homothety_data(const SemifreeResolution& F, int from, int to) {
    const DGModule& X = F.target();
    const DGAlgebra& A = *F.algebra();
    HomComplex H(F, X);
    auto view = H.view();
    std::vector<HomothetyDegree> out;
    for (int n = from; n <= to; ++n) {
        HomothetyDegree hd{n, 0, 0, 0};
        HomologyQuotient hom = (n >= H.lo() && n <= H.hi()) ? view.homology(n) : HomologyQuotient(A.field(), 0);
        hd.dim_Hom = hom.dim();
        if (n >= 0 && n <= A.top_degree()) {
            auto ha = algebra_homology_at(A, n);
            hd.dim_HA = ha.dim();
            if (hd.dim_HA && hd.dim_Hom) {
                Echelon img(A.field(), hom.dim());
                for (const auto& r : ha.representatives()) {
                    SparseVec global = r;
                    for (auto& t : global) t.index += static_cast<std::uint32_t>(A.begin(n));
                    img.insert(hom.classify(H.homothety(global)));
                }
                hd.rank = img.rank();
            }
        }
        out.push_back(hd);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Poincare series and projective dimension

struct PoincareCoeffs {
    int lo = 0;
    std::vector<std::size_t> coeffs;  // coeffs[i] = dim Tor_{lo+i}(k, X)
    bool exact = false;               // the resolution terminated: all later coefficients are 0
    std::size_t at(int i) const { return (i < lo || i >= lo + int(coeffs.size())) ? 0 : coeffs[i - lo]; }
};

inline PoincareCoeffs poincare(const SemifreeResolution& F) {
    PoincareCoeffs p;
    p.lo = F.start_degree();
    p.exact = F.is_complete();
    int last = F.is_complete() ? (F.generators().empty() ? p.lo - 1 : F.generators().back().degree) : F.final_degree();
    for (int d = p.lo; d <= last; ++d) p.coeffs.push_back(F.count_in_degree(d));
    return p;
}

inline PoincareCoeffs poincare(const DGModule& X, int N) { return poincare(resolve(X, N)); }

struct PdCertificate {
    enum class Kind { Finite, NotTerminated, Acyclic } kind;
    int degree;  // pd for Finite, the budget bound lo(X)+N for NotTerminated
    std::string describe() const {
        switch (kind) {
            case Kind::Finite: return "Finite(" + std::to_string(degree) + ")";
            case Kind::NotTerminated: return "NotTerminatedBy(" + std::to_string(degree) + ")";
            case Kind::Acyclic: return "Acyclic";
        }
        return "";
    }
};

inline PdCertificate pd_certificate(const SemifreeResolution& F) {
    if (F.is_complete()) {
        if (auto pd = F.projective_dimension()) return {PdCertificate::Kind::Finite, *pd};
        return {PdCertificate::Kind::Acyclic, 0};
    }
    return {PdCertificate::Kind::NotTerminated, F.final_degree()};
}

inline PdCertificate pd_certificate(const DGModule& X, int N) { return pd_certificate(resolve(X, N)); }

// ---------------------------------------------------------------------------
// Soft truncation and the exact sequence 0 -> X' -> L -> X~ -> 0

/// tau_{<=s} X = X / (X_{>s} + d X_{s+1}) with its projection.
inline Quotient soft_truncation(const DGModule& X, int s) {
    std::vector<SparseVec> span;
    for (std::size_t x = X.begin(s + 1); x < X.dim(); ++x) span.push_back(unit_vector(static_cast<std::uint32_t>(x)));
    for (std::size_t x = X.begin(s + 1); x < X.end(s + 1); ++x)
        if (!X.diff(x).empty()) span.push_back(X.diff(x));
    return quotient(X, span);
}

/// Rank of H_n(f) for a morphism of DG modules.
inline std::size_t induced_rank(const DGMorphism& f, int n) {
    auto hs = module_homology_at(f.source, n);
    auto ht = module_homology_at(f.target, n);
    if (!hs.dim() || !ht.dim()) return 0;
    Echelon img(f.source.field(), ht.dim());
    for (const auto& r : hs.representatives()) {
        SparseVec g = r;
        for (auto& t : g) t.index += static_cast<std::uint32_t>(f.source.begin(n));
        SparseVec v = f.apply(g);
        for (auto& t : v) t.index -= static_cast<std::uint32_t>(f.target.begin(n));
        img.insert(ht.classify(v));
    }
    return img.rank();
}

inline bool is_quasi_isomorphism(const DGMorphism& f) {
    int lo = std::min(f.source.lo(), f.target.lo()), hi = std::max(f.source.hi(), f.target.hi());
    auto hs = homology(f.source), ht = homology(f.target);
    for (int n = lo; n <= hi; ++n)
        if (hs.at(n) != ht.at(n) || induced_rank(f, n) != hs.at(n)) return false;
    return true;
}

struct Prop31Sequence {
    int s = 0;                  // sup H(X)
    std::size_t semibasis = 0;  // |E_{<=s}|
    DGModule L, X_tilde, X_prime;
    DGMorphism alpha, pi;
    bool exact = false;            // 0 -> X' -> L -> X~ -> 0 exact in every degree
    bool image_in_A_plus_L = false;
    bool quasi_iso = false;        // F -> X~ is a quasi-isomorphism and H(X~) = H(X)
    bool annihilated = false;      // Ann_A(A_+) X' = 0
    bool ok() const { return exact && image_in_A_plus_L && quasi_iso && annihilated; }
};

/// Builds the sequence of the construction from a minimal resolution of X.
/// Needs A_0 = k and generators final through degree sup H(X) + 1.
inline Prop31Sequence prop31_sequence(const DGModule& X, int N) {
    const AlgebraPtr& A = X.algebra();
    if (!A->degree_zero_is_field()) throw PreconditionViolation("the exact-sequence construction needs A_0 = k");
    auto sup = homology(X).sup();
    if (!sup) throw PreconditionViolation("X has zero homology");
    const int s = *sup;
    auto F = resolve(X, N);
    if (F.final_degree() < s + 1)
        throw BudgetExceeded("prop31 needs generators through degree " + std::to_string(s + 1) + "; budget gives " + std::to_string(F.final_degree()));

    const DGModule zero = zero_module(A);
    Prop31Sequence out{s, 0, F.submodule_module(s), zero, zero, DGMorphism{zero, zero, {}}, DGMorphism{zero, zero, {}}};
    for (const auto& g : F.generators()) out.semibasis += g.degree <= s;
    DGModule Fs1 = F.submodule_module(s + 1);
    auto trunc = soft_truncation(Fs1, s);
    out.X_tilde = trunc.module;

    std::unordered_map<std::string, std::uint32_t> pos;
    for (std::size_t i = 0; i < Fs1.dim(); ++i) pos[Fs1.label(i)] = static_cast<std::uint32_t>(i);
    std::vector<SparseVec> pi_images;
    for (std::size_t i = 0; i < out.L.dim(); ++i) pi_images.push_back(trunc.projection.apply(unit_vector(pos.at(out.L.label(i)))));
    out.pi = {out.L, out.X_tilde, pi_images};
    out.pi.validate();

    auto ker = kernel_of_columns(A->field(), out.X_tilde.dim(), pi_images);
    auto sub = submodule(out.L, ker);
    out.X_prime = sub.module;
    out.alpha = sub.inclusion;
    out.alpha.validate();

    bool exact = out.alpha.is_injective() && out.pi.is_surjective();
    for (int n = out.L.lo(); n <= out.L.hi() && exact; ++n)
        exact = out.L.dim(n) == out.X_prime.dim(n) + out.X_tilde.dim(n);
    for (const auto& v : out.alpha.images)
        if (!out.pi.apply(v).empty()) exact = false;
    out.exact = exact;

    Echelon AplusL(A->field(), out.L.dim());
    for (std::size_t a = A->begin(1); a < A->dim(); ++a)
        for (std::size_t x = 0; x < out.L.dim(); ++x) AplusL.insert(out.L.act(a, x));
    out.image_in_A_plus_L = true;
    for (const auto& v : out.alpha.images)
        if (!AplusL.contains(v)) out.image_in_A_plus_L = false;

    // F^{(s+1)} agrees with F through degree s+1, so its projection onto X~ is
    // a quasi-isomorphism in degrees <= s exactly when F -> X~ is.
    auto hX = homology(X), hT = homology(out.X_tilde);
    bool qi = true;
    for (int n = std::min(X.lo(), out.X_tilde.lo()); n <= std::max(X.hi(), out.X_tilde.hi()); ++n)
        if (hX.at(n) != hT.at(n)) qi = false;
    for (int n = Fs1.lo(); n <= s && qi; ++n)
        if (induced_rank(trunc.projection, n) != hT.at(n)) qi = false;
    out.quasi_iso = qi;
    out.annihilated = annihilator_check(out.X_prime);
    return out;
}

}  // namespace klab

#endif
