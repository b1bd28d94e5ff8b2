#ifndef KLAB_SDMOD_HPP
#define KLAB_SDMOD_HPP

#include "build.hpp"
#include "derived.hpp"
#include "random.hpp"

namespace klab {

/// D^A = Hom_k(A, k).
inline DGModule dualizing_module(const AlgebraPtr& A) { return graded_dual(regular_module(A)); }

/// X^dagger = RHom_A(X, D^A), realized exactly as Hom_k(X, k).
inline DGModule dagger(const DGModule& X) { return graded_dual(X); }

struct SemidualizingVerdict {
    enum class Kind { Verified, Refuted, Inconclusive } kind = Kind::Inconclusive;
    int degree = 0;  // first failing degree when Refuted
    std::string reason;
    int window_lo = INT_MIN, window_hi = INT_MAX;
    std::vector<HomothetyDegree> degrees;

    std::string name() const {
        switch (kind) {
            case Kind::Verified: return "Verified";
            case Kind::Refuted: return "Refuted";
            case Kind::Inconclusive: return "Inconclusive";
        }
        return "";
    }
};

/// Decides whether H(chi): H(A) -> H(RHom_A(X, X)) is bijective on the certified window.
inline SemidualizingVerdict is_semidualizing(const DGModule& X, int N) {
    const DGAlgebra& A = *X.algebra();
    SemidualizingVerdict v;
    auto F = resolve(X, N);
    v.window_lo = rhom_window_lo(F, X);
    int top_hom = X.is_zero() ? 0 : X.hi() - X.lo();
    v.window_hi = INT_MAX;
    int from = v.window_lo == INT_MIN ? (X.is_zero() ? 0 : std::min(0, X.lo() - std::max(X.hi(), F.top_degree()))) : v.window_lo;
    int to = std::max(top_hom, A.top_degree());
    if (from > to) from = to;
    v.degrees = homothety_data(F, from, to);
    for (const auto& d : v.degrees)
        if (!d.bijective()) {
            v.kind = SemidualizingVerdict::Kind::Refuted;
            v.degree = d.degree;
            v.reason = d.dim_HA != d.dim_Hom ? "dim H(A) = " + std::to_string(d.dim_HA) + " but dim H(RHom(X,X)) = " + std::to_string(d.dim_Hom)
                                             : "homothety has rank " + std::to_string(d.rank) + " < " + std::to_string(d.dim_HA);
            return v;
        }
    if (from <= 0) {
        v.kind = SemidualizingVerdict::Kind::Verified;
    } else {
        v.kind = SemidualizingVerdict::Kind::Inconclusive;
        v.reason = "window starts at degree " + std::to_string(from) + " > 0";
    }
    return v;
}

// ---------------------------------------------------------------------------

struct DaggerReport {
    bool vacuous = false;  // X failed the semidualizing test
    bool ok = false;
    int window_lo = 0, window_hi = 0;
    std::vector<std::size_t> lhs, rhs;  // dim H_i(F_X (x) X^dagger), dim H_i(D^A) over the window
    SemidualizingVerdict dagger_verdict;
};

/// X (x)^L X^dagger ~ D^A on homology within the window, and X^dagger semidualizing.
inline DaggerReport check_dagger_duality(const DGModule& X, int N) {
    DaggerReport r;
    auto vx = is_semidualizing(X, N);
    if (vx.kind != SemidualizingVerdict::Kind::Verified) {
        r.vacuous = true;
        return r;
    }
    DGModule Xd = dagger(X);
    DGModule D = dualizing_module(X.algebra());
    auto F = resolve(X, N);
    auto t = tor_dims(F, Xd);
    auto hD = homology(D);
    r.window_lo = std::min(t.lo, D.lo());
    r.window_hi = std::min(t.window_hi, std::max(D.hi(), t.lo + int(t.dims.size()) - 1));
    r.ok = true;
    for (int i = r.window_lo; i <= r.window_hi; ++i) {
        r.lhs.push_back(t.at(i));
        r.rhs.push_back(hD.at(i));
        if (t.at(i) != hD.at(i)) r.ok = false;
    }
    if (t.window_hi < D.hi()) r.ok = false;
    r.dagger_verdict = is_semidualizing(Xd, N);
    if (r.dagger_verdict.kind != SemidualizingVerdict::Kind::Verified) r.ok = false;
    return r;
}

/// M -> M^{dagger dagger} is an isomorphism of DG modules (exact, no window).
inline bool check_biduality(const DGModule& M) {
    DGMorphism f = double_dual_map(M);
    f.validate();
    return f.is_isomorphism();
}

// ---------------------------------------------------------------------------
// Tor over B x S^n k

/// A = B x S^n k and the surjection p: A -> B as images of A's basis.
struct TrivialExtensionByK {
    AlgebraPtr A;
    std::vector<SparseVec> projection;
};

inline TrivialExtensionByK extend_by_k(const AlgebraPtr& B, int n) {
    TrivialExtensionByK t{trivial_extension(B, n, {1}, "x"), {}};
    for (const auto& b : t.A->basis()) {
        auto idx = B->index_of(b.label);
        t.projection.push_back(idx ? unit_vector(static_cast<std::uint32_t>(*idx)) : SparseVec{});
    }
    return t;
}

struct Lemma33Report {
    int n = 0;
    int window_lo = 0, window_hi = -1;
    std::vector<std::size_t> left, tor_B, convolution;  // per degree in the window
    bool ok() const {
        for (std::size_t i = 0; i < left.size(); ++i)
            if (left[i] != tor_B[i] + convolution[i]) return false;
        return window_hi >= window_lo;
    }
};

/// Compares dim Tor^A_i(X,Y) with dim Tor^B_i(X,Y) + sum_{p+q=i-n-1} dim Tor^A_p(X,k) dim Tor^B_q(k,Y),
/// using resolutions of X over A, X over B and Y over B with budget N each.
inline Lemma33Report check_lemma33(const TrivialExtensionByK& ext, int n, const DGModule& X, const DGModule& Y, int N) {
    Lemma33Report r;
    r.n = n;
    DGModule XA = restrict_scalars(X, ext.A, ext.projection);
    DGModule YA = restrict_scalars(Y, ext.A, ext.projection);
    auto FA = resolve(XA, N);
    auto FB = resolve(X, N);
    auto GB = resolve(Y, N);
    auto left = tor_dims(FA, YA);
    auto torB = tor_dims(FB, Y);
    auto pA = poincare(FA);  // dim Tor^A_p(X, k)
    auto pB = poincare(GB);  // dim Tor^B_q(Y, k) = dim Tor^B_q(k, Y)
    r.window_lo = X.lo() + Y.lo();
    r.window_hi = std::min(left.window_hi, torB.window_hi);
    // convolution terms need p <= final(FA) and q <= final(GB)
    if (!FA.is_complete()) r.window_hi = std::min(r.window_hi, FA.final_degree() + Y.lo() + n + 1);
    if (!GB.is_complete()) r.window_hi = std::min(r.window_hi, GB.final_degree() + X.lo() + n + 1);
    if (r.window_hi == INT_MAX) {
        // everything terminated: all three sides vanish past their last nonzero degree
        int last = std::max(left.lo + int(left.dims.size()), torB.lo + int(torB.dims.size()));
        last = std::max(last, pA.lo + int(pA.coeffs.size()) + pB.lo + int(pB.coeffs.size()) + n + 1);
        r.window_hi = std::max(last, r.window_lo);
    }
    for (int i = r.window_lo; i <= r.window_hi; ++i) {
        r.left.push_back(left.at(i));
        r.tor_B.push_back(torB.at(i));
        std::size_t conv = 0;
        for (int p = X.lo(); p <= i - n - 1 - Y.lo(); ++p) conv += pA.at(p) * pB.at(i - n - 1 - p);
        r.convolution.push_back(conv);
    }
    return r;
}

inline Lemma33Report check_lemma33(const AlgebraPtr& B, int n, const DGModule& X, const DGModule& Y, int N) {
    return check_lemma33(extend_by_k(B, n), n, X, Y, N);
}

// ---------------------------------------------------------------------------
// Falsification search for Tor-vanishing with both projective dimensions infinite

struct Thm34Result {
    std::size_t trials = 0;
    std::size_t finite_pd = 0;        // pairs where one side had finite pd
    std::size_t tor_nonvanishing = 0; // pairs excluded by a nonzero Tor in [N/2, N]
    std::size_t annihilated = 0;      // pairs with Ann_A(A_+) X = 0 = Ann_A(A_+) Y
    std::vector<std::pair<DGModule, DGModule>> candidates;
    bool none_found() const { return candidates.empty(); }
};

/// One trial: draw X, Y over A; flag a candidate when Tor_i(X,Y) = 0 for i in [N/2, N]
/// while neither resolution terminates within the budget.
inline void thm34_trial(const AlgebraPtr& A, int N, Rng& rng, Thm34Result& out) {
    DGModule X = random_module(A, rng), Y = random_module(A, rng);
    ++out.trials;
    if (annihilator_check(X) && annihilator_check(Y)) ++out.annihilated;
    // certify Tor through degree N: stages N - lo(X) - lo(Y) + 1
    int stages = std::max(N, tor_budget(X, Y, N));
    auto FX = resolve(X, stages);
    if (FX.is_complete()) {
        ++out.finite_pd;
        return;
    }
    auto FY = resolve(Y, N);
    if (FY.is_complete()) {
        ++out.finite_pd;
        return;
    }
    TensorComplex T(FX, Y);
    auto view = T.view();
    for (int i = N / 2; i <= N; ++i)
        if (view.homology_dim(i)) {
            ++out.tor_nonvanishing;
            return;
        }
    out.candidates.push_back({X, Y});
}

inline Thm34Result search_thm34_counterexample(const AlgebraPtr& B, int n, std::size_t trials, int N, std::uint64_t seed) {
    if (n < 1) throw ParameterOutOfRange("the Tor-vanishing search needs n >= 1");
    auto ext = extend_by_k(B, n);
    Thm34Result out;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = split_rng(seed, t);
        thm34_trial(ext.A, N, rng, out);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Koszul base change

struct BaseChangeReport {
    SemidualizingVerdict over_C, over_B;
    bool agree() const { return over_C.kind == over_B.kind && over_C.kind != SemidualizingVerdict::Kind::Inconclusive; }
};

/// X semidualizing over C iff B (x)_C X semidualizing over B = K^R(t) (x)_R C.
inline BaseChangeReport check_base_change(const std::vector<std::size_t>& t, const DGModule& X, int N) {
    const AlgebraPtr& C = X.algebra();
    auto B = koszul_extension(C, t);
    auto BX = koszul_extension_module(B, t, X);
    return {is_semidualizing(X, N), is_semidualizing(BX, N)};
}

}  // namespace klab

#endif
