#ifndef KLAB_RANDOM_HPP
#define KLAB_RANDOM_HPP

#include <random>

#include "module.hpp"

namespace klab {

using Rng = std::mt19937_64;

/// Independent stream for case `index` of a run seeded with `seed`.
inline Rng split_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32), 0x6b6c6162u};
    return Rng(seq);
}

struct RandomModuleLimits {
    std::size_t max_dim_per_degree = 4;
    int max_degrees = 4;
    int max_lo = 2;
    int attempts = 200;
};

namespace detail {

inline Scalar random_scalar(const PrimeField& F, Rng& rng, bool nonzero = false) {
    std::uniform_int_distribution<std::uint32_t> d(nonzero ? 1 : 0, F.characteristic() - 1);
    return d(rng);
}

inline bool within_limits(const DGModule& X, const RandomModuleLimits& lim) {
    if (X.is_zero()) return false;
    if (X.hi() - X.lo() + 1 > lim.max_degrees) return false;
    for (auto d : X.dims())
        if (d > lim.max_dim_per_degree) return false;
    return true;
}

/// Graded vector space with a random differential and trivial action of m_A.
inline DGModule random_trivial_module(const AlgebraPtr& A, Rng& rng, const RandomModuleLimits& lim) {
    const auto& F = A->field();
    std::uniform_int_distribution<int> lo_d(0, lim.max_lo), span_d(1, lim.max_degrees);
    std::uniform_int_distribution<std::size_t> dim_d(0, std::min<std::size_t>(lim.max_dim_per_degree, 3));
    int lo = lo_d(rng), span = span_d(rng);
    std::vector<std::size_t> dims(span);
    for (auto& d : dims) d = dim_d(rng);
    if (dims.front() == 0) dims.front() = 1;
    DGModule V = trivial_module(A, lo, dims, "x");
    ModuleData d = V.data();
    // d_n lands in ker d_{n-1}: random combinations of a kernel basis.
    for (int n = lo + 1; n < lo + span; ++n) {
        std::vector<SparseVec> lower;
        for (std::size_t x = V.begin(n - 1); x < V.end(n - 1); ++x) {
            SparseVec v = d.diff[x];
            for (auto& t : v) t.index -= static_cast<std::uint32_t>(V.begin(n - 2));
            lower.push_back(std::move(v));
        }
        auto ker = kernel_of_columns(F, V.dim(n - 2), lower);
        for (std::size_t x = V.begin(n); x < V.end(n); ++x) {
            SparseVec v;
            if (std::bernoulli_distribution(0.6)(rng))
                for (const auto& k : ker) axpy(F, v, random_scalar(F, rng), k);
            for (auto& t : v) t.index += static_cast<std::uint32_t>(V.begin(n - 1));
            d.diff[x] = std::move(v);
        }
    }
    return make_module(std::move(d));
}

/// Quotient of a small free module by the DG submodule generated by random elements.
inline DGModule random_quotient_module(const AlgebraPtr& A, Rng& rng, const RandomModuleLimits& lim) {
    const auto& F = A->field();
    std::uniform_int_distribution<int> ngen(1, 2), gdeg(0, lim.max_lo), nrel(0, 3);
    DGModule P = shift(regular_module(A), gdeg(rng));
    if (ngen(rng) == 2) P = direct_sum(P, shift(regular_module(A), gdeg(rng)));
    std::vector<SparseVec> rels;
    int k = nrel(rng);
    for (int i = 0; i < k; ++i) {
        std::uniform_int_distribution<int> deg(P.lo(), P.hi());
        int n = deg(rng);
        SparseVec v;
        for (std::size_t x = P.begin(n); x < P.end(n); ++x)
            if (std::bernoulli_distribution(0.7)(rng)) v.push_back({static_cast<std::uint32_t>(x), random_scalar(F, rng, true)});
        if (!v.empty()) rels.push_back(std::move(v));
    }
    return quotient(P, submodule_closure(P, rels)).module;
}

}  // namespace detail

/// Random valid DG module: either a graded vector space with random differential
/// and trivial action, or a quotient of a small free module by a random DG
/// submodule. Rejection keeps dims <= limits; every output passed make_module.
inline DGModule random_module(const AlgebraPtr& A, Rng& rng, const RandomModuleLimits& lim = {}) {
    for (int attempt = 0; attempt < lim.attempts; ++attempt) {
        bool trivial = std::bernoulli_distribution(0.35)(rng);
        DGModule X = trivial ? detail::random_trivial_module(A, rng, lim) : detail::random_quotient_module(A, rng, lim);
        if (detail::within_limits(X, lim)) return X;
    }
    return residue_module(A);
}

}  // namespace klab

#endif
