#include <gtest/gtest.h>

#include <random>

#include "klab/matrix.hpp"

using namespace klab;

namespace {

// plain dense elimination, kept independent of the echelon code
std::size_t dense_rank(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
    std::size_t r = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    auto powmod = [p](std::int64_t a, std::int64_t e) {
        std::int64_t x = 1;
        a %= p;
        while (e) {
            if (e & 1) x = x * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return x;
    };
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        std::int64_t inv = powmod(((m[r][c] % p) + p) % p, p - 2);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::int64_t f = ((m[i][c] % p + p) % p) * inv % p;
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
        }
        ++r;
    }
    return r;
}

FieldMatrix random_matrix(const PrimeField& F, std::size_t rows, std::size_t cols, std::mt19937_64& g, int density_pct) {
    FieldMatrix m(F, rows, cols);
    std::uniform_int_distribution<int> pct(0, 99);
    std::uniform_int_distribution<std::uint32_t> val(1, F.characteristic() - 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (pct(g) < density_pct) m(i, j) = val(g);
    return m;
}

}  // namespace

TEST(PrimeField, RejectsComposites) {
    EXPECT_THROW(PrimeField(1), NotPrime);
    EXPECT_THROW(PrimeField(32001), NotPrime);
    EXPECT_THROW(PrimeField(1u << 31), NotPrime);
    EXPECT_NO_THROW(PrimeField(2));
    EXPECT_NO_THROW(PrimeField(2147483647u));
}

TEST(PrimeField, ArithmeticMatchesIntegers) {
    for (std::uint32_t p : {2u, 3u, 7u, 101u, 32003u, 2147483647u}) {
        PrimeField F(p);
        std::mt19937_64 g(p);
        for (int t = 0; t < 200; ++t) {
            std::uint64_t a = g() % p, b = g() % p;
            EXPECT_EQ(F.add(a, b), (a + b) % p);
            EXPECT_EQ(F.sub(a, b), (a + p - b) % p);
            EXPECT_EQ(F.mul(a, b), a * b % p);
            if (a) {
                EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
            }
        }
        EXPECT_EQ(F.from_int(-1), p - 1);
        EXPECT_EQ(F.sign(3), F.neg(1 % p));
    }
}

TEST(Sparse, AxpyCancelsAndStaysSorted) {
    PrimeField F(7);
    SparseVec x{{0, 1}, {3, 2}}, y{{1, 1}, {3, 1}};
    axpy(F, x, 5, y);  // 2 + 5 = 0 mod 7 at index 3
    SparseVec want{{0, 1}, {1, 5}};
    EXPECT_EQ(x, want);
}

TEST(Echelon, RankAgreesWithDenseOracle) {
    std::mt19937_64 g(42);
    for (std::uint32_t p : {2u, 3u, 32003u}) {
        PrimeField F(p);
        for (int t = 0; t < 60; ++t) {
            std::size_t r = 1 + g() % 9, c = 1 + g() % 9;
            auto M = random_matrix(F, r, c, g, 20 + int(g() % 60));
            std::vector<std::vector<std::int64_t>> d(r, std::vector<std::int64_t>(c));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) d[i][j] = M(i, j);
            EXPECT_EQ(rank(M), dense_rank(d, p));
        }
    }
}

TEST(Echelon, KernelAndImageDimensions) {
    std::mt19937_64 g(7);
    PrimeField F(101);
    for (int t = 0; t < 40; ++t) {
        std::size_t r = 1 + g() % 7, c = 1 + g() % 7;
        auto M = random_matrix(F, r, c, g, 50);
        auto rki = rank_kernel_image(M);
        EXPECT_EQ(rki.rank + rki.kernel.cols(), c);
        EXPECT_EQ(rki.image.cols(), rki.rank);
        EXPECT_TRUE((M * rki.kernel).is_zero());
        EXPECT_EQ(rank(rki.kernel), rki.kernel.cols());
    }
}

TEST(Echelon, SolvePreimage) {
    PrimeField F(32003);
    FieldMatrix M(F, {{1, 2, 0}, {0, 1, 1}, {1, 3, 1}});
    std::vector<Scalar> x{5, 7, 11};
    auto b = M.apply(x);
    auto y = solve_preimage(M, b);
    EXPECT_EQ(M.apply(y), b);
    EXPECT_THROW(solve_preimage(M, {1, 0, 0}), NoSolution);
}

TEST(Homology, CircleOverF2AndF3) {
    // simplicial circle: 3 vertices, 3 edges; H_0 = H_1 = 1
    for (std::uint32_t p : {2u, 3u}) {
        PrimeField F(p);
        std::vector<SparseVec> d1{{{0, F.neg(1)}, {1, 1}}, {{1, F.neg(1)}, {2, 1}}, {{0, 1}, {2, F.neg(1)}}};
        auto h1 = HomologyQuotient::compute(F, 3, {}, 3, d1);
        auto h0 = HomologyQuotient::compute(F, 3, d1, 0, {SparseVec{}, SparseVec{}, SparseVec{}});
        EXPECT_EQ(h1.dim(), 1u);
        EXPECT_EQ(h0.dim(), 1u);
        EXPECT_THROW(h1.classify(unit_vector(0)), CompositionNotZero);
    }
}

TEST(Homology, TorsionDependsOnCharacteristic) {
    // C_1 = F --2--> C_0 = F: H_0 = F over F_2, zero otherwise
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField F(p);
        std::vector<SparseVec> d{F.from_int(2) ? SparseVec{{0, F.from_int(2)}} : SparseVec{}};
        auto h0 = HomologyQuotient::compute(F, 1, d, 0, {SparseVec{}});
        EXPECT_EQ(h0.dim(), p == 2 ? 1u : 0u);
    }
}
