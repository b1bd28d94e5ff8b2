#include <gtest/gtest.h>

#include "klab/build.hpp"

using namespace klab;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    return c;
}

}  // namespace

TEST(Exterior, DimsAreBinomial) {
    for (std::size_t c = 0; c <= 5; ++c) {
        auto E = exterior_algebra(c);
        for (int d = 0; d <= int(c); ++d) EXPECT_EQ(E->dim(d), binom(c, d));
        // e1 e2 = -e2 e1
        if (c >= 2) {
            auto e1 = unit_vector(1), e2 = unit_vector(2);
            auto a = E->multiply(e1, e2), b = E->multiply(e2, e1);
            ASSERT_EQ(a.size(), 1u);
            EXPECT_EQ(E->field().add(a[0].coeff, b[0].coeff), 0u);
        }
    }
}

TEST(Tables, BodyDimensions) {
    auto dims = [](TableSpec s) { return table_algebra(s)->dims(); };
    using V = std::vector<std::size_t>;
    EXPECT_EQ(dims({TableClass::S, {}, {}}), V({1}));
    for (int c = 0; c <= 3; ++c) {
        V want;
        for (int d = 0; d <= c; ++d) want.push_back(binom(c, d));
        EXPECT_EQ(dims({TableClass::C, {c}, {}}), want);
    }
    EXPECT_EQ(dims({TableClass::T, {}, {}}), V({1, 3, 3}));
    EXPECT_EQ(dims({TableClass::B, {}, {}}), V({1, 2, 3, 1}));
    for (std::size_t r = 1; r <= 4; ++r) EXPECT_EQ(dims({TableClass::G, {int(r)}, {}}), V({1, r, r, 1}));
    for (std::size_t p = 0; p <= 3; ++p)
        for (std::size_t q = 0; q <= 3; ++q)
            EXPECT_EQ(dims({TableClass::H, {int(p), int(q)}, {}}), convolve({1, p, q}, {1, 1}));
    EXPECT_EQ(dims({TableClass::T, {}, {1, 0, 2}}), V({1, 4, 3, 2}));
}

TEST(Tables, ParameterChecks) {
    EXPECT_THROW(table_algebra({TableClass::C, {4}, {}}), ParameterOutOfRange);
    EXPECT_THROW(table_algebra({TableClass::C, {1}, {1}}), ParameterOutOfRange);
    EXPECT_THROW(table_algebra({TableClass::G, {0}, {}}), ParameterOutOfRange);
    EXPECT_THROW(table_algebra({TableClass::H, {1}, {}}), ParameterOutOfRange);
    EXPECT_THROW(parse_class("Q"), ParameterOutOfRange);
}

TEST(Tables, GorensteinBodyHasPerfectPairing) {
    // G(r): the product A_1 x A_2 -> A_3 is a perfect pairing
    for (int r = 1; r <= 4; ++r) {
        auto A = table_algebra({TableClass::G, {r}, {}});
        FieldMatrix M(A->field(), A->dim(1), A->dim(2));
        for (std::size_t i = 0; i < A->dim(1); ++i)
            for (std::size_t j = 0; j < A->dim(2); ++j) {
                auto p = A->product(A->begin(1) + i, A->begin(2) + j);
                M(i, j) = p.empty() ? 0 : p[0].coeff;
            }
        EXPECT_EQ(rank(M), std::size_t(r));
    }
}

TEST(TrivialExtension, SquareZeroOnW) {
    auto B = exterior_algebra(1);
    auto A = trivial_extension(B, 1, {1, 1}, "w");
    EXPECT_EQ(A->dims(), (std::vector<std::size_t>{1, 2, 1}));
    auto w1 = A->index_of("w1"), w2 = A->index_of("w2"), e = A->index_of("e1");
    ASSERT_TRUE(w1 && w2 && e);
    EXPECT_TRUE(A->product(*w1, *w1).empty());
    EXPECT_TRUE(A->product(*e, *w1).empty());  // m_B W = 0
    EXPECT_THROW(trivial_extension(B, -1, {1}), DegreeViolation);
}

TEST(Tensor, DimsConvolve) {
    auto A = tensor_algebras(exterior_algebra(2), table_algebra({TableClass::G, {2}, {}}));
    EXPECT_EQ(A->dims(), convolve({1, 2, 1}, {1, 2, 2, 1}));
}

TEST(Ring, ParseAndStandardMonomials) {
    PrimeField F;
    auto R = RingPresentation::parse(F, {"x", "y"}, {"x^2", "x*y", "y^3"});
    // 1, x, y, y^2
    EXPECT_EQ(R.dim(), 4u);
    EXPECT_EQ(ring_algebra(R)->dims(), (std::vector<std::size_t>{4}));
    try {
        RingPresentation::parse(F, {"x"}, {"x^"});
        FAIL() << "no parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column(), 3u);
    }
    EXPECT_THROW(RingPresentation::parse(F, {"x"}, {"2*x"}), NonMonomialInput);
    EXPECT_THROW(RingPresentation::parse(F, {"x"}, {"z^2"}), ParseError);
}

TEST(Koszul, ComplexDims) {
    PrimeField F;
    auto R = RingPresentation::parse(F, {"x", "y", "z"}, {"x^2", "y^2", "z^2"});
    auto K = koszul_complex(R);
    for (int d = 0; d <= 3; ++d) EXPECT_EQ(K->dim(d), binom(3, d) * 8);
    EXPECT_EQ(euler_characteristic(*K), 0);
    // partial extension on x only: K(x) (x) R
    auto B = koszul_extension(ring_algebra(R), {0});
    EXPECT_EQ(B->dims(), (std::vector<std::size_t>{8, 8}));
    auto H = homology_algebra(B);
    EXPECT_EQ(H.algebra->dims(), (std::vector<std::size_t>{4, 4}));
    EXPECT_THROW(koszul_extension(exterior_algebra(1), {0}), PreconditionViolation);
}

TEST(Koszul, ExtensionModuleOfResidue) {
    PrimeField F;
    auto R = RingPresentation::parse(F, {"x", "y"}, {"x^2", "y^2"});
    auto C = ring_algebra(R);
    auto B = koszul_extension(C, {0, 1});
    auto BX = koszul_extension_module(B, {0, 1}, residue_module(C));
    // K(x,y) (x)_R k has zero differential and dims 1, 2, 1
    EXPECT_EQ(BX.dims(), (std::vector<std::size_t>{1, 2, 1}));
    EXPECT_EQ(homology(BX).dims, (std::vector<std::size_t>{1, 2, 1}));
}
