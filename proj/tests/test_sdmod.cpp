#include <gtest/gtest.h>

#include "klab/sdmod.hpp"

using namespace klab;
using Kind = SemidualizingVerdict::Kind;

TEST(Semidualizing, RegularAndDualizingModules) {
    for (auto spec : {TableSpec{TableClass::C, {2}, {}}, TableSpec{TableClass::T, {}, {}}, TableSpec{TableClass::B, {}, {1}},
                      TableSpec{TableClass::G, {3}, {}}, TableSpec{TableClass::H, {2, 1}, {}}}) {
        auto A = table_algebra(spec);
        EXPECT_EQ(is_semidualizing(regular_module(A), A->top_degree() + 3).kind, Kind::Verified) << spec.name();
        EXPECT_EQ(is_semidualizing(dualizing_module(A), A->top_degree() + 3).kind, Kind::Verified) << spec.name();
    }
}

TEST(Semidualizing, ResidueIsRefuted) {
    for (auto spec : {TableSpec{TableClass::C, {1}, {}}, TableSpec{TableClass::T, {}, {}}, TableSpec{TableClass::S, {}, {1}}}) {
        auto A = table_algebra(spec);
        auto v = is_semidualizing(residue_module(A), 6);
        EXPECT_EQ(v.kind, Kind::Refuted) << spec.name();
        EXPECT_FALSE(v.reason.empty());
    }
    // over k itself, k is A
    EXPECT_EQ(is_semidualizing(residue_module(exterior_algebra(0)), 3).kind, Kind::Verified);
}

TEST(Semidualizing, ShiftsStaySemidualizing) {
    auto A = table_algebra({TableClass::G, {2}, {}});
    for (int i : {-2, 1, 3}) EXPECT_EQ(is_semidualizing(shift(regular_module(A), i), 6).kind, Kind::Verified);
}

TEST(Semidualizing, GorensteinDualizingIsShiftedRegular) {
    for (int r = 1; r <= 4; ++r) {
        auto A = table_algebra({TableClass::G, {r}, {}});
        EXPECT_TRUE(find_isomorphism(regular_module(A), shift(dualizing_module(A), 3)).has_value()) << r;
    }
    // T is not Gorenstein: no shift of D^A matches A
    auto T = table_algebra({TableClass::T, {}, {}});
    for (int s = 0; s <= 3; ++s) EXPECT_FALSE(find_isomorphism(regular_module(T), shift(dualizing_module(T), s)).has_value());
}

TEST(Dagger, DualityOnSemidualizingModules) {
    auto A = table_algebra({TableClass::B, {}, {}});
    for (const auto& X : {regular_module(A), dualizing_module(A)}) {
        auto r = check_dagger_duality(X, 8);
        EXPECT_FALSE(r.vacuous);
        EXPECT_TRUE(r.ok);
    }
    EXPECT_TRUE(check_dagger_duality(residue_module(A), 6).vacuous);
}

TEST(Biduality, RandomModules) {
    auto A = table_algebra({TableClass::H, {1, 1}, {1}});
    for (std::uint64_t t = 0; t < 10; ++t) {
        Rng rng = split_rng(77, t);
        EXPECT_TRUE(check_biduality(random_module(A, rng)));
    }
}

TEST(SquareZeroTor, ResidueOverSquareZeroExtension) {
    auto k = exterior_algebra(0);
    for (int n = 0; n <= 3; ++n) {
        auto r = check_lemma33(k, n, residue_module(k), residue_module(k), 12);
        EXPECT_TRUE(r.ok()) << n;
        // Tor^A(k,k) is 1 in multiples of n+1
        for (int i = r.window_lo; i <= r.window_hi; ++i) EXPECT_EQ(r.left[i - r.window_lo], i % (n + 1) == 0 ? 1u : 0u);
    }
}

TEST(SquareZeroTor, RandomModulesOverExterior) {
    auto B = exterior_algebra(2);
    for (int n = 0; n <= 2; ++n)
        for (std::uint64_t s = 0; s < 3; ++s) {
            Rng rng = split_rng(5, 10 * n + s);
            auto X = random_module(B, rng), Y = random_module(B, rng);
            auto r = check_lemma33(B, n, X, Y, 8);
            EXPECT_TRUE(r.ok()) << "n=" << n << " s=" << s;
            EXPECT_GE(r.window_hi, r.window_lo);
        }
}

TEST(SquareZeroTor, ProjectionIsAlgebraMap) {
    auto B = table_algebra({TableClass::T, {}, {}});
    auto ext = extend_by_k(B, 2);
    EXPECT_EQ(ext.A->dim(), B->dim() + 1);
    auto X = restrict_scalars(regular_module(B), ext.A, ext.projection);
    EXPECT_EQ(X.dims(), regular_module(B).dims());
}

TEST(TorVanishingSearch, NoCandidatesSmallSearch) {
    auto r = search_thm34_counterexample(exterior_algebra(0), 1, 40, 8, 1);
    EXPECT_EQ(r.trials, 40u);
    EXPECT_TRUE(r.none_found());
    EXPECT_THROW(search_thm34_counterexample(exterior_algebra(0), 0, 1, 8, 1), ParameterOutOfRange);
}

TEST(BaseChange, KoszulExtensionAgrees) {
    PrimeField F;
    auto R = RingPresentation::parse(F, {"x", "y"}, {"x^2", "x*y", "y^2"});
    auto C = ring_algebra(R);
    auto a = check_base_change({0}, regular_module(C), 6);
    EXPECT_TRUE(a.agree());
    EXPECT_EQ(a.over_C.kind, Kind::Verified);
    auto b = check_base_change({0, 1}, residue_module(C), 6);
    EXPECT_TRUE(b.agree());
    EXPECT_EQ(b.over_C.kind, Kind::Refuted);
}
