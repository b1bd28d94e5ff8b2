#include <gtest/gtest.h>

#include "klab/classify.hpp"

using namespace klab;

namespace {

RingClassification classify_ideal(std::vector<std::string> vars, std::vector<std::string> ideal, std::uint32_t p = kDefaultCharacteristic) {
    return classify_ring(RingPresentation::parse(PrimeField(p), std::move(vars), ideal));
}

}  // namespace

TEST(Invariants, ExteriorAlgebra) {
    auto r = invariant_record(*exterior_algebra(3));
    EXPECT_EQ(r.h1, 3u);
    EXPECT_EQ(r.h2, 3u);
    EXPECT_EQ(r.h3, 1u);
    EXPECT_EQ(r.p, 3u);  // A_1 A_1 = A_2
    EXPECT_EQ(r.r, 3u);  // A_1 x A_2 -> A_3 perfect
    EXPECT_TRUE(is_poincare_duality(*exterior_algebra(3)));
    EXPECT_FALSE(is_golod_shape(*exterior_algebra(3)));
    EXPECT_TRUE(is_golod_shape(*table_algebra({TableClass::S, {}, {2, 1}})));
}

TEST(Classify, KnownRings) {
    auto c = classify_ideal({"x"}, {"x^2"});
    EXPECT_EQ(c.cls.label(), "C(1)");
    EXPECT_TRUE(c.cls.gorenstein);

    c = classify_ideal({"x", "y"}, {"x^2", "y^2"});
    EXPECT_EQ(c.cls.label(), "C(2)");

    c = classify_ideal({"x", "y", "z"}, {"x^2", "y^2", "z^2"});
    EXPECT_EQ(c.cls.label(), "C(3)");
    EXPECT_EQ(c.bound.bound, 1);

    // codepth 2, not a complete intersection: Golod
    c = classify_ideal({"x", "y"}, {"x^2", "x*y", "y^2"});
    EXPECT_EQ(c.cls.label(), "S");
    EXPECT_EQ(c.cls.spec.w_dims, (std::vector<std::size_t>{3, 2}));
    EXPECT_TRUE(c.cls.golod);
    EXPECT_EQ(c.bound.bound, 2);

    c = classify_ideal({"x", "y", "z"}, {"x^2", "y^2", "z^2", "x*y", "x*z", "y*z"});
    EXPECT_EQ(c.cls.label(), "S");
    EXPECT_EQ(c.cls.spec.w_dims, (std::vector<std::size_t>{6, 8, 3}));

    // Golod codepth 2 ring tensored with a hypersurface
    c = classify_ideal({"x", "y", "z"}, {"x^2", "x*y", "y^2", "z^2"});
    EXPECT_EQ(c.cls.label(), "H(3,2)");
    EXPECT_FALSE(c.cls.golod);
    EXPECT_FALSE(c.cls.gorenstein);
}

TEST(Classify, KoszulHomologyIsCharacteristicFree) {
    for (std::uint32_t p : {2u, 3u, 101u}) {
        auto a = classify_ideal({"x", "y", "z"}, {"x^2", "y^2", "z^2", "x*y*z"}, p);
        auto b = classify_ideal({"x", "y", "z"}, {"x^2", "y^2", "z^2", "x*y*z"});
        EXPECT_EQ(a.cls.spec, b.cls.spec) << p;
        EXPECT_EQ(a.koszul_dims, b.koszul_dims);
    }
}

TEST(Classify, EulerCharacteristicOfKoszulHomology) {
    auto c = classify_ideal({"x", "y", "z"}, {"x^2", "y^2", "z^2", "x*y"});
    long long chi = 0;
    for (std::size_t i = 0; i < c.koszul_dims.size(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<long long>(c.koszul_dims[i]);
    EXPECT_EQ(chi, 0);
}

TEST(Classify, ScopeErrors) {
    EXPECT_THROW(classify_ideal({"a", "b", "c", "d"}, {"a^2", "b^2", "c^2", "d^2"}), OutOfScope);
    EXPECT_THROW(classify(*exterior_algebra(4)), OutOfScope);
    // C(2) x W is H(1,0) x W, but C(3) x W matches no row
    EXPECT_EQ(classify(*trivial_extension(exterior_algebra(2), 1, {1})).label(), "H(1,0)");
    EXPECT_THROW(classify(*trivial_extension(exterior_algebra(3), 1, {1})), Unrecognized);
}

TEST(Grid, RoundTripAndNoCollisions) {
    auto grid = constructor_grid();
    EXPECT_EQ(grid.size(), 70u);
    auto audit = audit_grid(grid);
    for (const auto& e : audit.entries) EXPECT_TRUE(e.ok()) << e.input.name() << " -> " << e.got.name() << " " << e.error;
    EXPECT_TRUE(audit.collisions.empty());
}

TEST(Grid, DocumentedCoincidences) {
    EXPECT_EQ(canonical_row({TableClass::S, {}, {}}), (TableSpec{TableClass::C, {0}, {}}));
    EXPECT_EQ(canonical_row({TableClass::S, {}, {1}}), (TableSpec{TableClass::C, {1}, {}}));
    EXPECT_EQ(canonical_row({TableClass::H, {1, 0}, {}}), (TableSpec{TableClass::C, {2}, {}}));
    auto h = classify_grid_point({TableClass::H, {0, 1}, {1}});
    auto g = classify_grid_point({TableClass::G, {1}, {1}});
    EXPECT_EQ(h.got, g.got);
}

TEST(SdcBound, GorensteinRowsOnly) {
    for (const auto& s : constructor_grid()) {
        auto c = classify(*homology_algebra(table_algebra(s)).algebra);
        bool gor = c.spec.w_dims.empty() && (c.spec.cls == TableClass::C || c.spec.cls == TableClass::G);
        EXPECT_EQ(c.gorenstein, gor) << s.name();
        EXPECT_EQ(sdc_bound(c).bound, gor ? 1 : 2);
    }
}
