#include <gtest/gtest.h>

#include "klab/build.hpp"

using namespace klab;

namespace {

// unit products for every label, plus the given extra products
AlgebraDescription with_unit(std::vector<std::vector<std::string>> basis, std::vector<AlgebraDescription::MultEntry> extra,
                             std::vector<AlgebraDescription::DiffEntry> diff = {}) {
    AlgebraDescription d;
    d.basis = std::move(basis);
    d.unit = "1";
    for (const auto& deg : d.basis)
        for (const auto& l : deg) {
            d.mult.push_back({"1", l, l, 1});
            if (l != "1") d.mult.push_back({l, "1", l, 1});
        }
    for (auto& e : extra) d.mult.push_back(e);
    d.diff = std::move(diff);
    return d;
}

// k[t]/(t^2) with Koszul variable x, dx = t
AlgebraDescription koszul_dual_numbers() {
    return with_unit({{"1", "t"}, {"x", "tx"}}, {{"t", "x", "tx", 1}, {"x", "t", "tx", 1}}, {{"x", "t", 1}});
}

}  // namespace

TEST(Algebra, ValidExamples) {
    auto A = make_algebra(koszul_dual_numbers());
    EXPECT_EQ(A->dims(), (std::vector<std::size_t>{2, 2}));
    EXPECT_FALSE(A->has_zero_differential());
    EXPECT_EQ(euler_characteristic(*A), 0);

    auto E = exterior_algebra(3);
    EXPECT_EQ(E->dims(), (std::vector<std::size_t>{1, 3, 3, 1}));
    EXPECT_TRUE(E->has_zero_differential());
}

TEST(Algebra, DetectsAxiomViolations) {
    // graded commutativity: e f = g = f e for odd e, f
    EXPECT_THROW(make_algebra(with_unit({{"1"}, {"e", "f"}, {"g"}}, {{"e", "f", "g", 1}, {"f", "e", "g", 1}})), GradedCommutativityViolation);
    // odd element with nonzero square
    EXPECT_THROW(make_algebra(with_unit({{"1"}, {"e"}, {"g"}}, {{"e", "e", "g", 1}})), GradedCommutativityViolation);
    // d^2 != 0
    EXPECT_THROW(make_algebra(with_unit({{"1", "t"}, {"x"}, {"y"}}, {}, {{"y", "x", 1}, {"x", "t", 1}})), DifferentialSquareViolation);
    // missing unit products
    {
        auto d = with_unit({{"1"}, {"e"}}, {});
        d.mult.pop_back();
        EXPECT_THROW(make_algebra(d), UnitViolation);
    }
    // (ba)a = 0 but b(aa) = v
    EXPECT_THROW(make_algebra(with_unit({{"1"}, {}, {"a", "b"}, {}, {"u"}, {}, {"v"}},
                                        {{"a", "a", "u", 1}, {"a", "u", "v", 1}, {"u", "a", "v", 1}, {"b", "u", "v", 1}, {"u", "b", "v", 1}})),
                 AssociativityViolation);
    // t*t = 1: A_0 is not local
    EXPECT_THROW(make_algebra(with_unit({{"1", "t"}}, {{"t", "t", "1", 1}})), AugmentationViolation);
    // malformed
    auto bad = with_unit({{"1"}, {"e"}}, {});
    bad.unit = "zz";
    EXPECT_THROW(make_algebra(bad), MalformedDescription);
}

TEST(Algebra, LeibnizViolation) {
    // d(x) = t, d(y) = 0, x y = z with d(z) = 0: d(xy) = 0 but d(x) y = t y = w != 0
    auto d = with_unit({{"1", "t"}, {"x", "y", "w"}, {"z"}},
                       {{"x", "y", "z", 1}, {"y", "x", "z", -1}, {"t", "y", "w", 1}, {"y", "t", "w", 1}}, {{"x", "t", 1}});
    EXPECT_THROW(make_algebra(d), LeibnizViolation);
}

TEST(Algebra, DescribeRoundTrip) {
    auto A = table_algebra({TableClass::H, {2, 1}, {1, 1}});
    auto B = make_algebra(describe(*A));
    EXPECT_TRUE(A->same_tables(*B));
}

TEST(Module, RegularAndResidue) {
    auto A = make_algebra(koszul_dual_numbers());
    auto R = regular_module(A);
    auto h = homology(R);
    EXPECT_EQ(h.at(0), 1u);  // k[t]/(t^2) / (t)
    EXPECT_EQ(h.at(1), 1u);  // t x
    auto k = residue_module(A);
    EXPECT_EQ(k.dims(), (std::vector<std::size_t>{1}));
    EXPECT_TRUE(annihilator_check(k));
}

TEST(Module, ShiftAndEuler) {
    auto E = exterior_algebra(2);
    auto X = regular_module(E);
    for (int i : {-3, -1, 0, 2, 5}) {
        auto S = shift(X, i);
        EXPECT_EQ(S.lo(), X.lo() + i);
        EXPECT_EQ(S.dims(), X.dims());
        EXPECT_EQ(euler_characteristic(S), (i % 2 ? -1 : 1) * euler_characteristic(X));
    }
    auto S = shift(shift(X, 3), -3);
    EXPECT_TRUE(S.same_tables(X));
}

TEST(Module, DualAndDoubleDual) {
    for (auto spec : {TableSpec{TableClass::T, {}, {}}, TableSpec{TableClass::B, {}, {1}}, TableSpec{TableClass::G, {2}, {}}}) {
        auto A = table_algebra(spec);
        auto X = regular_module(A);
        auto D = graded_dual(X);
        EXPECT_EQ(D.lo(), -A->top_degree());
        EXPECT_EQ(D.hi(), 0);
        auto dims = X.dims();
        std::reverse(dims.begin(), dims.end());
        EXPECT_EQ(D.dims(), dims);
        auto f = double_dual_map(X);
        EXPECT_NO_THROW(f.validate());
        EXPECT_TRUE(f.is_isomorphism());
        auto fd = double_dual_map(shift(D, 1));
        EXPECT_NO_THROW(fd.validate());
    }
}

TEST(Module, DirectSumSubmoduleQuotient) {
    auto E = exterior_algebra(2);
    auto X = regular_module(E);
    auto k = residue_module(E);
    auto S = direct_sum(X, shift(k, 1));
    EXPECT_EQ(S.dims(), (std::vector<std::size_t>{1, 3, 1}));

    auto plus = positive_part(E);
    EXPECT_EQ(plus.module.dims(), (std::vector<std::size_t>{2, 1}));
    EXPECT_NO_THROW(plus.inclusion.validate());
    EXPECT_TRUE(plus.inclusion.is_injective());

    auto q = quotient(X, plus.inclusion.images);
    EXPECT_EQ(q.module.dims(), (std::vector<std::size_t>{1}));

    // e1 alone does not span a submodule: e2 e1 is missing
    EXPECT_THROW(submodule(X, {unit_vector(1)}), NotASubmodule);
}

TEST(Module, MorphismValidation) {
    auto E = exterior_algebra(1);
    auto X = regular_module(E);
    auto k = residue_module(E);
    // X -> k sending 1 to k0 is a morphism; e -> 0
    DGMorphism p{X, k, {unit_vector(0), {}}};
    EXPECT_NO_THROW(p.validate());
    EXPECT_TRUE(p.is_surjective());
    // k -> X sending k0 to 1 is not E-linear
    DGMorphism bad{k, X, {unit_vector(0)}};
    EXPECT_THROW(bad.validate(), NotAMorphism);
    auto iso = find_isomorphism(shift(graded_dual(X), 1), X);
    EXPECT_TRUE(iso.has_value());
}

TEST(HomologyAlgebra, KoszulHomology) {
    PrimeField F;
    // complete intersection: H(K) is exterior on two classes
    auto ci = RingPresentation::parse(F, {"x", "y"}, {"x^2", "y^2"});
    auto H = homology_algebra(koszul_complex(ci));
    EXPECT_EQ(H.algebra->dims(), (std::vector<std::size_t>{1, 2, 1}));
    EXPECT_EQ(euler_characteristic(*koszul_complex(ci)), 0);
    // (x^2, xy, y^2): H_1 = 3, H_2 = 2, products of positive classes vanish
    auto g = RingPresentation::parse(F, {"x", "y"}, {"x^2", "x*y", "y^2"});
    auto Hg = homology_algebra(koszul_complex(g));
    EXPECT_EQ(Hg.algebra->dims(), (std::vector<std::size_t>{1, 3, 2}));
    const auto& B = *Hg.algebra;
    for (std::size_t a = B.begin(1); a < B.dim(); ++a)
        for (std::size_t b = B.begin(1); b < B.dim(); ++b) EXPECT_TRUE(B.product(a, b).empty());
}
