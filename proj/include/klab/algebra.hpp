#ifndef KLAB_ALGEBRA_HPP
#define KLAB_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "graded.hpp"
#include "ring.hpp"

namespace klab {

struct BasisElement {
    std::string label;
    int degree;
    bool operator==(const BasisElement&) const = default;
};

/// A ring map R -> A_0, recorded by the images of the variables.
struct BaseAction {
    std::shared_ptr<const RingPresentation> ring;
    std::vector<SparseVec> variable_images;
};

/// Raw structure tables of a DG algebra. Basis sorted by degree, indices global.
/// mult[a * dim + b] is the product of basis elements a and b.
struct AlgebraData {
    PrimeField field;
    std::vector<BasisElement> basis;
    std::size_t unit = 0;
    std::vector<SparseVec> diff;
    std::vector<SparseVec> mult;
    std::optional<BaseAction> base;
};

/// Label-level description, the shape of the JSON algebra format.
struct AlgebraDescription {
    std::uint32_t characteristic = kDefaultCharacteristic;
    std::vector<std::vector<std::string>> basis;  // labels by degree 0, 1, ...
    std::string unit;
    struct DiffEntry {
        std::string from, to;
        std::int64_t coeff;
    };
    struct MultEntry {
        std::string a, b, c;
        std::int64_t coeff;
    };
    std::vector<DiffEntry> diff;
    std::vector<MultEntry> mult;
};

inline int koszul_sign_exponent(int a, int b) { return ((a & 1) && (b & 1)) ? 1 : 0; }

class DGAlgebra;
using AlgebraPtr = std::shared_ptr<const DGAlgebra>;

AlgebraPtr make_algebra(AlgebraData data);

/// Finite-dimensional non-negatively graded, graded-commutative DG algebra
/// whose degree-0 part is local with residue field k. Instances only exist
/// after every axiom has been checked on all basis tuples.
class DGAlgebra {
   public:
    const PrimeField& field() const noexcept { return d_.field; }
    std::size_t dim() const noexcept { return d_.basis.size(); }
    int degree(std::size_t i) const { return d_.basis[i].degree; }
    const std::string& label(std::size_t i) const { return d_.basis[i].label; }
    const std::vector<BasisElement>& basis() const noexcept { return d_.basis; }
    std::size_t unit() const noexcept { return d_.unit; }
    int top_degree() const noexcept { return static_cast<int>(offsets_.size()) - 2; }

    /// Global index range [begin, end) of basis elements of the given degree.
    std::size_t begin(int deg) const { return (deg < 0 || deg > top_degree()) ? 0 : offsets_[deg]; }
    std::size_t end(int deg) const { return (deg < 0 || deg > top_degree()) ? 0 : offsets_[deg + 1]; }
    std::size_t dim(int deg) const { return end(deg) - begin(deg); }
    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> out;
        for (int d = 0; d <= top_degree(); ++d) out.push_back(dim(d));
        return out;
    }

    std::optional<std::size_t> index_of(const std::string& label) const {
        auto it = by_label_.find(label);
        if (it == by_label_.end()) return std::nullopt;
        return it->second;
    }

    const SparseVec& diff(std::size_t i) const { return d_.diff[i]; }
    const SparseVec& product(std::size_t a, std::size_t b) const { return d_.mult[a * dim() + b]; }
    const std::optional<BaseAction>& base_action() const noexcept { return d_.base; }
    const AlgebraData& data() const noexcept { return d_; }

    bool has_zero_differential() const {
        for (const auto& v : d_.diff)
            if (!v.empty()) return false;
        return true;
    }
    /// True when A_0 = k, i.e. the augmentation ideal equals A_+.
    bool degree_zero_is_field() const { return dim(0) == 1; }

    SparseVec multiply(const SparseVec& x, const SparseVec& y) const {
        const auto& F = field();
        SparseVec out;
        for (const auto& s : x)
            for (const auto& t : y) {
                Scalar c = F.mul(s.coeff, t.coeff);
                for (const auto& u : product(s.index, t.index)) out.push_back({u.index, F.mul(c, u.coeff)});
            }
        normalize(F, out);
        return out;
    }

    SparseVec differential(const SparseVec& x) const {
        const auto& F = field();
        SparseVec out;
        for (const auto& s : x)
            for (const auto& u : diff(s.index)) out.push_back({u.index, F.mul(s.coeff, u.coeff)});
        normalize(F, out);
        return out;
    }

    GradedSpace space() const {
        std::vector<std::vector<std::string>> labels(top_degree() + 1);
        for (const auto& b : d_.basis) labels[b.degree].push_back(b.label);
        return GradedSpace(0, std::move(labels));
    }

    /// Same field, basis, unit and structure tables.
    bool same_tables(const DGAlgebra& o) const {
        return field() == o.field() && d_.basis == o.d_.basis && d_.unit == o.d_.unit && d_.diff == o.d_.diff && d_.mult == o.d_.mult;
    }

   private:
    friend AlgebraPtr make_algebra(AlgebraData data);
    explicit DGAlgebra(AlgebraData d) : d_(std::move(d)) {}

    AlgebraData d_;
    std::vector<std::size_t> offsets_;
    std::unordered_map<std::string, std::size_t> by_label_;
};

namespace detail {

inline void check_homogeneous(const AlgebraData& d, const SparseVec& v, int degree, const std::string& what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].index >= d.basis.size()) throw MalformedDescription(what + ": basis index out of range");
        if (v[i].coeff == 0 || v[i].coeff >= d.field.characteristic()) throw MalformedDescription(what + ": coefficient not a canonical nonzero residue");
        if (i && v[i].index <= v[i - 1].index) throw MalformedDescription(what + ": terms not sorted");
        if (d.basis[v[i].index].degree != degree) throw DegreeViolation(what + ": term of wrong degree");
    }
}

}  // namespace detail

/// Validation gateway: checks every axiom and returns the immutable algebra.
inline AlgebraPtr make_algebra(AlgebraData data) {
    const auto& F = data.field;
    const std::size_t n = data.basis.size();
    if (n == 0) throw MalformedDescription("algebra needs at least the unit");
    if (data.diff.size() != n || data.mult.size() != n * n) throw MalformedDescription("structure tables have wrong size");
    if (data.unit >= n || data.basis[data.unit].degree != 0) throw MalformedDescription("unit must be a degree-0 basis element");

    std::unordered_map<std::string, std::size_t> by_label;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& b = data.basis[i];
        if (b.degree < 0) throw DegreeViolation("algebra basis element '" + b.label + "' has negative degree");
        if (i && b.degree < data.basis[i - 1].degree) throw MalformedDescription("basis must be sorted by degree");
        if (!by_label.emplace(b.label, i).second) throw MalformedDescription("duplicate basis label '" + b.label + "'");
    }
    for (std::size_t i = 0; i < n; ++i) detail::check_homogeneous(data, data.diff[i], data.basis[i].degree - 1, "diff(" + data.basis[i].label + ")");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            detail::check_homogeneous(data, data.mult[a * n + b], data.basis[a].degree + data.basis[b].degree,
                                      "mult(" + data.basis[a].label + "," + data.basis[b].label + ")");

    std::shared_ptr<DGAlgebra> A(new DGAlgebra(std::move(data)));
    const auto& d = A->d_;
    int top = d.basis.back().degree;
    A->offsets_.assign(top + 2, 0);
    for (const auto& b : d.basis) ++A->offsets_[b.degree + 1];
    for (int k = 1; k <= top + 1; ++k) A->offsets_[k] += A->offsets_[k - 1];
    A->by_label_ = std::move(by_label);

    auto name = [&](std::size_t i) { return "'" + d.basis[i].label + "'"; };
    auto deg = [&](std::size_t i) { return d.basis[i].degree; };

    for (std::size_t i = 0; i < n; ++i)
        if (!A->differential(A->diff(i)).empty()) throw DifferentialSquareViolation("d(d(" + name(i) + ")) != 0");

    for (std::size_t i = 0; i < n; ++i) {
        if (A->product(d.unit, i) != unit_vector(static_cast<std::uint32_t>(i)) || A->product(i, d.unit) != unit_vector(static_cast<std::uint32_t>(i)))
            throw UnitViolation("unit does not act as identity on " + name(i));
    }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto& ab = A->product(a, b);
            const auto& ba = A->product(b, a);
            if (ab != scaled(F, ba, F.sign(koszul_sign_exponent(deg(a), deg(b)))))
                throw GradedCommutativityViolation("ab != (-1)^{|a||b|} ba for a=" + name(a) + ", b=" + name(b));
            if (a == b && (deg(a) & 1) && !ab.empty()) throw GradedCommutativityViolation("odd element " + name(a) + " does not square to zero");
        }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto& ab = A->product(a, b);
            for (std::size_t c = 0; c < n; ++c) {
                const auto& bc = A->product(b, c);
                if (ab.empty() && bc.empty()) continue;
                SparseVec left = A->multiply(ab, unit_vector(static_cast<std::uint32_t>(c)));
                SparseVec right = A->multiply(unit_vector(static_cast<std::uint32_t>(a)), bc);
                if (left != right) throw AssociativityViolation("(ab)c != a(bc) for " + name(a) + ", " + name(b) + ", " + name(c));
            }
        }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            SparseVec lhs = A->differential(A->product(a, b));
            SparseVec rhs = A->multiply(A->diff(a), unit_vector(static_cast<std::uint32_t>(b)));
            axpy(F, rhs, F.sign(deg(a)), A->multiply(unit_vector(static_cast<std::uint32_t>(a)), A->diff(b)));
            if (lhs != rhs) throw LeibnizViolation("d(ab) != d(a)b + (-1)^|a| a d(b) for a=" + name(a) + ", b=" + name(b));
        }

    // Degree 0: the non-unit basis elements span a nilpotent ideal (the maximal ideal of A_0).
    std::vector<std::size_t> m0;
    for (std::size_t i = A->begin(0); i < A->end(0); ++i)
        if (i != d.unit) m0.push_back(i);
    for (std::size_t a : m0)
        for (std::size_t b = A->begin(0); b < A->end(0); ++b)
            if (coefficient(A->product(a, b), static_cast<std::uint32_t>(d.unit)))
                throw AugmentationViolation("degree-0 non-units do not form an ideal (" + name(a) + "*" + name(b) + ")");
    {
        std::vector<SparseVec> power;
        for (std::size_t a : m0) power.push_back(unit_vector(static_cast<std::uint32_t>(a)));
        for (std::size_t step = 0; step <= m0.size() && !power.empty(); ++step) {
            Echelon span(F, n);
            std::vector<SparseVec> next;
            for (const auto& p : power)
                for (std::size_t a : m0) {
                    auto v = A->multiply(p, unit_vector(static_cast<std::uint32_t>(a)));
                    if (span.insert(v)) next.push_back(std::move(v));
                }
            power = std::move(next);
        }
        if (!power.empty()) throw AugmentationViolation("maximal ideal of A_0 is not nilpotent");
    }
    for (std::size_t i = A->begin(1); i < A->end(1); ++i)
        if (coefficient(A->diff(i), static_cast<std::uint32_t>(d.unit)))
            throw AugmentationViolation("augmentation is not a chain map: d(" + name(i) + ") has a unit component");

    return A;
}

/// Build from a label-level description (JSON shape); validates.
inline AlgebraPtr make_algebra(const AlgebraDescription& desc) {
    PrimeField F(desc.characteristic);
    AlgebraData d{F, {}, 0, {}, {}, std::nullopt};
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t deg = 0; deg < desc.basis.size(); ++deg)
        for (const auto& l : desc.basis[deg]) {
            if (!idx.emplace(l, d.basis.size()).second) throw MalformedDescription("duplicate basis label '" + l + "'");
            d.basis.push_back({l, static_cast<int>(deg)});
        }
    auto find = [&](const std::string& l) {
        auto it = idx.find(l);
        if (it == idx.end()) throw MalformedDescription("unknown basis label '" + l + "'");
        return static_cast<std::uint32_t>(it->second);
    };
    if (d.basis.empty()) throw MalformedDescription("empty basis");
    d.unit = find(desc.unit);
    const std::size_t n = d.basis.size();
    d.diff.assign(n, {});
    d.mult.assign(n * n, {});
    for (const auto& e : desc.diff) d.diff[find(e.from)].push_back({find(e.to), F.from_int(e.coeff)});
    for (const auto& e : desc.mult) d.mult[find(e.a) * n + find(e.b)].push_back({find(e.c), F.from_int(e.coeff)});
    for (auto& v : d.diff) normalize(F, v);
    for (auto& v : d.mult) normalize(F, v);
    return make_algebra(std::move(d));
}

/// Inverse of make_algebra(AlgebraDescription): every nonzero table entry, in index order.
inline AlgebraDescription describe(const DGAlgebra& A) {
    AlgebraDescription desc;
    desc.characteristic = A.field().characteristic();
    desc.basis.assign(A.top_degree() + 1, {});
    for (const auto& b : A.basis()) desc.basis[b.degree].push_back(b.label);
    desc.unit = A.label(A.unit());
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (const auto& t : A.diff(i)) desc.diff.push_back({A.label(i), A.label(t.index), static_cast<std::int64_t>(t.coeff)});
    for (std::size_t a = 0; a < A.dim(); ++a)
        for (std::size_t b = 0; b < A.dim(); ++b)
            for (const auto& t : A.product(a, b)) desc.mult.push_back({A.label(a), A.label(b), A.label(t.index), static_cast<std::int64_t>(t.coeff)});
    return desc;
}

inline long long euler_characteristic(const DGAlgebra& A) { return euler_characteristic(0, A.dims()); }

}  // namespace klab

#endif
