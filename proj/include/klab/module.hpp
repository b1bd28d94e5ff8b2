#ifndef KLAB_MODULE_HPP
#define KLAB_MODULE_HPP

#include <random>
#include <unordered_map>

#include "algebra.hpp"

namespace klab {

/// Raw tables of a DG module. action[a * dim + x] is a.x for basis a of the
/// algebra and x of the module; basis sorted by (possibly negative) degree.
struct ModuleData {
    AlgebraPtr algebra;
    std::vector<BasisElement> basis;
    std::vector<SparseVec> diff;
    std::vector<SparseVec> action;
};

class DGModule;
DGModule make_module(ModuleData data);

/// Finite-dimensional left DG module over a DGAlgebra, validated at construction.
class DGModule {
   public:
    const AlgebraPtr& algebra() const noexcept { return d_->algebra; }
    const PrimeField& field() const noexcept { return d_->algebra->field(); }
    std::size_t dim() const noexcept { return d_->basis.size(); }
    bool is_zero() const noexcept { return d_->basis.empty(); }
    int degree(std::size_t i) const { return d_->basis[i].degree; }
    const std::string& label(std::size_t i) const { return d_->basis[i].label; }
    const std::vector<BasisElement>& basis() const noexcept { return d_->basis; }

    /// Degree window; for the zero module lo() = 0 and hi() = -1.
    int lo() const noexcept { return is_zero() ? 0 : d_->basis.front().degree; }
    int hi() const noexcept { return is_zero() ? -1 : d_->basis.back().degree; }
    std::size_t begin(int deg) const {
        if (deg < lo()) return 0;
        if (deg > hi()) return dim();
        return offsets_[deg - lo()];
    }
    std::size_t end(int deg) const {
        if (deg < lo()) return 0;
        if (deg > hi()) return dim();
        return offsets_[deg - lo() + 1];
    }
    std::size_t dim(int deg) const { return end(deg) - begin(deg); }
    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> out;
        for (int d = lo(); d <= hi(); ++d) out.push_back(dim(d));
        return out;
    }

    const SparseVec& diff(std::size_t i) const { return d_->diff[i]; }
    const SparseVec& act(std::size_t a, std::size_t x) const { return d_->action[a * dim() + x]; }
    const ModuleData& data() const noexcept { return *d_; }

    SparseVec differential(const SparseVec& v) const { return apply_columns(field(), d_->diff, v); }

    SparseVec act(const SparseVec& a, const SparseVec& x) const {
        const auto& F = field();
        SparseVec out;
        for (const auto& s : a)
            for (const auto& t : x) {
                Scalar c = F.mul(s.coeff, t.coeff);
                for (const auto& u : act(s.index, t.index)) out.push_back({u.index, F.mul(c, u.coeff)});
            }
        normalize(F, out);
        return out;
    }

    GradedSpace space() const {
        if (is_zero()) return GradedSpace();
        std::vector<std::vector<std::string>> labels(hi() - lo() + 1);
        for (const auto& b : d_->basis) labels[b.degree - lo()].push_back(b.label);
        return GradedSpace(lo(), std::move(labels));
    }

    bool same_tables(const DGModule& o) const {
        return algebra()->same_tables(*o.algebra()) && d_->basis == o.d_->basis && d_->diff == o.d_->diff && d_->action == o.d_->action;
    }

   private:
    friend DGModule make_module(ModuleData data);
    explicit DGModule(std::shared_ptr<const ModuleData> d) : d_(std::move(d)) {}

    std::shared_ptr<const ModuleData> d_;
    std::vector<std::size_t> offsets_;
};

inline DGModule make_module(ModuleData data) {
    if (!data.algebra) throw MalformedDescription("module without algebra");
    const DGAlgebra& A = *data.algebra;
    const auto& F = A.field();
    const std::size_t n = data.basis.size(), na = A.dim();
    if (data.diff.size() != n || data.action.size() != na * n) throw MalformedDescription("module tables have wrong size");
    {
        std::unordered_map<std::string, std::size_t> seen;
        for (std::size_t i = 0; i < n; ++i) {
            if (i && data.basis[i].degree < data.basis[i - 1].degree) throw MalformedDescription("module basis must be sorted by degree");
            if (!seen.emplace(data.basis[i].label, i).second) throw MalformedDescription("duplicate module label '" + data.basis[i].label + "'");
        }
    }
    auto check = [&](const SparseVec& v, int degree, const std::string& what) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].index >= n) throw MalformedDescription(what + ": index out of range");
            if (v[i].coeff == 0 || v[i].coeff >= F.characteristic()) throw MalformedDescription(what + ": bad coefficient");
            if (i && v[i].index <= v[i - 1].index) throw MalformedDescription(what + ": terms not sorted");
            if (data.basis[v[i].index].degree != degree) throw DegreeViolation(what + ": term of wrong degree");
        }
    };
    for (std::size_t x = 0; x < n; ++x) check(data.diff[x], data.basis[x].degree - 1, "diff(" + data.basis[x].label + ")");
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t x = 0; x < n; ++x)
            check(data.action[a * n + x], A.degree(a) + data.basis[x].degree, "action(" + A.label(a) + "," + data.basis[x].label + ")");

    DGModule X(std::make_shared<const ModuleData>(std::move(data)));
    if (n) {
        int lo = X.d_->basis.front().degree, hi = X.d_->basis.back().degree;
        X.offsets_.assign(hi - lo + 2, 0);
        for (const auto& b : X.d_->basis) ++X.offsets_[b.degree - lo + 1];
        for (std::size_t k = 1; k < X.offsets_.size(); ++k) X.offsets_[k] += X.offsets_[k - 1];
    }

    auto name = [&](std::size_t x) { return "'" + X.label(x) + "'"; };
    for (std::size_t x = 0; x < n; ++x)
        if (!X.differential(X.diff(x)).empty()) throw DifferentialSquareViolation("d(d(" + name(x) + ")) != 0");
    for (std::size_t x = 0; x < n; ++x)
        if (X.act(A.unit(), x) != unit_vector(static_cast<std::uint32_t>(x))) throw UnitViolation("unit does not act as identity on " + name(x));
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < na; ++b) {
            const auto& ab = A.product(a, b);
            for (std::size_t x = 0; x < n; ++x) {
                const auto& bx = X.act(b, x);
                if (ab.empty() && bx.empty()) continue;
                if (X.act(ab, unit_vector(static_cast<std::uint32_t>(x))) != X.act(unit_vector(static_cast<std::uint32_t>(a)), bx))
                    throw AssociativityViolation("(ab)x != a(bx) for a='" + A.label(a) + "', b='" + A.label(b) + "', x=" + name(x));
            }
        }
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t x = 0; x < n; ++x) {
            SparseVec lhs = X.differential(X.act(a, x));
            SparseVec rhs = X.act(A.diff(a), unit_vector(static_cast<std::uint32_t>(x)));
            axpy(F, rhs, F.sign(A.degree(a)), X.act(unit_vector(static_cast<std::uint32_t>(a)), X.diff(x)));
            if (lhs != rhs) throw LeibnizViolation("d(ax) != d(a)x + (-1)^|a| a d(x) for a='" + A.label(a) + "', x=" + name(x));
        }
    return X;
}

/// Degree-0 morphism of DG modules given by the images of the source basis.
struct DGMorphism {
    DGModule source;
    DGModule target;
    std::vector<SparseVec> images;

    SparseVec apply(const SparseVec& v) const { return apply_columns(source.field(), images, v); }

    /// Throws NotAMorphism unless this is an A-linear chain map of degree 0.
    void validate() const {
        const auto& A = *source.algebra();
        if (images.size() != source.dim()) throw NotAMorphism("wrong number of images");
        for (std::size_t x = 0; x < source.dim(); ++x) {
            for (const auto& t : images[x])
                if (t.index >= target.dim() || target.degree(t.index) != source.degree(x)) throw NotAMorphism("image of wrong degree");
            if (apply(source.diff(x)) != target.differential(images[x])) throw NotAMorphism("not a chain map at '" + source.label(x) + "'");
            for (std::size_t a = 0; a < A.dim(); ++a)
                if (apply(source.act(a, x)) != target.act(unit_vector(static_cast<std::uint32_t>(a)), images[x]))
                    throw NotAMorphism("not A-linear at a='" + A.label(a) + "', x='" + source.label(x) + "'");
        }
    }

    std::size_t rank_in_degree(int deg) const {
        Echelon e(source.field(), target.dim());
        for (std::size_t x = source.begin(deg); x < source.end(deg); ++x) e.insert(images[x]);
        return e.rank();
    }

    bool is_injective() const {
        for (int d = source.lo(); d <= source.hi(); ++d)
            if (rank_in_degree(d) != source.dim(d)) return false;
        return true;
    }
    bool is_surjective() const {
        for (int d = target.lo(); d <= target.hi(); ++d)
            if (rank_in_degree(d) != target.dim(d)) return false;
        return true;
    }
    bool is_isomorphism() const { return is_injective() && is_surjective(); }
};

// ---------------------------------------------------------------------------
// Homology of a module

struct ModuleHomology {
    int lo = 0;
    std::vector<std::size_t> dims;  // dims[i] = dim H_{lo+i}
    std::size_t at(int deg) const { return (deg < lo || deg >= lo + int(dims.size())) ? 0 : dims[deg - lo]; }
    std::size_t total() const {
        std::size_t s = 0;
        for (auto d : dims) s += d;
        return s;
    }
    /// Largest degree with nonzero homology, nullopt when acyclic.
    std::optional<int> sup() const {
        for (int i = int(dims.size()) - 1; i >= 0; --i)
            if (dims[i]) return lo + i;
        return std::nullopt;
    }
    std::optional<int> inf() const {
        for (std::size_t i = 0; i < dims.size(); ++i)
            if (dims[i]) return lo + int(i);
        return std::nullopt;
    }
};

/// Differential of X from degree deg, as sparse columns indexed locally in degree deg-1.
inline std::vector<SparseVec> local_diff_columns(const DGModule& X, int deg) {
    std::vector<SparseVec> cols;
    const std::size_t off = X.begin(deg - 1);
    for (std::size_t x = X.begin(deg); x < X.end(deg); ++x) {
        SparseVec v = X.diff(x);
        for (auto& t : v) t.index -= static_cast<std::uint32_t>(off);
        cols.push_back(std::move(v));
    }
    return cols;
}

inline HomologyQuotient module_homology_at(const DGModule& X, int deg) {
    return HomologyQuotient::compute(X.field(), X.dim(deg), local_diff_columns(X, deg + 1), X.dim(deg - 1), local_diff_columns(X, deg));
}

inline ModuleHomology homology(const DGModule& X) {
    ModuleHomology h;
    h.lo = X.lo();
    for (int d = X.lo(); d <= X.hi(); ++d) {
        const std::size_t r_out = rank_of_columns(X.field(), X.dim(d - 1), local_diff_columns(X, d));
        const std::size_t r_in = rank_of_columns(X.field(), X.dim(d), local_diff_columns(X, d + 1));
        h.dims.push_back(X.dim(d) - r_out - r_in);
    }
    return h;
}

inline long long euler_characteristic(const DGModule& X) { return euler_characteristic(X.lo(), X.dims()); }

// ---------------------------------------------------------------------------
// Basic modules

/// A as a module over itself.
inline DGModule regular_module(const AlgebraPtr& A) {
    ModuleData d{A, A->basis(), {}, {}};
    for (std::size_t i = 0; i < A->dim(); ++i) d.diff.push_back(A->diff(i));
    d.action.reserve(A->dim() * A->dim());
    for (std::size_t a = 0; a < A->dim(); ++a)
        for (std::size_t b = 0; b < A->dim(); ++b) d.action.push_back(A->product(a, b));
    return make_module(std::move(d));
}

/// Graded k-vector space with dims[i] in degree lo+i, on which the augmentation ideal acts as zero.
inline DGModule trivial_module(const AlgebraPtr& A, int lo, const std::vector<std::size_t>& dims, const std::string& prefix = "w") {
    ModuleData d{A, {}, {}, {}};
    for (std::size_t i = 0; i < dims.size(); ++i)
        for (std::size_t j = 0; j < dims[i]; ++j) {
            int deg = lo + int(i);
            std::string l = prefix + std::to_string(deg);
            if (dims[i] > 1) l += "_" + std::to_string(j + 1);
            d.basis.push_back({l, deg});
        }
    const std::size_t n = d.basis.size();
    d.diff.assign(n, {});
    d.action.assign(A->dim() * n, {});
    for (std::size_t x = 0; x < n; ++x) d.action[A->unit() * n + x] = unit_vector(static_cast<std::uint32_t>(x));
    return make_module(std::move(d));
}

/// The residue field k = A / m_A in degree 0.
inline DGModule residue_module(const AlgebraPtr& A) { return trivial_module(A, 0, {1}, "k"); }

inline DGModule zero_module(const AlgebraPtr& A) { return make_module({A, {}, {}, {}}); }

/// Shift: (S^i X)_n = X_{n-i}; differential (-1)^i d, action a.(s x) = (-1)^{i|a|} s(a x).
inline DGModule shift(const DGModule& X, int i) {
    if (i == 0) return X;
    const auto& F = X.field();
    const auto& A = *X.algebra();
    ModuleData d{X.algebra(), {}, {}, {}};
    for (const auto& b : X.basis()) d.basis.push_back({b.label, b.degree + i});
    for (std::size_t x = 0; x < X.dim(); ++x) d.diff.push_back(scaled(F, X.diff(x), F.sign(i)));
    d.action.reserve(A.dim() * X.dim());
    for (std::size_t a = 0; a < A.dim(); ++a)
        for (std::size_t x = 0; x < X.dim(); ++x) d.action.push_back(scaled(F, X.act(a, x), F.sign(static_cast<long long>(i) * A.degree(a))));
    return make_module(std::move(d));
}

/// Hom_k(X, S^n k) with basis f_x dual to x (degree n - |x|),
/// (d f)(x) = -(-1)^{|f|} f(dx) and (a.f)(x) = (-1)^{|a||f|} f(ax).
inline DGModule dual_into_shift(const DGModule& X, int n) {
    const auto& F = X.field();
    const auto& A = *X.algebra();
    const std::size_t m = X.dim();
    // Dual basis ordered by increasing degree n - |x|, i.e. reversed.
    auto pos = [&](std::size_t x) { return static_cast<std::uint32_t>(m - 1 - x); };
    ModuleData d{X.algebra(), std::vector<BasisElement>(m), std::vector<SparseVec>(m), std::vector<SparseVec>(A.dim() * m)};
    for (std::size_t x = 0; x < m; ++x) d.basis[pos(x)] = {X.label(x) + "*", n - X.degree(x)};
    // d f_y = -(-1)^{|f_y|} sum_x coef_y(dx) f_x ; a f_y = (-1)^{|a||f_y|} sum_x coef_y(ax) f_x
    for (std::size_t x = 0; x < m; ++x) {
        for (const auto& t : X.diff(x)) {
            std::size_t y = t.index;
            int fy = n - X.degree(y);
            d.diff[pos(y)].push_back({pos(x), F.mul(F.neg(F.sign(fy)), t.coeff)});
        }
        for (std::size_t a = 0; a < A.dim(); ++a)
            for (const auto& t : X.act(a, x)) {
                std::size_t y = t.index;
                int fy = n - X.degree(y);
                d.action[a * m + pos(y)].push_back({pos(x), F.mul(F.sign(static_cast<long long>(A.degree(a)) * fy), t.coeff)});
            }
    }
    for (auto& v : d.diff) normalize(F, v);
    for (auto& v : d.action) normalize(F, v);
    return make_module(std::move(d));
}

/// Hom_k(X, k) with reflected grading.
inline DGModule graded_dual(const DGModule& X) { return dual_into_shift(X, 0); }

/// Natural map X -> X** sending x to (-1)^{|x|} f_{f_x} (evaluation with the Koszul sign).
inline DGMorphism double_dual_map(const DGModule& X) {
    DGModule XX = graded_dual(graded_dual(X));
    const auto& F = X.field();
    std::vector<SparseVec> images;
    for (std::size_t x = 0; x < X.dim(); ++x) images.push_back({{static_cast<std::uint32_t>(x), F.sign(X.degree(x))}});
    return {X, XX, std::move(images)};
}

inline DGModule direct_sum(const DGModule& X, const DGModule& Y) {
    const auto& A = *X.algebra();
    // merge bases by degree, X first within a degree
    std::vector<std::pair<int, std::size_t>> order;  // (which, index)
    std::vector<std::uint32_t> posX(X.dim()), posY(Y.dim());
    std::size_t i = 0, j = 0;
    ModuleData d{X.algebra(), {}, {}, {}};
    std::unordered_map<std::string, int> seen;
    auto label = [&](const std::string& l, const char* tag) {
        std::string out = seen.count(l) ? std::string(tag) + l : l;
        seen[out] = 1;
        return out;
    };
    for (const auto& b : X.basis()) seen[b.label] = 1;
    while (i < X.dim() || j < Y.dim()) {
        if (j == Y.dim() || (i < X.dim() && X.degree(i) <= Y.degree(j))) {
            posX[i] = static_cast<std::uint32_t>(d.basis.size());
            d.basis.push_back(X.basis()[i++]);
        } else {
            posY[j] = static_cast<std::uint32_t>(d.basis.size());
            d.basis.push_back({label(Y.label(j), "'"), Y.degree(j)});
            ++j;
        }
    }
    const std::size_t n = d.basis.size();
    d.diff.assign(n, {});
    d.action.assign(A.dim() * n, {});
    auto remap = [](const SparseVec& v, const std::vector<std::uint32_t>& pos) {
        SparseVec out;
        for (const auto& t : v) out.push_back({pos[t.index], t.coeff});
        std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
        return out;
    };
    for (std::size_t x = 0; x < X.dim(); ++x) {
        d.diff[posX[x]] = remap(X.diff(x), posX);
        for (std::size_t a = 0; a < A.dim(); ++a) d.action[a * n + posX[x]] = remap(X.act(a, x), posX);
    }
    for (std::size_t y = 0; y < Y.dim(); ++y) {
        d.diff[posY[y]] = remap(Y.diff(y), posY);
        for (std::size_t a = 0; a < A.dim(); ++a) d.action[a * n + posY[y]] = remap(Y.act(a, y), posY);
    }
    return make_module(std::move(d));
}

/// Fully reduced row echelon basis of span(vectors) (rows sorted by pivot).
inline std::vector<SparseVec> rref_basis(const PrimeField& F, std::size_t dim, const std::vector<SparseVec>& vectors) {
    Echelon e(F, dim);
    for (const auto& v : vectors) e.insert(v);
    std::vector<SparseVec> rows = e.rows();
    std::sort(rows.begin(), rows.end(), [](const SparseVec& a, const SparseVec& b) { return a.front().index < b.front().index; });
    // back-substitute so that every pivot column is zero in the other rows
    Echelon full(F, dim);
    for (const auto& r : rows) full.insert(r);
    for (auto& r : rows) {
        SparseVec head{r.front()};
        SparseVec tail(r.begin() + 1, r.end());
        full.reduce_fully(tail);
        r = head;
        r.insert(r.end(), tail.begin(), tail.end());
    }
    return rows;
}

/// Smallest DG submodule containing the given (homogeneous) vectors, as RREF rows.
inline std::vector<SparseVec> submodule_closure(const DGModule& X, const std::vector<SparseVec>& generators) {
    const auto& A = *X.algebra();
    Echelon span(X.field(), X.dim());
    std::vector<SparseVec> all, queue;
    for (const auto& g : generators)
        if (span.insert(g)) queue.push_back(g);
    while (!queue.empty()) {
        SparseVec v = std::move(queue.back());
        queue.pop_back();
        all.push_back(v);
        SparseVec dv = X.differential(v);
        if (span.insert(dv)) queue.push_back(dv);
        for (std::size_t a = 0; a < A.dim(); ++a) {
            if (a == A.unit()) continue;
            SparseVec av = X.act(unit_vector(static_cast<std::uint32_t>(a)), v);
            if (span.insert(av)) queue.push_back(std::move(av));
        }
    }
    return rref_basis(X.field(), X.dim(), all);
}

struct Submodule {
    DGModule module;
    DGMorphism inclusion;
};

/// Submodule spanned by the given vectors, which must already span a DG submodule.
inline Submodule submodule(const DGModule& X, const std::vector<SparseVec>& spanning) {
    const auto& F = X.field();
    const auto& A = *X.algebra();
    auto rows = rref_basis(F, X.dim(), spanning);
    for (const auto& r : rows) {
        int deg = X.degree(r.front().index);
        for (const auto& t : r)
            if (X.degree(t.index) != deg) throw NotASubmodule("spanning vectors must be homogeneous");
    }
    std::stable_sort(rows.begin(), rows.end(), [&](const SparseVec& a, const SparseVec& b) { return X.degree(a.front().index) < X.degree(b.front().index); });
    std::unordered_map<std::uint32_t, std::uint32_t> row_of_pivot;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of_pivot[rows[r].front().index] = static_cast<std::uint32_t>(r);
    auto coords = [&](const SparseVec& v) {
        SparseVec c, rest = v;
        for (const auto& t : v) {
            auto it = row_of_pivot.find(t.index);
            if (it != row_of_pivot.end()) c.push_back({it->second, t.coeff});
        }
        normalize(F, c);
        for (const auto& t : c) axpy(F, rest, F.neg(t.coeff), rows[t.index]);
        if (!rest.empty()) throw NotASubmodule("span is not closed under the differential and the action");
        return c;
    };
    ModuleData d{X.algebra(), {}, {}, {}};
    std::unordered_map<std::string, int> used;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        std::string l = (row.size() == 1 && row.front().coeff == 1) ? X.label(row.front().index) : "<" + std::to_string(r) + ">";
        d.basis.push_back({l, X.degree(row.front().index)});
    }
    const std::size_t n = rows.size();
    for (std::size_t r = 0; r < n; ++r) d.diff.push_back(coords(X.differential(rows[r])));
    d.action.assign(A.dim() * n, {});
    for (std::size_t a = 0; a < A.dim(); ++a)
        for (std::size_t r = 0; r < n; ++r) d.action[a * n + r] = coords(X.act(unit_vector(static_cast<std::uint32_t>(a)), rows[r]));
    DGModule S = make_module(std::move(d));
    return {S, DGMorphism{S, X, rows}};
}

struct Quotient {
    DGModule module;
    DGMorphism projection;
};

/// X / U where U = span(vectors) must be a DG submodule.
inline Quotient quotient(const DGModule& X, const std::vector<SparseVec>& spanning) {
    const auto& F = X.field();
    const auto& A = *X.algebra();
    auto rows = rref_basis(F, X.dim(), spanning);
    Echelon U(F, X.dim());
    for (const auto& r : rows) U.insert(r);
    std::vector<std::int64_t> qpos(X.dim(), -1);
    ModuleData d{X.algebra(), {}, {}, {}};
    for (std::size_t x = 0; x < X.dim(); ++x)
        if (!U.is_pivot(static_cast<std::uint32_t>(x))) {
            qpos[x] = static_cast<std::int64_t>(d.basis.size());
            d.basis.push_back(X.basis()[x]);
        }
    auto cls = [&](SparseVec v) {
        U.reduce_fully(v);
        SparseVec out;
        for (const auto& t : v) out.push_back({static_cast<std::uint32_t>(qpos[t.index]), t.coeff});
        return out;
    };
    for (const auto& r : rows) {
        if (!U.contains(X.differential(r))) throw NotASubmodule("quotient by a non-DG subspace");
        for (std::size_t a = 0; a < A.dim(); ++a)
            if (!U.contains(X.act(unit_vector(static_cast<std::uint32_t>(a)), r))) throw NotASubmodule("quotient by a non-A-stable subspace");
    }
    const std::size_t n = d.basis.size();
    std::vector<std::size_t> back;
    for (std::size_t x = 0; x < X.dim(); ++x)
        if (qpos[x] >= 0) back.push_back(x);
    for (std::size_t q = 0; q < n; ++q) d.diff.push_back(cls(X.diff(back[q])));
    d.action.assign(A.dim() * n, {});
    for (std::size_t a = 0; a < A.dim(); ++a)
        for (std::size_t q = 0; q < n; ++q) d.action[a * n + q] = cls(X.act(a, back[q]));
    DGModule Q = make_module(std::move(d));
    std::vector<SparseVec> images;
    for (std::size_t x = 0; x < X.dim(); ++x) images.push_back(cls(unit_vector(static_cast<std::uint32_t>(x))));
    return {Q, DGMorphism{X, Q, std::move(images)}};
}

/// View a module over B as a module over A through an algebra map A -> B,
/// given by the images of A's basis elements in B.
inline DGModule restrict_scalars(const DGModule& X, const AlgebraPtr& A, const std::vector<SparseVec>& images) {
    if (images.size() != A->dim()) throw MalformedDescription("restriction map needs one image per basis element");
    ModuleData d{A, X.basis(), {}, {}};
    for (std::size_t x = 0; x < X.dim(); ++x) d.diff.push_back(X.diff(x));
    for (std::size_t a = 0; a < A->dim(); ++a)
        for (std::size_t x = 0; x < X.dim(); ++x) d.action.push_back(X.act(images[a], unit_vector(static_cast<std::uint32_t>(x))));
    return make_module(std::move(d));
}

/// Positive-degree part A_+ as a submodule of A.
inline Submodule positive_part(const AlgebraPtr& A) {
    std::vector<SparseVec> span;
    for (std::size_t i = A->begin(1); i < A->dim(); ++i) span.push_back(unit_vector(static_cast<std::uint32_t>(i)));
    return submodule(regular_module(A), span);
}

/// Augmentation ideal m_A = m_{A_0} + A_+ as a submodule of A (the first syzygy of k).
inline Submodule augmentation_ideal(const AlgebraPtr& A) {
    std::vector<SparseVec> span;
    for (std::size_t i = 0; i < A->dim(); ++i)
        if (i != A->unit()) span.push_back(unit_vector(static_cast<std::uint32_t>(i)));
    return submodule(regular_module(A), span);
}

/// Is X annihilated by Ann_A(A_+) = { a : a A_+ = 0 } ?
inline bool annihilator_check(const DGModule& X) {
    const auto& A = *X.algebra();
    const auto& F = A.field();
    const std::size_t n = A.dim();
    const std::size_t first_pos = A.begin(1);
    std::vector<SparseVec> columns;
    for (std::size_t b = 0; b < n; ++b) {
        SparseVec col;
        for (std::size_t c = first_pos; c < n; ++c)
            for (const auto& t : A.product(b, c)) col.push_back({static_cast<std::uint32_t>((c - first_pos) * n + t.index), t.coeff});
        normalize(F, col);
        columns.push_back(std::move(col));
    }
    auto ann = kernel_of_columns(F, (n - first_pos) * n, columns);
    for (const auto& a : ann)
        for (std::size_t x = 0; x < X.dim(); ++x)
            if (!X.act(a, unit_vector(static_cast<std::uint32_t>(x))).empty()) return false;
    return true;
}

/// Space of degree-0 A-linear chain maps X -> Y, as a basis of solution vectors
/// over the variables (y, x) with |x| = |y|; `var_index` maps (x, y) to the variable.
struct MorphismSpace {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> variables;  // (x, y)
    std::vector<SparseVec> basis;

    DGMorphism morphism(const DGModule& X, const DGModule& Y, const SparseVec& solution) const {
        std::vector<SparseVec> images(X.dim());
        for (const auto& t : solution) images[variables[t.index].first].push_back({variables[t.index].second, t.coeff});
        for (auto& v : images) normalize(X.field(), v);
        return {X, Y, std::move(images)};
    }
};

inline MorphismSpace morphism_space(const DGModule& X, const DGModule& Y) {
    const auto& A = *X.algebra();
    const auto& F = X.field();
    MorphismSpace S;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> var;
    for (std::size_t x = 0; x < X.dim(); ++x)
        for (std::size_t y = Y.begin(X.degree(x)); y < Y.end(X.degree(x)); ++y) {
            var[{static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)}] = static_cast<std::uint32_t>(S.variables.size());
            S.variables.push_back({static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)});
        }
    const std::size_t nv = S.variables.size();
    // Equations, each a row over the variables; row index = (equation block, target basis y').
    std::vector<SparseVec> columns(nv);
    std::uint32_t row_base = 0;
    auto add_equation = [&](const SparseVec& lhs_x, std::size_t x, const SparseVec& rhs_op_of_y, bool rhs_is_diff, std::size_t a) {
        (void)rhs_op_of_y;
        // f(lhs_x) - op(f(x)) = 0, components indexed by target basis of Y
        for (const auto& t : lhs_x)
            for (std::size_t y = Y.begin(X.degree(t.index)); y < Y.end(X.degree(t.index)); ++y) {
                std::uint32_t v = var.at({t.index, static_cast<std::uint32_t>(y)});
                columns[v].push_back({row_base + static_cast<std::uint32_t>(y), t.coeff});
            }
        for (std::size_t y = Y.begin(X.degree(x)); y < Y.end(X.degree(x)); ++y) {
            std::uint32_t v = var.at({static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)});
            const SparseVec& img = rhs_is_diff ? Y.diff(y) : Y.act(a, y);
            for (const auto& t : img) columns[v].push_back({row_base + t.index, F.neg(t.coeff)});
        }
        row_base += static_cast<std::uint32_t>(Y.dim());
    };
    for (std::size_t x = 0; x < X.dim(); ++x) {
        add_equation(X.diff(x), x, {}, true, 0);
        for (std::size_t a = 0; a < A.dim(); ++a)
            if (a != A.unit()) add_equation(X.act(a, x), x, {}, false, a);
    }
    for (auto& c : columns) normalize(F, c);
    S.basis = kernel_of_columns(F, row_base, columns);
    return S;
}

/// Search for an isomorphism of DG modules X -> Y by sampling random elements
/// of the space of A-linear chain maps. Deterministic for a given seed.
inline std::optional<DGMorphism> find_isomorphism(const DGModule& X, const DGModule& Y, std::uint64_t seed = 0, int attempts = 12) {
    if (X.dims() != Y.dims() || X.lo() != Y.lo()) return std::nullopt;
    const auto& F = X.field();
    auto S = morphism_space(X, Y);
    if (S.basis.empty()) return X.is_zero() ? std::optional<DGMorphism>(DGMorphism{X, Y, {}}) : std::nullopt;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> coeff(0, F.characteristic() - 1);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        SparseVec sol;
        for (const auto& b : S.basis) axpy(F, sol, attempt == 0 ? 1 : coeff(rng), b);
        DGMorphism f = S.morphism(X, Y, sol);
        if (f.is_isomorphism()) return f;
    }
    return std::nullopt;
}

}  // namespace klab

#endif
