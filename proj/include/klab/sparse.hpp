#ifndef KLAB_SPARSE_HPP
#define KLAB_SPARSE_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "field.hpp"

namespace klab {

struct Term {
    std::uint32_t index;
    Scalar coeff;
    bool operator==(const Term&) const = default;
};

/// Sparse vector: terms sorted by strictly increasing index, no zero coefficients.
using SparseVec = std::vector<Term>;

/// Sort, merge duplicates and drop zeros. Use after pushing terms in arbitrary order.
inline void normalize(const PrimeField& F, SparseVec& v) {
    if (v.empty()) return;
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::uint32_t idx = v[i].index;
        Scalar c = 0;
        for (; i < v.size() && v[i].index == idx; ++i) c = F.add(c, v[i].coeff);
        if (c != 0) v[out++] = {idx, c};
    }
    v.resize(out);
}

/// out = x + c*y
inline void add_scaled(const PrimeField& F, const SparseVec& x, Scalar c, const SparseVec& y, SparseVec& out) {
    out.clear();
    out.reserve(x.size() + y.size());
    auto i = x.begin(), j = y.begin();
    while (i != x.end() && j != y.end()) {
        if (i->index < j->index) {
            out.push_back(*i++);
        } else if (j->index < i->index) {
            out.push_back({j->index, F.mul(c, j->coeff)});
            ++j;
        } else {
            Scalar s = F.add(i->coeff, F.mul(c, j->coeff));
            if (s) out.push_back({i->index, s});
            ++i;
            ++j;
        }
    }
    for (; i != x.end(); ++i) out.push_back(*i);
    for (; j != y.end(); ++j) out.push_back({j->index, F.mul(c, j->coeff)});
}

/// x += c*y, using `scratch` as temporary storage.
inline void axpy(const PrimeField& F, SparseVec& x, Scalar c, const SparseVec& y, SparseVec& scratch) {
    if (c == 0 || y.empty()) return;
    add_scaled(F, x, c, y, scratch);
    x.swap(scratch);
}

inline void axpy(const PrimeField& F, SparseVec& x, Scalar c, const SparseVec& y) {
    SparseVec scratch;
    axpy(F, x, c, y, scratch);
}

inline SparseVec scaled(const PrimeField& F, SparseVec v, Scalar c) {
    if (c == 0) return {};
    for (auto& t : v) t.coeff = F.mul(t.coeff, c);
    return v;
}

inline SparseVec unit_vector(std::uint32_t index) { return SparseVec{{index, 1}}; }

inline Scalar coefficient(const SparseVec& v, std::uint32_t index) {
    auto it = std::lower_bound(v.begin(), v.end(), index, [](const Term& t, std::uint32_t i) { return t.index < i; });
    return (it != v.end() && it->index == index) ? it->coeff : 0;
}

inline std::vector<Scalar> to_dense(const SparseVec& v, std::size_t dim) {
    std::vector<Scalar> d(dim, 0);
    for (const auto& t : v) d[t.index] = t.coeff;
    return d;
}

inline SparseVec from_dense(const std::vector<Scalar>& d) {
    SparseVec v;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i]) v.push_back({static_cast<std::uint32_t>(i), d[i]});
    return v;
}

/// Apply a linear map given by its (sparse) columns to a sparse vector.
inline SparseVec apply_columns(const PrimeField& F, const std::vector<SparseVec>& columns, const SparseVec& v) {
    SparseVec out;
    for (const auto& t : v)
        for (const auto& s : columns[t.index]) out.push_back({s.index, F.mul(t.coeff, s.coeff)});
    normalize(F, out);
    return out;
}

/// Row echelon basis of a subspace of F^dim. Pivots are leading (smallest)
/// indices; rows are normalized to leading coefficient 1 and only reduced on
/// their leading term, so the basis depends only on insertion order.
class Echelon {
   public:
    Echelon(PrimeField F, std::size_t dim) : F_(F), pivot_row_(dim, -1) {}

    const PrimeField& field() const noexcept { return F_; }
    std::size_t dim() const noexcept { return pivot_row_.size(); }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<SparseVec>& rows() const noexcept { return rows_; }
    bool is_pivot(std::uint32_t index) const { return pivot_row_[index] >= 0; }

    /// Eliminate leading terms while they hit a pivot.
    void reduce(SparseVec& v) const {
        SparseVec scratch;
        while (!v.empty()) {
            int r = pivot_row_[v.front().index];
            if (r < 0) return;
            axpy(F_, v, F_.neg(v.front().coeff), rows_[r], scratch);
        }
    }

    /// Eliminate every term that hits a pivot (full normal form modulo the span).
    void reduce_fully(SparseVec& v) const {
        SparseVec scratch;
        std::size_t pos = 0;
        while (pos < v.size()) {
            int r = pivot_row_[v[pos].index];
            if (r < 0) {
                ++pos;
                continue;
            }
            std::uint32_t idx = v[pos].index;
            axpy(F_, v, F_.neg(v[pos].coeff), rows_[r], scratch);
            pos = std::lower_bound(v.begin(), v.end(), idx, [](const Term& t, std::uint32_t i) { return t.index < i; }) - v.begin();
        }
    }

    bool contains(SparseVec v) const {
        reduce(v);
        return v.empty();
    }

    /// Returns true when v was independent of the current rows.
    bool insert(SparseVec v) {
        reduce(v);
        if (v.empty()) return false;
        Scalar inv = F_.inv(v.front().coeff);
        for (auto& t : v) t.coeff = F_.mul(t.coeff, inv);
        pivot_row_[v.front().index] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
    }

   private:
    PrimeField F_;
    std::vector<int> pivot_row_;
    std::vector<SparseVec> rows_;
};

/// Echelon basis whose rows carry a companion "tag" vector that is updated
/// with the same operations. With tag(column_j) = e_j this tracks source
/// combinations (kernels, preimages); with tags in a quotient basis it
/// tracks homology classes.
class TrackedEchelon {
   public:
    TrackedEchelon(PrimeField F, std::size_t dim) : F_(F), pivot_row_(dim, -1) {}

    const PrimeField& field() const noexcept { return F_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<SparseVec>& rows() const noexcept { return rows_; }
    const std::vector<SparseVec>& tags() const noexcept { return tags_; }

    /// On return: v_in = v_out + sum c_i row_i and tag += sum c_i tag_i.
    void reduce(SparseVec& v, SparseVec& tag) const {
        SparseVec scratch;
        while (!v.empty()) {
            int r = pivot_row_[v.front().index];
            if (r < 0) return;
            Scalar c = v.front().coeff;
            axpy(F_, v, F_.neg(c), rows_[r], scratch);
            axpy(F_, tag, c, tags_[r], scratch);
        }
    }

    /// Insert an already reduced nonzero vector with the given tag.
    void insert_reduced(SparseVec v, SparseVec tag) {
        Scalar inv = F_.inv(v.front().coeff);
        for (auto& t : v) t.coeff = F_.mul(t.coeff, inv);
        for (auto& t : tag) t.coeff = F_.mul(t.coeff, inv);
        pivot_row_[v.front().index] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        tags_.push_back(std::move(tag));
    }

    /// Insert v carrying tag t. Returns the empty vector when v was
    /// independent, otherwise t - (accumulated tag), i.e. the relation found.
    SparseVec insert(SparseVec v, const SparseVec& t) {
        SparseVec acc;
        reduce(v, acc);
        SparseVec rel;
        add_scaled(F_, t, F_.neg(1), acc, rel);
        if (v.empty()) return rel;
        insert_reduced(std::move(v), std::move(rel));
        return {};
    }

   private:
    PrimeField F_;
    std::vector<int> pivot_row_;
    std::vector<SparseVec> rows_;
    std::vector<SparseVec> tags_;
};

/// Rank of a matrix given by sparse columns with `rows` rows.
inline std::size_t rank_of_columns(const PrimeField& F, std::size_t rows, const std::vector<SparseVec>& columns) {
    Echelon e(F, rows);
    for (const auto& c : columns) e.insert(c);
    return e.rank();
}

/// Kernel basis of the matrix with the given sparse columns (vectors in F^columns.size()).
inline std::vector<SparseVec> kernel_of_columns(const PrimeField& F, std::size_t rows, const std::vector<SparseVec>& columns) {
    TrackedEchelon e(F, rows);
    std::vector<SparseVec> kernel;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        auto rel = e.insert(columns[j], unit_vector(static_cast<std::uint32_t>(j)));
        if (!rel.empty()) kernel.push_back(std::move(rel));
    }
    return kernel;
}

/// Homology of  C_{i+1} --d_in--> C_i --d_out--> C_{i-1}  with a basis of
/// cycle representatives and coordinates of any cycle in that basis.
/// `relations` (optional) are extra cycles quotiented out together with the
/// boundaries (used for minimal generating sets over a local degree-0 ring).
class HomologyQuotient {
   public:
    HomologyQuotient(PrimeField F, std::size_t dim) : F_(F), echelon_(F, dim), dim_space_(dim) {}

    static HomologyQuotient compute(const PrimeField& F, std::size_t dim_ci, const std::vector<SparseVec>& d_in_columns,
                                    std::size_t dim_cim1, const std::vector<SparseVec>& d_out_columns,
                                    const std::vector<SparseVec>& relations = {}) {
        HomologyQuotient h(F, dim_ci);
        auto cycles = kernel_of_columns(F, dim_cim1, d_out_columns);
        for (const auto& b : d_in_columns) h.add_relation(b);
        for (const auto& r : relations) h.add_relation(r);
        for (auto& z : cycles) h.add_cycle(z);
        return h;
    }

    /// Quotient out v (a boundary or other relation). Must precede add_cycle calls.
    void add_relation(SparseVec v) {
        SparseVec acc;
        echelon_.reduce(v, acc);
        if (!v.empty()) {
            echelon_.insert_reduced(std::move(v), {});
            ++relation_rank_;
        }
    }

    /// Returns true when the cycle contributed a new class.
    bool add_cycle(SparseVec z) {
        SparseVec acc;
        echelon_.reduce(z, acc);
        if (z.empty()) return false;
        auto cls = static_cast<std::uint32_t>(reps_.size());
        reps_.push_back(z);
        echelon_.insert_reduced(std::move(z), unit_vector(cls));
        return true;
    }

    std::size_t dim() const noexcept { return reps_.size(); }
    std::size_t relation_rank() const noexcept { return relation_rank_; }
    std::size_t space_dim() const noexcept { return dim_space_; }
    const std::vector<SparseVec>& representatives() const noexcept { return reps_; }

    /// Coordinates of the class of a cycle; throws if z is not in span(relations, reps).
    SparseVec classify(SparseVec z) const {
        SparseVec acc;
        echelon_.reduce(z, acc);
        if (!z.empty()) throw CompositionNotZero("vector is not a cycle of this complex");
        return acc;
    }

   private:
    PrimeField F_;
    TrackedEchelon echelon_;
    std::size_t dim_space_;
    std::size_t relation_rank_ = 0;
    std::vector<SparseVec> reps_;
};

}  // namespace klab

#endif
