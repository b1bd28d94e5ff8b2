#ifndef KLAB_MATRIX_HPP
#define KLAB_MATRIX_HPP

#include <initializer_list>
#include <ostream>
#include <vector>

#include "sparse.hpp"

namespace klab {

/// Dense matrix over a prime field, row-major. Acts on column vectors.
class FieldMatrix {
   public:
    FieldMatrix(PrimeField F, std::size_t rows, std::size_t cols) : F_(F), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    FieldMatrix(PrimeField F, std::initializer_list<std::initializer_list<std::int64_t>> rows) : F_(F), rows_(rows.size()) {
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
            for (auto v : r) data_.push_back(F.from_int(v));
        }
    }

    static FieldMatrix identity(PrimeField F, std::size_t n) {
        FieldMatrix m(F, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Matrix whose j-th column is columns[j].
    static FieldMatrix from_columns(PrimeField F, std::size_t rows, const std::vector<SparseVec>& columns) {
        FieldMatrix m(F, rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j)
            for (const auto& t : columns[j]) m(t.index, j) = t.coeff;
        return m;
    }

    const PrimeField& field() const noexcept { return F_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    SparseVec column(std::size_t j) const {
        SparseVec v;
        for (std::size_t i = 0; i < rows_; ++i)
            if (Scalar c = (*this)(i, j)) v.push_back({static_cast<std::uint32_t>(i), c});
        return v;
    }

    std::vector<SparseVec> columns() const {
        std::vector<SparseVec> out;
        out.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
        return out;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& x) const {
        if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
        std::vector<Scalar> y(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] = F_.add(y[i], F_.mul((*this)(i, j), x[j]));
        return y;
    }

    FieldMatrix operator*(const FieldMatrix& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product size mismatch");
        FieldMatrix r(F_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                Scalar a = (*this)(i, k);
                if (!a) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = F_.add(r(i, j), F_.mul(a, o(k, j)));
            }
        return r;
    }

    bool is_zero() const {
        for (auto v : data_)
            if (v) return false;
        return true;
    }

    bool operator==(const FieldMatrix& o) const { return F_ == o.F_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

    friend std::ostream& operator<<(std::ostream& os, const FieldMatrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << '[';
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
            os << "]\n";
        }
        return os;
    }

   private:
    PrimeField F_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

struct RankKernelImage {
    std::size_t rank;
    FieldMatrix kernel;  // columns form a basis of ker M
    FieldMatrix image;   // columns form an echelon basis of im M
};

/// Deterministic Gaussian elimination over the columns of M (first nonzero pivot).
inline RankKernelImage rank_kernel_image(const FieldMatrix& M) {
    const auto& F = M.field();
    TrackedEchelon e(F, M.rows());
    std::vector<SparseVec> kernel;
    for (std::size_t j = 0; j < M.cols(); ++j) {
        auto rel = e.insert(M.column(j), unit_vector(static_cast<std::uint32_t>(j)));
        if (!rel.empty()) kernel.push_back(std::move(rel));
    }
    return {e.rank(), FieldMatrix::from_columns(F, M.cols(), kernel), FieldMatrix::from_columns(F, M.rows(), e.rows())};
}

inline std::size_t rank(const FieldMatrix& M) { return rank_of_columns(M.field(), M.rows(), M.columns()); }

/// Solution of M x = b with free variables set to zero; throws NoSolution.
inline std::vector<Scalar> solve_preimage(const FieldMatrix& M, const std::vector<Scalar>& b) {
    if (b.size() != M.rows()) throw DimensionMismatch("right-hand side has wrong length");
    const auto& F = M.field();
    TrackedEchelon e(F, M.rows());
    for (std::size_t j = 0; j < M.cols(); ++j) e.insert(M.column(j), unit_vector(static_cast<std::uint32_t>(j)));
    SparseVec v = from_dense(b), x;
    e.reduce(v, x);
    if (!v.empty()) throw NoSolution("right-hand side is not in the image");
    return to_dense(x, M.cols());
}

}  // namespace klab

#endif
