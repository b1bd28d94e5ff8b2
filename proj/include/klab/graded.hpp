#ifndef KLAB_GRADED_HPP
#define KLAB_GRADED_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace klab {

/// Finite-dimensional graded vector space over degrees [lo, hi] with labelled bases.
class GradedSpace {
   public:
    GradedSpace() = default;

    GradedSpace(int lo, std::vector<std::vector<std::string>> labels) : lo_(lo), labels_(std::move(labels)) {
        if (labels_.empty()) labels_.emplace_back();
        for (const auto& deg : labels_) {
            std::set<std::string> seen(deg.begin(), deg.end());
            if (seen.size() != deg.size()) throw MalformedDescription("duplicate basis label within a degree");
        }
    }

    static GradedSpace from_dims(int lo, const std::vector<std::size_t>& dims) {
        std::vector<std::vector<std::string>> labels;
        for (std::size_t d = 0; d < dims.size(); ++d) {
            labels.emplace_back();
            for (std::size_t j = 0; j < dims[d]; ++j) labels.back().push_back("b" + std::to_string(lo + int(d)) + "_" + std::to_string(j));
        }
        return GradedSpace(lo, std::move(labels));
    }

    int lo() const noexcept { return lo_; }
    int hi() const noexcept { return lo_ + static_cast<int>(labels_.size()) - 1; }
    std::size_t dim(int degree) const {
        return (degree < lo() || degree > hi()) ? 0 : labels_[degree - lo_].size();
    }
    std::size_t total_dim() const {
        std::size_t s = 0;
        for (const auto& d : labels_) s += d.size();
        return s;
    }
    const std::vector<std::string>& labels(int degree) const {
        static const std::vector<std::string> empty;
        return (degree < lo() || degree > hi()) ? empty : labels_[degree - lo_];
    }
    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> out;
        for (const auto& d : labels_) out.push_back(d.size());
        return out;
    }

   private:
    int lo_ = 0;
    std::vector<std::vector<std::string>> labels_{{}};
};

/// Alternating sum of dimensions.
inline long long euler_characteristic(const GradedSpace& X) {
    long long chi = 0;
    for (int d = X.lo(); d <= X.hi(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(X.dim(d));
    return chi;
}

inline long long euler_characteristic(int lo, const std::vector<std::size_t>& dims) {
    long long chi = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) chi += ((lo + int(i)) % 2 == 0 ? 1 : -1) * static_cast<long long>(dims[i]);
    return chi;
}

/// Degreewise linear map source_i -> target_{i+shift}.
class GradedMap {
   public:
    GradedMap(PrimeField F, GradedSpace source, GradedSpace target, int shift)
        : F_(F), source_(std::move(source)), target_(std::move(target)), shift_(shift) {}

    const PrimeField& field() const noexcept { return F_; }
    const GradedSpace& source() const noexcept { return source_; }
    const GradedSpace& target() const noexcept { return target_; }
    int shift() const noexcept { return shift_; }

    void set_block(int degree, FieldMatrix m) {
        if (m.rows() != target_.dim(degree + shift_) || m.cols() != source_.dim(degree))
            throw DimensionMismatch("block at degree " + std::to_string(degree) + " has wrong shape");
        blocks_.insert_or_assign(degree, std::move(m));
    }

    /// Block from source degree `degree`; zero matrix when unset.
    FieldMatrix block(int degree) const {
        auto it = blocks_.find(degree);
        if (it != blocks_.end()) return it->second;
        return FieldMatrix(F_, target_.dim(degree + shift_), source_.dim(degree));
    }

   private:
    PrimeField F_;
    GradedSpace source_, target_;
    int shift_;
    std::map<int, FieldMatrix> blocks_;
};

struct HomologyAt {
    std::size_t dim;
    FieldMatrix representatives;  // columns are cycles in C_i
    FieldMatrix projection;       // dim x dim(C_i); sends a cycle to its class coordinates
};

/// Homology at degree i of  C_{i+1} --d_in--> C_i --d_out--> C_{i-1}.
inline HomologyAt homology_at(const GradedMap& d_in, const GradedMap& d_out, int i) {
    const auto& F = d_out.field();
    if (d_in.shift() != -1 || d_out.shift() != -1) throw DimensionMismatch("differentials must have degree -1");
    FieldMatrix in = d_in.block(i + 1), out = d_out.block(i);
    const std::size_t n = out.cols();
    if (in.rows() != n) throw DimensionMismatch("d_in and d_out disagree on dim C_i");
    if (!(out * in).is_zero()) throw CompositionNotZero("d_out . d_in != 0 at degree " + std::to_string(i));

    auto H = HomologyQuotient::compute(F, n, in.columns(), out.rows(), out.columns());
    const std::size_t h = H.dim();

    // Basis of C_i: boundaries, representatives, then unit vectors completing it.
    Echelon basis(F, n);
    std::vector<SparseVec> cols;
    for (const auto& b : in.columns())
        if (basis.insert(b)) cols.push_back(b);
    const std::size_t nb = cols.size();
    for (const auto& r : H.representatives()) {
        basis.insert(r);
        cols.push_back(r);
    }
    for (std::uint32_t j = 0; j < n && cols.size() < n; ++j)
        if (basis.insert(unit_vector(j))) cols.push_back(unit_vector(j));
    FieldMatrix Q = FieldMatrix::from_columns(F, n, cols);

    FieldMatrix P(F, h, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Scalar> ej(n, 0);
        ej[j] = 1;
        auto x = solve_preimage(Q, ej);
        for (std::size_t c = 0; c < h; ++c) P(c, j) = x[nb + c];
    }
    return {h, FieldMatrix::from_columns(F, n, H.representatives()), std::move(P)};
}

}  // namespace klab

#endif
