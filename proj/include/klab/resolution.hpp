#ifndef KLAB_RESOLUTION_HPP
#define KLAB_RESOLUTION_HPP

#include <climits>

#include "module.hpp"

namespace klab {

/// Semibasis element e of a semi-free module: d(e) is stored in local
/// coordinates of F_{degree-1}, its image under the augmentation in X.
struct Generator {
    std::string label;
    int degree;
    SparseVec boundary;
    SparseVec augmentation;
};

/// Minimal semi-free resolution F -> X built degree by degree. Generators of
/// degree <= final_degree() are final; beyond that nothing is claimed unless
/// the construction terminated (is_complete()).
class SemifreeResolution {
   public:
    using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (generator, algebra basis index)

    explicit SemifreeResolution(DGModule X) : X_(std::move(X)), A_(X_.algebra()) {}

    const DGModule& target() const noexcept { return X_; }
    const AlgebraPtr& algebra() const noexcept { return A_; }
    const PrimeField& field() const noexcept { return A_->field(); }
    const std::vector<Generator>& generators() const noexcept { return gens_; }
    int start_degree() const noexcept { return X_.lo(); }
    int stages() const noexcept { return stages_; }
    bool is_complete() const noexcept { return complete_; }
    /// Every generator of degree <= final_degree() is known.
    int final_degree() const noexcept { return complete_ ? INT_MAX : X_.lo() + stages_; }

    /// pd_A(X) when the resolution terminated (nullopt for X ~ 0 or unfinished).
    std::optional<int> projective_dimension() const {
        if (!complete_ || gens_.empty()) return std::nullopt;
        return gens_.back().degree;
    }

    std::size_t count_in_degree(int d) const {
        std::size_t c = 0;
        for (const auto& g : gens_) c += g.degree == d;
        return c;
    }

    // F as a graded vector space: F_n has basis a.e_g with |a| + |e_g| = n.
    std::size_t dim(int n) const {
        auto it = blocks_.find(n);
        return it == blocks_.end() ? 0 : it->second.size();
    }
    const std::vector<Entry>& block(int n) const {
        static const std::vector<Entry> empty;
        auto it = blocks_.find(n);
        return it == blocks_.end() ? empty : it->second;
    }
    std::uint32_t index(std::uint32_t g, std::size_t a) const { return pos_[g][a]; }
    int top_degree() const { return blocks_.empty() ? X_.lo() - 1 : blocks_.rbegin()->first; }

    /// d(a e_g) = d(a) e_g + (-1)^{|a|} a d(e_g), in local coordinates of F_{n-1}.
    SparseVec diff_column(int n, std::size_t j) const {
        const auto& F = field();
        const auto [g, a] = block(n)[j];
        SparseVec out;
        for (const auto& t : A_->diff(a)) out.push_back({pos_[g][t.index], t.coeff});
        const Scalar sign = F.sign(A_->degree(a));
        const auto& below = block(gens_[g].degree - 1);
        for (const auto& t : gens_[g].boundary) {
            const auto [h, b] = below[t.index];
            for (const auto& u : A_->product(a, b)) out.push_back({pos_[h][u.index], F.mul(sign, F.mul(t.coeff, u.coeff))});
        }
        normalize(F, out);
        return out;
    }

    /// a . (b e_g) = (ab) e_g, in local coordinates of F_{n+|a|}.
    SparseVec act(std::size_t a, int n, std::size_t j) const {
        const auto [g, b] = block(n)[j];
        SparseVec out;
        for (const auto& u : A_->product(a, b)) out.push_back({pos_[g][u.index], u.coeff});
        normalize(field(), out);
        return out;
    }

    /// epsilon(a e_g) = a . epsilon(e_g), as a global vector of X.
    SparseVec augment(int n, std::size_t j) const {
        const auto [g, a] = block(n)[j];
        return X_.act(unit_vector(a), gens_[g].augmentation);
    }

    /// Minimality: no d(e_g) has a component on a unit multiple of a generator.
    bool is_minimal() const {
        for (const auto& g : gens_)
            for (const auto& t : g.boundary)
                if (block(g.degree - 1)[t.index].second == A_->unit()) return false;
        return true;
    }

    /// The semi-free submodule spanned by generators of degree <= p, as a DG module.
    DGModule submodule_module(int p) const {
        const auto& F = field();
        ModuleData d{A_, {}, {}, {}};
        std::map<std::pair<int, std::size_t>, std::uint32_t> global;
        std::vector<std::pair<int, std::size_t>> where;
        for (const auto& [n, entries] : blocks_)
            for (std::size_t j = 0; j < entries.size(); ++j) {
                const auto [g, a] = entries[j];
                if (gens_[g].degree > p) continue;
                global[{n, j}] = static_cast<std::uint32_t>(d.basis.size());
                where.push_back({n, j});
                std::string l = a == A_->unit() ? gens_[g].label : A_->label(a) + "*" + gens_[g].label;
                d.basis.push_back({l, n});
            }
        const std::size_t m = d.basis.size();
        auto remap = [&](const SparseVec& v, int n) {
            SparseVec out;
            for (const auto& t : v) out.push_back({global.at({n, t.index}), t.coeff});
            normalize(F, out);
            return out;
        };
        for (const auto& [n, j] : where) d.diff.push_back(remap(diff_column(n, j), n - 1));
        d.action.assign(A_->dim() * m, {});
        for (std::size_t a = 0; a < A_->dim(); ++a)
            for (std::size_t i = 0; i < m; ++i) {
                const auto [n, j] = where[i];
                d.action[a * m + i] = remap(act(a, n, j), n + A_->degree(a));
            }
        return make_module(std::move(d));
    }

    /// Columns of the cone differential D(f, x) = (-d f, eps(f) + d x) on
    /// cone_n = F_{n-1} + X_n, landing in F_{n-2} + X_{n-1} (local coordinates).
    std::vector<SparseVec> cone_columns(int n) const {
        const auto& F = field();
        const std::size_t nf = dim(n - 2);
        const std::size_t xoff = X_.begin(n - 1);
        std::vector<SparseVec> cols;
        for (std::size_t j = 0; j < dim(n - 1); ++j) {
            SparseVec c = scaled(F, diff_column(n - 1, j), F.neg(1));
            for (const auto& t : augment(n - 1, j)) c.push_back({static_cast<std::uint32_t>(nf + t.index - xoff), t.coeff});
            cols.push_back(std::move(c));
        }
        for (std::size_t x = X_.begin(n); x < X_.end(n); ++x) {
            SparseVec c;
            for (const auto& t : X_.diff(x)) c.push_back({static_cast<std::uint32_t>(nf + t.index - xoff), t.coeff});
            cols.push_back(std::move(c));
        }
        return cols;
    }
    std::size_t cone_dim(int n) const { return dim(n - 1) + X_.dim(n); }

    /// Continue the construction until `stages` degrees past lo(X) are final.
    void extend_to(int stages) {
        const auto& F = field();
        const DGAlgebra& A = *A_;
        std::vector<std::size_t> m0;
        for (std::size_t i = A.begin(0); i < A.end(0); ++i)
            if (i != A.unit()) m0.push_back(i);
        while (!complete_ && next_ <= X_.lo() + stages) {
            const int d = next_;
            const std::size_t nf = dim(d - 1);
            auto Z = kernel_of_columns(F, cone_dim(d - 1), cone_columns(d));
            HomologyQuotient q(F, cone_dim(d));
            for (auto& b : cone_columns(d + 1)) q.add_relation(std::move(b));
            for (std::size_t a : m0)
                for (const auto& z : Z) q.add_relation(cone_act(a, d, z));
            for (auto& z : Z) q.add_cycle(std::move(z));

            std::size_t added = 0;
            for (const auto& rep : q.representatives()) {
                Generator g{"e" + std::to_string(d) + "_" + std::to_string(++added), d, {}, {}};
                for (const auto& t : rep) {
                    if (t.index < nf)
                        g.boundary.push_back({t.index, F.neg(t.coeff)});
                    else
                        g.augmentation.push_back({static_cast<std::uint32_t>(t.index - nf + X_.begin(d)), t.coeff});
                }
                add_generator(std::move(g));
            }
            if (added == 1) gens_.back().label = "e" + std::to_string(d);
            ++next_;
            stages_ = next_ - 1 - X_.lo();
            if (!added && acyclic_above(d)) complete_ = true;
        }
    }

   private:
    SparseVec cone_act(std::size_t a, int n, const SparseVec& z) const {
        const auto& F = field();
        const std::size_t nf = dim(n - 1);
        const std::size_t nf2 = dim(n - 1 + A_->degree(a));
        const std::size_t xoff = X_.begin(n), xoff2 = X_.begin(n + A_->degree(a));
        SparseVec out;
        for (const auto& t : z) {
            if (t.index < nf) {
                for (const auto& u : act(a, n - 1, t.index)) out.push_back({u.index, F.mul(t.coeff, u.coeff)});
            } else {
                for (const auto& u : X_.act(a, t.index - nf + xoff))
                    out.push_back({static_cast<std::uint32_t>(nf2 + u.index - xoff2), F.mul(t.coeff, u.coeff)});
            }
        }
        normalize(F, out);
        return out;
    }

    bool acyclic_above(int d) const {
        const int top = std::max(X_.hi(), top_degree() + 1);
        for (int n = d + 1; n <= top; ++n) {
            const std::size_t z = cone_dim(n) - rank_of_columns(field(), cone_dim(n - 1), cone_columns(n));
            if (z != rank_of_columns(field(), cone_dim(n), cone_columns(n + 1))) return false;
        }
        return true;
    }

    void add_generator(Generator g) {
        const auto id = static_cast<std::uint32_t>(gens_.size());
        pos_.emplace_back(A_->dim());
        for (std::size_t a = 0; a < A_->dim(); ++a) {
            auto& blk = blocks_[g.degree + A_->degree(a)];
            pos_[id][a] = static_cast<std::uint32_t>(blk.size());
            blk.push_back({id, static_cast<std::uint32_t>(a)});
        }
        gens_.push_back(std::move(g));
    }

    DGModule X_;
    AlgebraPtr A_;
    std::vector<Generator> gens_;
    std::map<int, std::vector<Entry>> blocks_;
    std::vector<std::vector<std::uint32_t>> pos_;
    int next_ = X_.lo();
    int stages_ = -1;
    bool complete_ = false;
};

/// Minimal semi-free resolution with generators final through degree lo(X) + N.
inline SemifreeResolution resolve(const DGModule& X, int N) {
    if (N < 0) throw ParameterOutOfRange("stage budget must be non-negative");
    SemifreeResolution r(X);
    r.extend_to(N);
    return r;
}

}  // namespace klab

#endif
