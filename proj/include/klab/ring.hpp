#ifndef KLAB_RING_HPP
#define KLAB_RING_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"

namespace klab {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    int s = 0;
    for (int v : e) s += v;
    return s;
}

inline bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Artinian monomial quotient R = k[x_1..x_n]/I with I generated by monomials
/// of degree >= 2. The standard monomials form a basis of R.
class RingPresentation {
   public:
    RingPresentation(PrimeField F, std::vector<std::string> variables, std::vector<Exponents> generators)
        : F_(F), vars_(std::move(variables)), gens_(std::move(generators)) {
        validate();
        enumerate();
    }

    /// Parses monomials of the form  var('^'int)?('*'var('^'int)?)*.
    static RingPresentation parse(PrimeField F, std::vector<std::string> variables, const std::vector<std::string>& ideal) {
        std::vector<Exponents> gens;
        for (std::size_t g = 0; g < ideal.size(); ++g) {
            try {
                gens.push_back(parse_monomial(variables, ideal[g]));
            } catch (const ParseError& e) {
                throw ParseError("ideal[" + std::to_string(g) + "] \"" + ideal[g] + "\": " + strip_column(e.what()), e.column());
            }
        }
        return RingPresentation(F, std::move(variables), std::move(gens));
    }

    static Exponents parse_monomial(const std::vector<std::string>& variables, const std::string& s) {
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] == '+' || s[i] == '-') throw NonMonomialInput("only monomial generators are supported; found '" + std::string(1, s[i]) + "' at column " + std::to_string(i + 1) + " of \"" + s + "\"");
        Exponents e(variables.size(), 0);
        std::size_t pos = 0;
        auto fail = [&](const std::string& msg) { throw ParseError(msg, pos + 1); };
        if (s.empty()) fail("empty monomial");
        while (true) {
            if (pos >= s.size()) fail("expected a variable name");
            if (std::isdigit(static_cast<unsigned char>(s[pos]))) throw NonMonomialInput("coefficients are not supported (column " + std::to_string(pos + 1) + " of \"" + s + "\")");
            if (!(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) fail("expected a variable name");
            std::size_t start = pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
            std::string name = s.substr(start, pos - start);
            auto it = std::find(variables.begin(), variables.end(), name);
            if (it == variables.end()) {
                pos = start;
                fail("unknown variable '" + name + "'");
            }
            int power = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::size_t dstart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == dstart) fail("expected an exponent after '^'");
                power = std::stoi(s.substr(dstart, pos - dstart));
                if (power < 1) {
                    pos = dstart;
                    fail("exponent must be positive");
                }
            }
            e[it - variables.begin()] += power;
            if (pos == s.size()) break;
            if (s[pos] != '*') fail("expected '*' or end of monomial");
            ++pos;
        }
        return e;
    }

    const PrimeField& field() const noexcept { return F_; }
    const std::vector<std::string>& variables() const noexcept { return vars_; }
    const std::vector<Exponents>& generators() const noexcept { return gens_; }
    std::size_t num_variables() const noexcept { return vars_.size(); }
    int edim() const noexcept { return static_cast<int>(vars_.size()); }
    int depth() const noexcept { return 0; }
    int ecodepth() const noexcept { return edim() - depth(); }
    bool is_regular() const noexcept { return gens_.empty(); }

    const std::vector<Exponents>& standard_monomials() const noexcept { return basis_; }
    std::size_t dim() const noexcept { return basis_.size(); }

    /// Index of a standard monomial, or nullopt if the monomial lies in I.
    std::optional<std::size_t> index_of(const Exponents& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::string format(const Exponents& e) const {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!s.empty()) s += '*';
            s += vars_[i];
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }

    std::vector<std::string> ideal_strings() const {
        std::vector<std::string> out;
        for (const auto& g : gens_) out.push_back(format(g));
        return out;
    }

   private:
    static std::string strip_column(const std::string& what) {
        auto p = what.rfind(" (column ");
        return p == std::string::npos ? what : what.substr(0, p);
    }

    void validate() const {
        const std::size_t n = vars_.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (vars_[i] == vars_[j]) throw InvalidRing("duplicate variable '" + vars_[i] + "'");
        for (const auto& g : gens_) {
            if (g.size() != n) throw InvalidRing("generator has wrong number of exponents");
            if (total_degree(g) < 2) throw InvalidRing("generator " + format(g) + " has degree < 2");
        }
        for (std::size_t i = 0; i < gens_.size(); ++i)
            for (std::size_t j = 0; j < gens_.size(); ++j)
                if (i != j && divides(gens_[i], gens_[j])) throw InvalidRing("generators are not minimal: " + format(gens_[i]) + " divides " + format(gens_[j]));
        for (std::size_t v = 0; v < n; ++v)
            if (!pure_power(v)) throw InvalidRing("ideal is not primary to the maximal ideal: no pure power of " + vars_[v]);
    }

    std::optional<int> pure_power(std::size_t v) const {
        std::optional<int> best;
        for (const auto& g : gens_) {
            bool pure = true;
            for (std::size_t i = 0; i < g.size(); ++i)
                if (i != v && g[i]) pure = false;
            if (pure && g[v] > 0 && (!best || g[v] < *best)) best = g[v];
        }
        return best;
    }

    void enumerate() {
        const std::size_t n = vars_.size();
        std::vector<int> bound(n);
        for (std::size_t v = 0; v < n; ++v) bound[v] = *pure_power(v);
        Exponents e(n, 0);
        std::vector<Exponents> all;
        while (true) {
            bool in_ideal = false;
            for (const auto& g : gens_)
                if (divides(g, e)) in_ideal = true;
            if (!in_ideal) all.push_back(e);
            std::size_t i = 0;
            while (i < n && ++e[i] >= bound[i]) e[i++] = 0;
            if (i == n) break;
        }
        std::sort(all.begin(), all.end(), [](const Exponents& a, const Exponents& b) {
            int da = total_degree(a), db = total_degree(b);
            if (da != db) return da < db;
            return a > b;
        });
        basis_ = std::move(all);
        for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
    }

    PrimeField F_;
    std::vector<std::string> vars_;
    std::vector<Exponents> gens_;
    std::vector<Exponents> basis_;
    std::map<Exponents, std::size_t> index_;
};

}  // namespace klab

#endif
