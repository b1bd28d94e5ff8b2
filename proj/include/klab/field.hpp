#ifndef KLAB_FIELD_HPP
#define KLAB_FIELD_HPP

#include <cstdint>

#include "error.hpp"

namespace klab {

using Scalar = std::uint32_t;

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

inline bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// The prime field F_p, 2 <= p < 2^31. Elements are canonical residues.
class PrimeField {
   public:
    explicit PrimeField(std::uint32_t p = kDefaultCharacteristic) : p_(p) {
        if (p >= (1u << 31) || !is_prime(p)) throw NotPrime("characteristic " + std::to_string(p) + " is not a prime below 2^31");
    }

    std::uint32_t characteristic() const noexcept { return p_; }

    Scalar add(Scalar a, Scalar b) const noexcept {
        Scalar s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const noexcept {
        return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Scalar pow(Scalar a, std::uint64_t e) const noexcept {
        Scalar r = 1 % p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    // a must be nonzero
    Scalar inv(Scalar a) const noexcept { return pow(a, p_ - 2); }

    Scalar from_int(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Scalar>(r < 0 ? r + p_ : r);
    }
    /// Symmetric lift into (-p/2, p/2], handy for printing signs.
    std::int64_t lift(Scalar a) const noexcept {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }
    /// (-1)^e as a field element.
    Scalar sign(long long e) const noexcept { return (e % 2 == 0) ? 1 % p_ : p_ - 1; }

    bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

   private:
    std::uint32_t p_;
};

}  // namespace klab

#endif
