#pragma once

#include <cstdint>

namespace gradus {

using Scalar = std::uint32_t;

inline constexpr Scalar kDefaultPrime = 32003;

/// Arithmetic in Z/pZ for a prime p < 2^31. Values are kept reduced in [0, p).
class PrimeField {
 public:
  /// Throws InputError unless p is prime (trial division) and fits.
  explicit PrimeField(Scalar p = kDefaultPrime);

  Scalar modulus() const { return p_; }

  Scalar reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const;
  // a must be nonzero.
  Scalar inv(Scalar a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  Scalar p_;
};

bool is_prime(std::uint64_t n);

}  // namespace gradus
