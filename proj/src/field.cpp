#include "gradus/field.hpp"

#include <string>

#include "gradus/errors.hpp"

namespace gradus {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(Scalar p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw InputError("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const {
  Scalar result = 1 % p_;
  Scalar base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw DomainError("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

}  // namespace gradus
