#pragma once

#include <cstdint>
#include <string>

namespace frobstab {

using Coeff = std::uint32_t;

/// The prime field F_p for 2 <= p < 2^31. Elements are canonical residues
/// in [0, p); every product fits in 64 bits.
class PrimeField {
 public:
  /// Throws InputError when p is not a prime in range.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t characteristic() const { return p_; }

  Coeff reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  /// Frobenius on F_p is the identity, kept for symmetry with ExtField.
  Coeff frobenius(Coeff a, unsigned /*e*/) const { return a; }
  std::uint64_t order() const { return p_; }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace frobstab
