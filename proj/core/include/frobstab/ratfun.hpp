#pragma once

#include <optional>
#include <string>

#include "frobstab/polynomial.hpp"

namespace frobstab {

/// gcd in F_p[vars], normalized monic (leading coefficient 1 under the ring
/// order); gcd(0, 0) = 0. Recursive content/primitive-part extraction with a
/// primitive pseudo-remainder sequence in the highest-index variable present.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

/// Element of the rational function field F_p(vars), stored as num/den with
/// gcd(num, den) = 1 and den monic. Equal values have identical forms.
class RationalFunction {
 public:
  /// Throws std::domain_error if den is zero.
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial num);

  static RationalFunction zero(const RingPtr& ring);
  static RationalFunction one(const RingPtr& ring);
  static RationalFunction constant(const RingPtr& ring, Coeff c);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  const RingPtr& ring() const { return num_.ring(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction inverse() const;
  RationalFunction pow(std::uint64_t k) const;

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::string to_string() const;

 private:
  struct Normalized {};
  RationalFunction(Polynomial num, Polynomial den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

/// Returns g with g^p = f when f lies in k^p (k = F_p(vars)): exactly when
/// every exponent of the normalized numerator and denominator is divisible
/// by p. Coefficients in F_p are their own p-th roots.
std::optional<RationalFunction> ratfun_pth_root(const RationalFunction& f);

}  // namespace frobstab
