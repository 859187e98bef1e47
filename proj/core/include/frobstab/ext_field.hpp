#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobstab/prime_field.hpp"

namespace frobstab {

/// Dense univariate polynomial over F_p, little-endian coefficients, no
/// trailing zeros (the zero polynomial is empty).
using UniPoly = std::vector<Coeff>;

namespace unipoly {
void trim(UniPoly& f);
UniPoly add(const PrimeField& k, const UniPoly& f, const UniPoly& g);
UniPoly sub(const PrimeField& k, const UniPoly& f, const UniPoly& g);
UniPoly mul(const PrimeField& k, const UniPoly& f, const UniPoly& g);
/// Remainder of f modulo a nonzero g.
UniPoly mod(const PrimeField& k, UniPoly f, const UniPoly& g);
UniPoly gcd(const PrimeField& k, UniPoly f, UniPoly g);
UniPoly powmod(const PrimeField& k, UniPoly base, std::uint64_t e, const UniPoly& m);
}  // namespace unipoly

/// Element of F_{p^n}: coordinates in the power basis 1, t, ..., t^{n-1}.
using ExtElem = std::vector<Coeff>;

/// F_{p^n} = F_p[t]/(modulus) with an irreducible monic modulus.
class ExtField {
 public:
  /// Throws InputError if the modulus is not monic of degree n >= 1 or is
  /// reducible over F_p.
  ExtField(PrimeField base, UniPoly modulus);

  /// The lexicographically first monic irreducible of degree n.
  static ExtField standard(PrimeField base, unsigned n);

  const PrimeField& base() const { return base_; }
  unsigned degree() const { return n_; }
  const UniPoly& modulus() const { return modulus_; }
  std::uint64_t order() const;

  ExtElem zero() const { return ExtElem(n_, 0); }
  ExtElem one() const;
  ExtElem from_base(Coeff c) const;
  bool is_zero(const ExtElem& a) const;

  ExtElem add(const ExtElem& a, const ExtElem& b) const;
  ExtElem sub(const ExtElem& a, const ExtElem& b) const;
  ExtElem neg(const ExtElem& a) const;
  ExtElem mul(const ExtElem& a, const ExtElem& b) const;
  ExtElem pow(const ExtElem& a, std::uint64_t e) const;
  ExtElem inv(const ExtElem& a) const;
  /// a^{p^e}, by square-and-multiply.
  ExtElem frobenius(const ExtElem& a, unsigned e) const;

  /// Base-p packing of coordinates, for enumeration and tables.
  std::uint32_t encode(const ExtElem& a) const;
  ExtElem decode(std::uint32_t code) const;

 private:
  ExtElem reduce(UniPoly f) const;

  PrimeField base_;
  unsigned n_;
  UniPoly modulus_;
};

bool is_irreducible(const PrimeField& k, const UniPoly& f);

/// F_q with q = p^n <= 2^16 using integer codes and log/exp tables. Codes are
/// the base-p packed power-basis coordinates of the underlying ExtField, so
/// code c < p is the prime-field element c.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  explicit FiniteField(PrimeField base);
  explicit FiniteField(const ExtField& ext);
  static FiniteField make(std::uint32_t p, unsigned n);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint32_t order() const { return q_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (n_ == 1) return static_cast<Elem>(std::uint64_t{a} * b % p_);
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// a^{p^e}
  Elem frobenius(Elem a, unsigned e) const;
  /// The inverse of frobenius(., e); Frobenius is a bijection on F_q.
  Elem frobenius_inverse(Elem a, unsigned e) const;

  /// Embeds F_p's element c.
  Elem from_prime(Coeff c) const { return c % p_; }
  bool operator==(const FiniteField& o) const { return p_ == o.p_ && n_ == o.n_ && modulus_ == o.modulus_; }
  std::string name() const;

 private:
  void build_tables(const ExtField& ext);

  std::uint32_t p_;
  unsigned n_;
  std::uint32_t q_;
  UniPoly modulus_;
  std::vector<Elem> exp_;            // size 2(q-1)
  std::vector<std::uint32_t> log_;   // size q
};

}  // namespace frobstab
