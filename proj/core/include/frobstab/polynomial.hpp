#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobstab/monomial.hpp"
#include "frobstab/prime_field.hpp"

namespace frobstab {

/// The ambient polynomial ring F_p[vars] with a term order. Shared, immutable.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> vars,
           MonomialOrder order = MonomialOrder::grevlex());

  static std::shared_ptr<const PolyRing> make(std::uint32_t p, std::vector<std::string> vars,
                                              MonomialOrder order = MonomialOrder::grevlex());

  const PrimeField& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool same_as(const PolyRing& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Coeff coeff;
  Monomial mono;
};

/// Sparse polynomial: nonzero terms strictly descending under the ring order.
/// The empty term list is 0.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  /// Sorts, merges equal monomials and drops zero coefficients.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, Coeff c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Coeff c, Monomial m);

  const RingPtr& ring() const { return ring_; }
  const PrimeField& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Coeff leading_coeff() const { return terms_.front().coeff; }
  std::uint64_t total_degree() const;
  /// All terms but the leading one.
  Polynomial tail() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(Coeff c) const;
  Polynomial mul_term(Coeff c, const Monomial& m) const;
  /// this - c*m*g, computed by a single merge.
  Polynomial sub_mul_term(Coeff c, const Monomial& m, const Polynomial& g) const;
  Polynomial monic() const;
  Polynomial pow(std::uint64_t k) const;

  /// Rebuilds the polynomial in target, sending variable i to index_map[i].
  /// Coefficients are reinterpreted in target's field (same p required).
  Polynomial map_to(const RingPtr& target, std::span<const std::size_t> index_map) const;

  bool operator==(const Polynomial& o) const;
  std::string to_string() const;

 private:
  void check_context(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// f^{p^e}, computed termwise: sum c^{p^e} m^{p^e}.
Polynomial frobenius_poly(const Polynomial& f, unsigned e);

/// The common weighted degree of all terms, or nullopt if f is not
/// homogeneous. The zero polynomial is homogeneous of every degree; 0 is
/// returned for it.
std::optional<std::uint64_t> homogeneous_degree(const Polynomial& f,
                                                std::span<const std::uint32_t> weights);

/// Parses the polynomial grammar
///   expr   := ["+"|"-"] term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := primary ["^" integer]
///   primary:= integer | var | "(" expr ")"
/// Throws InputError with the byte offset on syntax errors or unknown names.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

/// Exact quotient f/g, or nullopt when g does not divide f. g nonzero.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// p^e as a 64-bit integer; throws ResourceLimit on overflow.
std::uint64_t prime_power(std::uint32_t p, unsigned e);

}  // namespace frobstab
