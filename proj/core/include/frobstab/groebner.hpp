#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frobstab/ideal.hpp"

namespace frobstab {

/// Caps on a single Buchberger run. Exceeding either throws ResourceLimit.
/// The degree cap applies to S-pair lcms and is raised to four times the
/// largest input degree, so large Frobenius powers of small inputs are not
/// refused outright.
struct GroebnerOptions {
  std::size_t max_pairs = 100000;
  std::uint64_t max_degree = 64;
};

GroebnerOptions groebner_options();
void set_groebner_options(const GroebnerOptions& opts);

/// Buchberger's algorithm with the Gebauer-Moeller pair update (coprime and
/// chain criteria) and the normal selection strategy. Returns the reduced
/// basis, ascending by leading monomial.
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const GroebnerOptions& opts);

/// Full reduction of f by a list of polynomials (not necessarily a basis).
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors);

Polynomial normal_form(const Polynomial& f, const Ideal& I);
bool ideal_member(const Polynomial& f, const Ideal& I);
/// J subset of I
bool ideal_contains(const Ideal& I, const Ideal& J);
bool ideal_equal(const Ideal& I, const Ideal& J);
bool is_unit_ideal(const Ideal& I);

/// (I : f) = {g : g f in I}, via I cap (f) and exact division by f.
Ideal colon_ideal(const Ideal& I, const Polynomial& f);
/// (I : J) as the intersection of (I : g) over generators g of J.
Ideal colon_ideal(const Ideal& I, const Ideal& J);

/// I cap J by eliminating t from t*I + (1 - t)*J.
Ideal intersect(const Ideal& I, const Ideal& J);

/// I cap F_p[remaining vars], returned in the ring of I.
Ideal eliminate(const Ideal& I, std::span<const std::string> front_vars);

/// f in sqrt(I), by testing 1 in I + (1 - y f) with a fresh variable y.
bool radical_member(const Polynomial& f, const Ideal& I);

/// Every variable has a pure power among the leading monomials.
bool is_artinian(const Ideal& I);

/// Monomials outside the leading-term ideal, ascending under the order.
/// Without a degree the quotient must be finite-dimensional (InputError
/// "quotient not finite-dimensional" otherwise).
struct StaircaseBasis {
  std::vector<Monomial> monomials;
  std::size_t size() const { return monomials.size(); }
};
StaircaseBasis staircase(const Ideal& I, std::span<const std::uint32_t> weights,
                         std::optional<std::uint64_t> degree = std::nullopt);

/// Coordinates of a normal form in a staircase basis. Throws Inconsistency
/// when a term of nf is not a basis monomial.
std::vector<Coeff> coordinates(const Polynomial& nf, const StaircaseBasis& basis);
Polynomial from_coordinates(const RingPtr& ring, std::span<const Coeff> coords,
                            const StaircaseBasis& basis);

/// Representatives (in normal form) of a basis of (I : m)/I, m generated by
/// maximal_gens. Requires R/I finite-dimensional.
std::vector<Polynomial> socle_basis(const Ideal& I, std::span<const Polynomial> maximal_gens);

/// The ideal generated by all variables.
Ideal maximal_ideal(const RingPtr& ring);

}  // namespace frobstab
