#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobstab/groebner.hpp"

namespace frobstab {

/// I^{[p^e]} + ambient. The ambient ideal holds the relations of a quotient
/// ring; pass the zero ideal for a polynomial ring.
Ideal bracket_power(const Ideal& I, unsigned e);
Ideal bracket_power(const Ideal& I, unsigned e, const Ideal& ambient);

/// Smallest J with I subset J^{[p^e]} in the polynomial ring. Each generator
/// is split as sum_mu h_mu^p x^mu over exponents mu < p and the h_mu are
/// collected; repeated e times. On monomials the exponent map is floor(a/p^e).
Ideal frobenius_root(const Ideal& I, unsigned e);
Ideal frobenius_root(const Ideal& I, unsigned e, const Ideal& ambient);

/// {f : f^{p^e} in K}. On monomial ideals the exponent map is ceil(a/p^e).
/// With `lower` (an ideal whose p^e-th bracket power lies in K and whose
/// quotient is finite-dimensional) the answer is lower plus the kernel of the
/// F_p-linear map x -> x^{p^e} mod K on a staircase of lower. Otherwise an
/// elimination of x from K(x) + (y_i - x_i^{p^e}) is used.
Ideal frobenius_preimage(const Ideal& K, unsigned e);
Ideal frobenius_preimage(const Ideal& K, unsigned e, const Ideal& lower);
Ideal frobenius_preimage_by_elimination(const Ideal& K, unsigned e);

enum class ClosureStatus { CertifiedTrivial, StabilizedHeuristic, BudgetExhausted };
std::string to_string(ClosureStatus s);

struct ClosureOptions {
  unsigned e_max = 6;
  unsigned window = 2;
};

struct ClosureStep {
  unsigned e;
  Ideal ideal;
};

/// Chain J_e = {x : x^{p^e} in I^{[p^e]} + ambient}, J_0 = I + ambient.
struct ClosureReport {
  Ideal closure;
  ClosureStatus status;
  std::vector<ClosureStep> steps;
};

ClosureReport frobenius_closure(const Ideal& I, const Ideal& ambient, const ClosureOptions& opts = {});
ClosureReport frobenius_closure(const Ideal& I, const ClosureOptions& opts = {});

std::pair<bool, ClosureStatus> is_frobenius_closed(const Ideal& I, const Ideal& ambient,
                                                   const ClosureOptions& opts = {});

/// A generator of the closure outside I + ambient, if any.
std::optional<Polynomial> closure_witness(const ClosureReport& report);

}  // namespace frobstab
