#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobstab/frobenius.hpp"
#include "frobstab/localcoh.hpp"
#include "frobstab/semilinear.hpp"

namespace frobstab {

struct StabilityOptions {
  unsigned e_max = 6;
  unsigned window = 2;
  std::uint64_t t_max = 8;
  std::uint64_t socle_t_max = 3;
  std::uint64_t combo_cap = 256;
  std::uint64_t deg_bound = 12;
  std::uint64_t seed = 0;
};

/// C_e = (I^{[q]} + J : x^q), e = 0, 1, ...
struct ChainReport {
  std::vector<Ideal> ideals;
  Ideal limit;
  bool stabilized = false;
  /// the chain reached the unit ideal, so x lies in the Frobenius closure of I
  bool reached_unit = false;
  /// descent C_{e+1} subset C_e was checked (F-injective and CM rings only)
  bool descent_checked = false;
  bool descending_verified = false;
};
std::string status_string(const ChainReport& c);

/// I is an ideal of the ambient polynomial ring; its generators are raised
/// to the q-th power and the relations of R are added. Stops after `window`
/// consecutive equal ideals or at the unit ideal. A chain that is not
/// stabilized carries its last element as an upper bound only.
/// check_descent: verify C_{e+1} subset C_e and throw Inconsistency otherwise.
ChainReport i_of_x(const GradedRing& R, const Ideal& I, const Polynomial& x, unsigned e_max, unsigned window,
                   bool check_descent);

/// F-ann of a nonzero class, as i_of_x at the class level.
ChainReport f_ann(const GradedRing& R, const CohClass& eta, unsigned e_max, unsigned window, bool check_descent);

struct FInjectivity {
  bool value = false;
  ClosureStatus status = ClosureStatus::BudgetExhausted;
  /// element of (sop)^F outside (sop) when not F-injective
  std::optional<Polynomial> witness;
};
/// The sop ideal is Frobenius closed. CM rings only.
FInjectivity is_f_injective_cm(const GradedRing& R, const StabilityOptions& opts = {});

struct CertifiedStability {
  bool value = false;
  std::size_t stable_dim = 0;
  Certainty status = Certainty::Heuristic;
  bool piece_stabilized = false;
  std::uint64_t level = 0;
  std::size_t carrier_dim = 0;
  std::optional<SemilinearOperator> op;
  /// stable-part basis vectors re-expressed as classes at the carrier level
  std::vector<CohClass> stable_classes;
};
CertifiedStability is_f_stable_certified(const GradedRing& R, const StabilityOptions& opts = {});

struct SocleCandidate {
  std::uint64_t t;
  Polynomial u;
  ChainReport chain;
};

struct SocleSearch {
  bool value = false;
  std::vector<SocleCandidate> candidates;
  /// every combination at every level was tried
  bool complete = true;
  /// every chain that was run stabilized or reached the unit ideal
  bool all_chains_settled = true;
  std::size_t chains_run = 0;
  std::vector<std::string> warnings;
};
SocleSearch is_f_stable_socle_search(const GradedRing& R, bool f_injective, const StabilityOptions& opts = {});

struct StabilityReport {
  FInjectivity f_injective;
  CertifiedStability certified;
  SocleSearch heuristic;
  bool agreement = false;
};
/// Runs both routes. When R is CM and F-injective, the carrier stabilized,
/// and the socle search was complete with every chain settled, a
/// disagreement throws Inconsistency.
StabilityReport f_stability(GradedRing& R, const StabilityOptions& opts = {});

struct GammaSample {
  std::vector<Ideal> ideals;
  std::vector<CohClass> witnesses;
  std::size_t classes_sampled = 0;
  std::size_t unsettled = 0;
  std::size_t radical_checks = 0;
  std::size_t violations = 0;
};
/// Stabilized F-annihilator limits over socle classes, monomial classes and
/// random numerators at levels t <= socle_t_max. Requires F-injective CM R.
GammaSample gamma_sample(const GradedRing& R, std::size_t random_samples, const StabilityOptions& opts = {});

struct BCandidate {
  Ideal prime;
  CohClass witness;
};
/// Stabilized proper limits that pass primality spot-checks. The search is
/// not exhaustive.
std::vector<BCandidate> b_set_approx(const GradedRing& R, const StabilityOptions& opts = {});

struct SinghWaltherReport {
  std::size_t components = 0;
  std::size_t formula = 0;
  bool agree = false;
};
/// d = 1 and CM required. minimal_primes are validated: each contains the
/// relations, and their intersection has the radical of the relations.
SinghWaltherReport singh_walther_check(const GradedRing& R, const std::vector<Ideal>& minimal_primes,
                                       std::size_t stable_dim);

}  // namespace frobstab
