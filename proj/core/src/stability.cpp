#include "frobstab/stability.hpp"

#include <numeric>
#include <random>

#include "frobstab/error.hpp"

namespace frobstab {

std::string status_string(const ChainReport& c) { return c.stabilized ? "stabilized" : "not-stabilized"; }

namespace {

Ideal sop_ideal(const GradedRing& R, std::uint64_t t) {
  std::vector<Polynomial> gens;
  for (const auto& x : R.sop()) gens.push_back(x.pow(t));
  return Ideal(R.ring(), gens);
}

bool is_maximal_ideal(const Ideal& I) { return ideal_equal(I, maximal_ideal(I.ring())); }

// Nonzero F_p-combinations of reps with first nonzero coefficient 1
// (scalar multiples share their annihilators).
std::vector<Polynomial> normalized_combinations(const std::vector<Polynomial>& reps, std::uint32_t p) {
  std::vector<Polynomial> out;
  const std::size_t s = reps.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < s; ++i) total *= p;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t x = code;
    std::vector<std::uint32_t> c(s);
    for (auto& ci : c) {
      ci = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    std::size_t first = 0;
    while (c[first] == 0) ++first;
    if (c[first] != 1) continue;
    Polynomial f(reps.front().ring());
    for (std::size_t i = 0; i < s; ++i)
      if (c[i]) f += reps[i].scaled(c[i]);
    out.push_back(std::move(f));
  }
  return out;
}

bool contains_ideal(const std::vector<Ideal>& list, const Ideal& I) {
  for (const auto& J : list)
    if (ideal_equal(I, J)) return true;
  return false;
}

}  // namespace

ChainReport i_of_x(const GradedRing& R, const Ideal& I, const Polynomial& x, unsigned e_max, unsigned window,
                   bool check_descent) {
  if (window < 1) throw InputError("i_of_x: window must be >= 1");
  ChainReport out{{}, Ideal::unit(R.ring())};
  out.descent_checked = check_descent;
  out.descending_verified = check_descent;
  unsigned streak = 0;
  for (unsigned e = 0; e <= e_max; ++e) {
    const Ideal bracket = bracket_power(I, e, R.relations());
    Ideal C = colon_ideal(bracket, frobenius_poly(x, e));
    if (check_descent && !out.ideals.empty() && !ideal_contains(out.ideals.back(), C))
      throw Inconsistency("I(x) chain not descending at e = " + std::to_string(e) + " for x = " + x.to_string());
    const bool unit = is_unit_ideal(C);
    if (!out.ideals.empty() && ideal_equal(C, out.ideals.back())) ++streak;
    else streak = 0;
    out.ideals.push_back(std::move(C));
    if (unit) {
      out.reached_unit = true;
      out.stabilized = true;
      break;
    }
    if (streak >= window) {
      out.stabilized = true;
      break;
    }
  }
  out.limit = out.ideals.back();
  return out;
}

ChainReport f_ann(const GradedRing& R, const CohClass& eta, unsigned e_max, unsigned window, bool check_descent) {
  if (class_is_zero(R, eta).first) throw PreconditionError("f_ann: zero class");
  return i_of_x(R, sop_ideal(R, eta.level), eta.numerator, e_max, window, check_descent);
}

FInjectivity is_f_injective_cm(const GradedRing& R, const StabilityOptions& opts) {
  if (R.cm_status() != CmStatus::Verified) throw PreconditionError("is_f_injective_cm: CM required");
  const ClosureReport rep = frobenius_closure(sop_ideal(R, 1), R.relations(), {opts.e_max, opts.window});
  FInjectivity out;
  out.witness = closure_witness(rep);
  out.value = !out.witness.has_value();
  out.status = rep.status;
  return out;
}

CertifiedStability is_f_stable_certified(const GradedRing& R, const StabilityOptions& opts) {
  CertifiedStability out;
  if (R.cm_status() != CmStatus::Verified) throw PreconditionError("is_f_stable_certified: CM required");
  const DegreeZeroPiece V = degree_zero_piece(R, opts.t_max, opts.window);
  out.piece_stabilized = V.stabilized;
  out.level = V.level;
  out.carrier_dim = V.basis.size();
  if (!V.stabilized) return out;
  SemilinearOperator op = frobenius_matrix(R, V);
  const Subspace s = stable_part(op);
  out.stable_dim = s.dim();
  out.value = s.dim() > 0;
  out.status = Certainty::Certified;
  for (const auto& b : s.basis()) out.stable_classes.push_back(class_from_vector(R, V, b));
  out.op = std::move(op);
  return out;
}

SocleSearch is_f_stable_socle_search(const GradedRing& R, bool f_injective, const StabilityOptions& opts) {
  SocleSearch out;
  if (!f_injective) out.warnings.push_back("ring not verified F-injective; candidates are not certified");
  if (R.cm_status() != CmStatus::Verified) out.warnings.push_back("ring not verified CM");
  const std::uint32_t p = R.characteristic();
  const bool descent = f_injective && R.cm_status() == CmStatus::Verified;
  std::mt19937_64 rng(opts.seed);
  for (std::uint64_t t = 1; t <= opts.socle_t_max; ++t) {
    const auto reps = socle_of_truncation(R, t);
    if (reps.empty()) continue;
    std::vector<Polynomial> combos;
    std::uint64_t size = 1;
    bool fits = true;
    for (std::size_t i = 0; i < reps.size() && fits; ++i) {
      size *= p;
      fits = size <= opts.combo_cap;
    }
    if (fits) {
      combos = normalized_combinations(reps, p);
    } else {
      out.complete = false;
      out.warnings.push_back("socle at level " + std::to_string(t) +
                             " too large for full enumeration; basis plus 64 random combinations");
      combos = reps;
      std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
      for (int k = 0; k < 64; ++k) {
        Polynomial f(R.ring());
        for (const auto& r : reps) f += r.scaled(coef(rng));
        if (!f.is_zero()) combos.push_back(std::move(f));
      }
    }
    // u outside the Frobenius closure of I_t
    const ClosureReport closure = frobenius_closure(sop_ideal(R, t), R.relations(), {opts.e_max, opts.window});
    for (const auto& u : combos) {
      ChainReport chain = i_of_x(R, sop_ideal(R, t), u, opts.e_max, opts.window, descent);
      ++out.chains_run;
      if (!chain.stabilized) out.all_chains_settled = false;
      if (chain.stabilized && !chain.reached_unit && is_maximal_ideal(chain.limit) &&
          !ideal_member(u, closure.closure))
        out.candidates.push_back({t, u, std::move(chain)});
    }
  }
  out.value = !out.candidates.empty();
  return out;
}

StabilityReport f_stability(GradedRing& R, const StabilityOptions& opts) {
  if (R.cm_status() == CmStatus::Unchecked) R.verify_cm();
  if (R.cm_status() != CmStatus::Verified) throw PreconditionError("f_stability: ring is not CM");
  StabilityReport out;
  out.f_injective = is_f_injective_cm(R, opts);
  out.certified = is_f_stable_certified(R, opts);
  out.heuristic = is_f_stable_socle_search(R, out.f_injective.value, opts);
  out.agreement = out.certified.value == out.heuristic.value;
  const bool all_settled = out.certified.status == Certainty::Certified && out.heuristic.complete &&
                           out.heuristic.all_chains_settled && out.f_injective.value;
  if (!out.agreement && all_settled)
    throw Inconsistency("F-stability routes disagree: stable dim " + std::to_string(out.certified.stable_dim) +
                        ", socle candidates " + std::to_string(out.heuristic.candidates.size()));
  return out;
}

GammaSample gamma_sample(const GradedRing& R, std::size_t random_samples, const StabilityOptions& opts) {
  if (R.cm_status() != CmStatus::Verified) throw PreconditionError("gamma_sample: CM required");
  GammaSample out;
  std::mt19937_64 rng(opts.seed);
  std::vector<CohClass> classes;
  for (std::uint64_t t = 1; t <= opts.socle_t_max; ++t) {
    const Ideal It = truncation_ideal(R, t);
    for (const auto& s : socle_of_truncation(R, t)) classes.push_back(make_class(R, t, s));
    const auto B = staircase(It, R.degrees());
    for (const auto& m : B.monomials)
      if (m.degree() <= opts.deg_bound) classes.push_back(make_class(R, t, Polynomial::monomial(R.ring(), 1, m)));
    std::uniform_int_distribution<std::uint64_t> coef(0, R.characteristic() - 1);
    for (std::size_t k = 0; k < random_samples; ++k) {
      std::vector<Coeff> c(B.size());
      for (auto& x : c) x = static_cast<Coeff>(coef(rng));
      classes.push_back(make_class(R, t, from_coordinates(R.ring(), c, B)));
    }
  }
  for (const auto& eta : classes) {
    if (eta.numerator.is_zero()) continue;
    ++out.classes_sampled;
    const ChainReport chain = f_ann(R, eta, opts.e_max, opts.window, true);
    if (!chain.stabilized) {
      ++out.unsettled;
      continue;
    }
    if (!contains_ideal(out.ideals, chain.limit)) {
      out.ideals.push_back(chain.limit);
      out.witnesses.push_back(eta);
    }
  }
  // radicality spot-checks: f in sqrt(J), or f^2 in J, must give f in J
  for (const auto& J : out.ideals) {
    if (is_unit_ideal(J)) continue;
    std::vector<Polynomial> probes;
    for (std::size_t i = 0; i < R.ring()->nvars(); ++i) probes.push_back(Polynomial::variable(R.ring(), i));
    for (int k = 0; k < 16; ++k) {
      std::vector<Term> terms;
      std::uniform_int_distribution<std::size_t> var(0, R.ring()->nvars() - 1);
      std::uniform_int_distribution<int> deg(1, 3);
      for (int j = 0; j < 3; ++j) {
        std::vector<std::uint32_t> e(R.ring()->nvars(), 0);
        for (int d = deg(rng); d > 0; --d) ++e[var(rng)];
        terms.push_back({1, Monomial(std::move(e))});
      }
      probes.emplace_back(R.ring(), std::move(terms));
    }
    for (const auto& f : probes) {
      if (f.is_zero()) continue;
      const bool in_radical = radical_member(f, J) || ideal_member(f * f, J);
      if (!in_radical) continue;
      ++out.radical_checks;
      if (!ideal_member(f, J)) ++out.violations;
    }
  }
  if (out.violations > 0)
    throw Inconsistency("gamma_sample: a stabilized F-annihilator is not radical");
  return out;
}

std::vector<BCandidate> b_set_approx(const GradedRing& R, const StabilityOptions& opts) {
  const GammaSample g = gamma_sample(R, 8, opts);
  std::vector<BCandidate> out;
  const std::size_t n = R.ring()->nvars();
  for (std::size_t i = 0; i < g.ideals.size(); ++i) {
    const Ideal& P = g.ideals[i];
    if (is_unit_ideal(P)) continue;
    bool prime = true;
    // x_i x_j in P forces x_i or x_j in P
    for (std::size_t a = 0; a < n && prime; ++a)
      for (std::size_t b = a; b < n && prime; ++b) {
        const Polynomial xa = Polynomial::variable(R.ring(), a), xb = Polynomial::variable(R.ring(), b);
        if (ideal_member(xa * xb, P) && !ideal_member(xa, P) && !ideal_member(xb, P)) prime = false;
      }
    // not an intersection of two strictly larger sampled ideals
    for (std::size_t a = 0; a < g.ideals.size() && prime; ++a)
      for (std::size_t b = a; b < g.ideals.size() && prime; ++b) {
        const Ideal& A = g.ideals[a];
        const Ideal& B = g.ideals[b];
        if (ideal_equal(A, P) || ideal_equal(B, P) || !ideal_contains(A, P) || !ideal_contains(B, P)) continue;
        if (ideal_equal(intersect(A, B), P)) prime = false;
      }
    if (prime) out.push_back({P, g.witnesses[i]});
  }
  return out;
}

SinghWaltherReport singh_walther_check(const GradedRing& R, const std::vector<Ideal>& minimal_primes,
                                       std::size_t stable_dim) {
  if (R.dim() != 1) throw PreconditionError("singh_walther_check: ring must have dimension 1");
  if (R.cm_status() != CmStatus::Verified) throw PreconditionError("singh_walther_check: CM required");
  if (minimal_primes.empty()) throw InputError("minimal_primes: empty list");
  for (const auto& P : minimal_primes) {
    if (!P.ring()->same_as(*R.ring())) throw ContextMismatch("minimal_primes: ring mismatch");
    if (!ideal_contains(P, R.relations()))
      throw InputError("minimal prime " + P.to_string() + " does not contain the relations");
  }
  Ideal meet = minimal_primes.front();
  for (std::size_t i = 1; i < minimal_primes.size(); ++i) meet = intersect(meet, minimal_primes[i]);
  for (const auto& g : meet.generators())
    if (!g.is_zero() && !radical_member(g, R.relations()))
      throw InputError("minimal primes: intersection is not contained in the radical of the relations");
  const std::size_t k = minimal_primes.size();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Ideal sum = minimal_primes[i] + minimal_primes[j];
      bool m_primary = true;
      for (std::size_t v = 0; v < R.ring()->nvars() && m_primary; ++v)
        m_primary = radical_member(Polynomial::variable(R.ring(), v), sum);
      if (!m_primary) parent[find(i)] = find(j);
    }
  SinghWaltherReport out;
  for (std::size_t i = 0; i < k; ++i) out.components += find(i) == i;
  out.formula = 1 + stable_dim;
  out.agree = out.components == out.formula;
  return out;
}

}  // namespace frobstab
