#include "frobstab/localcoh.hpp"

#include "frobstab/error.hpp"
#include "frobstab/linalg.hpp"

namespace frobstab {

std::string to_string(CmStatus s) {
  switch (s) {
    case CmStatus::Unchecked: return "unchecked";
    case CmStatus::Verified: return "verified";
    case CmStatus::Failed: return "failed";
  }
  return "unknown";
}

std::string to_string(Certainty c) { return c == Certainty::Certified ? "certified" : "heuristic"; }

GradedRing::GradedRing(RingPtr ring, std::vector<std::uint32_t> degrees, Ideal relations,
                       std::vector<Polynomial> sop)
    : ring_(std::move(ring)),
      degrees_(std::move(degrees)),
      relations_(std::move(relations)),
      sop_(std::move(sop)),
      sop_product_(Polynomial::constant(ring_, 1)) {
  if (degrees_.size() != ring_->nvars()) throw InputError("degrees: one positive weight per variable expected");
  for (auto d : degrees_)
    if (d == 0) throw InputError("degrees: weights must be positive");
  if (!relations_.ring()->same_as(*ring_)) throw ContextMismatch("relations: ring mismatch");
  for (const auto& g : relations_.generators())
    if (!homogeneous_degree(g, degrees_)) throw InputError("relation is not homogeneous: " + g.to_string());
  if (sop_.empty() && ring_->nvars() > 0 && !is_artinian(relations_))
    throw InputError("sop: empty system of parameters for a non-Artinian ring");
  for (const auto& x : sop_) {
    if (!x.ring()->same_as(*ring_)) throw ContextMismatch("sop: ring mismatch");
    auto d = homogeneous_degree(x, degrees_);
    if (!d || x.is_zero()) throw InputError("sop element is not homogeneous: " + x.to_string());
    if (*d == 0) throw InputError("sop element has degree 0: " + x.to_string());
    sop_degrees_.push_back(*d);
    sop_product_ *= x;
  }
  const Ideal base = relations_.with_generators(sop_);
  if (is_unit_ideal(relations_)) throw InputError("relations generate the unit ideal");
  if (!is_artinian(base)) throw InputError("sop: R/(J + sop) is not finite-dimensional");
}

std::uint64_t GradedRing::sop_degree_sum() const {
  std::uint64_t s = 0;
  for (auto d : sop_degrees_) s += d;
  return s;
}

const CmCheck& GradedRing::verify_cm() {
  cm_ = check_cm(*this);
  return cm_;
}

CmCheck check_cm(const GradedRing& R) {
  CmCheck out;
  Ideal current = R.relations();
  for (std::size_t k = 0; k < R.sop().size(); ++k) {
    const Ideal colon = colon_ideal(current, R.sop()[k]);
    for (const auto& g : colon.groebner_basis()) {
      if (!ideal_member(g, current)) {
        out.status = CmStatus::Failed;
        out.failed_at = k;
        out.witness = normal_form(g, current);
        return out;
      }
    }
    current = current.with_generators({R.sop()[k]});
  }
  out.status = CmStatus::Verified;
  return out;
}

Ideal truncation_ideal(const GradedRing& R, std::uint64_t t) {
  if (t < 1) throw PreconditionError("truncation level must be >= 1");
  if (t > (1u << 30)) throw ResourceLimit("truncation level too large");
  std::vector<Polynomial> gens;
  for (const auto& x : R.sop()) gens.push_back(x.pow(t));
  return R.relations().with_generators(gens);
}

CohClass make_class(const GradedRing& R, std::uint64_t t, const Polynomial& z) {
  return {t, normal_form(z, truncation_ideal(R, t))};
}

CohClass lift_class(const GradedRing& R, const CohClass& eta, std::uint64_t l) {
  if (l < eta.level) throw PreconditionError("lift_class: target level below the class level");
  if (l == eta.level) return eta;
  return make_class(R, l, eta.numerator * R.sop_product().pow(l - eta.level));
}

CohClass frobenius_on_class(const GradedRing& R, const CohClass& eta) {
  return make_class(R, eta.level * R.characteristic(), frobenius_poly(eta.numerator, 1));
}

std::optional<std::int64_t> class_degree(const GradedRing& R, const CohClass& eta) {
  if (eta.numerator.is_zero()) return 0;
  auto d = homogeneous_degree(eta.numerator, R.degrees());
  if (!d) return std::nullopt;
  return static_cast<std::int64_t>(*d) - static_cast<std::int64_t>(eta.level * R.sop_degree_sum());
}

std::pair<bool, Certainty> class_is_zero(const GradedRing& R, const CohClass& eta, unsigned s_max) {
  const bool zero_here = ideal_member(eta.numerator, truncation_ideal(R, eta.level));
  if (R.cm_status() == CmStatus::Verified) return {zero_here, Certainty::Certified};
  if (zero_here) return {true, Certainty::Certified};
  for (unsigned s = 1; s <= s_max; ++s)
    if (lift_class(R, eta, eta.level + s).numerator.is_zero()) return {true, Certainty::Heuristic};
  return {false, Certainty::Heuristic};
}

std::pair<bool, Certainty> classes_equal(const GradedRing& R, const CohClass& a, const CohClass& b) {
  const std::uint64_t l = std::max(a.level, b.level);
  const CohClass la = lift_class(R, a, l), lb = lift_class(R, b, l);
  return class_is_zero(R, {l, la.numerator - lb.numerator});
}

std::vector<Polynomial> socle_of_truncation(const GradedRing& R, std::uint64_t t) {
  const Ideal I = truncation_ideal(R, t);
  const auto m = maximal_ideal(R.ring());
  return socle_basis(I, m.generators());
}

namespace {

StaircaseBasis level_basis(const GradedRing& R, std::uint64_t t) {
  return staircase(truncation_ideal(R, t), R.degrees(), t * R.sop_degree_sum());
}

// rows = images of the level-t basis at level t + s, as coordinate rows
linalg::Rows transition(const GradedRing& R, const StaircaseBasis& from, std::uint64_t t, const StaircaseBasis& to,
                        std::uint64_t s) {
  const Ideal target = truncation_ideal(R, t + s);
  const Polynomial x = R.sop_product().pow(s);
  linalg::Rows rows;
  for (const auto& m : from.monomials) {
    const Polynomial img = normal_form(x.mul_term(1, m), target);
    auto c = coordinates(img, to);
    rows.emplace_back(c.begin(), c.end());
  }
  return rows;
}

}  // namespace

DegreeZeroPiece degree_zero_piece(const GradedRing& R, std::uint64_t t_max, unsigned window) {
  if (R.cm_status() != CmStatus::Verified)
    throw PreconditionError("degree_zero_piece: ring must be CM-verified");
  if (t_max < 1 || window < 1) throw InputError("degree_zero_piece: t_max and window must be >= 1");
  DegreeZeroPiece V;
  std::vector<StaircaseBasis> bases{level_basis(R, 1)};
  V.dims.push_back(bases[0].size());
  unsigned streak = 0;
  for (std::uint64_t t = 1; t < t_max; ++t) {
    bases.push_back(level_basis(R, t + 1));
    const auto& from = bases[t - 1];
    const auto& to = bases[t];
    V.dims.push_back(to.size());
    const std::size_t rk = linalg::rank(R.ring()->field(), transition(R, from, t, to, 1));
    V.transition_ranks.push_back(rk);
    if (rk != from.size())
      throw Inconsistency("degree-zero transition from level " + std::to_string(t) + " is not injective");
    streak = (rk == to.size()) ? streak + 1 : 0;
    if (streak >= window) {
      V.level = t + 1 - window;
      V.basis = bases[V.level - 1];
      V.stabilized = true;
      return V;
    }
  }
  V.level = t_max;
  V.basis = bases.back();
  V.stabilized = false;
  return V;
}

SemilinearOperator frobenius_matrix(const GradedRing& R, const DegreeZeroPiece& V) {
  if (!V.stabilized) throw PreconditionError("frobenius_matrix: unstabilized piece");
  const PrimeField& k = R.ring()->field();
  FiniteField fp(k);
  const std::size_t n = V.basis.size();
  if (n == 0) return SemilinearOperator(fp, {}, 1);
  const std::uint64_t t = V.level, pt = t * R.characteristic();
  const Ideal target = truncation_ideal(R, pt);
  const Polynomial x = R.sop_product().pow(pt - t);
  // lifted basis and Frobenius images share the level-pt degree-zero staircase
  const StaircaseBasis big = level_basis(R, pt);
  linalg::Rows lifted;
  for (const auto& m : V.basis.monomials) {
    auto c = coordinates(normal_form(x.mul_term(1, m), target), big);
    lifted.emplace_back(c.begin(), c.end());
  }
  Matrix a(n, Vector(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    const Polynomial img = normal_form(Polynomial::monomial(R.ring(), 1, V.basis.monomials[j].pow(R.characteristic())), target);
    auto c = coordinates(img, big);
    linalg::Row sol;
    if (!linalg::solve_in_span(k, lifted, linalg::Row(c.begin(), c.end()), sol))
      throw Inconsistency("frobenius_matrix: coordinate failure at basis element " + std::to_string(j));
    for (std::size_t i = 0; i < n; ++i) a[i][j] = sol[i];
  }
  return SemilinearOperator(fp, std::move(a), 1);
}

CohClass class_from_vector(const GradedRing& R, const DegreeZeroPiece& V, const Vector& v) {
  std::vector<Coeff> c(v.begin(), v.end());
  return make_class(R, V.level, from_coordinates(R.ring(), c, V.basis));
}

}  // namespace frobstab
