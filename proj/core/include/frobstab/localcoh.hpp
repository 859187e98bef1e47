#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobstab/groebner.hpp"
#include "frobstab/semilinear.hpp"

namespace frobstab {

enum class CmStatus { Unchecked, Verified, Failed };
std::string to_string(CmStatus s);

struct CmCheck {
  CmStatus status = CmStatus::Unchecked;
  /// index k of the first sop element that is a zero divisor modulo the earlier ones
  std::optional<std::size_t> failed_at;
  /// an element of (J + (x_1..x_{k-1}) : x_k) outside J + (x_1..x_{k-1})
  std::optional<Polynomial> witness;
};

/// R = F_p[vars]/J, graded by positive variable weights, with a homogeneous
/// system of parameters x_1..x_d. The constructor checks homogeneity and
/// that R/(J + sop) is finite-dimensional.
class GradedRing {
 public:
  GradedRing(RingPtr ring, std::vector<std::uint32_t> degrees, Ideal relations, std::vector<Polynomial> sop);

  const RingPtr& ring() const { return ring_; }
  const std::vector<std::uint32_t>& degrees() const { return degrees_; }
  const Ideal& relations() const { return relations_; }
  const std::vector<Polynomial>& sop() const { return sop_; }
  const std::vector<std::uint64_t>& sop_degrees() const { return sop_degrees_; }
  std::size_t dim() const { return sop_.size(); }
  /// sum of the sop degrees; a level-t class of degree 0 has numerator degree t times this
  std::uint64_t sop_degree_sum() const;
  /// x_1 * ... * x_d
  const Polynomial& sop_product() const { return sop_product_; }
  std::uint32_t characteristic() const { return ring_->field().characteristic(); }

  const CmCheck& cm() const { return cm_; }
  CmStatus cm_status() const { return cm_.status; }
  /// Runs check_cm and records the result.
  const CmCheck& verify_cm();

 private:
  RingPtr ring_;
  std::vector<std::uint32_t> degrees_;
  Ideal relations_;
  std::vector<Polynomial> sop_;
  std::vector<std::uint64_t> sop_degrees_;
  Polynomial sop_product_;
  CmCheck cm_;
};

/// Regular-sequence test: (J + (x_1..x_{k-1})) : x_k equals J + (x_1..x_{k-1}) for every k.
CmCheck check_cm(const GradedRing& R);

/// I_t = J + (x_1^t, ..., x_d^t)
Ideal truncation_ideal(const GradedRing& R, std::uint64_t t);

/// [z + I_t], z kept in normal form mod I_t.
struct CohClass {
  std::uint64_t level;
  Polynomial numerator;
};

CohClass make_class(const GradedRing& R, std::uint64_t t, const Polynomial& z);
/// [z x^{l-t} + I_l], x = x_1 ... x_d
CohClass lift_class(const GradedRing& R, const CohClass& eta, std::uint64_t l);
/// [z^p + I_{pt}]
CohClass frobenius_on_class(const GradedRing& R, const CohClass& eta);
/// Degree of the class in H^d, or nullopt when the numerator is not homogeneous.
std::optional<std::int64_t> class_degree(const GradedRing& R, const CohClass& eta);

enum class Certainty { Certified, Heuristic };
std::string to_string(Certainty c);
/// CM rings: z in I_t (the direct system is injective). Otherwise true as
/// soon as z x^s lies in I_{t+s} for some s <= s_max, with heuristic status.
std::pair<bool, Certainty> class_is_zero(const GradedRing& R, const CohClass& eta, unsigned s_max = 4);
/// Both classes lifted to a common level and compared.
std::pair<bool, Certainty> classes_equal(const GradedRing& R, const CohClass& a, const CohClass& b);

std::vector<Polynomial> socle_of_truncation(const GradedRing& R, std::uint64_t t);

/// Degree-zero part of R/I_t as t grows. basis holds the monomials of
/// weighted degree t * sop_degree_sum outside lt(I_t) at the chosen level.
struct DegreeZeroPiece {
  std::uint64_t level = 1;
  StaircaseBasis basis;
  bool stabilized = false;
  /// dims[i] is the dimension at level i + 1
  std::vector<std::size_t> dims;
  /// rank of the transition from level i + 1 to level i + 2
  std::vector<std::size_t> transition_ranks;
};

/// Walks t = 1, 2, ... up to t_max. Stops once `window` consecutive
/// transitions are bijective; level is then the first level of that run.
/// Requires a CM-verified ring; a non-injective transition is an inconsistency.
DegreeZeroPiece degree_zero_piece(const GradedRing& R, std::uint64_t t_max = 8, unsigned window = 2);

/// Frobenius on the degree-zero carrier: column j holds the coordinates of
/// F(b_j) (level p t) in the lift of the basis to level p t.
SemilinearOperator frobenius_matrix(const GradedRing& R, const DegreeZeroPiece& V);

/// The class sum_j v_j b_j at V.level.
CohClass class_from_vector(const GradedRing& R, const DegreeZeroPiece& V, const Vector& v);

}  // namespace frobstab
