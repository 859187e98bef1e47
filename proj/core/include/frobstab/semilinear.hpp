#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "frobstab/ext_field.hpp"
#include "frobstab/linalg.hpp"

namespace frobstab {

using Vector = std::vector<FiniteField::Elem>;
using Matrix = std::vector<Vector>;  // row-major, square

/// A subspace of F_q^n stored as its reduced row echelon basis, so equal
/// subspaces compare equal member-wise.
class Subspace {
 public:
  Subspace(FiniteField field, std::size_t ambient_dim, linalg::Rows generators = {});
  static Subspace full(const FiniteField& field, std::size_t n);
  static Subspace zero(const FiniteField& field, std::size_t n) { return Subspace(field, n); }

  const FiniteField& field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const linalg::Rows& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& o) const;
  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }

  /// Every vector of the subspace, by coefficient code. Requires q^dim <= limit.
  std::vector<Vector> elements(std::uint64_t limit = 1u << 20) const;

 private:
  FiniteField field_;
  std::size_t n_;
  linalg::Rows basis_;
};

/// phi(v) = A * v^{(p^e)}, coordinates raised to the p^e-th power.
class SemilinearOperator {
 public:
  SemilinearOperator(FiniteField field, Matrix a, unsigned twist = 1);

  const FiniteField& field() const { return field_; }
  std::size_t dim() const { return a_.size(); }
  const Matrix& matrix() const { return a_; }
  unsigned twist() const { return twist_; }

  Vector apply(const Vector& v) const;
  /// Matrix of phi^j: A * A^{(q)} * ... * A^{(q^{j-1})}, acting on v^{(q^j)}.
  Matrix power_matrix(unsigned j) const;
  bool is_injective() const;

  nlohmann::ordered_json to_json() const;
  static SemilinearOperator from_json(const nlohmann::json& j);

 private:
  FiniteField field_;
  Matrix a_;
  unsigned twist_;
};

/// Coordinatewise c -> c^{p^k}; k may exceed the field degree.
Vector frobenius_vector(const FiniteField& k, const Vector& v, std::uint64_t k_power);

Subspace image_span(const SemilinearOperator& op, const Subspace& W);
/// intersection over j of the spans of phi^j(M)
Subspace stable_part(const SemilinearOperator& op);
/// union over j of ker phi^j
Subspace nil_part(const SemilinearOperator& op);

struct FittingReport {
  bool pass = false;
  std::size_t dim = 0;
  std::size_t stable_dim = 0;
  std::size_t nil_dim = 0;
  bool injective_on_stable = false;
  bool image_is_stable = false;
  bool trivial_intersection = false;
  bool dims_add_up = false;
  std::vector<std::string> failures;
};
FittingReport fitting_check(const SemilinearOperator& op);

/// Chains for a subspace S (the socle in applications).
/// direct_dims[e] = dim(S cap span phi^e(S)), listed until the sequence of
/// spans phi^e(S) repeats; period_start/period give the eventual cycle.
/// limit_dim is the dimension of the limit of the descending chain
/// M'_0 = S, M'_{e+1} = S cap span phi(M'_e); this limit is the largest
/// phi-stable subspace of S when phi is injective.
struct SocleChainReport {
  std::vector<std::size_t> direct_dims;
  std::size_t period_start = 0;
  std::size_t period = 1;
  bool infinitely_often_nonzero = false;
  /// M_{e+1} subset span phi(M_e) for every listed e
  bool claim_holds = true;
  std::vector<std::size_t> recursive_dims;
  std::size_t limit_dim = 0;
};
SocleChainReport socle_chain(const SemilinearOperator& op, const Subspace& S);

/// A nonzero eta in S whose whole forward orbit stays in S. Enumerates S
/// when it has at most 2^16 elements (orbits tracked until they repeat);
/// larger S fall back to the recursive limit, which is exact for injective phi.
std::optional<Vector> find_stable_socle_element(const SemilinearOperator& op, const Subspace& S);

/// The same matrix and twist over F_{p^n}; op must be over F_p.
SemilinearOperator base_change(const SemilinearOperator& op, unsigned n);

}  // namespace frobstab
