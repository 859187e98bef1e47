#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "frobstab/ratfun.hpp"

namespace frobstab {

/// k[y]/(f) for a monic f of degree n over k = F_p(u, v). Elements are
/// coordinate vectors in the basis 1, y, ..., y^{n-1}.
class FiniteExtension {
 public:
  using Element = std::vector<RationalFunction>;

  /// low holds c_0..c_{n-1} of f = y^n + c_{n-1} y^{n-1} + ... + c_0.
  FiniteExtension(RingPtr base, std::vector<RationalFunction> low);

  const RingPtr& base() const { return base_; }
  std::uint32_t characteristic() const;
  std::size_t degree() const { return low_.size(); }
  const std::vector<RationalFunction>& modulus_low() const { return low_; }
  std::string modulus_string() const;
  std::vector<std::string> basis_names() const;

  Element zero() const;
  Element one() const;
  Element basis(std::size_t j) const;
  Element from_scalar(const RationalFunction& c) const;
  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, std::uint64_t k) const;
  Element scale(const RationalFunction& c, const Element& a) const;
  bool is_zero(const Element& a) const;

 private:
  RingPtr base_;
  std::vector<RationalFunction> low_;
};

/// L = k[y]/(y^{2p} + u y^p - v). InputError unless p is a prime <= 7.
FiniteExtension build_example_extension(std::uint32_t p);

/// Column j is (y^j)^p in the power basis; result is indexed [row][column].
std::vector<std::vector<RationalFunction>> p_power_matrix(const FiniteExtension& L);

/// Nonzero a with sum a_i b_i^p = 0 in L and a_{certificate_index} outside
/// k^p. The element sum a_i^{1/p} (x) b_i of k^{1/p} (x)_k L is then nonzero
/// with zero p-th power.
struct TensorNilpotentWitness {
  std::vector<RationalFunction> relation;
  std::vector<std::string> basis;
  std::size_t certificate_index = 0;
};

std::optional<TensorNilpotentWitness> find_nilpotent_in_tensor(const FiniteExtension& L);

/// Recomputes sum a_i b_i^p and the p-th power test.
bool verify_witness(const FiniteExtension& L, const TensorNilpotentWitness& w);

nlohmann::ordered_json to_json(const TensorNilpotentWitness& w);

}  // namespace frobstab
