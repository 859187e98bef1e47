#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "frobstab/polynomial.hpp"

namespace frobstab {

/// An ideal of F_p[vars] given by generators. The reduced Groebner basis is
/// computed on first use and shared between copies.
class Ideal {
 public:
  /// Zero generators are dropped; an all-zero list becomes the zero ideal
  /// with the single generator 0.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring);
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.size() == 1 && gens_[0].is_zero(); }

  /// Reduced Groebner basis under the ring order (monic, interreduced,
  /// ascending by leading monomial). Empty for the zero ideal.
  const std::vector<Polynomial>& groebner_basis() const;
  bool has_cached_basis() const;

  /// I + J
  Ideal operator+(const Ideal& o) const;
  Ideal with_generators(const std::vector<Polynomial>& extra) const;

  /// "(g1, g2, ...)"
  std::string to_string() const;
  std::vector<std::string> generator_strings() const;

 private:
  struct BasisSlot {
    std::mutex mutex;
    std::optional<std::vector<Polynomial>> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<BasisSlot> slot_;
};

}  // namespace frobstab
