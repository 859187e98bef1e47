#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace frobstab {

/// Exponent vector x^a; the length is the variable count of the ambient ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// True iff this divides other.
  bool divides(const Monomial& other) const;
  /// Disjoint supports.
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; caller guarantees o divides *this.
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial pow(std::uint64_t k) const;

  std::uint64_t weighted_degree(std::span<const std::uint32_t> weights) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  std::size_t hash() const;

 private:
  void recompute_degree();

  std::vector<std::uint32_t> exps_;
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Term orders. Block(k) is grevlex on the first k variables, ties broken by
/// grevlex on the rest: an elimination order for the first block.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, 0); }
  static MonomialOrder block(std::size_t front) { return MonomialOrder(Kind::Block, front); }

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }

  /// <0, 0, >0 as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && block_ == o.block_; }
  std::string name() const;

 private:
  MonomialOrder(Kind k, std::size_t b) : kind_(k), block_(b) {}

  Kind kind_;
  std::size_t block_;
};

}  // namespace frobstab
