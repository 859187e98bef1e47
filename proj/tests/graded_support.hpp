#pragma once

#include "frobstab/localcoh.hpp"
#include "test_support.hpp"

namespace frobstab::testing {

inline GradedRing graded(std::uint32_t p, std::vector<std::string> vars, std::vector<std::uint32_t> degrees,
                         const std::vector<std::string>& rels, const std::vector<std::string>& sop,
                         bool verify = true) {
  auto r = ring(p, std::move(vars));
  std::vector<Polynomial> s;
  for (const auto& x : sop) s.push_back(P(r, x));
  GradedRing R(r, std::move(degrees), rels.empty() ? Ideal::zero(r) : ideal(r, rels), std::move(s));
  if (verify) R.verify_cm();
  return R;
}

inline GradedRing poly1(std::uint32_t p) { return graded(p, {"a"}, {1}, {}, {"a"}); }
inline GradedRing ab(std::uint32_t p) { return graded(p, {"a", "b"}, {1, 1}, {"a*b"}, {"a+b"}); }
inline GradedRing lines3(std::uint32_t p) {
  return graded(p, {"x", "y", "z"}, {1, 1, 1}, {"x*y", "x*z", "y*z"}, {"x+y+z"});
}
inline GradedRing lines4(std::uint32_t p) {
  return graded(p, {"x1", "x2", "x3", "x4"}, {1, 1, 1, 1},
                {"x1*x2", "x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4"}, {"x1+x2+x3+x4"});
}
inline GradedRing cusp(std::uint32_t p) { return graded(p, {"a", "b"}, {2, 3}, {"b^2 - a^3"}, {"a"}); }

}  // namespace frobstab::testing
