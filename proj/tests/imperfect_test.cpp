#include <gtest/gtest.h>

#include <random>

#include "frobstab/error.hpp"
#include "frobstab/groebner.hpp"
#include "frobstab/imperfect.hpp"
#include "test_support.hpp"

using namespace frobstab;
using namespace frobstab::testing;

namespace {

RationalFunction rf(const RingPtr& k, const std::string& s) { return RationalFunction(P(k, s)); }

FiniteExtension::Element random_element(std::mt19937_64& rng, const FiniteExtension& L) {
  // one shared denominator keeps coefficient growth under p-th powers modest
  const Polynomial den = random_poly(rng, L.base(), 2, 1, false);
  auto e = L.zero();
  for (auto& c : e) c = RationalFunction(random_poly(rng, L.base(), 2, 2), den);
  return e;
}

// Independent check: sum a_i y^{ip} clears denominators into F_p[u,v,y] and
// must lie in the ideal generated by the modulus.
bool relation_holds_by_division(std::uint32_t p, const std::vector<RationalFunction>& a) {
  auto R = ring(p, {"y", "u", "v"});
  const std::size_t idx[] = {1, 2};
  Polynomial common = Polynomial::constant(R, 1);
  for (const auto& c : a) common = common * c.denominator().map_to(R, idx);
  Polynomial sum(R);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    Polynomial scale = common;
    scale = *divide_exact(scale, a[i].denominator().map_to(R, idx));
    sum += scale * a[i].numerator().map_to(R, idx) * P(R, "y").pow(i * p);
  }
  const std::string mod = "y^" + std::to_string(2 * p) + " + u*y^" + std::to_string(p) + " - v";
  return ideal_member(sum, ideal(R, {mod}));
}

}  // namespace

TEST(Extension, ExampleShape) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto L = build_example_extension(p);
    EXPECT_EQ(L.degree(), 2 * p);
    EXPECT_EQ(L.basis_names().size(), 2 * p);
    EXPECT_EQ(L.basis_names()[1], "y");
  }
  EXPECT_THROW(build_example_extension(4), InputError);
  EXPECT_THROW(build_example_extension(11), InputError);
}

TEST(Extension, PPowerMatrixColumns) {
  const auto L = build_example_extension(2);
  const auto m = p_power_matrix(L);
  auto k = L.base();
  auto col = [&](std::size_t j) {
    std::vector<RationalFunction> c;
    for (std::size_t i = 0; i < 4; ++i) c.push_back(m[i][j]);
    return c;
  };
  EXPECT_EQ(col(0), L.basis(0));
  EXPECT_EQ(col(1), L.basis(2));
  std::vector<RationalFunction> expected{rf(k, "v"), rf(k, "0"), rf(k, "u"), rf(k, "0")};
  EXPECT_EQ(col(2), expected);
}

TEST(Extension, FrobeniusIsRingMap) {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u}) {
    const auto L = build_example_extension(p);
    for (int k = 0; k < 50; ++k) {
      const auto x = random_element(rng, L);
      const auto y = random_element(rng, L);
      EXPECT_EQ(L.pow(L.mul(x, y), p), L.mul(L.pow(x, p), L.pow(y, p)));
      EXPECT_EQ(L.pow(L.add(x, y), p), L.add(L.pow(x, p), L.pow(y, p)));
    }
  }
}

TEST(Extension, MulAgreesWithPolynomialReduction) {
  const auto L = build_example_extension(3);
  const auto x = L.basis(5);
  const auto prod = L.mul(x, x);  // y^10 = y^4 (v - u y^3)
  auto k = L.base();
  auto expected = L.zero();
  // y^7 (-u) = -u y (v - u y^3) = -u v y + u^2 y^4
  expected[1] = rf(k, "-u*v");
  expected[4] = rf(k, "v + u^2");
  EXPECT_EQ(prod, expected);
}

TEST(Nilpotent, WitnessForP2AndP3) {
  for (std::uint32_t p : {2u, 3u}) {
    const auto L = build_example_extension(p);
    const auto w = find_nilpotent_in_tensor(L);
    ASSERT_TRUE(w.has_value()) << p;
    EXPECT_TRUE(verify_witness(L, *w));
    EXPECT_FALSE(ratfun_pth_root(w->relation[w->certificate_index]).has_value());
    EXPECT_TRUE(relation_holds_by_division(p, w->relation));
    const auto j = to_json(*w);
    EXPECT_EQ(j["basis"].size(), 2 * p);
    EXPECT_EQ(j["relation"].size(), 2 * p);
  }
}

TEST(Nilpotent, SeparableControl) {
  auto k = PolyRing::make(2, {"u", "v"});
  FiniteExtension L(k, {rf(k, "u"), rf(k, "1")});  // y^2 + y + u
  EXPECT_FALSE(find_nilpotent_in_tensor(L).has_value());
}

TEST(Nilpotent, TrivialControl) {
  auto k = PolyRing::make(3, {"u", "v"});
  FiniteExtension L(k, {rf(k, "0")});  // k itself
  EXPECT_EQ(L.degree(), 1u);
  EXPECT_FALSE(find_nilpotent_in_tensor(L).has_value());
}

TEST(Nilpotent, TamperedWitnessRejected) {
  const auto L = build_example_extension(2);
  auto w = *find_nilpotent_in_tensor(L);
  w.relation[0] = w.relation[0] + RationalFunction::one(L.base());
  EXPECT_FALSE(verify_witness(L, w));
}
