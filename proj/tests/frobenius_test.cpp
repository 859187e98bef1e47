#include <gtest/gtest.h>

#include <random>

#include "frobstab/error.hpp"
#include "frobstab/frobenius.hpp"
#include "test_support.hpp"

using namespace frobstab;
using frobstab::testing::P;
using frobstab::testing::power_by_multiplication;
using frobstab::testing::random_poly;
namespace ft = frobstab::testing;

namespace {

std::vector<std::uint32_t> ones(std::size_t n) { return std::vector<std::uint32_t>(n, 1); }

// Random monomial ideal with up to four generators, exponents <= 6.
std::vector<std::vector<std::uint32_t>> random_monomial_exps(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<std::uint32_t> ex(0, 6);
  std::vector<std::vector<std::uint32_t>> out;
  for (int k = count(rng); k > 0; --k) {
    std::vector<std::uint32_t> e(n);
    for (auto& x : e) x = ex(rng);
    out.push_back(e);
  }
  return out;
}

Ideal monomial_ideal(const RingPtr& r, const std::vector<std::vector<std::uint32_t>>& exps) {
  std::vector<Polynomial> gens;
  for (const auto& e : exps) gens.push_back(Polynomial::monomial(r, 1, Monomial(e)));
  return Ideal(r, gens);
}

Ideal mapped(const RingPtr& r, std::vector<std::vector<std::uint32_t>> exps, std::uint64_t q, bool ceil) {
  for (auto& e : exps)
    for (auto& x : e) x = static_cast<std::uint32_t>(ceil ? (x + q - 1) / q : x / q);
  return monomial_ideal(r, exps);
}

}  // namespace

TEST(BracketPower, Examples) {
  auto r2 = ft::ring(2, {"a", "b"});
  EXPECT_EQ(bracket_power(ft::ideal(r2, {"a", "b"}), 1).to_string(), "(a^2, b^2)");
  EXPECT_EQ(bracket_power(ft::ideal(r2, {"a+b"}), 2).to_string(), "(a^4 + b^4)");
  auto r3 = ft::ring(3, {"a", "b"});
  EXPECT_TRUE(ideal_equal(bracket_power(ft::ideal(r3, {"a", "a+b"}), 1), bracket_power(ft::ideal(r3, {"a", "b"}), 1)));
  EXPECT_TRUE(ideal_equal(bracket_power(ft::ideal(r3, {"a", "b"}), 1), ft::ideal(r3, {"a^3", "b^3"})));
  auto amb = ft::ideal(r2, {"a*b"});
  EXPECT_TRUE(ideal_equal(bracket_power(ft::ideal(r2, {"a+b"}), 1, amb), ft::ideal(r2, {"a^2+b^2", "a*b"})));
}

TEST(BracketPower, IndependentOfGeneratingSet) {
  std::mt19937_64 rng(21);
  for (std::uint32_t p : {2u, 3u}) {
    auto r = ft::ring(p, {"a", "b", "c"});
    for (int i = 0; i < 50; ++i) {
      Polynomial f = random_poly(rng, r, 3, 4), g = random_poly(rng, r, 3, 4);
      Polynomial m = random_poly(rng, r, 2, 2);
      Ideal A(r, {f, g}), B(r, {f + g * m, g, f * m});
      ASSERT_TRUE(ideal_equal(A, B));
      ASSERT_TRUE(ideal_equal(bracket_power(A, 1), bracket_power(B, 1))) << A.to_string();
    }
  }
}

TEST(FrobeniusRoot, Examples) {
  auto r = ft::ring(2, {"a", "b"});
  EXPECT_TRUE(ideal_equal(frobenius_root(ft::ideal(r, {"a^2*b^2"}), 1), ft::ideal(r, {"a*b"})));
  // smallest J with (a^3) in J^[2] is (a): a^3 = a^2 * a
  EXPECT_TRUE(ideal_equal(frobenius_root(ft::ideal(r, {"a^3"}), 1), ft::ideal(r, {"a"})));
  EXPECT_TRUE(ideal_equal(frobenius_root(ft::ideal(r, {"a^2 + b^3"}), 1), ft::ideal(r, {"a", "b"})));
  EXPECT_TRUE(ideal_contains(bracket_power(ft::ideal(r, {"a", "b"}), 1), ft::ideal(r, {"a^2 + b^3"})));
  // (a) is not enough and neither is (b)
  EXPECT_FALSE(ideal_contains(bracket_power(ft::ideal(r, {"a"}), 1), ft::ideal(r, {"a^2 + b^3"})));
  EXPECT_FALSE(ideal_contains(bracket_power(ft::ideal(r, {"b"}), 1), ft::ideal(r, {"a^2 + b^3"})));
}

TEST(FrobeniusPreimage, Examples) {
  auto r = ft::ring(2, {"a", "b"});
  EXPECT_TRUE(ideal_equal(frobenius_preimage(ft::ideal(r, {"a^3"}), 1), ft::ideal(r, {"a^2"})));
  EXPECT_TRUE(ideal_equal(frobenius_preimage(ft::ideal(r, {"a^2*b^2"}), 1), ft::ideal(r, {"a*b"})));
  EXPECT_TRUE(ideal_equal(frobenius_preimage(ft::ideal(r, {"a^2", "b^2"}), 1), ft::ideal(r, {"a", "b"})));
}

TEST(FrobeniusRoot, MonomialOracle) {
  std::mt19937_64 rng(22);
  for (std::uint32_t p : {2u, 3u}) {
    auto r = ft::ring(p, {"a", "b", "c"});
    for (int i = 0; i < 50; ++i) {
      auto exps = random_monomial_exps(rng, 3);
      Ideal I = monomial_ideal(r, exps);
      for (unsigned e = 1; e <= 2; ++e) {
        const std::uint64_t q = prime_power(p, e);
        ASSERT_TRUE(ideal_equal(frobenius_root(I, e), mapped(r, exps, q, false))) << I.to_string() << " e=" << e;
        ASSERT_TRUE(ideal_equal(frobenius_preimage(I, e), mapped(r, exps, q, true))) << I.to_string() << " e=" << e;
        ASSERT_TRUE(ideal_equal(frobenius_preimage_by_elimination(I, e), mapped(r, exps, q, true)));
      }
    }
  }
}

TEST(FrobeniusRoot, InvertsBracketPowerOnPolynomialRings) {
  std::mt19937_64 rng(23);
  for (std::uint32_t p : {2u, 3u}) {
    auto r = ft::ring(p, {"a", "b", "c"});
    for (int i = 0; i < 50; ++i) {
      Ideal J(r, {random_poly(rng, r, 3, 3), random_poly(rng, r, 3, 3)});
      const unsigned e = 1 + i % 2;
      Ideal B = bracket_power(J, e);
      ASSERT_TRUE(ideal_equal(frobenius_root(B, e), J)) << J.to_string();
      // I subset root(I)^[q] for an arbitrary I
      Ideal I(r, {random_poly(rng, r, 4, 5)});
      ASSERT_TRUE(ideal_contains(bracket_power(frobenius_root(I, e), e), I));
    }
  }
}

TEST(FrobeniusRoot, ContainsIdealInQuotient) {
  std::mt19937_64 rng(24);
  auto r = ft::ring(2, {"a", "b"});
  Ideal amb = ft::ideal(r, {"a*b"});
  for (int i = 0; i < 30; ++i) {
    Ideal J(r, {random_poly(rng, r, 3, 3)});
    ASSERT_TRUE(ideal_contains(frobenius_root(bracket_power(J, 1, amb), 1), J));
  }
}

TEST(FrobeniusPreimage, LinearRouteMatchesElimination) {
  std::mt19937_64 rng(25);
  for (std::uint32_t p : {2u, 3u}) {
    auto r = ft::ring(p, {"a", "b"});
    std::uniform_int_distribution<std::uint32_t> pw(2, 5);
    for (int i = 0; i < 30; ++i) {
      Ideal K(r, {P(r, "a").pow(pw(rng)), P(r, "b").pow(pw(rng)), random_poly(rng, r, 3, 4)});
      for (unsigned e = 1; e <= 2; ++e) {
        Ideal lin = frobenius_preimage(K, e);
        Ideal eli = frobenius_preimage_by_elimination(K, e);
        ASSERT_TRUE(ideal_equal(lin, eli)) << K.to_string() << " e=" << e;
        for (const auto& g : lin.generators())
          ASSERT_TRUE(ideal_member(power_by_multiplication(g, prime_power(p, e)), K));
      }
    }
  }
}

TEST(FrobeniusPreimage, RejectsBadLowerBound) {
  auto r = ft::ring(2, {"a", "b"});
  EXPECT_THROW(frobenius_preimage(ft::ideal(r, {"a^2", "b^3"}), 1, ft::ideal(r, {"a", "b"})), PreconditionError);
}

TEST(FrobeniusClosure, Examples) {
  auto r = ft::ring(2, {"a", "b"});
  {
    auto rep = frobenius_closure(ft::ideal(r, {"a"}), ft::ideal(r, {"b^2 - a^3"}));
    EXPECT_EQ(rep.status, ClosureStatus::StabilizedHeuristic);
    EXPECT_TRUE(ideal_equal(rep.closure, ft::ideal(r, {"a", "b"})));
    auto w = closure_witness(rep);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->to_string(), "b");
    auto [closed, status] = is_frobenius_closed(ft::ideal(r, {"a"}), ft::ideal(r, {"b^2 - a^3"}));
    EXPECT_FALSE(closed);
    EXPECT_EQ(status, ClosureStatus::StabilizedHeuristic);
  }
  {
    auto rep = frobenius_closure(ft::ideal(r, {"a+b"}), ft::ideal(r, {"a*b"}));
    EXPECT_EQ(rep.status, ClosureStatus::StabilizedHeuristic);
    EXPECT_TRUE(ideal_equal(rep.closure, ft::ideal(r, {"a+b", "a*b"})));
    EXPECT_FALSE(closure_witness(rep));
    EXPECT_TRUE(is_frobenius_closed(ft::ideal(r, {"a+b"}), ft::ideal(r, {"a*b"})).first);
  }
  auto r3 = ft::ring(3, {"a"});
  {
    auto rep = frobenius_closure(ft::ideal(r3, {"a^2"}));
    EXPECT_EQ(rep.status, ClosureStatus::CertifiedTrivial);
    EXPECT_EQ(rep.steps.size(), 1u);
    EXPECT_TRUE(ideal_equal(rep.closure, ft::ideal(r3, {"a^2"})));
  }
  auto r1 = ft::ring(2, {"a"});
  auto [closed, status] = is_frobenius_closed(ft::ideal(r1, {"a"}), Ideal::zero(r1));
  EXPECT_TRUE(closed);
  EXPECT_EQ(status, ClosureStatus::CertifiedTrivial);
  EXPECT_EQ(to_string(ClosureStatus::BudgetExhausted), "budget-exhausted");
}

TEST(FrobeniusClosure, StoppingRule) {
  auto r = ft::ring(2, {"a", "b"});
  Ideal amb = ft::ideal(r, {"b^2 - a^3"});
  auto rep = frobenius_closure(ft::ideal(r, {"a"}), amb, {6, 2});
  // J_0 = (a, b^2), J_1 = J_2 = J_3 = (a, b)
  ASSERT_EQ(rep.steps.size(), 4u);
  EXPECT_FALSE(ideal_equal(rep.steps[0].ideal, rep.steps[1].ideal));
  auto short_run = frobenius_closure(ft::ideal(r, {"a"}), amb, {1, 2});
  EXPECT_EQ(short_run.status, ClosureStatus::BudgetExhausted);
  EXPECT_EQ(short_run.steps.size(), 2u);
  EXPECT_THROW(frobenius_closure(ft::ideal(r, {"a"}), amb, {0, 2}), InputError);
}

TEST(FrobeniusClosure, AscendingAndIdempotent) {
  auto lines = [](std::uint32_t p) {
    auto r = ft::ring(p, {"x", "y", "z"});
    return std::make_pair(ft::ideal(r, {"x+y+z"}), ft::ideal(r, {"x*y", "x*z", "y*z"}));
  };
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto [I, amb] = lines(p);
    auto rep = frobenius_closure(I, amb);
    for (std::size_t k = 1; k < rep.steps.size(); ++k)
      ASSERT_TRUE(ideal_contains(rep.steps[k].ideal, rep.steps[k - 1].ideal));
    auto again = frobenius_closure(rep.closure, amb, {6, 1});
    EXPECT_EQ(again.steps.size(), 2u);
    EXPECT_TRUE(ideal_equal(again.closure, rep.closure));
  }
  auto r = ft::ring(2, {"a", "b"});
  Ideal amb = ft::ideal(r, {"b^2 - a^3"});
  auto rep = frobenius_closure(ft::ideal(r, {"a"}), amb);
  auto again = frobenius_closure(rep.closure, amb, {6, 1});
  EXPECT_EQ(again.steps.size(), 2u);
  EXPECT_TRUE(ideal_equal(again.closure, rep.closure));
}

// Brute force over the finite quotient: z is in J_e iff z^{p^e} lies in
// I^{[p^e]} + ambient, for every z in the span of the staircase of I + ambient.
TEST(FrobeniusClosure, BruteForceOverQuotient) {
  struct Case {
    std::uint32_t p;
    std::vector<std::string> vars, I, amb;
  };
  std::vector<Case> cases{{2, {"a", "b"}, {"a+b"}, {"a*b"}},
                          {2, {"a", "b"}, {"a"}, {"b^2 + a^3"}},
                          {3, {"a", "b"}, {"a+b"}, {"a*b"}},
                          {2, {"x", "y", "z"}, {"x+y+z"}, {"x*y", "x*z", "y*z"}},
                          {2, {"a", "b"}, {"a^2", "b^2"}, {"a*b"}}};
  for (const auto& c : cases) {
    auto r = ft::ring(c.p, c.vars);
    Ideal I = ft::ideal(r, c.I), amb = ft::ideal(r, c.amb);
    auto rep = frobenius_closure(I, amb);
    const Ideal J0 = I + amb;
    auto B = staircase(J0, ones(r->nvars()));
    ASSERT_LE(B.size(), 10u);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < B.size(); ++i) total *= c.p;
    for (unsigned e = 1; e <= 2; ++e) {
      const Ideal K = bracket_power(I, e, amb);
      const Ideal& Je = rep.steps.at(e).ideal;
      for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<Coeff> v(B.size());
        std::uint64_t x = code;
        for (auto& coef : v) {
          coef = static_cast<Coeff>(x % c.p);
          x /= c.p;
        }
        Polynomial z = from_coordinates(r, v, B);
        const bool brute = ideal_member(power_by_multiplication(z, prime_power(c.p, e)), K);
        ASSERT_EQ(ideal_member(z, Je), brute) << z.to_string() << " e=" << e << " " << I.to_string();
      }
    }
  }
}

TEST(FrobeniusClosure, SampledClosureElementsHaveWitnessPowers) {
  std::mt19937_64 rng(26);
  auto r = ft::ring(2, {"a", "b"});
  Ideal I = ft::ideal(r, {"a"}), amb = ft::ideal(r, {"b^2 - a^3"});
  auto rep = frobenius_closure(I, amb);
  unsigned stab = 0;
  for (std::size_t k = 0; k < rep.steps.size(); ++k)
    if (ideal_equal(rep.steps[k].ideal, rep.closure)) {
      stab = rep.steps[k].e;
      break;
    }
  const auto& gens = rep.closure.groebner_basis();
  for (int i = 0; i < 100; ++i) {
    Polynomial f(r);
    for (const auto& g : gens) f += g * random_poly(rng, r, 3, 3);
    ASSERT_TRUE(ideal_member(frobenius_poly(f, stab), bracket_power(I, stab, amb)));
  }
}
