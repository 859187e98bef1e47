#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "frobstab/error.hpp"
#include "frobstab/gb_cache.hpp"
#include "frobstab/linalg.hpp"
#include "test_support.hpp"

using namespace frobstab;
using frobstab::testing::P;
using frobstab::testing::random_homogeneous;
using frobstab::testing::random_poly;
namespace ft = frobstab::testing;

namespace {

std::vector<std::string> gb_strings(const Ideal& I) {
  std::vector<std::string> out;
  for (const auto& g : I.groebner_basis()) out.push_back(g.to_string());
  return out;
}

// All monomials of total degree d in n variables.
std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

// Dense membership for homogeneous f against homogeneous generators: f lies
// in I iff it is in the span of all m*g of degree deg(f).
bool macaulay_member(const Polynomial& f, const std::vector<Polynomial>& gens) {
  const auto& r = f.ring();
  if (f.is_zero()) return true;
  const auto d = f.total_degree();
  auto cols = monomials_of_degree(r->nvars(), static_cast<std::uint32_t>(d));
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
  auto to_row = [&](const Polynomial& g) {
    linalg::Row row(cols.size(), 0);
    for (const auto& t : g.terms()) row[index.at(t.mono)] = t.coeff;
    return row;
  };
  linalg::Rows span;
  for (const auto& g : gens) {
    if (g.is_zero() || g.total_degree() > d) continue;
    for (const auto& m : monomials_of_degree(r->nvars(), static_cast<std::uint32_t>(d - g.total_degree())))
      span.push_back(to_row(g.mul_term(1, m)));
  }
  const auto& k = r->field();
  const auto before = linalg::rank(k, span);
  span.push_back(to_row(f));
  return linalg::rank(k, span) == before;
}

// Random Artinian ideal in two variables: pure powers of degree <= 3 plus a
// couple of random polynomials.
Ideal random_artinian(std::mt19937_64& rng, const RingPtr& r) {
  std::uniform_int_distribution<std::uint32_t> pw(1, 3);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < r->nvars(); ++i)
    gens.push_back(Polynomial::monomial(r, 1, Monomial::variable(r->nvars(), i, pw(rng))));
  gens.push_back(random_poly(rng, r, 3, 3));
  return Ideal(r, gens);
}

// Multiplication-by-f matrix on the staircase of an Artinian ideal.
linalg::Rows mult_matrix(const Polynomial& f, const Ideal& I, const StaircaseBasis& B) {
  linalg::Rows rows;
  for (const auto& m : B.monomials) {
    Polynomial img = normal_form(f.mul_term(1, m), I);
    auto c = coordinates(img, B);
    rows.push_back(linalg::Row(c.begin(), c.end()));
  }
  return rows;
}

}  // namespace

TEST(GroebnerBasis, Examples) {
  auto r = ft::ring(2, {"a", "b"});
  EXPECT_EQ(gb_strings(ft::ideal(r, {"a", "b"})), (std::vector<std::string>{"b", "a"}));
  auto g = gb_strings(ft::ideal(r, {"a^2 + b", "b^2"}));
  EXPECT_EQ(g, (std::vector<std::string>{"b^2", "a^2 + b"}));
  EXPECT_EQ(gb_strings(ft::ideal(r, {"a+b", "a"})), (std::vector<std::string>{"b", "a"}));
}

TEST(GroebnerBasis, ReducedAndSpansSameIdeal) {
  std::mt19937_64 rng(10);
  auto r = ft::ring(3, {"x", "y", "z"});
  for (int i = 0; i < 60; ++i) {
    std::vector<Polynomial> gens{random_poly(rng, r, 3, 3), random_poly(rng, r, 3, 3), random_poly(rng, r, 2, 2)};
    Ideal I(r, gens);
    const auto& G = I.groebner_basis();
    for (std::size_t j = 0; j < G.size(); ++j) {
      ASSERT_EQ(G[j].leading_coeff(), 1u);
      std::vector<Polynomial> others;
      for (std::size_t k = 0; k < G.size(); ++k)
        if (k != j) others.push_back(G[k]);
      // no term of G[j] is divisible by another leading monomial
      for (const auto& t : G[j].terms())
        for (const auto& o : others) ASSERT_FALSE(o.leading_monomial().divides(t.mono));
    }
    for (const auto& g : gens) ASSERT_TRUE(ideal_member(g, I));
    Ideal back(r, G);
    for (const auto& g : G) ASSERT_TRUE(reduce(g, gens).is_zero() || ideal_member(g, Ideal(r, gens)));
    ASSERT_TRUE(ideal_equal(back, I));
  }
}

TEST(GroebnerBasis, UniqueUnderInvertibleMixing) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = ft::ring(p, {"a", "b", "c"});
    std::uniform_int_distribution<std::uint32_t> cd(1, p - 1);
    for (int i = 0; i < 67; ++i) {
      Polynomial f = random_poly(rng, r, 3, 3), g = random_poly(rng, r, 3, 3), h = random_poly(rng, r, 2, 2);
      // unitriangular polynomial mixing is invertible over the ring
      Polynomial m1 = random_poly(rng, r, 2, 1), m2 = random_poly(rng, r, 2, 1);
      Ideal A(r, {f, g, h});
      Ideal B(r, {f.scaled(cd(rng)) + g * m1 + h * m2, g + h * m1, h.scaled(cd(rng))});
      ASSERT_EQ(gb_strings(A), gb_strings(B)) << A.to_string() << " vs " << B.to_string();
    }
  }
}

TEST(GroebnerBasis, OtherOrders) {
  auto lex = PolyRing::make(2, {"t", "a", "b"}, MonomialOrder::lex());
  Ideal I = ft::ideal(lex, {"t - a", "t - b"});
  EXPECT_EQ(gb_strings(I), (std::vector<std::string>{"a + b", "t + b"}));
}

TEST(GroebnerBasis, ResourceCapFailsLoudly) {
  auto r = ft::ring(2, {"a", "b", "c"});
  GroebnerOptions tight;
  tight.max_pairs = 1;
  std::vector<Polynomial> gens{P(r, "a^2 + b*c"), P(r, "b^2 + a*c"), P(r, "c^2 + a*b")};
  EXPECT_THROW(buchberger(gens, tight), ResourceLimit);
}

TEST(NormalForm, Examples) {
  auto r = ft::ring(2, {"a", "b"});
  Ideal I = ft::ideal(r, {"a^2 + b", "b^2"});
  EXPECT_EQ(normal_form(P(r, "a^2"), I).to_string(), "b");
  EXPECT_TRUE(normal_form(P(r, "a^2*b + b^2"), I).is_zero());
  EXPECT_EQ(normal_form(P(r, "1"), ft::ideal(r, {"a", "b"})).to_string(), "1");
}

TEST(NormalForm, IdempotentAndAdditive) {
  std::mt19937_64 rng(12);
  auto r = ft::ring(5, {"a", "b", "c"});
  for (int i = 0; i < 50; ++i) {
    Ideal I(r, {random_poly(rng, r, 3, 3), random_poly(rng, r, 3, 3)});
    Polynomial f = random_poly(rng, r, 5, 5), g = random_poly(rng, r, 5, 5);
    Polynomial nf = normal_form(f, I);
    ASSERT_EQ(normal_form(nf, I), nf);
    ASSERT_EQ(normal_form(f + g, I), nf + normal_form(g, I));
    ASSERT_TRUE(ideal_member(f - nf, I));
  }
}

TEST(Membership, Examples) {
  auto r = ft::ring(2, {"a", "b"});
  EXPECT_TRUE(ideal_member(P(r, "a*b"), ft::ideal(r, {"a"})));
  EXPECT_TRUE(ideal_equal(ft::ideal(r, {"a", "b"}), ft::ideal(r, {"a+b", "b"})));
  EXPECT_FALSE(ideal_member(P(r, "a"), ft::ideal(r, {"a^2"})));
  EXPECT_TRUE(is_unit_ideal(ft::ideal(r, {"a", "a + 1"})));
}

TEST(Membership, AgreesWithMacaulayOracle) {
  std::mt19937_64 rng(13);
  int members = 0;
  for (std::uint32_t p : {2u, 3u}) {
    auto r = ft::ring(p, {"x", "y", "z"});
    for (int i = 0; i < 40; ++i) {
      std::vector<Polynomial> gens{random_homogeneous(rng, r, 3, 2), random_homogeneous(rng, r, 3, 2),
                                   random_homogeneous(rng, r, 2, 3)};
      Ideal I(r, gens);
      for (int j = 0; j < 8; ++j) {
        std::uniform_int_distribution<int> dd(2, 8);
        int d = dd(rng);
        Polynomial f = random_homogeneous(rng, r, 3, d);
        if (j % 2 == 0) {
          // build a genuine member of degree d
          f = Polynomial(r);
          for (const auto& g : gens)
            if (!g.is_zero() && static_cast<int>(g.total_degree()) <= d)
              f += g * random_homogeneous(rng, r, 2, d - static_cast<int>(g.total_degree()));
        }
        const bool expect = macaulay_member(f, gens);
        members += expect;
        ASSERT_EQ(ideal_member(f, I), expect) << f.to_string() << " in " << I.to_string();
      }
    }
  }
  EXPECT_GT(members, 0);
}

TEST(Colon, Examples) {
  auto r = ft::ring(2, {"a", "b"});
  EXPECT_TRUE(ideal_equal(colon_ideal(ft::ideal(r, {"a*b"}), P(r, "b")), ft::ideal(r, {"a"})));
  EXPECT_TRUE(ideal_equal(colon_ideal(ft::ideal(r, {"a"}), P(r, "1")), ft::ideal(r, {"a"})));
  EXPECT_TRUE(ideal_equal(colon_ideal(ft::ideal(r, {"a^2"}), P(r, "a")), ft::ideal(r, {"a"})));
  EXPECT_TRUE(is_unit_ideal(colon_ideal(ft::ideal(r, {"a^2"}), P(r, "a^3"))));
  EXPECT_TRUE(ideal_equal(colon_ideal(ft::ideal(r, {"a^2", "a*b", "b^2"}), maximal_ideal(r)),
                          ft::ideal(r, {"a", "b"})));
}

TEST(Colon, SoundAndComplete) {
  std::mt19937_64 rng(14);
  for (std::uint32_t p : {2u, 3u}) {
    auto r = ft::ring(p, {"a", "b"});
    for (int i = 0; i < 30; ++i) {
      Ideal I = random_artinian(rng, r);
      Polynomial f = random_poly(rng, r, 3, 2, false);
      Ideal C = colon_ideal(I, f);
      for (const auto& g : C.generators()) ASSERT_TRUE(ideal_member(g * f, I));
      // dimension oracle: R/(I:f) is isomorphic to f*(R/I)
      auto B = staircase(I, std::vector<std::uint32_t>{1, 1});
      const auto rk = linalg::rank(r->field(), mult_matrix(f, I, B));
      std::size_t colon_dim = is_unit_ideal(C) ? 0 : staircase(C, std::vector<std::uint32_t>{1, 1}).size();
      ASSERT_EQ(colon_dim, rk) << I.to_string() << " : " << f.to_string();
      // random g with g f in I
      for (int j = 0; j < 4; ++j) {
        Polynomial g = random_poly(rng, r, 3, 3);
        if (!C.generators().empty()) g = g * C.generators()[j % C.generators().size()];
        if (ideal_member(g * f, I)) ASSERT_TRUE(ideal_member(g, C));
        else ASSERT_FALSE(ideal_member(g, C));
      }
    }
  }
}

TEST(Intersect, Examples) {
  auto r = ft::ring(2, {"a", "b"});
  EXPECT_TRUE(ideal_equal(intersect(ft::ideal(r, {"a"}), ft::ideal(r, {"b"})), ft::ideal(r, {"a*b"})));
  Ideal I = ft::ideal(r, {"a^2 + b", "a*b^2"});
  EXPECT_TRUE(ideal_equal(intersect(I, I), I));
  EXPECT_TRUE(ideal_equal(intersect(ft::ideal(r, {"a^2", "b"}), ft::ideal(r, {"a"})), ft::ideal(r, {"a^2", "a*b"})));
}

TEST(Intersect, ContainedInBothAndDimensionFormula) {
  std::mt19937_64 rng(15);
  std::vector<std::uint32_t> w{1, 1};
  for (std::uint32_t p : {2u, 5u}) {
    auto r = ft::ring(p, {"a", "b"});
    for (int i = 0; i < 30; ++i) {
      Ideal I = random_artinian(rng, r), J = random_artinian(rng, r);
      Ideal K = intersect(I, J);
      ASSERT_TRUE(ideal_contains(I, K));
      ASSERT_TRUE(ideal_contains(J, K));
      auto dim = [&](const Ideal& X) { return is_unit_ideal(X) ? std::size_t{0} : staircase(X, w).size(); };
      // R/(I cap J) -> R/I + R/J -> R/(I+J) is exact
      ASSERT_EQ(dim(K) + dim(I + J), dim(I) + dim(J));
      // products lie in both
      Polynomial x = random_poly(rng, r, 2, 2);
      for (const auto& gi : I.generators())
        for (const auto& gj : J.generators()) ASSERT_TRUE(ideal_member(gi * gj * x, K));
    }
  }
}

TEST(Eliminate, Examples) {
  auto r = ft::ring(2, {"t", "a", "b"});
  std::vector<std::string> t{"t"};
  EXPECT_TRUE(ideal_equal(eliminate(ft::ideal(r, {"t*a - 1", "b"}), t), ft::ideal(r, {"b"})));
  Ideal I = ft::ideal(r, {"a^2 + b", "a*b"});
  EXPECT_TRUE(ideal_equal(eliminate(I, t), I));
  EXPECT_TRUE(ideal_equal(eliminate(ft::ideal(r, {"t - a", "t - b"}), t), ft::ideal(r, {"a - b"})));
}

TEST(Radical, Examples) {
  auto r = ft::ring(2, {"a", "b"});
  EXPECT_TRUE(radical_member(P(r, "a"), ft::ideal(r, {"a^2"})));
  EXPECT_FALSE(radical_member(P(r, "b"), ft::ideal(r, {"a^2"})));
  EXPECT_TRUE(radical_member(P(r, "a+b"), ft::ideal(r, {"a^2", "b^2"})));
}

TEST(Radical, AgreesWithBruteForcePowers) {
  std::mt19937_64 rng(16);
  std::vector<std::uint32_t> w{1, 1};
  int yes = 0, no = 0;
  for (std::uint32_t p : {2u, 3u}) {
    auto r = ft::ring(p, {"a", "b"});
    for (int i = 0; i < 40; ++i) {
      Ideal I = random_artinian(rng, r);
      if (is_unit_ideal(I)) continue;
      // a nilpotent in an algebra of dimension L has f^L = 0, and L <= 9 < 12
      for (int j = 0; j < 5; ++j) {
        Polynomial f = random_poly(rng, r, 3, 2, false);
        bool brute = false;
        Polynomial pw = f;
        for (int k = 1; k <= 12 && !brute; ++k, pw = pw * f) brute = ideal_member(pw, I);
        const bool got = radical_member(f, I);
        (got ? yes : no)++;
        ASSERT_EQ(got, brute) << f.to_string() << " in sqrt " << I.to_string();
      }
    }
  }
  EXPECT_GT(yes, 0);
  EXPECT_GT(no, 0);
}

TEST(Staircase, Examples) {
  auto r = ft::ring(2, {"a", "b"});
  std::vector<std::uint32_t> w{1, 1};
  auto s1 = staircase(ft::ideal(r, {"a^2", "b"}), w);
  ASSERT_EQ(s1.size(), 2u);
  EXPECT_EQ(s1.monomials[0], Monomial({0, 0}));
  EXPECT_EQ(s1.monomials[1], Monomial({1, 0}));
  auto s2 = staircase(ft::ideal(r, {"a*b", "a^3", "b^3"}), w, 2);
  ASSERT_EQ(s2.size(), 2u);
  EXPECT_EQ(s2.monomials[0], Monomial({0, 2}));
  EXPECT_EQ(s2.monomials[1], Monomial({2, 0}));
  auto s3 = staircase(ft::ideal(r, {"a"}), w, 0);
  ASSERT_EQ(s3.size(), 1u);
  EXPECT_THROW(staircase(ft::ideal(r, {"a"}), w), InputError);
  EXPECT_FALSE(is_artinian(ft::ideal(r, {"a*b"})));
  EXPECT_TRUE(is_artinian(ft::ideal(r, {"a^2 + b", "b^3"})));
}

TEST(Staircase, MonomialsAreNormalForms) {
  std::mt19937_64 rng(17);
  auto r = ft::ring(3, {"a", "b"});
  std::vector<std::uint32_t> w{1, 1};
  for (int i = 0; i < 30; ++i) {
    Ideal I = random_artinian(rng, r);
    if (is_unit_ideal(I)) continue;
    auto B = staircase(I, w);
    for (const auto& m : B.monomials) {
      Polynomial x = Polynomial::monomial(r, 1, m);
      ASSERT_EQ(normal_form(x, I), x);
    }
    Polynomial f = normal_form(random_poly(rng, r, 5, 6), I);
    ASSERT_EQ(from_coordinates(r, coordinates(f, B), B), f);
  }
}

TEST(Socle, Examples) {
  auto r = ft::ring(2, {"a", "b"});
  std::vector<Polynomial> m{P(r, "a"), P(r, "b")};
  auto strs = [](const std::vector<Polynomial>& v) {
    std::vector<std::string> s;
    for (const auto& f : v) s.push_back(f.to_string());
    std::sort(s.begin(), s.end());
    return s;
  };
  EXPECT_EQ(strs(socle_basis(ft::ideal(r, {"a^2", "b"}), m)), (std::vector<std::string>{"a"}));
  EXPECT_EQ(strs(socle_basis(ft::ideal(r, {"a", "b"}), m)), (std::vector<std::string>{"1"}));
  EXPECT_EQ(strs(socle_basis(ft::ideal(r, {"a^2", "a*b", "b^2"}), m)), (std::vector<std::string>{"a", "b"}));
  EXPECT_THROW(socle_basis(ft::ideal(r, {"a*b"}), m), InputError);
}

TEST(Socle, RepresentativesAreKilledByMaximalIdeal) {
  std::mt19937_64 rng(18);
  auto r = ft::ring(2, {"a", "b"});
  std::vector<Polynomial> m{P(r, "a"), P(r, "b")};
  for (int i = 0; i < 30; ++i) {
    Ideal I = random_artinian(rng, r);
    if (is_unit_ideal(I)) continue;
    auto S = socle_basis(I, m);
    ASSERT_FALSE(S.empty());
    for (const auto& s : S) {
      ASSERT_EQ(normal_form(s, I), s);
      for (const auto& x : m) ASSERT_TRUE(ideal_member(x * s, I));
    }
    // independent modulo I: every nonzero combination stays outside I
    const std::size_t n = S.size();
    ASSERT_LE(n, 6u);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Polynomial c(r);
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (1u << j)) c += S[j];
      ASSERT_FALSE(ideal_member(c, I));
    }
  }
}

class DiskCacheTest : public ::testing::Test {
 protected:
  std::filesystem::path dir;
  void SetUp() override {
    dir = std::filesystem::temp_directory_path() /
          ("frobstab_gb_cache_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
           ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(dir);
    GbCache::instance().clear_memory();
    GbCache::instance().set_directory(dir);
  }
  void TearDown() override {
    GbCache::instance().set_directory(std::nullopt);
    GbCache::instance().clear_memory();
    std::filesystem::remove_all(dir);
  }
};

TEST_F(DiskCacheTest, RoundTrip) {
  auto r = ft::ring(3, {"a", "b", "c"});
  auto expected = gb_strings(ft::ideal(r, {"a^2 + b*c", "b^2 - a", "c^3"}));
  ASSERT_FALSE(std::filesystem::is_empty(dir));
  GbCache::instance().clear_memory();
  const auto before = GbCache::instance().stats().disk_hits;
  EXPECT_EQ(gb_strings(ft::ideal(r, {"a^2 + b*c", "b^2 - a", "c^3"})), expected);
  EXPECT_EQ(GbCache::instance().stats().disk_hits, before + 1);
}

TEST_F(DiskCacheTest, CorruptedFileIsRejected) {
  auto r = ft::ring(2, {"a", "b"});
  auto expected = gb_strings(ft::ideal(r, {"a^2 + b", "b^2"}));
  GbCache::instance().clear_memory();
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ifstream in(entry.path());
    std::string text((std::istreambuf_iterator<char>(in)), {});
    in.close();
    auto pos = text.find("a^2 + b\"");
    ASSERT_NE(pos, std::string::npos) << text;
    text.replace(pos, 7, "a^2    ");
    std::ofstream(entry.path()) << text;
  }
  const auto rejects = GbCache::instance().stats().disk_rejects;
  EXPECT_EQ(gb_strings(ft::ideal(r, {"a^2 + b", "b^2"})), expected);
  EXPECT_EQ(GbCache::instance().stats().disk_rejects, rejects + 1);
}

TEST_F(DiskCacheTest, GarbageFileIsRejected) {
  auto r = ft::ring(2, {"a", "b"});
  auto expected = gb_strings(ft::ideal(r, {"a*b + 1", "a^2"}));
  GbCache::instance().clear_memory();
  for (const auto& entry : std::filesystem::directory_iterator(dir)) std::ofstream(entry.path()) << "{not json";
  EXPECT_EQ(gb_strings(ft::ideal(r, {"a*b + 1", "a^2"})), expected);
}
