#include "frobstab/ratfun.hpp"

#include <map>
#include <stdexcept>

#include "frobstab/error.hpp"

namespace frobstab {

namespace {

std::optional<std::size_t> main_variable(const Polynomial& f, const Polynomial& g) {
  std::optional<std::size_t> best;
  for (const auto* h : {&f, &g}) {
    for (const auto& t : h->terms()) {
      for (std::size_t i = t.mono.size(); i-- > 0;) {
        if (t.mono[i] != 0) {
          if (!best || i > *best) best = i;
          break;
        }
      }
    }
  }
  return best;
}

std::uint32_t degree_in(const Polynomial& f, std::size_t var) {
  std::uint32_t d = 0;
  for (const auto& t : f.terms()) d = std::max(d, t.mono[var]);
  return d;
}

// Coefficients of f viewed in F_p[other vars][x_var].
std::map<std::uint32_t, Polynomial> coefficients_in(const Polynomial& f, std::size_t var) {
  std::map<std::uint32_t, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(t.mono.exponents().begin(), t.mono.exponents().end());
    const std::uint32_t d = e[var];
    e[var] = 0;
    buckets[d].push_back({t.coeff, Monomial(std::move(e))});
  }
  std::map<std::uint32_t, Polynomial> out;
  for (auto& [d, terms] : buckets) out.emplace(d, Polynomial(f.ring(), std::move(terms)));
  return out;
}

Polynomial leading_coeff_in(const Polynomial& f, std::size_t var) {
  return coefficients_in(f, var).rbegin()->second;
}

Polynomial exact(const Polynomial& f, const Polynomial& g) {
  auto q = divide_exact(f, g);
  if (!q) throw Inconsistency("gcd: expected exact division");
  return *q;
}

Polynomial content_in(const Polynomial& f, std::size_t var) {
  Polynomial c(f.ring());
  for (const auto& [d, coeff] : coefficients_in(f, var)) {
    c = poly_gcd(c, coeff);
    if (c.is_constant() && !c.is_zero()) break;
  }
  return c;
}

Polynomial primitive_part(const Polynomial& f, std::size_t var) {
  if (f.is_zero()) return f;
  return exact(f, content_in(f, var));
}

Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const std::uint32_t db = degree_in(b, var);
  const Polynomial lb = leading_coeff_in(b, var);
  while (!a.is_zero() && degree_in(a, var) >= db) {
    const std::uint32_t da = degree_in(a, var);
    const Polynomial la = leading_coeff_in(a, var);
    Monomial shift = Monomial::variable(a.ring()->nvars(), var, da - db);
    a = lb * a - (la * b).mul_term(1, shift);
  }
  return a;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  auto var = main_variable(f, g);
  if (!var) return Polynomial::constant(f.ring(), 1);
  const std::size_t x = *var;
  if (degree_in(f, x) == 0 || degree_in(g, x) == 0) {
    // one side free of x: the gcd divides every x-coefficient of the other
    const Polynomial& free_side = degree_in(f, x) == 0 ? f : g;
    const Polynomial& other = degree_in(f, x) == 0 ? g : f;
    return poly_gcd(free_side, content_in(other, x)).monic();
  }
  const Polynomial cont = poly_gcd(content_in(f, x), content_in(g, x));
  Polynomial a = primitive_part(f, x);
  Polynomial b = primitive_part(g, x);
  if (degree_in(a, x) < degree_in(b, x)) std::swap(a, b);
  while (!b.is_zero() && degree_in(b, x) > 0) {
    Polynomial r = pseudo_remainder(a, b, x);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r, x);
  }
  // b == 0: gcd of primitive parts is a; b constant in x: they are coprime in x.
  Polynomial pp = b.is_zero() ? primitive_part(a, x) : Polynomial::constant(f.ring(), 1);
  return (cont * pp).monic();
}

RationalFunction::RationalFunction(Polynomial num) : RationalFunction(num, Polynomial::constant(num.ring(), 1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.ring(), 1);
    return;
  }
  Polynomial g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = exact(num_, g);
    den_ = exact(den_, g);
  }
  const Coeff lc_inv = den_.field().inv(den_.leading_coeff());
  num_ = num_.scaled(lc_inv);
  den_ = den_.scaled(lc_inv);
}

RationalFunction RationalFunction::zero(const RingPtr& ring) { return RationalFunction(Polynomial(ring)); }
RationalFunction RationalFunction::one(const RingPtr& ring) { return constant(ring, 1); }
RationalFunction RationalFunction::constant(const RingPtr& ring, Coeff c) {
  return RationalFunction(Polynomial::constant(ring, c));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Normalized{}); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return zero(ring());
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inverse(); }

RationalFunction RationalFunction::pow(std::uint64_t k) const {
  return RationalFunction(num_.pow(k), den_.pow(k), Normalized{});
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  auto wrap = [](const Polynomial& p) {
    return p.size() > 1 ? "(" + p.to_string() + ")" : p.to_string();
  };
  return wrap(num_) + "/" + wrap(den_);
}

std::optional<RationalFunction> ratfun_pth_root(const RationalFunction& f) {
  const std::uint32_t p = f.ring()->field().characteristic();
  auto root = [p](const Polynomial& h) -> std::optional<Polynomial> {
    std::vector<Term> terms;
    for (const auto& t : h.terms()) {
      std::vector<std::uint32_t> e(t.mono.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (t.mono[i] % p != 0) return std::nullopt;
        e[i] = t.mono[i] / p;
      }
      terms.push_back({t.coeff, Monomial(std::move(e))});
    }
    return Polynomial(h.ring(), std::move(terms));
  };
  auto n = root(f.numerator());
  if (!n) return std::nullopt;
  auto d = root(f.denominator());
  if (!d) return std::nullopt;
  return RationalFunction(*n, *d);
}

}  // namespace frobstab
