#include "frobstab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

#include "frobstab/error.hpp"

namespace frobstab {

// ---------------------------------------------------------------- PolyRing

PolyRing::PolyRing(PrimeField field, std::vector<std::string> vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(order) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = i + 1; j < vars_.size(); ++j) {
      if (vars_[i] == vars_[j]) throw InputError("duplicate variable name '" + vars_[i] + "'");
    }
  }
}

std::shared_ptr<const PolyRing> PolyRing::make(std::uint32_t p, std::vector<std::string> vars,
                                               MonomialOrder order) {
  return std::make_shared<const PolyRing>(PrimeField(p), std::move(vars), order);
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

std::uint64_t prime_power(std::uint32_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > (std::uint64_t{1} << 40) / p) throw ResourceLimit("p^e overflows");
    q *= p;
  }
  return q;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& order = ring_->order();
  const auto& k = ring_->field();
  for (auto& t : terms) {
    if (t.mono.size() != ring_->nvars()) throw ContextMismatch("monomial length does not match ring");
    t.coeff %= k.characteristic();
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = k.add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, Coeff c) {
  Monomial one(ring->nvars());
  return monomial(std::move(ring), c, std::move(one));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m = Monomial::variable(ring->nvars(), index);
  return monomial(std::move(ring), 1, std::move(m));
}

Polynomial Polynomial::monomial(RingPtr ring, Coeff c, Monomial m) {
  Polynomial r(std::move(ring));
  c %= r.ring_->field().characteristic();
  if (c != 0) r.terms_.push_back({c, std::move(m)});
  return r;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::tail() const {
  Polynomial r(ring_);
  if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

void Polynomial::check_context(const Polynomial& o) const {
  if (ring_ != o.ring_ && !ring_->same_as(*o.ring_)) {
    throw ContextMismatch("polynomials live in different rings");
  }
}

namespace {

// Merge a and sign*c*b, both sorted descending.
std::vector<Term> merge_axpy(const PolyRing& ring, const std::vector<Term>& a,
                             const std::vector<Term>& b, Coeff c, const Monomial* shift) {
  const auto& k = ring.field();
  const auto& order = ring.order();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto b_term = [&](std::size_t idx) {
    return Term{k.mul(c, b[idx].coeff), shift ? b[idx].mono * *shift : b[idx].mono};
  };
  std::optional<Term> pending;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !pending) pending = b_term(j);
    if (j >= b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i >= a.size()) {
      if (pending->coeff != 0) out.push_back(std::move(*pending));
      pending.reset();
      ++j;
      continue;
    }
    int cmp = order.compare(a[i].mono, pending->mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      if (pending->coeff != 0) out.push_back(std::move(*pending));
      pending.reset();
      ++j;
    } else {
      Coeff s = k.add(a[i].coeff, pending->coeff);
      if (s != 0) out.push_back({s, a[i].mono});
      ++i;
      ++j;
      pending.reset();
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_context(o);
  Polynomial r(ring_);
  r.terms_ = merge_axpy(*ring_, terms_, o.terms_, 1, nullptr);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_context(o);
  Polynomial r(ring_);
  r.terms_ = merge_axpy(*ring_, terms_, o.terms_, ring_->field().neg(1), nullptr);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(1)); }

Polynomial Polynomial::sub_mul_term(Coeff c, const Monomial& m, const Polynomial& g) const {
  check_context(g);
  Polynomial r(ring_);
  r.terms_ = merge_axpy(*ring_, terms_, g.terms_, ring_->field().neg(c), &m);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_context(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  const auto& k = ring_->field();
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].coeff, o.terms_[0].mono);
  if (terms_.size() == 1) return o.mul_term(terms_[0].coeff, terms_[0].mono);
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      auto [it, inserted] = acc.try_emplace(a.mono * b.mono, 0);
      it->second = k.add(it->second, k.mul(a.coeff, b.coeff));
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({c, m});
  }
  return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= ring_->field().characteristic();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::mul_term(Coeff c, const Monomial& m) const {
  c %= ring_->field().characteristic();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({ring_->field().mul(t.coeff, c), t.mono * m});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::map_to(const RingPtr& target, std::span<const std::size_t> index_map) const {
  if (target->field().characteristic() != ring_->field().characteristic()) {
    throw ContextMismatch("map_to: characteristic differs");
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> e(target->nvars(), 0);
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] != 0) e.at(index_map[i]) += t.mono[i];
    }
    terms.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial(target, std::move(terms));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].mono == o.terms_[i].mono)) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i > 0) out += " + ";
    std::string mono;
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (t.mono[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars()[v];
      if (t.mono[v] > 1) mono += "^" + std::to_string(t.mono[v]);
    }
    if (mono.empty()) {
      out += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += mono;
    } else {
      out += std::to_string(t.coeff) + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------- helpers

Polynomial frobenius_poly(const Polynomial& f, unsigned e) {
  if (e == 0) return f;
  const auto& k = f.field();
  const std::uint64_t q = prime_power(k.characteristic(), e);
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({k.pow(t.coeff, q), t.mono.pow(q)});
  // m -> m^q is strictly monotone for any term order, so the order is kept.
  return Polynomial(f.ring(), std::move(terms));
}

std::optional<std::uint64_t> homogeneous_degree(const Polynomial& f,
                                                std::span<const std::uint32_t> weights) {
  if (weights.size() != f.ring()->nvars()) throw ContextMismatch("weight vector length");
  if (f.is_zero()) return 0;
  const std::uint64_t d = f.terms()[0].mono.weighted_degree(weights);
  for (const auto& t : f.terms()) {
    if (t.mono.weighted_degree(weights) != d) return std::nullopt;
  }
  return d;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& k = f.field();
  const Coeff lc_inv = k.inv(g.leading_coeff());
  const Monomial& lm = g.leading_monomial();
  Polynomial rest = f;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!lm.divides(lt.mono)) return std::nullopt;
    Coeff c = k.mul(lt.coeff, lc_inv);
    Monomial m = lt.mono / lm;
    quotient.push_back({c, m});
    rest = rest.sub_mul_term(c, m, g);
  }
  return Polynomial(f.ring(), std::move(quotient));
}

// ----------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty expression");
    Polynomial r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("parse error at offset " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      base = base.pow(integer_exponent());
    }
    return base;
  }

  std::uint64_t integer_exponent() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected integer exponent");
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::uint64_t{1} << 30)) fail("exponent too large");
      ++pos_;
    }
    return v;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t p = ring_->field().characteristic();
      std::uint64_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = (v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % p;
        ++pos_;
      }
      return Polynomial::constant(ring_, static_cast<Coeff>(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

}  // namespace frobstab
