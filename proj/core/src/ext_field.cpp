#include "frobstab/ext_field.hpp"

#include <algorithm>
#include <stdexcept>

#include "frobstab/error.hpp"

namespace frobstab {

namespace unipoly {

void trim(UniPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UniPoly add(const PrimeField& k, const UniPoly& f, const UniPoly& g) {
  UniPoly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Coeff a = i < f.size() ? f[i] : 0;
    Coeff b = i < g.size() ? g[i] : 0;
    r[i] = k.add(a, b);
  }
  trim(r);
  return r;
}

UniPoly sub(const PrimeField& k, const UniPoly& f, const UniPoly& g) {
  UniPoly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Coeff a = i < f.size() ? f[i] : 0;
    Coeff b = i < g.size() ? g[i] : 0;
    r[i] = k.sub(a, b);
  }
  trim(r);
  return r;
}

UniPoly mul(const PrimeField& k, const UniPoly& f, const UniPoly& g) {
  if (f.empty() || g.empty()) return {};
  UniPoly r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      r[i + j] = k.add(r[i + j], k.mul(f[i], g[j]));
    }
  }
  trim(r);
  return r;
}

UniPoly mod(const PrimeField& k, UniPoly f, const UniPoly& g) {
  if (g.empty()) throw std::domain_error("polynomial division by zero");
  trim(f);
  const Coeff lead_inv = k.inv(g.back());
  while (f.size() >= g.size()) {
    Coeff c = k.mul(f.back(), lead_inv);
    std::size_t shift = f.size() - g.size();
    for (std::size_t j = 0; j < g.size(); ++j) {
      f[shift + j] = k.sub(f[shift + j], k.mul(c, g[j]));
    }
    trim(f);
  }
  return f;
}

UniPoly gcd(const PrimeField& k, UniPoly f, UniPoly g) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    UniPoly r = mod(k, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty()) {
    Coeff inv = k.inv(f.back());
    for (auto& c : f) c = k.mul(c, inv);
  }
  return f;
}

UniPoly powmod(const PrimeField& k, UniPoly base, std::uint64_t e, const UniPoly& m) {
  UniPoly result{1 % k.characteristic()};
  base = mod(k, std::move(base), m);
  while (e > 0) {
    if (e & 1) result = mod(k, mul(k, result, base), m);
    base = mod(k, mul(k, base, base), m);
    e >>= 1;
  }
  return mod(k, result, m);
}

}  // namespace unipoly

bool is_irreducible(const PrimeField& k, const UniPoly& f_in) {
  UniPoly f = f_in;
  unipoly::trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  // f is irreducible iff gcd(f, x^{p^j} - x) = 1 for all j <= n/2.
  UniPoly x{0, 1};
  UniPoly power = x;
  for (std::size_t j = 1; j <= n / 2; ++j) {
    power = unipoly::powmod(k, power, k.characteristic(), f);
    UniPoly g = unipoly::gcd(k, f, unipoly::sub(k, power, x));
    if (g.size() != 1) return false;
  }
  return true;
}

ExtField::ExtField(PrimeField base, UniPoly modulus)
    : base_(base), modulus_(std::move(modulus)) {
  unipoly::trim(modulus_);
  if (modulus_.size() < 2 || modulus_.back() != 1) {
    throw InputError("extension modulus must be monic of degree >= 1");
  }
  n_ = static_cast<unsigned>(modulus_.size() - 1);
  if (!is_irreducible(base_, modulus_)) {
    throw InputError("extension modulus is reducible over F_p");
  }
}

ExtField ExtField::standard(PrimeField base, unsigned n) {
  if (n == 0) throw InputError("extension degree must be >= 1");
  const std::uint32_t p = base.characteristic();
  if (n == 1) return ExtField(base, UniPoly{0, 1});
  std::uint64_t count = 1;
  for (unsigned i = 0; i < n; ++i) {
    count *= p;
    if (count > (std::uint64_t{1} << 32)) throw ResourceLimit("extension field too large");
  }
  for (std::uint64_t code = 0; code < count; ++code) {
    UniPoly f(n + 1, 0);
    f[n] = 1;
    std::uint64_t c = code;
    for (unsigned i = 0; i < n; ++i) {
      f[i] = static_cast<Coeff>(c % p);
      c /= p;
    }
    if (is_irreducible(base, f)) return ExtField(base, f);
  }
  throw Inconsistency("no irreducible polynomial found");
}

std::uint64_t ExtField::order() const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n_; ++i) q *= base_.characteristic();
  return q;
}

ExtElem ExtField::one() const {
  ExtElem r(n_, 0);
  r[0] = 1;
  return r;
}

ExtElem ExtField::from_base(Coeff c) const {
  ExtElem r(n_, 0);
  r[0] = c % base_.characteristic();
  return r;
}

bool ExtField::is_zero(const ExtElem& a) const {
  return std::all_of(a.begin(), a.end(), [](Coeff c) { return c == 0; });
}

ExtElem ExtField::reduce(UniPoly f) const {
  f = unipoly::mod(base_, std::move(f), modulus_);
  f.resize(n_, 0);
  return f;
}

ExtElem ExtField::add(const ExtElem& a, const ExtElem& b) const {
  ExtElem r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = base_.add(a[i], b[i]);
  return r;
}

ExtElem ExtField::sub(const ExtElem& a, const ExtElem& b) const {
  ExtElem r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = base_.sub(a[i], b[i]);
  return r;
}

ExtElem ExtField::neg(const ExtElem& a) const {
  ExtElem r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = base_.neg(a[i]);
  return r;
}

ExtElem ExtField::mul(const ExtElem& a, const ExtElem& b) const {
  UniPoly fa = a, fb = b;
  unipoly::trim(fa);
  unipoly::trim(fb);
  return reduce(unipoly::mul(base_, fa, fb));
}

ExtElem ExtField::pow(const ExtElem& a, std::uint64_t e) const {
  ExtElem result = one();
  ExtElem b = a;
  while (e > 0) {
    if (e & 1) result = mul(result, b);
    b = mul(b, b);
    e >>= 1;
  }
  return result;
}

ExtElem ExtField::inv(const ExtElem& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero in F_{p^n}");
  return pow(a, order() - 2);
}

ExtElem ExtField::frobenius(const ExtElem& a, unsigned e) const {
  ExtElem r = a;
  for (unsigned i = 0; i < e; ++i) r = pow(r, base_.characteristic());
  return r;
}

std::uint32_t ExtField::encode(const ExtElem& a) const {
  std::uint64_t code = 0;
  for (unsigned i = n_; i-- > 0;) code = code * base_.characteristic() + a[i];
  return static_cast<std::uint32_t>(code);
}

ExtElem ExtField::decode(std::uint32_t code) const {
  ExtElem r(n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    r[i] = code % base_.characteristic();
    code /= base_.characteristic();
  }
  return r;
}

// ---------------------------------------------------------------------------

FiniteField::FiniteField(PrimeField base)
    : p_(base.characteristic()), n_(1), q_(base.characteristic()), modulus_{0, 1} {}

FiniteField::FiniteField(const ExtField& ext)
    : p_(ext.base().characteristic()), n_(ext.degree()), modulus_(ext.modulus()) {
  if (ext.order() > (1u << 16)) throw ResourceLimit("FiniteField tables limited to q <= 2^16");
  q_ = static_cast<std::uint32_t>(ext.order());
  if (n_ > 1) build_tables(ext);
}

FiniteField FiniteField::make(std::uint32_t p, unsigned n) {
  PrimeField k(p);
  if (n == 1) return FiniteField(k);
  return FiniteField(ExtField::standard(k, n));
}

void FiniteField::build_tables(const ExtField& ext) {
  // find a primitive element by brute force
  const std::uint32_t m = q_ - 1;
  std::vector<std::uint32_t> prime_factors;
  {
    std::uint32_t r = m;
    for (std::uint32_t d = 2; d * d <= r; ++d) {
      if (r % d == 0) {
        prime_factors.push_back(d);
        while (r % d == 0) r /= d;
      }
    }
    if (r > 1) prime_factors.push_back(r);
  }
  std::uint32_t generator = 0;
  for (std::uint32_t c = 2; c < q_ && generator == 0; ++c) {
    ExtElem g = ext.decode(c);
    bool primitive = true;
    for (std::uint32_t f : prime_factors) {
      if (ext.encode(ext.pow(g, m / f)) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) generator = c;
  }
  if (generator == 0) throw Inconsistency("no primitive element in F_q");
  exp_.assign(2 * static_cast<std::size_t>(m), 0);
  log_.assign(q_, 0);
  ExtElem g = ext.decode(generator);
  ExtElem cur = ext.one();
  for (std::uint32_t i = 0; i < m; ++i) {
    std::uint32_t code = ext.encode(cur);
    exp_[i] = code;
    exp_[i + m] = code;
    log_[code] = i;
    cur = ext.mul(cur, g);
  }
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (n_ == 1) {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < n_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (n_ == 1) return a == 0 ? 0 : p_ - a;
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < n_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  if (n_ == 1) return PrimeField(p_).inv(a);
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (n_ == 1) return PrimeField(p_).pow(a, e);
  if (a == 0) return e == 0 ? 1 : 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

FiniteField::Elem FiniteField::frobenius(Elem a, unsigned e) const {
  if (n_ == 1) return a;
  unsigned shift = e % n_;
  std::uint64_t power = 1;
  for (unsigned i = 0; i < shift; ++i) power *= p_;
  return pow(a, power);
}

FiniteField::Elem FiniteField::frobenius_inverse(Elem a, unsigned e) const {
  if (n_ == 1) return a;
  unsigned shift = e % n_;
  return frobenius(a, (n_ - shift) % n_);
}

std::string FiniteField::name() const {
  if (n_ == 1) return "F_" + std::to_string(p_);
  return "F_" + std::to_string(p_) + "^" + std::to_string(n_);
}

}  // namespace frobstab
