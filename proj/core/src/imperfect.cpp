#include "frobstab/imperfect.hpp"

#include "frobstab/error.hpp"
#include "frobstab/prime_field.hpp"

namespace frobstab {

FiniteExtension::FiniteExtension(RingPtr base, std::vector<RationalFunction> low)
    : base_(std::move(base)), low_(std::move(low)) {
  if (low_.empty()) throw InputError("FiniteExtension: modulus must have degree >= 1");
  for (const auto& c : low_)
    if (!c.ring()->same_as(*base_)) throw ContextMismatch("FiniteExtension: coefficient ring mismatch");
}

std::uint32_t FiniteExtension::characteristic() const { return base_->field().characteristic(); }

std::string FiniteExtension::modulus_string() const {
  const std::size_t n = degree();
  std::string s = n == 1 ? "y" : "y^" + std::to_string(n);
  for (std::size_t i = n; i-- > 0;) {
    if (low_[i].is_zero()) continue;
    std::string c = low_[i].to_string();
    if (c.find_first_of("+-/ ") != std::string::npos) c = "(" + c + ")";
    s += " + ";
    if (i == 0) s += c;
    else s += (c == "1" ? "" : c + "*") + (i == 1 ? std::string("y") : "y^" + std::to_string(i));
  }
  return s;
}

std::vector<std::string> FiniteExtension::basis_names() const {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < degree(); ++j)
    out.push_back(j == 0 ? "1" : j == 1 ? "y" : "y^" + std::to_string(j));
  return out;
}

FiniteExtension::Element FiniteExtension::zero() const {
  return Element(degree(), RationalFunction::zero(base_));
}

FiniteExtension::Element FiniteExtension::one() const { return basis(0); }

FiniteExtension::Element FiniteExtension::basis(std::size_t j) const {
  if (j >= degree()) throw InputError("FiniteExtension: basis index out of range");
  Element e = zero();
  e[j] = RationalFunction::one(base_);
  return e;
}

FiniteExtension::Element FiniteExtension::from_scalar(const RationalFunction& c) const {
  Element e = zero();
  e[0] = c;
  return e;
}

FiniteExtension::Element FiniteExtension::add(const Element& a, const Element& b) const {
  Element r = zero();
  for (std::size_t i = 0; i < degree(); ++i) r[i] = a[i] + b[i];
  return r;
}

FiniteExtension::Element FiniteExtension::scale(const RationalFunction& c, const Element& a) const {
  Element r = zero();
  for (std::size_t i = 0; i < degree(); ++i) r[i] = c * a[i];
  return r;
}

FiniteExtension::Element FiniteExtension::mul(const Element& a, const Element& b) const {
  const std::size_t n = degree();
  if (a.size() != n || b.size() != n) throw PreconditionError("FiniteExtension::mul: wrong length");
  std::vector<RationalFunction> prod(2 * n - 1, RationalFunction::zero(base_));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!b[j].is_zero()) prod[i + j] = prod[i + j] + a[i] * b[j];
  }
  // y^n = -sum c_i y^i
  for (std::size_t d = prod.size(); d-- > n;) {
    if (prod[d].is_zero()) continue;
    const RationalFunction c = prod[d];
    prod[d] = RationalFunction::zero(base_);
    for (std::size_t i = 0; i < n; ++i)
      if (!low_[i].is_zero()) prod[d - n + i] = prod[d - n + i] - c * low_[i];
  }
  prod.resize(n, RationalFunction::zero(base_));
  return prod;
}

FiniteExtension::Element FiniteExtension::pow(const Element& a, std::uint64_t k) const {
  Element result = one();
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

bool FiniteExtension::is_zero(const Element& a) const {
  for (const auto& c : a)
    if (!c.is_zero()) return false;
  return true;
}

FiniteExtension build_example_extension(std::uint32_t p) {
  if (!is_prime(p) || p > 7) throw InputError("build_example_extension: p must be a prime <= 7");
  auto k = PolyRing::make(p, {"u", "v"});
  std::vector<RationalFunction> low(2 * p, RationalFunction::zero(k));
  low[0] = -RationalFunction(Polynomial::variable(k, 1));
  low[p] = RationalFunction(Polynomial::variable(k, 0));
  return FiniteExtension(k, std::move(low));
}

std::vector<std::vector<RationalFunction>> p_power_matrix(const FiniteExtension& L) {
  const std::size_t n = L.degree();
  const std::uint32_t p = L.characteristic();
  std::vector<std::vector<RationalFunction>> m(n, std::vector<RationalFunction>(n, RationalFunction::zero(L.base())));
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = L.pow(L.basis(j), p);
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

namespace {

// Canonical kernel basis over k: vector i is 1 at the i-th free column.
std::vector<std::vector<RationalFunction>> kernel_over_k(std::vector<std::vector<RationalFunction>> a,
                                                         const RingPtr& k) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(a[r], a[sel]);
    const RationalFunction inv = a[r][c].inverse();
    for (auto& x : a[r]) x = x * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const RationalFunction f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!a[r][j].is_zero()) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<RationalFunction>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<RationalFunction> v(cols, RationalFunction::zero(k));
    v[free] = RationalFunction::one(k);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

bool verify_witness(const FiniteExtension& L, const TensorNilpotentWitness& w) {
  if (w.relation.size() != L.degree() || w.certificate_index >= w.relation.size()) return false;
  auto sum = L.zero();
  for (std::size_t j = 0; j < L.degree(); ++j) {
    if (w.relation[j].is_zero()) continue;
    sum = L.add(sum, L.scale(w.relation[j], L.pow(L.basis(j), L.characteristic())));
  }
  return L.is_zero(sum) && !w.relation[w.certificate_index].is_zero() &&
         !ratfun_pth_root(w.relation[w.certificate_index]).has_value();
}

std::optional<TensorNilpotentWitness> find_nilpotent_in_tensor(const FiniteExtension& L) {
  // F_p-combinations of kernel vectors that are componentwise p-th powers
  // stay p-th powers, so the canonical basis decides.
  for (auto& v : kernel_over_k(p_power_matrix(L), L.base())) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero() || ratfun_pth_root(v[i])) continue;
      TensorNilpotentWitness w{std::move(v), L.basis_names(), i};
      if (!verify_witness(L, w)) throw Inconsistency("find_nilpotent_in_tensor: witness failed verification");
      return w;
    }
  }
  return std::nullopt;
}

nlohmann::ordered_json to_json(const TensorNilpotentWitness& w) {
  nlohmann::ordered_json j;
  j["relation"] = nlohmann::ordered_json::array();
  for (const auto& a : w.relation) j["relation"].push_back(a.to_string());
  j["basis"] = w.basis;
  j["certificate_index"] = w.certificate_index;
  return j;
}

}  // namespace frobstab
