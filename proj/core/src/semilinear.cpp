#include "frobstab/semilinear.hpp"

#include <map>
#include <set>

#include "frobstab/error.hpp"

namespace frobstab {

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(FiniteField field, std::size_t ambient_dim, linalg::Rows generators)
    : field_(std::move(field)), n_(ambient_dim), basis_(std::move(generators)) {
  for (const auto& r : basis_)
    if (r.size() != n_) throw PreconditionError("Subspace: generator has wrong length");
  linalg::rref(field_, basis_);
}

Subspace Subspace::full(const FiniteField& field, std::size_t n) {
  linalg::Rows id(n, linalg::Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return Subspace(field, n, std::move(id));
}

bool Subspace::contains(const Vector& v) const {
  linalg::Rows rows = basis_;
  rows.push_back(v);
  return linalg::rank(field_, rows) == basis_.size();
}

bool Subspace::contains(const Subspace& o) const {
  linalg::Rows rows = basis_;
  rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
  return linalg::rank(field_, rows) == basis_.size();
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (n_ != o.n_) throw PreconditionError("Subspace sum: dimension mismatch");
  linalg::Rows rows = basis_;
  rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
  return Subspace(field_, n_, std::move(rows));
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (n_ != o.n_) throw PreconditionError("Subspace intersection: dimension mismatch");
  if (basis_.empty() || o.basis_.empty()) return zero(field_, n_);
  // x in both iff x = sum a_i u_i = sum b_j w_j; solve for (a, b)
  const std::size_t m = basis_.size() + o.basis_.size();
  linalg::Rows sys(n_, linalg::Row(m, 0));
  for (std::size_t c = 0; c < n_; ++c) {
    for (std::size_t i = 0; i < basis_.size(); ++i) sys[c][i] = basis_[i][c];
    for (std::size_t j = 0; j < o.basis_.size(); ++j) sys[c][basis_.size() + j] = field_.neg(o.basis_[j][c]);
  }
  linalg::Rows out;
  for (const auto& sol : linalg::kernel(field_, sys, m)) {
    linalg::Row v(n_, 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (sol[i] == 0) continue;
      for (std::size_t c = 0; c < n_; ++c) v[c] = field_.add(v[c], field_.mul(sol[i], basis_[i][c]));
    }
    out.push_back(std::move(v));
  }
  return Subspace(field_, n_, std::move(out));
}

std::vector<Vector> Subspace::elements(std::uint64_t limit) const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    total *= field_.order();
    if (total > limit) throw ResourceLimit("Subspace::elements: too many vectors");
  }
  std::vector<Vector> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    Vector v(n_, 0);
    std::uint64_t x = code;
    for (const auto& b : basis_) {
      const auto c = static_cast<FiniteField::Elem>(x % field_.order());
      x /= field_.order();
      if (c == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] = field_.add(v[j], field_.mul(c, b[j]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// SemilinearOperator

SemilinearOperator::SemilinearOperator(FiniteField field, Matrix a, unsigned twist)
    : field_(std::move(field)), a_(std::move(a)), twist_(twist) {
  if (twist_ < 1) throw InputError("semilinear operator: twist must be >= 1");
  for (const auto& row : a_) {
    if (row.size() != a_.size()) throw InputError("semilinear operator: matrix must be square");
    for (auto x : row)
      if (x >= field_.order()) throw InputError("semilinear operator: entry outside the field");
  }
}

Vector frobenius_vector(const FiniteField& k, const Vector& v, std::uint64_t k_power) {
  const unsigned shift = static_cast<unsigned>(k_power % k.degree());
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = k.frobenius(v[i], shift);
  return out;
}

namespace {

Vector mat_vec(const FiniteField& k, const Matrix& a, const Vector& v) {
  Vector out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (a[i][j] != 0 && v[j] != 0) out[i] = k.add(out[i], k.mul(a[i][j], v[j]));
  return out;
}

Matrix mat_mul(const FiniteField& k, const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, Vector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b[l][j] != 0) c[i][j] = k.add(c[i][j], k.mul(a[i][l], b[l][j]));
    }
  return c;
}

Matrix frobenius_matrix_entries(const FiniteField& k, const Matrix& a, std::uint64_t k_power) {
  Matrix out;
  for (const auto& row : a) out.push_back(frobenius_vector(k, row, k_power));
  return out;
}

std::uint64_t as_code(const FiniteField& k, const Vector& v) {
  std::uint64_t code = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) code = code * k.order() + *it;
  return code;
}

bool is_zero_vector(const Vector& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

Vector SemilinearOperator::apply(const Vector& v) const {
  if (v.size() != dim()) throw PreconditionError("apply: dimension mismatch");
  return mat_vec(field_, a_, frobenius_vector(field_, v, twist_));
}

Matrix SemilinearOperator::power_matrix(unsigned j) const {
  Matrix acc(dim(), Vector(dim(), 0));
  for (std::size_t i = 0; i < dim(); ++i) acc[i][i] = 1;
  for (unsigned s = 0; s < j; ++s)
    acc = mat_mul(field_, acc, frobenius_matrix_entries(field_, a_, static_cast<std::uint64_t>(s) * twist_));
  return acc;
}

bool SemilinearOperator::is_injective() const {
  linalg::Rows rows(a_.begin(), a_.end());
  return linalg::rank(field_, rows) == dim();
}

nlohmann::ordered_json SemilinearOperator::to_json() const {
  nlohmann::ordered_json j;
  j["field"] = {{"p", field_.characteristic()}, {"n", field_.degree()}};
  j["twist"] = twist_;
  j["matrix"] = a_;
  return j;
}

SemilinearOperator SemilinearOperator::from_json(const nlohmann::json& j) {
  try {
    FiniteField k = FiniteField::make(j.at("field").at("p").get<std::uint32_t>(), j.at("field").at("n").get<unsigned>());
    return SemilinearOperator(k, j.at("matrix").get<Matrix>(), j.value("twist", 1u));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("matrix JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

Subspace image_span(const SemilinearOperator& op, const Subspace& W) {
  linalg::Rows images;
  for (const auto& b : W.basis()) images.push_back(op.apply(b));
  return Subspace(op.field(), op.dim(), std::move(images));
}

Subspace stable_part(const SemilinearOperator& op) {
  Subspace w = Subspace::full(op.field(), op.dim());
  for (;;) {
    Subspace next = image_span(op, w);
    if (next == w) return w;
    if (next.dim() == w.dim()) throw Inconsistency("stable_part: image chain not descending");
    w = std::move(next);
  }
}

Subspace nil_part(const SemilinearOperator& op) {
  const FiniteField& k = op.field();
  const std::size_t n = op.dim();
  Subspace prev = Subspace::zero(k, n);
  for (unsigned j = 1; j <= n + 1; ++j) {
    // phi^j(v) = A_j v^{(q^j)}: kernel of A_j, pulled back through coordinate Frobenius
    const Matrix aj = op.power_matrix(j);
    linalg::Rows ker = linalg::kernel(k, linalg::Rows(aj.begin(), aj.end()), n);
    const std::uint64_t back = static_cast<std::uint64_t>(j) * op.twist();
    for (auto& v : ker)
      for (auto& x : v) x = k.frobenius_inverse(x, static_cast<unsigned>(back % k.degree()));
    Subspace cur(k, n, std::move(ker));
    if (cur == prev) return cur;
    prev = std::move(cur);
  }
  return prev;
}

FittingReport fitting_check(const SemilinearOperator& op) {
  FittingReport r;
  const Subspace s = stable_part(op);
  const Subspace nil = nil_part(op);
  r.dim = op.dim();
  r.stable_dim = s.dim();
  r.nil_dim = nil.dim();
  const Subspace img = image_span(op, s);
  r.injective_on_stable = img.dim() == s.dim();
  r.image_is_stable = img == s;
  r.trivial_intersection = s.intersect(nil).dim() == 0;
  r.dims_add_up = s.dim() + nil.dim() == op.dim();
  if (!r.injective_on_stable) r.failures.push_back("phi not injective on the stable part");
  if (!r.image_is_stable) r.failures.push_back("span phi(M_s) differs from M_s");
  if (!r.trivial_intersection) r.failures.push_back("stable and nilpotent parts intersect");
  if (!r.dims_add_up) r.failures.push_back("dim M_s + dim M_nil differs from dim M");
  r.pass = r.failures.empty();
  return r;
}

SocleChainReport socle_chain(const SemilinearOperator& op, const Subspace& S) {
  SocleChainReport r;
  std::map<linalg::Rows, std::size_t> seen;
  std::vector<Subspace> images;
  std::vector<Subspace> meets;
  Subspace img = S;
  for (std::size_t e = 0;; ++e) {
    auto [it, fresh] = seen.emplace(img.basis(), e);
    if (!fresh) {
      r.period_start = it->second;
      r.period = e - it->second;
      break;
    }
    meets.push_back(S.intersect(img));
    r.direct_dims.push_back(meets.back().dim());
    images.push_back(img);
    img = image_span(op, img);
  }
  for (std::size_t e = r.period_start; e < r.direct_dims.size(); ++e)
    r.infinitely_often_nonzero = r.infinitely_often_nonzero || r.direct_dims[e] > 0;
  for (std::size_t e = 0; e + 1 < meets.size(); ++e)
    r.claim_holds = r.claim_holds && image_span(op, meets[e]).contains(meets[e + 1]);

  Subspace cur = S;
  r.recursive_dims.push_back(cur.dim());
  for (;;) {
    Subspace next = S.intersect(image_span(op, cur));
    if (next == cur) break;
    cur = std::move(next);
    r.recursive_dims.push_back(cur.dim());
  }
  r.limit_dim = cur.dim();
  return r;
}

std::optional<Vector> find_stable_socle_element(const SemilinearOperator& op, const Subspace& S) {
  if (S.dim() == 0) return std::nullopt;
  std::uint64_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < S.dim() && small; ++i) {
    total *= op.field().order();
    small = total <= (1u << 16);
  }
  if (!small) {
    Subspace cur = S;
    for (;;) {
      Subspace next = S.intersect(image_span(op, cur));
      if (next == cur) break;
      cur = std::move(next);
    }
    if (cur.dim() == 0) return std::nullopt;
    return cur.basis().front();
  }
  // vectors known to have their whole orbit inside S (true) or not (false)
  std::map<std::uint64_t, bool> verdict;
  for (const auto& eta : S.elements()) {
    if (is_zero_vector(eta)) continue;
    std::vector<std::uint64_t> path;
    std::set<std::uint64_t> on_path;
    Vector v = eta;
    bool ok = true;
    for (;;) {
      const std::uint64_t code = as_code(op.field(), v);
      if (auto it = verdict.find(code); it != verdict.end()) {
        ok = it->second;
        break;
      }
      if (on_path.count(code)) break;  // closed a cycle inside S
      if (!S.contains(v)) {
        ok = false;
        break;
      }
      path.push_back(code);
      on_path.insert(code);
      v = op.apply(v);
    }
    for (auto c : path) verdict[c] = ok;
    if (ok) return eta;
  }
  return std::nullopt;
}

SemilinearOperator base_change(const SemilinearOperator& op, unsigned n) {
  if (op.field().degree() != 1) throw PreconditionError("base_change: operator must be over F_p");
  return SemilinearOperator(FiniteField::make(op.field().characteristic(), n), op.matrix(), op.twist());
}

}  // namespace frobstab
