#include "frobstab/frobenius.hpp"

#include <map>
#include <unordered_map>

#include "frobstab/error.hpp"
#include "frobstab/linalg.hpp"

namespace frobstab {

namespace {

void check_same(const Ideal& a, const Ideal& b, const char* what) {
  if (!a.ring()->same_as(*b.ring())) throw ContextMismatch(std::string(what) + ": ring mismatch");
}

// One root step on a generating set.
std::vector<Polynomial> root_once(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const RingPtr& ring = g.ring();
    const std::uint32_t p = ring->field().characteristic();
    std::map<std::vector<std::uint32_t>, std::vector<Term>> parts;
    for (const auto& t : g.terms()) {
      std::vector<std::uint32_t> mu(ring->nvars()), h(ring->nvars());
      for (std::size_t i = 0; i < ring->nvars(); ++i) {
        mu[i] = t.mono[i] % p;
        h[i] = t.mono[i] / p;
      }
      parts[mu].push_back({t.coeff, Monomial(std::move(h))});
    }
    for (auto& [mu, terms] : parts) out.emplace_back(ring, std::move(terms));
  }
  return out;
}

bool certified_trivial(const Ideal& I, const Ideal& ambient) {
  if (!ambient.is_zero_ideal() || I.is_zero_ideal()) return false;
  std::vector<bool> used(I.ring()->nvars(), false);
  for (const auto& g : I.generators()) {
    if (g.size() != 1) return false;
    const Monomial& m = g.leading_monomial();
    std::optional<std::size_t> var;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (var) return false;
      var = i;
    }
    if (!var || used[*var]) return false;
    used[*var] = true;
  }
  return true;
}

}  // namespace

Ideal bracket_power(const Ideal& I, unsigned e) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(frobenius_poly(g, e));
  return Ideal(I.ring(), std::move(gens));
}

Ideal bracket_power(const Ideal& I, unsigned e, const Ideal& ambient) {
  check_same(I, ambient, "bracket_power");
  return bracket_power(I, e) + ambient;
}

Ideal frobenius_root(const Ideal& I, unsigned e) {
  std::vector<Polynomial> gens = I.generators();
  for (unsigned k = 0; k < e; ++k) gens = root_once(gens);
  return Ideal(I.ring(), std::move(gens));
}

Ideal frobenius_root(const Ideal& I, unsigned e, const Ideal& ambient) {
  check_same(I, ambient, "frobenius_root");
  return frobenius_root(I + ambient, e);
}

Ideal frobenius_preimage_by_elimination(const Ideal& K, unsigned e) {
  const RingPtr& ring = K.ring();
  if (e == 0 || is_unit_ideal(K) || K.is_zero_ideal()) return K;
  const std::size_t n = ring->nvars();
  const std::uint64_t q = prime_power(ring->field().characteristic(), e);
  if (q > (1u << 30)) throw ResourceLimit("Frobenius exponent too large");
  std::vector<std::string> vars = ring->vars();
  std::vector<std::string> fresh;
  for (std::size_t i = 0; i < n; ++i) {
    std::string name = "_y" + std::to_string(i);
    while (std::find(vars.begin(), vars.end(), name) != vars.end()) name += "_";
    vars.push_back(name);
  }
  const RingPtr ext = std::make_shared<const PolyRing>(ring->field(), vars, MonomialOrder::block(n));
  std::vector<std::size_t> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : K.generators()) gens.push_back(g.map_to(ext, up));
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(Polynomial::variable(ext, n + i) -
                   Polynomial::monomial(ext, 1, Monomial::variable(2 * n, i, static_cast<std::uint32_t>(q))));
  }
  const auto basis = buchberger(std::move(gens), groebner_options());
  std::vector<std::size_t> down(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) down[n + i] = i;
  std::vector<Polynomial> out;
  for (const auto& g : basis) {
    bool has_x = false;
    for (const auto& t : g.terms())
      for (std::size_t i = 0; i < n && !has_x; ++i) has_x = t.mono[i] != 0;
    if (!has_x) out.push_back(g.map_to(ring, down));
  }
  return Ideal(ring, std::move(out));
}

Ideal frobenius_preimage(const Ideal& K, unsigned e, const Ideal& lower) {
  check_same(K, lower, "frobenius_preimage");
  const RingPtr& ring = K.ring();
  if (e == 0) return K;
  if (is_unit_ideal(K)) return K;
  if (is_unit_ideal(lower)) throw PreconditionError("frobenius_preimage: lower bound is the unit ideal");
  if (!ideal_contains(K, bracket_power(lower, e)))
    throw PreconditionError("frobenius_preimage: lower bound is not inside the preimage");
  const std::vector<std::uint32_t> weights(ring->nvars(), 1);
  const StaircaseBasis B = staircase(lower, weights);
  // images x^{p^e} mod K, one Frobenius step at a time to keep degrees low
  std::vector<Polynomial> images;
  images.reserve(B.size());
  for (const auto& m : B.monomials) {
    Polynomial g = Polynomial::monomial(ring, 1, m);
    for (unsigned k = 0; k < e; ++k) g = normal_form(frobenius_poly(g, 1), K);
    images.push_back(std::move(g));
  }
  std::unordered_map<Monomial, std::size_t, MonomialHash> col;
  for (const auto& g : images)
    for (const auto& t : g.terms()) col.emplace(t.mono, col.size());
  // kernel of the map coefficient vector -> image: rows indexed by image monomials
  linalg::Rows rows(col.size(), linalg::Row(B.size(), 0));
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& t : images[j].terms()) rows[col.at(t.mono)][j] = t.coeff;
  const linalg::Rows ker = linalg::kernel(ring->field(), rows, B.size());
  std::vector<Polynomial> extra;
  for (const auto& v : ker) extra.push_back(from_coordinates(ring, v, B));
  return lower.with_generators(extra);
}

Ideal frobenius_preimage(const Ideal& K, unsigned e) {
  if (e > 0 && !is_unit_ideal(K) && is_artinian(K)) return frobenius_preimage(K, e, K);
  return frobenius_preimage_by_elimination(K, e);
}

std::string to_string(ClosureStatus s) {
  switch (s) {
    case ClosureStatus::CertifiedTrivial: return "certified-trivial";
    case ClosureStatus::StabilizedHeuristic: return "stabilized-heuristic";
    case ClosureStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "unknown";
}

ClosureReport frobenius_closure(const Ideal& I, const Ideal& ambient, const ClosureOptions& opts) {
  check_same(I, ambient, "frobenius_closure");
  if (opts.e_max < 1 || opts.window < 1) throw InputError("frobenius_closure: e_max and window must be >= 1");
  const Ideal J0 = I + ambient;
  ClosureReport report{J0, ClosureStatus::CertifiedTrivial, {{0, J0}}};
  if (certified_trivial(I, ambient)) return report;
  report.status = ClosureStatus::BudgetExhausted;
  unsigned streak = 0;
  for (unsigned e = 1; e <= opts.e_max; ++e) {
    const Ideal& prev = report.steps.back().ideal;
    const Ideal K = bracket_power(I, e, ambient);
    Ideal next = (!is_unit_ideal(prev) && is_artinian(prev)) ? frobenius_preimage(K, e, prev)
                                                              : frobenius_preimage_by_elimination(K, e);
    if (!ideal_contains(next, prev))
      throw Inconsistency("Frobenius closure chain not ascending at e = " + std::to_string(e));
    streak = ideal_equal(next, prev) ? streak + 1 : 0;
    report.steps.push_back({e, std::move(next)});
    if (streak >= opts.window) {
      report.status = ClosureStatus::StabilizedHeuristic;
      break;
    }
  }
  report.closure = report.steps.back().ideal;
  return report;
}

ClosureReport frobenius_closure(const Ideal& I, const ClosureOptions& opts) {
  return frobenius_closure(I, Ideal::zero(I.ring()), opts);
}

std::pair<bool, ClosureStatus> is_frobenius_closed(const Ideal& I, const Ideal& ambient,
                                                   const ClosureOptions& opts) {
  const ClosureReport r = frobenius_closure(I, ambient, opts);
  return {ideal_equal(r.closure, r.steps.front().ideal), r.status};
}

std::optional<Polynomial> closure_witness(const ClosureReport& report) {
  const Ideal& base = report.steps.front().ideal;
  for (const auto& g : report.closure.groebner_basis())
    if (!ideal_member(g, base)) return g;
  return std::nullopt;
}

}  // namespace frobstab
