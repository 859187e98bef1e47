#include "frobstab/groebner.hpp"

#include <algorithm>
#include <unordered_map>

#include "frobstab/error.hpp"
#include "frobstab/linalg.hpp"

namespace frobstab {

namespace {

std::mutex g_options_mutex;
GroebnerOptions g_options;

Polynomial reduce_by(const Polynomial& f, const std::vector<const Polynomial*>& divisors) {
  const auto& k = f.field();
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Polynomial* div = nullptr;
    for (const Polynomial* g : divisors) {
      if (g->leading_monomial().divides(lt.mono)) {
        div = g;
        break;
      }
    }
    if (div != nullptr) {
      const Coeff c = k.mul(lt.coeff, k.inv(div->leading_coeff()));
      p = p.sub_mul_term(c, lt.mono / div->leading_monomial(), *div);
    } else {
      remainder.push_back(lt);
      p = p.tail();
    }
  }
  return Polynomial(f.ring(), std::move(remainder));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const RingPtr& ring, const GroebnerOptions& opts, std::uint64_t degree_cap)
      : ring_(ring), opts_(opts), cap_(degree_cap) {}

  // Returns false if the unit ideal was detected.
  bool insert(const Polynomial& g) {
    Polynomial h = reduce_by(g, active_list());
    if (h.is_zero()) return true;
    if (h.is_constant()) return false;
    add(h.monic());
    return true;
  }

  bool run() {
    std::size_t processed = 0;
    const auto& order = ring_->order();
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        int c = order.compare(pairs_[k].lcm, pairs_[best].lcm);
        if (c < 0 || (c == 0 && std::tie(pairs_[k].j, pairs_[k].i) < std::tie(pairs_[best].j, pairs_[best].i))) {
          best = k;
        }
      }
      Pair pr = std::move(pairs_[best]);
      pairs_[best] = std::move(pairs_.back());
      pairs_.pop_back();
      if (++processed > opts_.max_pairs) {
        throw ResourceLimit("Groebner basis: more than " + std::to_string(opts_.max_pairs) + " S-pairs");
      }
      if (pr.lcm.degree() > cap_) {
        throw ResourceLimit("Groebner basis: S-pair degree " + std::to_string(pr.lcm.degree()) +
                            " exceeds cap " + std::to_string(cap_));
      }
      const Polynomial& fi = polys_[pr.i];
      const Polynomial& fj = polys_[pr.j];
      Polynomial s = fi.mul_term(1, pr.lcm / fi.leading_monomial())
                         .sub_mul_term(1, pr.lcm / fj.leading_monomial(), fj);
      Polynomial h = reduce_by(s, active_list());
      if (h.is_zero()) continue;
      if (h.is_constant()) return false;
      add(h.monic());
    }
    return true;
  }

  std::vector<Polynomial> reduced_basis() const {
    std::vector<Polynomial> basis;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) basis.push_back(polys_[k]);
    }
    const auto& order = ring_->order();
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<Polynomial> out;
    out.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<const Polynomial*> others;
      for (std::size_t l = 0; l < basis.size(); ++l) {
        if (l != k) others.push_back(&basis[l]);
      }
      const Term& lt = basis[k].leading_term();
      Polynomial tail = reduce_by(basis[k].tail(), others);
      out.push_back(Polynomial::monomial(ring_, lt.coeff, lt.mono) + tail);
    }
    return out;
  }

 private:
  std::vector<const Polynomial*> active_list() const {
    std::vector<const Polynomial*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(&polys_[k]);
    }
    return out;
  }

  void add(Polynomial h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(false);
    update(hi);
    active_[hi] = true;
  }

  // Gebauer-Moeller update of the pair set and the active basis for new
  // element h.
  void update(std::size_t h) {
    const Monomial& lh = polys_[h].leading_monomial();
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (!active_[g]) continue;
      const Monomial& lg = polys_[g].leading_monomial();
      c.push_back({g, lh.lcm(lg), lh.coprime(lg)});
    }
    std::vector<Cand> d;
    for (std::size_t idx = 0; idx < c.size(); ++idx) {
      bool keep = c[idx].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t j = idx + 1; j < c.size() && keep; ++j) {
          if (c[j].lcm.divides(c[idx].lcm)) keep = false;
        }
        for (std::size_t j = 0; j < d.size() && keep; ++j) {
          if (d[j].lcm.divides(c[idx].lcm)) keep = false;
        }
      }
      if (keep) d.push_back(c[idx]);
    }
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (auto& pr : pairs_) {
      const bool drop = lh.divides(pr.lcm) &&
                        !(polys_[pr.i].leading_monomial().lcm(lh) == pr.lcm) &&
                        !(polys_[pr.j].leading_monomial().lcm(lh) == pr.lcm);
      if (!drop) kept.push_back(std::move(pr));
    }
    for (auto& cand : d) {
      if (!cand.coprime) kept.push_back({cand.g, h, std::move(cand.lcm)});
    }
    pairs_ = std::move(kept);
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
    }
  }

  RingPtr ring_;
  GroebnerOptions opts_;
  std::uint64_t cap_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

const RingPtr& ring_of(const Ideal& I, const Ideal& J) {
  if (!I.ring()->same_as(*J.ring())) throw ContextMismatch("ideals live in different rings");
  return I.ring();
}

RingPtr ring_with_front_variable(const RingPtr& ring, const std::string& name) {
  std::vector<std::string> vars{name};
  vars.insert(vars.end(), ring->vars().begin(), ring->vars().end());
  return std::make_shared<const PolyRing>(ring->field(), std::move(vars), MonomialOrder::block(1));
}

std::vector<std::size_t> shift_map(std::size_t n, std::size_t by) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i + by;
  return m;
}

std::string fresh_name(const RingPtr& ring, const std::string& base) {
  std::string name = base;
  while (ring->index_of(name)) name += "_";
  return name;
}

}  // namespace

GroebnerOptions groebner_options() {
  std::lock_guard lock(g_options_mutex);
  return g_options;
}

void set_groebner_options(const GroebnerOptions& opts) {
  std::lock_guard lock(g_options_mutex);
  g_options = opts;
}

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const GroebnerOptions& opts) {
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  if (gens.empty()) return {};
  const RingPtr ring = gens.front().ring();
  std::uint64_t max_in = 0;
  for (const auto& g : gens) max_in = std::max(max_in, g.total_degree());
  Buchberger engine(ring, opts, std::max(opts.max_degree, 4 * max_in));
  // insert low-degree generators first; the result does not depend on it
  std::stable_sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->order().compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (const auto& g : gens) {
    if (!engine.insert(g)) return {Polynomial::constant(ring, 1)};
  }
  if (!engine.run()) return {Polynomial::constant(ring, 1)};
  return engine.reduced_basis();
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors) {
  std::vector<const Polynomial*> ptrs;
  for (const auto& g : divisors) {
    if (!g.is_zero()) ptrs.push_back(&g);
  }
  return reduce_by(f, ptrs);
}

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  if (!f.ring()->same_as(*I.ring())) throw ContextMismatch("normal_form: ring mismatch");
  return reduce(f, I.groebner_basis());
}

bool ideal_member(const Polynomial& f, const Ideal& I) { return normal_form(f, I).is_zero(); }

bool ideal_contains(const Ideal& I, const Ideal& J) {
  ring_of(I, J);
  for (const auto& g : J.generators()) {
    if (!ideal_member(g, I)) return false;
  }
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  ring_of(I, J);
  const auto& a = I.groebner_basis();
  const auto& b = J.groebner_basis();
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!(a[k] == b[k])) return false;
  }
  return true;
}

bool is_unit_ideal(const Ideal& I) {
  const auto& gb = I.groebner_basis();
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  const RingPtr& ring = ring_of(I, J);
  if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal::zero(ring);
  if (is_unit_ideal(I)) return J;
  if (is_unit_ideal(J)) return I;
  const RingPtr ext = ring_with_front_variable(ring, fresh_name(ring, "_t"));
  const auto up = shift_map(ring->nvars(), 1);
  const Polynomial t = Polynomial::variable(ext, 0);
  const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(t * g.map_to(ext, up));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * g.map_to(ext, up));
  const auto basis = buchberger(std::move(gens), groebner_options());
  std::vector<std::size_t> down(ext->nvars(), 0);
  for (std::size_t i = 1; i < ext->nvars(); ++i) down[i] = i - 1;
  std::vector<Polynomial> out;
  for (const auto& g : basis) {
    bool has_t = false;
    for (const auto& term : g.terms()) has_t = has_t || term.mono[0] != 0;
    if (!has_t) out.push_back(g.map_to(ring, down));
  }
  return Ideal(ring, std::move(out));
}

Ideal colon_ideal(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("colon by the zero polynomial");
  if (!f.ring()->same_as(*I.ring())) throw ContextMismatch("colon_ideal: ring mismatch");
  if (f.is_constant()) return I;
  if (is_unit_ideal(I) || ideal_member(f, I)) return Ideal::unit(I.ring());
  if (I.is_zero_ideal()) return I;
  const Ideal meet = intersect(I, Ideal(I.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) {
    auto q = divide_exact(g, f);
    if (!q) throw Inconsistency("colon_ideal: intersection generator not divisible by f");
    gens.push_back(std::move(*q));
  }
  return Ideal(I.ring(), std::move(gens));
}

Ideal colon_ideal(const Ideal& I, const Ideal& J) {
  ring_of(I, J);
  std::optional<Ideal> acc;
  for (const auto& g : J.generators()) {
    if (g.is_zero()) continue;
    Ideal c = colon_ideal(I, g);
    acc = acc ? intersect(*acc, c) : c;
  }
  return acc ? *acc : Ideal::unit(I.ring());
}

Ideal eliminate(const Ideal& I, std::span<const std::string> front_vars) {
  const RingPtr& ring = I.ring();
  std::vector<std::size_t> to_new(ring->nvars());
  std::vector<bool> is_front(ring->nvars(), false);
  std::vector<std::string> vars;
  for (const auto& name : front_vars) {
    auto idx = ring->index_of(name);
    if (!idx) throw InputError("eliminate: unknown variable '" + name + "'");
    if (is_front[*idx]) continue;
    is_front[*idx] = true;
    to_new[*idx] = vars.size();
    vars.push_back(name);
  }
  const std::size_t front = vars.size();
  std::vector<std::size_t> to_old;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (is_front[i]) continue;
    to_new[i] = vars.size();
    vars.push_back(ring->vars()[i]);
  }
  to_old.assign(vars.size(), 0);
  for (std::size_t i = 0; i < ring->nvars(); ++i) to_old[to_new[i]] = i;
  const RingPtr ext = std::make_shared<const PolyRing>(ring->field(), vars, MonomialOrder::block(front));
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.map_to(ext, to_new));
  const auto basis = buchberger(std::move(gens), groebner_options());
  std::vector<Polynomial> out;
  for (const auto& g : basis) {
    bool uses_front = false;
    for (const auto& t : g.terms()) {
      for (std::size_t v = 0; v < front; ++v) uses_front = uses_front || t.mono[v] != 0;
    }
    if (!uses_front) out.push_back(g.map_to(ring, to_old));
  }
  return Ideal(ring, std::move(out));
}

bool radical_member(const Polynomial& f, const Ideal& I) {
  if (f.is_zero()) return true;
  const RingPtr& ring = I.ring();
  if (!f.ring()->same_as(*ring)) throw ContextMismatch("radical_member: ring mismatch");
  if (ideal_member(f, I)) return true;
  std::vector<std::string> vars = ring->vars();
  vars.push_back(fresh_name(ring, "_y"));
  const RingPtr ext = std::make_shared<const PolyRing>(ring->field(), vars, MonomialOrder::grevlex());
  std::vector<std::size_t> same(ring->nvars());
  for (std::size_t i = 0; i < same.size(); ++i) same[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.map_to(ext, same));
  const Polynomial y = Polynomial::variable(ext, ring->nvars());
  gens.push_back(Polynomial::constant(ext, 1) - y * f.map_to(ext, same));
  const auto basis = buchberger(std::move(gens), groebner_options());
  return basis.size() == 1 && basis[0].is_constant();
}

bool is_artinian(const Ideal& I) {
  if (is_unit_ideal(I)) return true;
  const auto& gb = I.groebner_basis();
  const std::size_t n = I.ring()->nvars();
  std::vector<bool> has_power(n, false);
  for (const auto& g : gb) {
    const Monomial& m = g.leading_monomial();
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0) {
        ++support;
        var = i;
      }
    }
    if (support == 1) has_power[var] = true;
  }
  return std::all_of(has_power.begin(), has_power.end(), [](bool b) { return b; });
}

namespace {

bool in_lead_ideal(const Monomial& m, const std::vector<Polynomial>& gb) {
  for (const auto& g : gb) {
    if (g.leading_monomial().divides(m)) return true;
  }
  return false;
}

void enumerate_degree(std::vector<std::uint32_t>& e, std::size_t var, std::uint64_t remaining,
                      std::span<const std::uint32_t> weights, const std::vector<Polynomial>& gb,
                      std::vector<Monomial>& out) {
  if (var + 1 == e.size()) {
    if (remaining % weights[var] != 0) return;
    e[var] = static_cast<std::uint32_t>(remaining / weights[var]);
    Monomial m(e);
    if (!in_lead_ideal(m, gb)) out.push_back(std::move(m));
    e[var] = 0;
    return;
  }
  for (std::uint64_t a = 0; a * weights[var] <= remaining; ++a) {
    e[var] = static_cast<std::uint32_t>(a);
    enumerate_degree(e, var + 1, remaining - a * weights[var], weights, gb, out);
  }
  e[var] = 0;
}

void enumerate_finite(std::vector<std::uint32_t>& e, std::size_t var, const std::vector<Polynomial>& gb,
                      std::vector<Monomial>& out) {
  if (var == e.size()) {
    out.emplace_back(e);
    return;
  }
  for (std::uint32_t a = 0;; ++a) {
    e[var] = a;
    // all later variables zero: the smallest monomial with this prefix
    if (in_lead_ideal(Monomial(e), gb)) break;
    enumerate_finite(e, var + 1, gb, out);
  }
  e[var] = 0;
}

}  // namespace

StaircaseBasis staircase(const Ideal& I, std::span<const std::uint32_t> weights,
                         std::optional<std::uint64_t> degree) {
  const auto& gb = I.groebner_basis();
  const RingPtr& ring = I.ring();
  StaircaseBasis out;
  if (is_unit_ideal(I)) return out;
  std::vector<std::uint32_t> e(ring->nvars(), 0);
  if (degree) {
    if (weights.size() != ring->nvars()) throw ContextMismatch("staircase: weight vector length");
    if (ring->nvars() == 0) {
      if (*degree == 0) out.monomials.emplace_back(e);
    } else {
      enumerate_degree(e, 0, *degree, weights, gb, out.monomials);
    }
  } else {
    if (!is_artinian(I)) throw InputError("quotient not finite-dimensional");
    enumerate_finite(e, 0, gb, out.monomials);
  }
  const auto& order = ring->order();
  std::sort(out.monomials.begin(), out.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  return out;
}

std::vector<Coeff> coordinates(const Polynomial& nf, const StaircaseBasis& basis) {
  std::vector<Coeff> v(basis.size(), 0);
  for (const auto& t : nf.terms()) {
    auto it = std::find(basis.monomials.begin(), basis.monomials.end(), t.mono);
    if (it == basis.monomials.end()) {
      throw Inconsistency("coordinates: term " + std::to_string(t.mono.degree()) +
                          "-degree monomial outside the basis");
    }
    v[static_cast<std::size_t>(it - basis.monomials.begin())] = t.coeff;
  }
  return v;
}

Polynomial from_coordinates(const RingPtr& ring, std::span<const Coeff> coords,
                            const StaircaseBasis& basis) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) terms.push_back({coords[i], basis.monomials[i]});
  }
  return Polynomial(ring, std::move(terms));
}

std::vector<Polynomial> socle_basis(const Ideal& I, std::span<const Polynomial> maximal_gens) {
  const RingPtr& ring = I.ring();
  if (is_unit_ideal(I)) return {};
  const StaircaseBasis basis = staircase(I, {}, std::nullopt);
  const std::size_t n = basis.size();
  linalg::Rows rows;
  for (const auto& x : maximal_gens) {
    // block of rows: coordinates of x * b_j as columns j
    linalg::Rows block(n, linalg::Row(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial img = normal_form(x.mul_term(1, basis.monomials[j]), I);
      auto c = coordinates(img, basis);
      for (std::size_t i = 0; i < n; ++i) block[i][j] = c[i];
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }
  const auto ker = linalg::kernel(ring->field(), std::move(rows), n);
  std::vector<Polynomial> out;
  for (const auto& v : ker) out.push_back(from_coordinates(ring, v, basis));
  return out;
}

Ideal maximal_ideal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

}  // namespace frobstab
