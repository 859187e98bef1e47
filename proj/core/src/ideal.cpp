#include "frobstab/ideal.hpp"

#include "frobstab/error.hpp"
#include "frobstab/gb_cache.hpp"
#include "frobstab/groebner.hpp"

namespace frobstab {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), slot_(std::make_shared<BasisSlot>()) {
  for (auto& g : generators) {
    if (g.ring() != ring_ && !g.ring()->same_as(*ring_)) {
      throw ContextMismatch("ideal generator from a different ring");
    }
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
  if (gens_.empty()) gens_.push_back(Polynomial(ring_));
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(ring, {}); }

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::lock_guard lock(slot_->mutex);
  if (!slot_->basis) {
    if (is_zero_ideal()) {
      slot_->basis.emplace();
    } else if (auto cached = GbCache::instance().lookup(ring_, gens_)) {
      slot_->basis = std::move(*cached);
    } else {
      auto basis = buchberger(gens_, groebner_options());
      GbCache::instance().store(ring_, gens_, basis);
      slot_->basis = std::move(basis);
    }
  }
  return *slot_->basis;
}

bool Ideal::has_cached_basis() const {
  std::lock_guard lock(slot_->mutex);
  return slot_->basis.has_value();
}

Ideal Ideal::operator+(const Ideal& o) const {
  if (!ring_->same_as(*o.ring_)) throw ContextMismatch("sum of ideals from different rings");
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), o.gens_.begin(), o.gens_.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::with_generators(const std::vector<Polynomial>& extra) const {
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), extra.begin(), extra.end());
  return Ideal(ring_, std::move(g));
}

std::vector<std::string> Ideal::generator_strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.to_string());
  return out;
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

}  // namespace frobstab
