#include "frobstab/gb_cache.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <nlohmann/json.hpp>
#include <sstream>

#include "frobstab/groebner.hpp"

namespace frobstab {

namespace {

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

GbCache& GbCache::instance() {
  static GbCache cache;
  return cache;
}

void GbCache::set_directory(std::optional<std::filesystem::path> dir) {
  std::unique_lock lock(mutex_);
  dir_ = std::move(dir);
  if (dir_) std::filesystem::create_directories(*dir_);
}

std::optional<std::filesystem::path> GbCache::directory() const {
  std::shared_lock lock(mutex_);
  return dir_;
}

void GbCache::clear_memory() {
  std::unique_lock lock(mutex_);
  memory_.clear();
}

GbCache::Stats GbCache::stats() const {
  std::shared_lock lock(mutex_);
  return stats_;
}

std::string GbCache::key(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  std::vector<std::string> forms;
  for (const auto& g : gens) {
    if (!g.is_zero()) forms.push_back(g.monic().to_string());
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  std::ostringstream out;
  out << ring->field().characteristic() << '|';
  for (const auto& v : ring->vars()) out << v << ',';
  out << '|' << ring->order().name() << '|';
  for (const auto& f : forms) out << f << ';';
  return out.str();
}

std::optional<std::vector<Polynomial>> GbCache::lookup(const RingPtr& ring,
                                                       const std::vector<Polynomial>& gens) {
  const std::string k = key(ring, gens);
  {
    std::shared_lock lock(mutex_);
    auto it = memory_.find(k);
    if (it != memory_.end()) {
      std::vector<Polynomial> basis;
      for (const auto& raw : it->second) {
        std::vector<Term> terms;
        for (const auto& [c, e] : raw) terms.push_back({c, Monomial(e)});
        basis.emplace_back(ring, std::move(terms));
      }
      lock.unlock();
      std::unique_lock w(mutex_);
      ++stats_.memory_hits;
      return basis;
    }
  }
  auto from_disk = load_file(ring, k, gens);
  std::unique_lock w(mutex_);
  if (from_disk) {
    ++stats_.disk_hits;
  } else {
    ++stats_.misses;
  }
  return from_disk;
}

std::optional<std::vector<Polynomial>> GbCache::load_file(const RingPtr& ring, const std::string& k,
                                                          const std::vector<Polynomial>& gens) {
  auto dir = directory();
  if (!dir) return std::nullopt;
  const auto path = *dir / (hex64(fnv1a(k)) + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("key").get<std::string>() != k) return std::nullopt;
    std::vector<Polynomial> basis;
    const auto& lts = j.at("leading_monomials");
    const auto& polys = j.at("basis");
    if (lts.size() != polys.size()) throw std::runtime_error("length mismatch");
    for (std::size_t i = 0; i < polys.size(); ++i) {
      Polynomial g = parse_poly(polys[i].get<std::string>(), ring);
      if (g.is_zero() || g.leading_coeff() != 1) throw std::runtime_error("not monic");
      Polynomial lm = Polynomial::monomial(ring, 1, g.leading_monomial());
      if (lm.to_string() != lts[i].get<std::string>()) throw std::runtime_error("leading term mismatch");
      basis.push_back(std::move(g));
    }
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (a != b && basis[a].leading_monomial().divides(basis[b].leading_monomial())) {
          throw std::runtime_error("not reduced");
        }
      }
    }
    for (const auto& g : gens) {
      if (!reduce(g, basis).is_zero()) throw std::runtime_error("generator does not reduce to 0");
    }
    return basis;
  } catch (const std::exception&) {
    std::unique_lock w(mutex_);
    ++stats_.disk_rejects;
    return std::nullopt;
  }
}

void GbCache::store(const RingPtr& ring, const std::vector<Polynomial>& gens,
                    const std::vector<Polynomial>& basis) {
  const std::string k = key(ring, gens);
  std::vector<RawTerms> raw;
  for (const auto& g : basis) {
    RawTerms r;
    for (const auto& t : g.terms()) {
      r.emplace_back(t.coeff, std::vector<std::uint32_t>(t.mono.exponents().begin(), t.mono.exponents().end()));
    }
    raw.push_back(std::move(r));
  }
  std::unique_lock lock(mutex_);
  memory_[k] = std::move(raw);
  if (!dir_) return;
  nlohmann::json j;
  j["key"] = k;
  j["p"] = ring->field().characteristic();
  j["vars"] = ring->vars();
  j["order"] = ring->order().name();
  std::vector<std::string> gs, bs, lts;
  for (const auto& g : gens) gs.push_back(g.to_string());
  for (const auto& g : basis) {
    bs.push_back(g.to_string());
    lts.push_back(Polynomial::monomial(ring, 1, g.leading_monomial()).to_string());
  }
  j["generators"] = gs;
  j["basis"] = bs;
  j["leading_monomials"] = lts;
  const auto path = *dir_ / (hex64(fnv1a(k)) + ".json");
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump(1) << '\n';
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace frobstab
