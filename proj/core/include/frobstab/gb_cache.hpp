#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "frobstab/polynomial.hpp"

namespace frobstab {

/// Process-wide cache of reduced Groebner bases keyed by
/// (p, variable names, order, sorted monic generators). Optionally backed by
/// a directory holding one JSON file per key; a file is trusted only after
/// every generator reduces to zero against the stored basis and the stored
/// basis is reduced with matching leading terms.
class GbCache {
 public:
  static GbCache& instance();

  void set_directory(std::optional<std::filesystem::path> dir);
  std::optional<std::filesystem::path> directory() const;
  void clear_memory();

  std::optional<std::vector<Polynomial>> lookup(const RingPtr& ring,
                                                const std::vector<Polynomial>& gens);
  void store(const RingPtr& ring, const std::vector<Polynomial>& gens,
             const std::vector<Polynomial>& basis);

  struct Stats {
    std::uint64_t memory_hits = 0;
    std::uint64_t disk_hits = 0;
    std::uint64_t disk_rejects = 0;
    std::uint64_t misses = 0;
  };
  Stats stats() const;

  static std::string key(const RingPtr& ring, const std::vector<Polynomial>& gens);

 private:
  GbCache() = default;
  std::optional<std::vector<Polynomial>> load_file(const RingPtr& ring, const std::string& key,
                                                   const std::vector<Polynomial>& gens);

  using RawTerms = std::vector<std::pair<Coeff, std::vector<std::uint32_t>>>;

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::vector<RawTerms>> memory_;
  std::optional<std::filesystem::path> dir_;
  Stats stats_;
};

}  // namespace frobstab
