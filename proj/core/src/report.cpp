#include "frobstab/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "frobstab/error.hpp"
#include "frobstab/prime_field.hpp"

namespace frobstab {

namespace {

template <class T>
T field(const nlohmann::json& j, const char* key, const std::string& name) {
  if (!j.contains(key)) throw InputError(name + ": missing field \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(name + ": field \"" + key + "\" has the wrong type");
  }
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const RingPtr& ring,
                                  const std::string& what) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) {
    try {
      out.push_back(parse_poly(t, ring));
    } catch (const InputError& e) {
      throw InputError(what + " \"" + t + "\": " + e.what());
    }
  }
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string show(const ojson& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

RingFile parse_ring_file(const nlohmann::json& j, std::string name) {
  if (!j.is_object()) throw InputError(name + ": ring file must be a JSON object");
  RingFile f;
  f.name = std::move(name);
  const auto p = field<std::int64_t>(j, "char", f.name);
  if (p < 2 || p > 0x7fffffff || !is_prime(static_cast<std::uint64_t>(p)))
    throw InputError(f.name + ": characteristic must be a prime");
  f.p = static_cast<std::uint32_t>(p);
  f.vars = field<std::vector<std::string>>(j, "vars", f.name);
  const auto degrees = field<std::vector<std::int64_t>>(j, "degrees", f.name);
  f.relations = field<std::vector<std::string>>(j, "relations", f.name);
  f.sop = field<std::vector<std::string>>(j, "sop", f.name);
  if (f.vars.empty()) throw InputError(f.name + ": no variables");
  if (degrees.size() != f.vars.size()) throw InputError(f.name + ": one degree per variable required");
  for (auto d : degrees) {
    if (d < 1 || d > 1000) throw InputError(f.name + ": degrees must be positive");
    f.degrees.push_back(static_cast<std::uint32_t>(d));
  }
  if (j.contains("minimal_primes") && !j["minimal_primes"].is_null())
    f.minimal_primes = field<std::vector<std::vector<std::string>>>(j, "minimal_primes", f.name);
  // parse everything now so errors surface here
  auto ring = PolyRing::make(f.p, f.vars);
  parse_all(f.relations, ring, "relation");
  parse_all(f.sop, ring, "sop element");
  if (f.minimal_primes)
    for (const auto& P : *f.minimal_primes) parse_all(P, ring, "minimal prime generator");
  return f;
}

RingFile load_ring_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open ring file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return parse_ring_file(j, path.stem().string());
}

GradedRing build_ring(const RingFile& f) {
  auto ring = PolyRing::make(f.p, f.vars);
  const auto rels = parse_all(f.relations, ring, "relation");
  auto sop = parse_all(f.sop, ring, "sop element");
  try {
    return GradedRing(ring, f.degrees, rels.empty() ? Ideal::zero(ring) : Ideal(ring, rels), std::move(sop));
  } catch (const PreconditionError& e) {
    throw InputError(f.name + ": " + e.what());
  }
}

std::vector<Ideal> build_minimal_primes(const RingFile& f, const RingPtr& ring) {
  std::vector<Ideal> out;
  if (!f.minimal_primes) return out;
  for (const auto& P : *f.minimal_primes) {
    const auto gens = parse_all(P, ring, "minimal prime generator");
    out.push_back(gens.empty() ? Ideal::zero(ring) : Ideal(ring, gens));
  }
  return out;
}

std::string describe(const RingFile& f) {
  std::string s = "F_" + std::to_string(f.p) + "[" + join(f.vars, ",") + "]";
  if (!f.relations.empty()) s += "/(" + join(f.relations, ", ") + ")";
  return s;
}

void RunConfig::validate() const {
  if (e_max < 1 || window < 1 || t_max < 1 || socle_t_max < 1 || combo_cap < 1 || deg_bound < 1)
    throw InputError("all bounds must be positive");
}

StabilityOptions RunConfig::options() const {
  return {e_max, window, t_max, socle_t_max, combo_cap, deg_bound, seed};
}

ojson gens_json(const Ideal& I) {
  ojson a = ojson::array();
  for (const auto& g : I.groebner_basis()) a.push_back(g.to_string());
  return a;
}

ojson closure_json(const ClosureReport& r) {
  ojson j;
  j["closure"] = gens_json(r.closure);
  j["status"] = to_string(r.status);
  j["chain"] = ojson::array();
  for (const auto& s : r.steps) j["chain"].push_back({{"e", s.e}, {"gens", gens_json(s.ideal)}});
  return j;
}

ojson ring_check_report(const RingFile& f, const RunConfig& cfg) {
  cfg.validate();
  GradedRing R = build_ring(f);
  const CmCheck& cm = R.verify_cm();
  ojson j;
  j["ring"] = describe(f);
  j["dim"] = R.dim();
  j["cm"] = to_string(cm.status);
  if (cm.status != CmStatus::Verified) {
    j["cm_failed_at"] = cm.failed_at ? ojson(*cm.failed_at) : ojson();
    j["cm_witness"] = cm.witness ? ojson(cm.witness->to_string()) : ojson();
    j["f_injective"] = nullptr;
    return j;
  }
  const auto fi = is_f_injective_cm(R, cfg.options());
  j["f_injective"] = {{"value", fi.value}, {"status", to_string(fi.status)},
                      {"witness", fi.witness ? ojson(fi.witness->to_string()) : ojson()}};
  return j;
}

ojson stability_report(const RingFile& f, const RunConfig& cfg) {
  cfg.validate();
  GradedRing R = build_ring(f);
  const auto rep = f_stability(R, cfg.options());
  ojson j;
  j["ring"] = describe(f);
  j["f_injective"] = {{"value", rep.f_injective.value}, {"status", to_string(rep.f_injective.status)}};
  ojson cands = ojson::array();
  for (const auto& c : rep.heuristic.candidates)
    cands.push_back({{"t", c.t}, {"u", c.u.to_string()}, {"limit", gens_json(c.chain.limit)},
                     {"status", status_string(c.chain)}});
  j["f_stable"] = {{"certified", rep.certified.value},
                   {"certainty", to_string(rep.certified.status)},
                   {"stable_dim", rep.certified.stable_dim},
                   {"heuristic", rep.heuristic.value},
                   {"heuristic_candidates", cands},
                   {"search_complete", rep.heuristic.complete},
                   {"agreement", rep.agreement}};
  if (!rep.heuristic.warnings.empty()) j["warnings"] = rep.heuristic.warnings;
  if (R.dim() == 1 && f.minimal_primes) {
    const auto sw = singh_walther_check(R, build_minimal_primes(f, R.ring()), rep.certified.stable_dim);
    j["sw_check"] = {{"components", sw.components}, {"formula", sw.formula}, {"agree", sw.agree}};
  } else {
    j["sw_check"] = nullptr;
  }
  return j;
}

bool ZooResult::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const ZooRow& r) { return r.mismatches.empty(); });
}

namespace {

ojson zoo_row(const RingFile& f, const RunConfig& cfg) {
  ojson row;
  row["name"] = f.name;
  row["p"] = f.p;
  GradedRing R = build_ring(f);
  row["dim"] = R.dim();
  R.verify_cm();
  row["cm"] = to_string(R.cm_status());
  if (R.cm_status() != CmStatus::Verified) {
    for (const char* k : {"f_injective", "f_stable_certified", "f_stable_heuristic", "stable_dim", "agreement",
                          "sw_components", "sw_formula", "sw_agree"})
      row[k] = nullptr;
    return row;
  }
  const auto rep = f_stability(R, cfg.options());
  row["f_injective"] = rep.f_injective.value;
  row["f_stable_certified"] = rep.certified.value;
  row["f_stable_heuristic"] = rep.heuristic.value;
  row["stable_dim"] = rep.certified.stable_dim;
  row["agreement"] = rep.agreement;
  if (R.dim() == 1 && f.minimal_primes) {
    const auto sw = singh_walther_check(R, build_minimal_primes(f, R.ring()), rep.certified.stable_dim);
    row["sw_components"] = sw.components;
    row["sw_formula"] = sw.formula;
    row["sw_agree"] = sw.agree;
  } else {
    row["sw_components"] = row["sw_formula"] = row["sw_agree"] = nullptr;
  }
  return row;
}

}  // namespace

ZooResult run_zoo(const std::filesystem::path& dir, const RunConfig& cfg, unsigned jobs) {
  cfg.validate();
  if (!std::filesystem::is_directory(dir)) throw InputError("zoo directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json" && e.path().filename() != "expectations.json")
      files.push_back(e.path());
  if (files.empty()) throw InputError("zoo directory holds no ring files: " + dir.string());
  std::sort(files.begin(), files.end());

  std::optional<nlohmann::json> expectations;
  const auto exp_path = dir / "expectations.json";
  if (std::filesystem::exists(exp_path)) {
    std::ifstream in(exp_path);
    try {
      expectations = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError("expectations.json: " + std::string(e.what()));
    }
    if (!expectations->is_object()) throw InputError("expectations.json must be an object");
  }

  std::vector<ZooRow> rows(files.size());
  std::vector<std::exception_ptr> errors(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        const RingFile f = load_ring_file(files[i]);
        rows[i].name = f.name;
        rows[i].row = zoo_row(f, cfg);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, files.size()));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (auto& r : rows) {
    if (!expectations) continue;
    if (!expectations->contains(r.name)) {
      r.mismatches.push_back("no expectation recorded");
      continue;
    }
    for (const auto& [key, want] : (*expectations)[r.name].items()) {
      if (!r.row.contains(key)) {
        r.mismatches.push_back(key + ": unknown column");
        continue;
      }
      const nlohmann::json got = nlohmann::json::parse(r.row[key].dump());
      if (got != want) r.mismatches.push_back(key + ": expected " + want.dump() + ", got " + got.dump());
    }
  }
  return {std::move(rows)};
}

std::string format_ring_check(const ojson& r) {
  std::ostringstream o;
  o << "ring:        " << show(r["ring"]) << "\n";
  o << "dimension:   " << show(r["dim"]) << "\n";
  o << "CM:          " << show(r["cm"]) << "\n";
  if (r["f_injective"].is_null()) {
    o << "F-injective: not checked (CM required)\n";
  } else {
    o << "F-injective: " << show(r["f_injective"]["value"]) << " (" << show(r["f_injective"]["status"]) << ")\n";
    if (!r["f_injective"]["witness"].is_null())
      o << "witness:     " << show(r["f_injective"]["witness"]) << " in (sop)^F outside (sop)\n";
  }
  return o.str();
}

std::string format_stability(const ojson& r) {
  std::ostringstream o;
  const auto& s = r["f_stable"];
  o << "ring:          " << show(r["ring"]) << "\n";
  o << "F-injective:   " << show(r["f_injective"]["value"]) << " (" << show(r["f_injective"]["status"]) << ")\n";
  o << "F-stable:      " << show(s["certified"]) << " (" << show(s["certainty"]) << "), stable dim "
    << show(s["stable_dim"]) << "\n";
  o << "socle search:  " << show(s["heuristic"]) << ", " << s["heuristic_candidates"].size() << " candidate(s)"
    << (s["search_complete"].get<bool>() ? "" : ", incomplete") << "\n";
  for (const auto& c : s["heuristic_candidates"])
    o << "  t=" << show(c["t"]) << " u=" << show(c["u"]) << " -> " << show(c["limit"]) << "\n";
  o << "agreement:     " << show(s["agreement"]) << "\n";
  if (!r["sw_check"].is_null())
    o << "components:    " << show(r["sw_check"]["components"]) << " vs 1 + stable dim = "
      << show(r["sw_check"]["formula"]) << " (" << (r["sw_check"]["agree"].get<bool>() ? "agree" : "differ")
      << ")\n";
  if (r.contains("warnings"))
    for (const auto& w : r["warnings"]) o << "warning: " << w.get<std::string>() << "\n";
  return o.str();
}

std::string format_zoo(const ZooResult& z) {
  std::ostringstream o;
  const char* cols[] = {"p", "dim", "cm", "f_injective", "f_stable_certified", "f_stable_heuristic", "stable_dim",
                        "agreement", "sw_agree"};
  const char* heads[] = {"p", "dim", "CM", "F-inj", "stable", "search", "sdim", "agree", "SW"};
  std::size_t name_w = 4;
  for (const auto& r : z.rows) name_w = std::max(name_w, r.name.size());
  o << std::left << std::setw(static_cast<int>(name_w + 2)) << "ring";
  for (const char* h : heads) o << std::setw(10) << h;
  o << "match\n";
  for (const auto& r : z.rows) {
    o << std::setw(static_cast<int>(name_w + 2)) << r.name;
    for (const char* c : cols) o << std::setw(10) << show(r.row[c]);
    o << (r.mismatches.empty() ? "ok" : "MISMATCH") << "\n";
    for (const auto& m : r.mismatches) o << "    " << m << "\n";
  }
  return o.str();
}

}  // namespace frobstab
