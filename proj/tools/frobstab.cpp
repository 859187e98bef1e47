#include <cstdlib>
#include <iostream>
#include <new>
#include <sstream>

#include <CLI11.hpp>

#include "frobstab/error.hpp"
#include "frobstab/gb_cache.hpp"
#include "frobstab/imperfect.hpp"
#include "frobstab/report.hpp"

using namespace frobstab;

namespace {

enum Exit { kOk = 0, kInput = 2, kResource = 3, kInconsistent = 4 };

std::vector<Polynomial> parse_list(const std::string& text, const RingPtr& ring) {
  std::vector<Polynomial> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_poly(item, ring));
  if (out.empty()) throw InputError("empty generator list");
  return out;
}

struct Args {
  std::string ring_path;
  RunConfig cfg;
  std::string cache;
  std::string ideal;
  std::string ideal2;
  std::string poly;
  unsigned e = 1;
  std::uint32_t demo_p = 2;
  std::string zoo_dir = FROBSTAB_DEFAULT_ZOO;
  unsigned jobs = 0;
};

void emit(const ojson& j) { std::cout << j.dump(2) << "\n"; }

RingFile need_ring(const Args& a) {
  if (a.ring_path.empty()) throw InputError("--ring is required");
  return load_ring_file(a.ring_path);
}

int run_ideal(const std::string& op, const Args& a) {
  const RingFile f = need_ring(a);
  const GradedRing R = build_ring(f);
  const RingPtr& ring = R.ring();
  const Ideal& J = R.relations();
  if (a.ideal.empty()) throw InputError("--ideal is required");
  const Ideal I(ring, parse_list(a.ideal, ring));
  const ClosureOptions copts{a.cfg.e_max, a.cfg.window};
  ojson j;
  j["ring"] = describe(f);
  j["op"] = op;
  j["ideal"] = gens_json(I);
  if (op == "gb") {
    j["result"] = gens_json(I + J);
  } else if (op == "member") {
    if (a.poly.empty()) throw InputError("--poly is required");
    j["poly"] = parse_poly(a.poly, ring).to_string();
    j["member"] = ideal_member(parse_poly(a.poly, ring), I + J);
  } else if (op == "colon") {
    if (!a.poly.empty()) {
      j["by"] = gens_json(Ideal(ring, {parse_poly(a.poly, ring)}));
      j["result"] = gens_json(colon_ideal(I + J, parse_poly(a.poly, ring)));
    } else if (!a.ideal2.empty()) {
      const Ideal K(ring, parse_list(a.ideal2, ring));
      j["by"] = gens_json(K);
      j["result"] = gens_json(colon_ideal(I + J, K));
    } else {
      throw InputError("colon needs --poly or --by");
    }
  } else if (op == "bracket") {
    j["e"] = a.e;
    j["result"] = gens_json(bracket_power(I, a.e, J));
  } else if (op == "froot") {
    j["e"] = a.e;
    j["result"] = gens_json(frobenius_root(I, a.e, J));
  } else {
    const ojson c = closure_json(frobenius_closure(I, J, copts));
    for (const auto& [k, v] : c.items()) j[k] = v;
  }
  emit(j);
  return kOk;
}

int dispatch(CLI::App& app, const Args& a) {
  if (app.got_subcommand("ring-check")) {
    const auto r = ring_check_report(need_ring(a), a.cfg);
    if (a.cfg.json) emit(r);
    else std::cout << format_ring_check(r);
    return kOk;
  }
  if (app.got_subcommand("stability")) {
    const auto r = stability_report(need_ring(a), a.cfg);
    if (a.cfg.json) emit(r);
    else std::cout << format_stability(r);
    return kOk;
  }
  if (auto* ideal = app.get_subcommand("ideal"); ideal->parsed()) {
    for (const char* op : {"gb", "member", "colon", "bracket", "froot", "fclosure"})
      if (ideal->got_subcommand(op)) return run_ideal(op, a);
  }
  if (app.got_subcommand("zoo")) {
    const auto z = run_zoo(a.zoo_dir, a.cfg, a.jobs);
    if (a.cfg.json) {
      ojson j;
      j["rows"] = ojson::array();
      for (const auto& r : z.rows) {
        ojson row = r.row;
        row["mismatches"] = r.mismatches;
        j["rows"].push_back(row);
      }
      j["all_match"] = z.all_match();
      emit(j);
    } else {
      std::cout << format_zoo(z);
    }
    return z.all_match() ? kOk : kInconsistent;
  }
  if (auto* demo = app.get_subcommand("demo"); demo->parsed() && demo->got_subcommand("imperfect")) {
    const auto L = build_example_extension(a.demo_p);
    const auto w = find_nilpotent_in_tensor(L);
    ojson j;
    j["p"] = a.demo_p;
    j["modulus"] = L.modulus_string();
    j["witness"] = w ? to_json(*w) : ojson();
    emit(j);
    return kOk;
  }
  throw InputError("no command given");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius stability of graded rings in characteristic p"};
  app.require_subcommand(1);
  Args a;
  auto common = [&](CLI::App* c) {
    c->add_option("--ring", a.ring_path, "ring definition JSON");
    c->add_option("--emax", a.cfg.e_max, "Frobenius iterations per chain")->capture_default_str();
    c->add_option("--window", a.cfg.window, "consecutive equal steps for stabilization")->capture_default_str();
    c->add_option("--tmax", a.cfg.t_max, "largest truncation level")->capture_default_str();
    c->add_option("--socle-tmax", a.cfg.socle_t_max, "levels for the socle search")->capture_default_str();
    c->add_option("--combo-cap", a.cfg.combo_cap, "largest socle enumeration")->capture_default_str();
    c->add_option("--deg-bound", a.cfg.deg_bound, "degree bound for sampled classes")->capture_default_str();
    c->add_option("--seed", a.cfg.seed, "random seed")->capture_default_str();
    c->add_flag("--json", a.cfg.json, "machine-readable output");
    c->add_option("--cache", a.cache, "Groebner basis cache directory (overrides FROBSTAB_CACHE)");
  };
  common(&app);

  auto* ring_check = app.add_subcommand("ring-check", "CM check and F-injectivity");
  auto* stability = app.add_subcommand("stability", "F-stability by both routes");
  auto* ideal = app.add_subcommand("ideal", "ideal operations modulo the ring relations");
  ideal->require_subcommand(1);
  for (const char* op : {"gb", "member", "colon", "bracket", "froot", "fclosure"}) {
    auto* s = ideal->add_subcommand(op);
    s->add_option("--ideal", a.ideal, "comma-separated generators");
    s->add_option("--e", a.e, "Frobenius exponent")->capture_default_str();
    s->add_option("--poly", a.poly, "a polynomial");
    s->add_option("--by", a.ideal2, "comma-separated generators of the divisor ideal");
    s->fallthrough();
  }
  auto* zoo = app.add_subcommand("zoo", "run the regression zoo");
  zoo->add_option("--dir", a.zoo_dir, "zoo directory")->capture_default_str();
  zoo->add_option("--jobs", a.jobs, "parallel rows (0: hardware threads)");
  auto* demo = app.add_subcommand("demo", "worked examples");
  demo->require_subcommand(1);
  demo->add_subcommand("imperfect", "nilpotent in k^{1/p} (x) L")->add_option("--p", a.demo_p, "characteristic");
  for (auto* c : {ring_check, stability, ideal, zoo, demo}) c->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    std::string cache = a.cache;
    if (cache.empty())
      if (const char* env = std::getenv("FROBSTAB_CACHE")) cache = env;
    if (!cache.empty()) a.cfg.cache_dir = cache;
    GbCache::instance().set_directory(a.cfg.cache_dir);
    a.cfg.validate();
    return dispatch(app, a);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const ContextMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::bad_alloc&) {
    std::cerr << "resource limit: out of memory\n";
    return kResource;
  } catch (const Inconsistency& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInconsistent;
  }
}
