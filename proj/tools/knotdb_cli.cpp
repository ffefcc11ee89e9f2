#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "knotpoly/cabling.hpp"
#include "knotpoly/chirality.hpp"
#include "knotpoly/grid.hpp"
#include "knotpoly/invariants.hpp"
#include "knotpoly/json_io.hpp"
#include "knotpoly/knotdb.hpp"
#include "knotpoly/vassiliev.hpp"

#ifndef KNOTDB_DEFAULT_TABLE
#define KNOTDB_DEFAULT_TABLE "data/knots.json"
#endif

using namespace knotpoly;

namespace {

struct Input {
  std::string knot;
  std::string braid;
  std::string dt;
  std::string table;
  std::string format = "poly";
  unsigned workers = 1;
  std::string engine = "braid";
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string table_path(const Input& in) {
  if (!in.table.empty()) return in.table;
  if (const char* env = std::getenv("KNOTDB_TABLE")) return env;
  return KNOTDB_DEFAULT_TABLE;
}

KnotRecord input_record(const Input& in) {
  const int given = !in.knot.empty() + !in.braid.empty() + !in.dt.empty();
  if (given != 1) throw UsageError("give exactly one of --knot, --braid, --dt");
  if (!in.knot.empty()) return resolve(load_table(table_path(in)), in.knot);
  KnotRecord r;
  if (!in.braid.empty()) {
    r.name = "braid";
    r.braid = parse_braid(in.braid);
    r.crossings = static_cast<int>(r.braid->letters.size());
  } else {
    r.name = "dt";
    r.dt = parse_dt(in.dt);
    r.crossings = static_cast<int>(r.dt->size());
  }
  return r;
}

SkeinConfig config(const Input& in) {
  SkeinConfig cfg;
  cfg.parallel_workers = in.workers;
  if (in.engine == "diagram") cfg.engine = Engine::diagram_skein;
  return cfg;
}

void add_input_options(CLI::App* cmd, Input& in, bool grid_ok = true) {
  cmd->add_option("--knot", in.knot, "knot name from the table; prefix '!' for the obverse");
  cmd->add_option("--braid", in.braid, "braid word, e.g. \"-2-31\" or \"-2 -3 10\"");
  cmd->add_option("--dt", in.dt, "DT code, e.g. \"4,6,2\"");
  cmd->add_option("--table", in.table, "knot table JSON (default: bundled table or $KNOTDB_TABLE)");
  cmd->add_option("--workers", in.workers, "worker threads for the braid engine")->check(CLI::Range(1u, 256u));
  cmd->add_option("--engine", in.engine, "HOMFLY engine for braid input")->check(CLI::IsMember({"braid", "diagram"}));
  std::vector<std::string> formats{"poly", "json"};
  if (grid_ok) formats.insert(formats.begin() + 1, "grid");
  cmd->add_option("--format", in.format, "output format")->check(CLI::IsMember(formats));
}

void print_poly2(const LaurentPoly2& p, const Input& in, const std::string& v, const KnotRecord* meta) {
  if (in.format == "json") {
    std::cout << poly_json(p).dump(2) << "\n";
  } else if (in.format == "grid") {
    std::optional<std::string> word;
    std::optional<int> alg;
    if (meta && meta->braid) {
      word = to_string(*meta->braid);
      alg = exponent_sum(*meta->braid);
    }
    std::cout << render_grid(make_grid(p, word, alg));
  } else {
    std::cout << p.to_string(v, "z") << "\n";
  }
}

void print_text_report(const ChiralityReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "knot: " << r.knot << "\n"
            << "homfly self-conjugate: " << yn(r.homfly_self_conjugate) << "\n"
            << "kauffman self-conjugate: " << yn(r.kauffman_self_conjugate) << "\n"
            << "determinant: " << r.determinant.get_str() << "\n"
            << "2-cable homfly self-conjugate: "
            << (r.cable_homfly_self_conjugate ? yn(*r.cable_homfly_self_conjugate) : "n/a") << "\n"
            << "chirality detected: " << yn(r.chirality_detected()) << "\n";
  if (!r.witnesses.empty()) {
    std::cout << "witnesses:\n";
    for (const auto& w : r.witnesses)
      std::cout << "  " << w.invariant << "\n    K:  " << w.on_knot << "\n    !K: " << w.on_obverse << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot polynomial engine: HOMFLY, Kauffman, Conway, 2-cables, Vassiliev invariants"};
  app.require_subcommand(1);
  Input in;

  auto* c_homfly = app.add_subcommand("homfly", "HOMFLY polynomial P(v, z)");
  add_input_options(c_homfly, in);
  auto* c_kauffman = app.add_subcommand("kauffman", "Kauffman polynomial F(a, z)");
  add_input_options(c_kauffman, in);
  auto* c_conway = app.add_subcommand("conway", "Conway polynomial");
  add_input_options(c_conway, in, false);
  auto* c_det = app.add_subcommand("determinant", "signed determinant Delta(-1)");
  add_input_options(c_det, in, false);
  auto* c_mfw = app.add_subcommand("mfw", "Morton-Williams-Franks braid index bound");
  add_input_options(c_mfw, in, false);

  auto* c_cable = app.add_subcommand("cable2", "HOMFLY polynomial of the 2-cable");
  add_input_options(c_cable, in);
  int framing = 0;
  bool word_only = false;
  c_cable->add_option("--framing", framing, "linking number of the two copies");
  c_cable->add_flag("--word-only", word_only, "print the cable braid word only");

  auto* c_vass = app.add_subcommand("vassiliev", "Vassiliev invariant extracted from HOMFLY");
  add_input_options(c_vass, in, false);
  std::string mode = "derivation";
  unsigned a = 0;
  int b = 0;
  bool use_cable = false;
  c_vass->add_option("--mode", mode)->check(CLI::IsMember({"derivation", "taylor"}));
  c_vass->add_option("--a", a, "derivative order / power of h")->required();
  c_vass->add_option("--b", b, "z-exponent")->required();
  c_vass->add_flag("--cable", use_cable, "extract from the untwisted 2-cable");

  auto* c_chir = app.add_subcommand("chirality", "chirality report");
  add_input_options(c_chir, in, false);
  bool with_cable = false;
  c_chir->add_flag("--with-2cable", with_cable, "include the 2-cable HOMFLY analysis");

  auto* c_valid = app.add_subcommand("validate-table", "recompute all checksums of a knot table");
  c_valid->add_option("--table", in.table, "knot table JSON");
  c_valid->add_option("--format", in.format)->check(CLI::IsMember({"poly", "json"}));
  c_valid->add_option("--workers", in.workers)->check(CLI::Range(1u, 256u));

  CLI11_PARSE(app, argc, argv);

  try {
    const SkeinConfig cfg = config(in);
    if (c_valid->parsed()) {
      auto entries = validate_table(load_table(table_path(in)), cfg);
      bool ok = true;
      for (const auto& e : entries) ok &= e.passed;
      if (in.format == "json") {
        std::cout << validation_json(entries).dump(2) << "\n";
      } else {
        for (const auto& e : entries) {
          std::cout << (e.passed ? "PASS " : "FAIL ") << e.knot << " " << e.invariant << "\n";
          if (!e.passed) std::cout << "  expected: " << e.expected << "\n  actual:   " << e.actual << "\n";
        }
      }
      return ok ? 0 : 1;
    }

    KnotRecord rec = input_record(in);
    if (c_homfly->parsed()) {
      if (rec.braid && in.engine == "braid") print_poly2(homfly_braid(*rec.braid, cfg), in, "v", &rec);
      else print_poly2(record_homfly(rec, cfg), in, "v", &rec);
    } else if (c_kauffman->parsed()) {
      print_poly2(record_kauffman(rec, cfg), in, "a", nullptr);
    } else if (c_conway->parsed()) {
      LaurentPoly1 n = conway(record_homfly(rec, cfg));
      if (in.format == "json") std::cout << poly_json(n).dump(2) << "\n";
      else std::cout << n.to_string("x") << "\n";
    } else if (c_det->parsed()) {
      Integer d = determinant_signed(conway(record_homfly(rec, cfg)));
      if (in.format == "json") std::cout << nlohmann::json{{"determinant", d.get_str()}}.dump(2) << "\n";
      else std::cout << d.get_str() << "\n";
    } else if (c_mfw->parsed()) {
      int m = mfw_bound(record_homfly(rec, cfg));
      if (in.format == "json") std::cout << nlohmann::json{{"mfw_bound", m}}.dump(2) << "\n";
      else std::cout << m << "\n";
    } else if (c_cable->parsed()) {
      if (!rec.braid) throw UsageError("cable2 needs a braid word (use --braid or a table knot with a braid)");
      BraidWord cable = two_cable(*rec.braid, CablePattern{framing});
      if (framing == 0) cable_writhe_audit(*rec.braid, cable);
      KnotRecord cr;
      cr.name = "2-cable of " + rec.name;
      cr.braid = cable;
      if (word_only) {
        std::cout << to_string(cable) << "\n";
      } else if (in.format == "json") {
        std::cout << nlohmann::json{{"braid", to_string(cable)}, {"homfly", poly_json(homfly_braid(cable, cfg))}}.dump(2)
                  << "\n";
      } else {
        print_poly2(homfly_braid(cable, cfg), in, "v", &cr);
      }
    } else if (c_vass->parsed()) {
      LaurentPoly2 p;
      if (use_cable) {
        if (!rec.braid) throw UsageError("--cable needs a braid word");
        p = homfly_braid(two_cable(*rec.braid), cfg);
      } else {
        p = record_homfly(rec, cfg);
      }
      const LaurentPoly2 q = conj_homfly(p);
      std::string value, obverse_value;
      if (mode == "derivation") {
        value = v_derivation_invariant(p, a, b).to_string();
        obverse_value = v_derivation_invariant(q, a, b).to_string();
      } else {
        value = to_string(taylor_invariant(p, a, b));
        obverse_value = to_string(taylor_invariant(q, a, b));
      }
      if (in.format == "json")
        std::cout << nlohmann::json{{"mode", mode}, {"a", a}, {"b", b}, {"value", value}, {"obverse_value", obverse_value}}
                         .dump(2)
                  << "\n";
      else std::cout << value << "\n";
    } else if (c_chir->parsed()) {
      ChiralityReport r = chirality_report(rec, with_cable, cfg);
      if (in.format == "json") std::cout << report_json(r).dump(2) << "\n";
      else print_text_report(r);
    }
  } catch (const UsageError& e) {
    std::cerr << "knotdb: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "knotdb: resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "knotdb: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
