#include "schubert/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "schubert/budget.hpp"
#include "schubert/full_bijection.hpp"
#include "schubert/hilbert.hpp"
#include "schubert/lattice_paths.hpp"
#include "schubert/minor_algebra.hpp"
#include "schubert/standard_monomial.hpp"

namespace schubert::cli {

namespace {

using nlohmann::ordered_json;

struct Config {
  int d = 0;
  int n = 0;
  std::string v;
  std::string w;
  std::string format = "table";
};

struct Inputs {
  GrassmannIndex v;
  std::optional<GrassmannIndex> w;
};

Inputs parse_inputs(const Config& cfg, bool need_w) {
  if (cfg.n < 1) throw InvalidInput("--n is required");
  if (cfg.v.empty()) throw InvalidInput("--v is required");
  GrassmannIndex v = GrassmannIndex::parse(cfg.n, cfg.v);
  if (cfg.d != 0 && cfg.d != v.d())
    throw InvalidInput("--d " + std::to_string(cfg.d) + " does not match v = " + v.str());
  std::optional<GrassmannIndex> w;
  if (!cfg.w.empty()) {
    w = GrassmannIndex::parse(cfg.n, cfg.w);
    if (w->d() != v.d()) throw InvalidInput("v and w have different lengths");
    if (!bruhat_leq(v, *w)) throw InvalidInput("requires v <= w, got v = " + v.str() + ", w = " + w->str());
  } else if (need_w) {
    throw InvalidInput("--w is required");
  }
  return {std::move(v), std::move(w)};
}

ordered_json number(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

ordered_json index_json(const GrassmannIndex& x) { return std::vector<int>(x.entries().begin(), x.entries().end()); }

ordered_json root_json(const Root& r) { return {r.row, r.col}; }

ordered_json roots_json(const std::vector<Root>& rs) {
  ordered_json out = ordered_json::array();
  for (const Root& r : rs) out.push_back(root_json(r));
  return out;
}

ordered_json envelope(const char* command, const Inputs& in) {
  ordered_json j;
  j["schema"] = kJsonSchema;
  j["command"] = command;
  j["input"] = {{"d", in.v.d()}, {"n", in.v.n()}, {"v", index_json(in.v)}};
  j["input"]["w"] = in.w ? index_json(*in.w) : ordered_json(nullptr);
  return j;
}

std::string join(const std::vector<BigInt>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i].str();
  return out;
}

// ---------------------------------------------------------------------------

struct HilbertOptions {
  int max = 5;
  bool verify = false;
};

int cmd_hilbert(const Config& cfg, const HilbertOptions& opt, std::ostream& out, std::ostream& err) {
  const Inputs in = parse_inputs(cfg, true);
  if (opt.max < 0) throw InvalidInput("--max must be non-negative");
  const GrassmannIndex& v = in.v;
  const GrassmannIndex& w = *in.w;
  const std::vector<BigInt> ie = hilbert_inclusion_exclusion_series(maximal_dominated(v, w), opt.max);

  bool agree = true;
  std::vector<BigInt> direct;
  std::vector<BigInt> standard;
  if (opt.verify) {
    direct = hilbert_direct_series(v, w, opt.max);
    for (int m = 0; m <= opt.max; ++m) standard.push_back(count_standard(v, w, m));
    agree = direct == ie && standard == ie;
    if (!agree)
      err << "hilbert: mismatch: inclusion_exclusion " << join(ie) << ", direct " << join(direct)
          << ", standard_monomials " << join(standard) << '\n';
  }

  if (cfg.format == "json") {
    ordered_json j = envelope("hilbert", in);
    ordered_json values = ordered_json::array();
    for (int m = 0; m <= opt.max; ++m) values.push_back({{"m", m}, {"h", number(ie[m])}});
    j["hilbert"] = {{"provenance", "inclusion_exclusion"}, {"values", values}};
    if (opt.verify) {
      ordered_json checks = ordered_json::array();
      auto add = [&](const char* name, const std::vector<BigInt>& xs) {
        ordered_json vals = ordered_json::array();
        for (const auto& x : xs) vals.push_back(number(x));
        checks.push_back({{"provenance", name}, {"values", vals}, {"agrees", xs == ie}});
      };
      add("direct", direct);
      add("standard_monomials", standard);
      j["verification"] = checks;
    }
    j["status"] = agree ? "ok" : "mismatch";
    out << j.dump(2) << '\n';
  } else {
    out << "m\th(m)\n";
    for (int m = 0; m <= opt.max; ++m) out << m << '\t' << ie[m] << '\n';
    if (opt.verify) out << "verify: direct and standard-monomial counts " << (agree ? "agree" : "DISAGREE") << '\n';
  }
  return agree ? ExitCode::ok : ExitCode::mismatch;
}

// ---------------------------------------------------------------------------

struct MultiplicityOptions {
  bool verify = false;
  bool list = false;
};

int cmd_multiplicity(const Config& cfg, const MultiplicityOptions& opt, std::ostream& out, std::ostream& err) {
  const Inputs in = parse_inputs(cfg, true);
  const DominatedFaceFamily family = maximal_dominated(in.v, *in.w);
  const std::size_t mult = family.faces.size();
  std::size_t via_paths = 0;
  std::size_t max_card = 0;
  bool agree = true;
  if (opt.verify) {
    via_paths = enumerate_tuples(in.v, *in.w).size();
    max_card = max_cardinality_count(family);
    agree = via_paths == mult && max_card == mult;
    if (!agree)
      err << "multiplicity: mismatch: maximal faces " << mult << ", path tuples " << via_paths
          << ", maximum-cardinality faces " << max_card << '\n';
  }
  // Every maximal face contains all of R^v \ N^v; only the N^v part is listed.
  auto positive_part = [](const std::vector<Root>& face) {
    std::vector<Root> out;
    for (const Root& r : face)
      if (r.positive()) out.push_back(r);
    return out;
  };

  if (cfg.format == "json") {
    ordered_json j = envelope("multiplicity", in);
    j["multiplicity"] = {{"value", mult}, {"provenance", "direct"}};
    if (opt.verify)
      j["verification"] = ordered_json::array(
          {{{"provenance", "paths"}, {"value", via_paths}, {"agrees", via_paths == mult}},
           {{"provenance", "max_cardinality"}, {"value", max_card}, {"agrees", max_card == mult}}});
    if (opt.list) {
      ordered_json faces = ordered_json::array();
      for (const auto& f : family.faces) faces.push_back(roots_json(positive_part(f)));
      j["maximal_faces"] = faces;
    }
    j["status"] = agree ? "ok" : "mismatch";
    out << j.dump(2) << '\n';
  } else {
    out << "multiplicity\t" << mult << '\n';
    if (opt.verify)
      out << "verify: path tuples " << via_paths << ", maximum-cardinality faces " << max_card
          << (agree ? " (agree)" : " (DISAGREE)") << '\n';
    if (opt.list)
      for (const auto& f : family.faces) {
        out << '{';
        const auto pos = positive_part(f);
        for (std::size_t i = 0; i < pos.size(); ++i) out << (i ? "," : "") << pos[i];
        out << "}\n";
      }
  }
  return agree ? ExitCode::ok : ExitCode::mismatch;
}

// ---------------------------------------------------------------------------

struct PathsOptions {
  bool count = false;
  std::string render;
  std::string out_dir;
};

std::string path_str(const LatticePath& p) {
  std::string s;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) s += (i ? "-" : "") + p.vertices[i].str();
  return s;
}

int cmd_paths(const Config& cfg, const PathsOptions& opt, std::ostream& out, std::ostream& err) {
  const Inputs in = parse_inputs(cfg, true);
  std::optional<RenderFormat> fmt;
  if (!opt.render.empty()) fmt = parse_render_format(opt.render);
  if (!opt.out_dir.empty() && !fmt) throw InvalidInput("--out needs --render");
  if (!unit_steps_agree(in.v, *in.w))
    err << "warning: rows or columns of v are not consecutive integers here; paths use grid-successor steps\n";

  const std::vector<PathTuple> tuples = enumerate_tuples(in.v, *in.w);
  const std::size_t paths_per_tuple = distinguished_of(*in.w, in.v).size();

  if (fmt) {
    if (opt.out_dir.empty()) {
      out << render_sheet(in.v, *in.w, tuples, *fmt);
      return ExitCode::ok;
    }
    const std::filesystem::path dir(opt.out_dir);
    std::filesystem::create_directories(dir);
    const char* ext = *fmt == RenderFormat::svg ? ".svg" : ".txt";
    std::vector<std::string> written;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      std::ostringstream name;
      name << "tuple_" << std::setw(3) << std::setfill('0') << i + 1 << ext;
      std::ofstream f(dir / name.str(), std::ios::binary);
      f << render(in.v, *in.w, tuples[i], *fmt);
      if (!f) throw std::runtime_error("cannot write " + (dir / name.str()).string());
      written.push_back((dir / name.str()).string());
    }
    if (cfg.format == "json") {
      ordered_json j = envelope("paths", in);
      j["tuples"] = {{"value", tuples.size()}, {"provenance", "paths"}};
      j["files"] = written;
      j["status"] = "ok";
      out << j.dump(2) << '\n';
    } else {
      for (const auto& name : written) out << name << '\n';
    }
    return ExitCode::ok;
  }

  if (cfg.format == "json") {
    ordered_json j = envelope("paths", in);
    j["paths_per_tuple"] = paths_per_tuple;
    j["tuples"] = {{"value", tuples.size()}, {"provenance", "paths"}};
    if (!opt.count) {
      ordered_json list = ordered_json::array();
      for (const auto& t : tuples) {
        ordered_json tj = ordered_json::array();
        for (const auto& p : t) tj.push_back(roots_json(p.vertices));
        list.push_back(tj);
      }
      j["tuple_list"] = list;
    }
    j["status"] = "ok";
    out << j.dump(2) << '\n';
    return ExitCode::ok;
  }

  if (paths_per_tuple == 0) {
    out << "0 paths, 1 empty tuple\n";
    return ExitCode::ok;
  }
  if (opt.count) {
    out << tuples.size() << '\n';
    return ExitCode::ok;
  }
  out << tuples.size() << " tuples of " << paths_per_tuple << " paths\n";
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    out << i + 1 << ':';
    for (const auto& p : tuples[i]) out << "  " << path_str(p);
    out << '\n';
  }
  return ExitCode::ok;
}

// ---------------------------------------------------------------------------

int cmd_bijection(const Config& cfg, int degree, std::ostream& out, std::ostream& err) {
  const Inputs in = parse_inputs(cfg, true);
  if (degree < 0) throw InvalidInput("--degree must be non-negative");
  const BijectionReport r = full_bijection(in.v, *in.w, degree);
  if (!r.ok())
    err << "bijection: failure at degree " << degree << " (images_valid=" << r.images_valid
        << ", injective=" << r.injective << ", surjective=" << r.surjective << ", round_trip=" << r.round_trip << ")\n";
  if (cfg.format == "json") {
    ordered_json j = envelope("bijection", in);
    j["degree"] = degree;
    j["monomials"] = {{"value", r.monomials}, {"provenance", "direct"}};
    j["standard_monomials"] = {{"value", r.standard}, {"provenance", "standard_monomials"}};
    j["images_valid"] = r.images_valid;
    j["injective"] = r.injective;
    j["surjective"] = r.surjective;
    j["round_trip"] = r.round_trip;
    j["status"] = r.ok() ? "ok" : "mismatch";
    out << j.dump(2) << '\n';
  } else {
    out << r.monomials << " ↔ " << r.standard << ", round-trip " << (r.ok() ? "OK" : "FAILED") << '\n';
  }
  return r.ok() ? ExitCode::ok : ExitCode::mismatch;
}

// ---------------------------------------------------------------------------

struct GroebnerOptions {
  std::vector<int> families{1, 2, 3, 4};
  bool reduction = false;
  int max = 3;
};

int cmd_groebner(const Config& cfg, const GroebnerOptions& opt, std::ostream& out, std::ostream& err) {
  for (int f : opt.families) require_family(f);
  const Inputs in = parse_inputs(cfg, opt.reduction);
  if (opt.max < 0) throw InvalidInput("--max must be non-negative");
  const InitialTermReport report = check_initial_terms(in.v, std::nullopt, opt.families);
  bool ok = report.ok();
  for (const auto& bad : report.violations)
    err << "groebner: family " << bad.family << ", theta " << bad.theta << ": initial term " << bad.actual
        << ", expected " << bad.expected << '\n';

  // Hilbert function of the initial ideal against the direct count.
  ordered_json counts = ordered_json::array();
  std::vector<std::string> count_lines;
  if (in.w) {
    const std::vector<BigInt> h = hilbert_direct_series(in.v, *in.w, opt.max);
    for (int f : opt.families)
      for (int m = 0; m <= opt.max; ++m) {
        const BigInt c = count_initial_ideal_complement(in.v, *in.w, f, m);
        const bool agrees = c == h[m];
        ok = ok && agrees;
        if (!agrees) err << "groebner: family " << f << ", degree " << m << ": " << c << " standard monomials, h = " << h[m] << '\n';
        counts.push_back({{"family", f}, {"m", m}, {"standard", number(c)}, {"h", number(h[m])}, {"agrees", agrees}});
        count_lines.push_back("family " + std::to_string(f) + " m=" + std::to_string(m) + ": " + c.str() +
                              (agrees ? " = h" : " != h = " + h[m].str()));
      }
  }

  std::size_t reduced = 0;
  std::size_t trivial = 0;
  if (opt.reduction)
    for (const auto& theta : all_indices(in.v.d(), in.v.n())) {
      if (bruhat_leq(theta, *in.w)) continue;
      const ReductionCertificate cert = verify_generator_reduction(in.v, *in.w, theta);
      ++reduced;
      if (cert.trivial) ++trivial;
    }

  if (cfg.format == "json") {
    ordered_json j = envelope("groebner", in);
    j["families"] = opt.families;
    ordered_json viol = ordered_json::array();
    for (const auto& bad : report.violations)
      viol.push_back({{"family", bad.family}, {"theta", index_json(bad.theta)}, {"expected", roots_json(bad.expected.support())},
                      {"actual", roots_json(bad.actual.support())}});
    j["initial_terms"] = {{"minors_checked", report.minors_checked}, {"violations", viol}, {"ok", report.ok()}};
    if (in.w) j["initial_ideal_counts"] = counts;
    if (opt.reduction) j["generator_reduction"] = {{"checked", reduced}, {"trivial", trivial}, {"ok", true}};
    j["status"] = ok ? "ok" : "mismatch";
    out << j.dump(2) << '\n';
  } else {
    out << "initial terms: " << report.minors_checked << " minors x " << opt.families.size() << " families, "
        << (report.ok() ? "pass" : "FAIL") << '\n';
    for (const auto& line : count_lines) out << line << '\n';
    if (opt.reduction) out << "generator reduction: " << reduced << " minors (" << trivial << " already generators), pass\n";
  }
  return ok ? ExitCode::ok : ExitCode::mismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert functions and multiplicities of tangent cones to Schubert varieties in the Grassmannian",
               "schubert"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--d", cfg.d, "dimension d (checked against --v)");
  app.add_option("--n", cfg.n, "ambient n");
  app.add_option("--v", cfg.v, "the point e^v, comma-separated entries");
  app.add_option("--w", cfg.w, "the Schubert variety X_w, comma-separated entries");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json"}));

  HilbertOptions hopt;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function h(0..max) of the tangent cone");
  hilbert->add_option("--max", hopt.max, "largest degree");
  hilbert->add_flag("--verify", hopt.verify, "cross-check against direct and standard-monomial counts");

  MultiplicityOptions mopt;
  auto* mult = app.add_subcommand("multiplicity", "multiplicity of the tangent cone");
  mult->add_flag("--verify", mopt.verify, "cross-check against path tuples");
  mult->add_flag("--list", mopt.list, "list the maximal dominated sets (N^v part)");

  PathsOptions popt;
  auto* paths = app.add_subcommand("paths", "non-intersecting lattice path tuples");
  paths->add_flag("--count", popt.count, "print only the number of tuples");
  paths->add_option("--render", popt.render, "ascii or svg");
  paths->add_option("--out", popt.out_dir, "write one file per tuple into this directory");

  int degree = 2;
  auto* bij = app.add_subcommand("bijection", "check the monomial / standard monomial bijection in one degree");
  bij->add_option("--degree", degree, "degree m");

  GroebnerOptions gopt;
  auto* groebner = app.add_subcommand("groebner", "initial terms of the minors and the initial ideal");
  groebner->add_option("--families", gopt.families, "term order families (1-4)")->delimiter(',');
  groebner->add_flag("--reduction", gopt.reduction, "certify every minor f_theta, theta not <= w, from the generators");
  groebner->add_option("--max", gopt.max, "largest degree for the initial-ideal count");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage;
  }

  try {
    budget::ScopedBudget scope(budget::from_environment());
    if (*hilbert) return cmd_hilbert(cfg, hopt, out, err);
    if (*mult) return cmd_multiplicity(cfg, mopt, out, err);
    if (*paths) return cmd_paths(cfg, popt, out, err);
    if (*bij) return cmd_bijection(cfg, degree, out, err);
    return cmd_groebner(cfg, gopt, out, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << '\n';
    return ExitCode::budget_exceeded;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return ExitCode::mismatch;
  } catch (const std::exception& e) {
    // File output problems and the like: not a mathematical failure.
    err << "error: " << e.what() << '\n';
    return ExitCode::usage;
  }
}

}  // namespace schubert::cli
