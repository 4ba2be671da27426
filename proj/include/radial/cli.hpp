#pragma once

// Command-line front end: reduce, spectrum, wavefunction, verify.
//
// Exit codes: 0 success, 2 usage / invalid input, 3 tolerance check failed,
// 4 numerical failure. Tables go to standard output (or --output), diagnostics
// to standard error. A --config file holds flat `key = value` lines named
// after the long flags; flags given on the command line take precedence.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <locale>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "radial/analytic.hpp"
#include "radial/errors.hpp"
#include "radial/oracle.hpp"
#include "radial/reduction.hpp"

namespace radial::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kTolerance = 3, kNumerical = 4 };

using Json = nlohmann::ordered_json;

/// Shortest round-trip decimal form, independent of the global locale.
inline std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

/// Parses "c1:p1,c2:p2" into power-series terms.
inline PowerSeries parse_terms(const std::string& text) {
  PowerSeries series;
  std::stringstream list(text);
  std::string item;
  while (std::getline(list, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw DomainError("--terms: expected coefficient:exponent, got '" + item + "'");
    }
    try {
      std::size_t used_c = 0, used_p = 0;
      const std::string c = item.substr(0, colon), p = item.substr(colon + 1);
      const double coefficient = std::stod(c, &used_c);
      const double exponent = std::stod(p, &used_p);
      if (used_c != c.size() || used_p != p.size()) throw std::invalid_argument(item);
      series.terms.push_back({coefficient, exponent});
    } catch (const std::logic_error&) {
      throw DomainError("--terms: cannot parse '" + item + "'");
    }
  }
  if (series.terms.empty()) throw DomainError("--terms: no terms given");
  return series;
}

/// Parses "(N,l),(N,l),..." .
inline std::vector<DimAngular> parse_pairs(const std::string& text) {
  static const std::regex pair_re(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
  std::vector<DimAngular> pairs;
  std::string rest;
  auto begin = std::sregex_iterator(text.begin(), text.end(), pair_re);
  std::size_t consumed = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    const auto gap = text.substr(consumed, static_cast<std::size_t>(it->position()) - consumed);
    if (gap.find_first_not_of(" ,;") != std::string::npos) {
      throw DomainError("--pairs: cannot parse '" + text + "'");
    }
    pairs.push_back({std::stoi((*it)[1]), std::stoi((*it)[2])});
    consumed = static_cast<std::size_t>(it->position() + it->length());
  }
  if (pairs.empty() || text.substr(consumed).find_first_not_of(" ,;") != std::string::npos) {
    throw DomainError("--pairs: expected a list like \"(3,0),(5,1)\"");
  }
  return pairs;
}

/// Reads flat `key = value` lines; `#` starts a comment.
inline std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int line_no = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    s = s.substr(b, e - b + 1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    return s;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError(path + ":" + std::to_string(line_no) + ": expected key = value");
    }
    entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return entries;
}

struct Options {
  // problem
  int dim = 3;
  int l = 0;
  std::string potential = "oscillator";
  double a = 1.0;
  double omega = 1.0;
  double zeta = 1.0;
  std::string terms;
  // reduce
  int max_dim = 0;
  // spectrum
  int levels = 1;
  bool check = false;
  double tol = 1e-6;
  // wavefunction
  int nr = 0;
  double rmax = 0.0;
  int samples = 4000;
  bool use_oracle = false;
  // verify
  double K = 0.0;
  std::string pairs;
  int nrmax = 0;
  // numerics overrides
  int steps = 0;
  double energy_tol = 0.0;
  int max_bisections = 0;
  double oracle_rmax = 0.0;
  // output
  std::string format = "csv";
  std::string output;
};

inline PotentialSpec make_potential(const Options& o) {
  PotentialSpec spec;
  if (o.potential == "box") {
    spec = InfiniteWell{o.a};
  } else if (o.potential == "oscillator") {
    spec = Harmonic{o.omega};
  } else if (o.potential == "coulomb") {
    spec = Coulomb{o.zeta};
  } else if (o.potential == "powerseries") {
    if (o.terms.empty()) throw DomainError("--potential powerseries requires --terms");
    spec = parse_terms(o.terms);
  } else {
    throw DomainError("unknown potential '" + o.potential + "'");
  }
  validate(spec);
  return spec;
}

inline Json potential_json(const PotentialSpec& spec) {
  Json j;
  j["name"] = potential_name(spec);
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, InfiniteWell>) {
          j["a"] = p.a;
        } else if constexpr (std::is_same_v<T, Harmonic>) {
          j["omega"] = p.omega;
        } else if constexpr (std::is_same_v<T, Coulomb>) {
          j["zeta"] = p.zeta;
        } else {
          Json terms = Json::array();
          for (const auto& t : p.terms) terms.push_back({t.coefficient, t.exponent});
          j["terms"] = terms;
        }
      },
      spec);
  return j;
}

/// Numerics for one state: defaults per state, then user overrides.
inline oracle::NumericsConfig numerics(const Options& o, const PotentialSpec& spec, HalfInteger K,
                                       int n_r) {
  oracle::NumericsConfig cfg = oracle::default_config(spec, K, n_r);
  if (o.oracle_rmax > 0.0) {
    cfg.r_max = o.oracle_rmax;
    cfg.r_min = o.oracle_rmax * 1e-5;
  }
  if (o.steps > 0) cfg.steps = o.steps;
  if (o.energy_tol > 0.0) cfg.energy_tol = o.energy_tol;
  if (o.max_bisections > 0) cfg.max_bisections = o.max_bisections;
  oracle::validate(cfg);
  return cfg;
}

inline std::string pairs_text(const std::vector<DimAngular>& pairs) {
  std::string s = "[";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(pairs[i].dim) + "," + std::to_string(pairs[i].l) + ")";
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Commands

inline int cmd_reduce(const Options& o, std::ostream& out) {
  const ReducedProblem red = reduce(o.dim, o.l);
  const int max_dim = o.max_dim > 0 ? o.max_dim : red.n_bar;
  const auto partners = equivalent_problems(red.K, max_dim);
  if (o.format == "json") {
    Json j;
    j["meta"] = {{"command", "reduce"}, {"N", o.dim}, {"l", o.l}, {"max_dim", max_dim}};
    Json list = Json::array();
    for (const auto& p : partners) list.push_back({p.dim, p.l});
    j["data"] = {{"k", red.k.value()},
                 {"K", red.K.value()},
                 {"target_dim", red.target_dim},
                 {"L_eff", red.L_eff},
                 {"n_bar", red.n_bar},
                 {"partners", list}};
    out << j.dump(2) << "\n";
  } else {
    out << "N,l,k,K,target_dim,L_eff,n_bar,partners\n";
    out << o.dim << "," << o.l << "," << format_double(red.k.value()) << ","
        << format_double(red.K.value()) << "," << red.target_dim << "," << red.L_eff << ","
        << red.n_bar << ",\"" << pairs_text(partners) << "\"\n";
  }
  return kOk;
}

inline int cmd_spectrum(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.levels < 1) throw DomainError("--levels must be >= 1");
  const PotentialSpec spec = make_potential(o);
  const RadialProblem problem{o.dim, o.l, spec};
  const HalfInteger K = analytic::checked_reduce(o.dim, o.l).K;
  const bool closed = analytic::has_closed_form(spec);
  const bool run_oracle = o.check || !closed;

  std::vector<double> e_analytic, e_oracle, delta;
  bool within = true;
  for (int n_r = 0; n_r < o.levels; ++n_r) {
    if (closed) e_analytic.push_back(analytic::energy(problem, n_r));
    if (run_oracle) {
      const double e = oracle::solve_reduced(spec, K, n_r, numerics(o, spec, K, n_r)).energy;
      e_oracle.push_back(e);
      if (closed) {
        delta.push_back(std::abs(e - e_analytic.back()));
        if (delta.back() > o.tol) within = false;
      }
    }
  }

  std::string provenance = closed ? "analytic" : "oracle";
  if (closed && run_oracle) provenance = "analytic+oracle";
  if (o.format == "json") {
    Json j;
    j["meta"] = {{"command", "spectrum"}, {"N", o.dim},          {"l", o.l},
                 {"K", K.value()},        {"potential", potential_json(spec)},
                 {"provenance", provenance}, {"units", "natural"}, {"levels", o.levels}};
    if (!delta.empty()) j["meta"]["tol"] = o.tol;
    Json data;
    std::vector<int> n_r(static_cast<std::size_t>(o.levels));
    for (int i = 0; i < o.levels; ++i) n_r[i] = i;
    data["n_r"] = n_r;
    if (closed) data["E_analytic"] = e_analytic;
    if (run_oracle) data["E_oracle"] = e_oracle;
    if (!delta.empty()) data["abs_delta"] = delta;
    j["data"] = data;
    out << j.dump(2) << "\n";
  } else {
    out << "n_r";
    if (closed) out << ",E_analytic";
    if (run_oracle) out << ",E_oracle";
    if (!delta.empty()) out << ",abs_delta";
    out << "\n";
    for (int i = 0; i < o.levels; ++i) {
      out << i;
      if (closed) out << "," << format_double(e_analytic[i]);
      if (run_oracle) out << "," << format_double(e_oracle[i]);
      if (!delta.empty()) out << "," << format_double(delta[i]);
      out << "\n";
    }
  }
  if (!within) {
    err << "spectrum: oracle deviates from the closed form by more than tol = "
        << format_double(o.tol) << "\n";
    return kTolerance;
  }
  return kOk;
}

inline int cmd_wavefunction(const Options& o, std::ostream& out) {
  if (o.nr < 0) throw DomainError("--nr must be >= 0");
  if (o.samples < 3) throw DomainError("--samples must be >= 3");
  const PotentialSpec spec = make_potential(o);
  const RadialProblem problem{o.dim, o.l, spec};
  const ReducedProblem red = analytic::checked_reduce(o.dim, o.l);
  const bool use_oracle = o.use_oracle || !analytic::has_closed_form(spec);

  Eigenstate st = [&] {
    if (use_oracle) {
      oracle::NumericsConfig cfg = numerics(o, spec, red.K, o.nr);
      if (o.rmax > 0.0) {
        cfg.r_max = o.rmax;
        cfg.r_min = o.rmax * 1e-5;
      }
      const Eigenstate full = oracle::solve_state(problem, o.nr, cfg);
      // Thin the solver grid down to roughly the requested sample count.
      const std::size_t n = full.fn.size();
      const std::size_t stride =
          std::max<std::size_t>(1, (n + static_cast<std::size_t>(o.samples) - 1) /
                                       static_cast<std::size_t>(o.samples));
      std::vector<double> r, v;
      for (std::size_t i = 0; i < n; i += stride) {
        r.push_back(full.fn.grid()[i]);
        v.push_back(full.fn.values()[i]);
      }
      if (r.back() != full.fn.grid().back()) {
        r.push_back(full.fn.grid().back());
        v.push_back(full.fn.values().back());
      }
      return Eigenstate{full.n_r, full.energy,
                        RadialFunction(std::move(r), std::move(v), Representation::R_full),
                        full.norm_status, full.provenance};
    }
    const double r_max = o.rmax > 0.0 ? o.rmax : analytic::default_r_max(spec, red.K, o.nr);
    const auto grid =
        analytic::uniform_grid(r_max * 1e-4, r_max, static_cast<std::size_t>(o.samples));
    return analytic::normalize(analytic::state(problem, o.nr, grid), o.dim);
  }();

  if (o.format == "json") {
    Json j;
    j["meta"] = {{"command", "wavefunction"},
                 {"N", o.dim},
                 {"l", o.l},
                 {"K", red.K.value()},
                 {"n_r", o.nr},
                 {"E", st.energy},
                 {"potential", potential_json(spec)},
                 {"provenance", to_string(st.provenance)},
                 {"units", "natural"}};
    j["data"] = {{"r", st.fn.grid()}, {"R", st.fn.values()}};
    out << j.dump(2) << "\n";
  } else {
    out << "# N=" << o.dim << " l=" << o.l << " K=" << format_double(red.K.value())
        << " n_r=" << o.nr << " E=" << format_double(st.energy)
        << " potential=" << potential_name(spec) << " provenance=" << to_string(st.provenance)
        << " units=natural\n";
    out << "r,R\n";
    for (std::size_t i = 0; i < st.fn.size(); ++i) {
      out << format_double(st.fn.grid()[i]) << "," << format_double(st.fn.values()[i]) << "\n";
    }
  }
  return kOk;
}

inline int cmd_verify(const Options& o, bool have_K, bool have_pairs, std::ostream& out,
                      std::ostream& err) {
  if (have_K == have_pairs) throw DomainError("verify: give exactly one of --K or --pairs");
  if (o.nrmax < 0) throw DomainError("--nrmax must be >= 0");
  const PotentialSpec spec = make_potential(o);
  std::vector<DimAngular> pairs;
  if (have_pairs) {
    pairs = parse_pairs(o.pairs);
    for (const auto& p : pairs) validate_dim_l(p.dim, p.l);
  } else {
    const HalfInteger K = HalfInteger::from_double(o.K);
    if (K.twice() < 1) throw DomainError("--K must be >= 1/2");
    pairs = equivalent_problems(K, o.max_dim > 0 ? o.max_dim : K.twice() + 1);
    if (pairs.empty()) throw DomainError("verify: no (N, l) partners within --max-dim");
  }
  const HalfInteger K = reduce(pairs.front().dim, pairs.front().l).K;
  for (const auto& p : pairs) {
    if (reduce(p.dim, p.l).K != K) {
      throw ContractError("verify: pairs do not share K");
    }
  }

  // One configuration per level, shared by all partners.
  oracle::EquivalenceReport report{K, o.tol, pairs, {}, true, false};
  for (int n_r = 0; n_r <= o.nrmax; ++n_r) {
    auto level =
        oracle::verify_equivalence(spec, pairs, n_r, numerics(o, spec, K, n_r), o.tol, n_r);
    report.levels.push_back(std::move(level.levels.back()));
    report.passed = report.passed && report.levels.back().passed;
    report.solver_failure = report.solver_failure || level.solver_failure;
  }
  const bool closed = analytic::has_closed_form(spec);

  if (o.format == "json") {
    Json j;
    Json plist = Json::array();
    for (const auto& p : pairs) plist.push_back({p.dim, p.l});
    j["meta"] = {{"command", "verify"},  {"K", K.value()},       {"pairs", plist},
                 {"potential", potential_json(spec)}, {"tol", o.tol}, {"units", "natural"},
                 {"provenance", "oracle"}, {"passed", report.passed}};
    Json levels = Json::array();
    for (const auto& level : report.levels) {
      Json lj;
      lj["n_r"] = level.n_r;
      Json energies = Json::array();
      for (const auto& p : level.partners) {
        energies.push_back(p.energy ? Json(*p.energy) : Json(nullptr));
      }
      lj["E_oracle"] = energies;
      if (closed) {
        lj["E_analytic"] = analytic::energy({pairs.front().dim, pairs.front().l, spec}, level.n_r);
      }
      lj["max_deviation"] = level.max_energy_deviation;
      lj["max_psi_deviation"] = level.max_psi_deviation;
      lj["passed"] = level.passed;
      levels.push_back(lj);
    }
    j["data"] = {{"levels", levels}};
    out << j.dump(2) << "\n";
  } else {
    out << "n_r,N,l,E_oracle" << (closed ? ",E_analytic" : "")
        << ",max_deviation,max_psi_deviation,status\n";
    for (const auto& level : report.levels) {
      const std::string e_an =
          closed ? "," + format_double(analytic::energy({pairs.front().dim, pairs.front().l, spec},
                                                        level.n_r))
                 : "";
      for (const auto& p : level.partners) {
        out << level.n_r << "," << p.pair.dim << "," << p.pair.l << ","
            << (p.energy ? format_double(*p.energy) : std::string("nan")) << e_an << ","
            << format_double(level.max_energy_deviation) << ","
            << format_double(level.max_psi_deviation) << ","
            << (p.error.empty() ? (level.passed ? "pass" : "fail") : "error") << "\n";
      }
    }
  }
  for (const auto& level : report.levels) {
    for (const auto& p : level.partners) {
      if (!p.error.empty()) {
        err << "verify: (" << p.pair.dim << "," << p.pair.l << ") n_r=" << level.n_r << ": "
            << p.error << "\n";
      }
    }
  }
  if (report.solver_failure) return kNumerical;
  if (!report.passed) {
    err << "verify: partners disagree beyond tol = " << format_double(o.tol) << "\n";
    return kTolerance;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// Entry point

namespace detail {

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"reduce", "spectrum", "wavefunction", "verify"};
  return names;
}

/// Expands --config into ordinary `--key=value` tokens placed right after the
/// subcommand, so later command-line flags override them.
inline std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
      break;
    }
  }
  if (!path) return args;

  std::vector<std::string> injected;
  std::optional<std::string> command;
  for (const auto& [key, value] : read_config(*path)) {
    if (key == "command") {
      command = value;
    } else {
      injected.push_back("--" + key + "=" + value);
    }
  }
  const auto& names = command_names();
  auto sub = std::find_if(args.begin(), args.end(), [&](const std::string& a) {
    return std::find(names.begin(), names.end(), a) != names.end();
  });
  if (sub == args.end()) {
    if (!command) throw DomainError("no command given on the command line or in the config");
    args.insert(args.begin(), *command);
    sub = args.begin();
  }
  args.insert(sub + 1, injected.begin(), injected.end());
  return args;
}

}  // namespace detail

namespace detail {

/// Pins a stream to the classic locale for the duration of a call.
class ClassicLocale {
 public:
  explicit ClassicLocale(std::ostream& s) : stream_(s), saved_(s.imbue(std::locale::classic())) {}
  ~ClassicLocale() { stream_.imbue(saved_); }
  ClassicLocale(const ClassicLocale&) = delete;
  ClassicLocale& operator=(const ClassicLocale&) = delete;

 private:
  std::ostream& stream_;
  std::locale saved_;
};

}  // namespace detail

/// Runs one CLI invocation; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  const detail::ClassicLocale out_locale(out);
  const detail::ClassicLocale err_locale(err);
  Options o;
  CLI::App app{"Radial Schrodinger solver with dimensional reduction (N, l) -> K"};
  app.name("radial");
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  auto add_problem = [&](CLI::App* sub) {
    sub->add_option("--dim", o.dim, "Dimension N >= 2");
    sub->add_option("--l", o.l, "Angular momentum l >= 0");
  };
  auto add_potential = [&](CLI::App* sub) {
    sub->add_option("--potential", o.potential, "box | oscillator | coulomb | powerseries");
    sub->add_option("--a", o.a, "Box radius");
    sub->add_option("--omega", o.omega, "Oscillator frequency");
    sub->add_option("--zeta", o.zeta, "Coulomb strength Z e^2");
    sub->add_option("--terms", o.terms, "Power series \"c1:p1,c2:p2\"");
  };
  auto add_numerics = [&](CLI::App* sub) {
    sub->add_option("--steps", o.steps, "Oracle grid steps (>= 10000)");
    sub->add_option("--energy-tol", o.energy_tol, "Oracle bisection width");
    sub->add_option("--max-bisections", o.max_bisections, "Oracle bisection budget");
    sub->add_option("--oracle-rmax", o.oracle_rmax, "Oracle outer radius");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", o.output, "Write to this file instead of stdout");
  };

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "Reduce (N, l) to K and list partners");
  add_problem(reduce_cmd);
  reduce_cmd->add_option("--max-dim", o.max_dim, "Largest partner dimension to list");
  add_output(reduce_cmd);

  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "Energy levels");
  add_problem(spectrum_cmd);
  add_potential(spectrum_cmd);
  add_numerics(spectrum_cmd);
  add_output(spectrum_cmd);
  spectrum_cmd->add_option("--levels", o.levels, "Number of levels n_r = 0..levels-1");
  spectrum_cmd->add_flag("--check", o.check, "Cross-check with the numerical oracle");
  spectrum_cmd->add_option("--tol", o.tol, "Tolerance for --check");

  CLI::App* wave_cmd = app.add_subcommand("wavefunction", "Normalized radial wavefunction");
  add_problem(wave_cmd);
  add_potential(wave_cmd);
  add_numerics(wave_cmd);
  add_output(wave_cmd);
  wave_cmd->add_option("--nr", o.nr, "Radial quantum number");
  wave_cmd->add_option("--rmax", o.rmax, "Outer radius of the sample grid");
  wave_cmd->add_option("--samples", o.samples, "Number of samples");
  wave_cmd->add_flag("--oracle", o.use_oracle, "Use the numerical oracle");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check equivalence of (N, l) partners");
  add_potential(verify_cmd);
  add_numerics(verify_cmd);
  add_output(verify_cmd);
  CLI::Option* k_opt = verify_cmd->add_option("--K", o.K, "Common K (half-integer)");
  CLI::Option* pairs_opt = verify_cmd->add_option("--pairs", o.pairs, "\"(N,l),(N,l),...\"");
  verify_cmd->add_option("--max-dim", o.max_dim, "Largest partner dimension for --K");
  verify_cmd->add_option("--nrmax", o.nrmax, "Highest n_r to check");
  verify_cmd->add_option("--tol", o.tol, "Energy tolerance (psi uses 10 tol)");

  try {
    args = detail::expand_config(std::move(args));
    std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "radial: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "radial: " << e.what() << "\n";
    return kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.output.empty()) {
    file.imbue(std::locale::classic());
    file.open(o.output);
    if (!file) {
      err << "radial: cannot open output file '" << o.output << "'\n";
      return kUsage;
    }
    sink = &file;
  }

  try {
    if (reduce_cmd->parsed()) return cmd_reduce(o, *sink);
    if (spectrum_cmd->parsed()) return cmd_spectrum(o, *sink, err);
    if (wave_cmd->parsed()) return cmd_wavefunction(o, *sink);
    return cmd_verify(o, k_opt->count() > 0, pairs_opt->count() > 0, *sink, err);
  } catch (const NumericalError& e) {
    err << "radial: " << e.what();
    if (!e.detail().empty()) err << " (" << e.detail() << ")";
    err << "\n";
    return kNumerical;
  } catch (const std::logic_error& e) {
    // DomainError, RangeError and ContractError all derive from logic_error.
    err << "radial: " << e.what() << "\n";
    return kUsage;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args), out, err);
}

}  // namespace radial::cli
