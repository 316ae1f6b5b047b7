// Copyright (c) 2026 the furst authors.
// SPDX-License-Identifier: Apache-2.0
//
// Batch entry point: every experiment in the library behind one binary with
// reproducible seeds and diff-able CSV/JSON output.
//
// Exit codes: 0 success, 2 configuration error, 3 file I/O error,
// 4 a checked property was violated (the report names the witness).

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "furst/bernoulli.hpp"
#include "furst/measure_io.hpp"
#include "furst/nonsingular.hpp"
#include "furst/odometer.hpp"
#include "furst/random_systems.hpp"
#include "furst/skew.hpp"
#include "furst/spectral.hpp"
#include "furst/version.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kIoError = 3;
constexpr int kViolation = 4;

using Cell = std::variant<std::string, double, std::int64_t, std::uint64_t, bool>;

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> cells) {
    if (cells.size() != columns.size())
      throw std::logic_error("internal: row width mismatch");
    rows.push_back(std::move(cells));
  }
};

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

std::string cell_to_csv(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) return csv_escape(v);
        else if constexpr (std::is_same_v<T, double>) return fmt_double(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return std::to_string(v);
      },
      c);
}

nlohmann::json cell_to_json(const Cell& c) {
  return std::visit([](const auto& v) { return nlohmann::json(v); }, c);
}

void ensure_finite(const Table& t) {
  for (const auto& row : t.rows)
    for (const auto& cell : row)
      if (const double* d = std::get_if<double>(&cell); d && !std::isfinite(*d))
        throw std::logic_error("internal: non-finite value in output table");
}

std::string render_csv(const Table& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    out << (i ? "," : "") << csv_escape(t.columns[i]);
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << cell_to_csv(row[i]);
    out << '\n';
  }
  return out.str();
}

std::string render_json(const Table& t) {
  nlohmann::json doc;
  doc["command"] = t.command;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r;
    for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = cell_to_json(row[i]);
    doc["rows"].push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

int emit(const Table& t, const std::string& out_path, const std::string& format) {
  ensure_finite(t);
  const std::string body = format == "json" ? render_json(t) : render_csv(t);
  if (out_path.empty()) {
    std::cout << body;
    return kOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return kIoError;
  }
  out << body;
  out.flush();
  if (!out) {
    std::cerr << "error: failed writing output file: " << out_path << "\n";
    return kIoError;
  }
  return kOk;
}

// One bag of options shared by all subcommands; each registers the subset it
// understands. Values start from built-in defaults, may be overridden by a
// JSON config file, and flags always win.
struct Options {
  std::string mu_path;
  std::string out_path;
  std::string format = "csv";
  std::string system = "swap";
  std::string config_path;
  double p = -1.0;  // sentinel: not provided
  std::vector<double> p_grid;
  double q = 0.3;
  double alpha = 0.01;
  std::uint64_t seed = 42;
  std::size_t samples = 100000;
  unsigned trunc = 40;
  unsigned threads = 0;
  std::uint32_t n = 8;
  std::vector<std::uint32_t> n_list = {2, 4, 8, 16, 32, 64, 128, 256};
  std::size_t count = 50;
  std::vector<std::uint32_t> indices = {1, 2, 3, 4, 5, 6, 7, 8};

  bool p_given = false;
  bool grid_given = false;
  bool mu_given = false;
};

void apply_config_file(Options& o) {
  if (o.config_path.empty()) return;
  std::ifstream in(o.config_path);
  if (!in) throw furst::MeasureIoError("cannot open config file: " + o.config_path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config file: expected an object");
  const auto get = [&](const char* key, auto& slot) {
    if (doc.contains(key)) slot = doc[key].get<std::decay_t<decltype(slot)>>();
  };
  get("mu", o.mu_path);
  get("out", o.out_path);
  get("format", o.format);
  get("system", o.system);
  get("q", o.q);
  get("alpha", o.alpha);
  get("seed", o.seed);
  get("samples", o.samples);
  get("trunc", o.trunc);
  get("threads", o.threads);
  get("n", o.n);
  get("n_list", o.n_list);
  get("count", o.count);
  get("indices", o.indices);
  if (doc.contains("p")) {
    o.p = doc["p"].get<double>();
    o.p_given = true;
  }
  if (doc.contains("p_grid")) {
    o.p_grid = doc["p_grid"].get<std::vector<double>>();
    o.grid_given = true;
  }
  if (doc.contains("mu")) o.mu_given = true;
}

template <typename G>
furst::FiniteSupportMeasure<G> require_measure(furst::AnyMeasure m, const char* what) {
  if (auto* v = std::get_if<furst::FiniteSupportMeasure<G>>(&m)) return std::move(*v);
  throw furst::MeasureFormatError(std::string("measure file: expected group \"") +
                                  what + "\" for this command");
}

const std::string& require_mu_path(const Options& o) {
  if (o.mu_path.empty())
    throw std::invalid_argument("--mu is required (flag or config file)");
  return o.mu_path;
}

std::vector<double> resolve_p_values(const Options& o, bool required = true) {
  if (o.p_given && o.grid_given)
    throw std::invalid_argument("--p and --p-grid are mutually exclusive");
  if (o.grid_given) {
    if (o.p_grid.empty()) throw std::invalid_argument("--p-grid must be nonempty");
    return o.p_grid;
  }
  if (o.p_given) return {o.p};
  if (required) throw std::invalid_argument("one of --p or --p-grid is required");
  return {};
}

// ---------------------------------------------------------------------------

int run_entropy_exact(const Options& o) {
  const auto mu = require_measure<furst::FinSetGroup>(
      furst::load_measure_file(require_mu_path(o)), "finset");
  const auto [esize, emax] = furst::expected_size_and_max(mu);
  Table t;
  t.command = "entropy-exact";
  t.columns = {"p", "entropy", "expected_size", "expected_max", "seed", "version"};
  for (double pv : resolve_p_values(o)) {
    const furst::BernoulliParam p(pv);
    t.add_row({pv, furst::exact_entropy_finset_action(mu, p), esize, emax, o.seed,
               std::string(FURST_VERSION)});
  }
  return emit(t, o.out_path, o.format);
}

int run_sweep(const Options& o) {
  const auto mu = require_measure<furst::FinSetGroup>(
      furst::load_measure_file(require_mu_path(o)), "finset");
  if (!o.grid_given || o.p_grid.empty())
    throw std::invalid_argument("sweep: --p-grid is required and must be nonempty");
  for (std::size_t i = 0; i < o.p_grid.size(); ++i) {
    if (!(o.p_grid[i] > 0.5 && o.p_grid[i] < 1.0))
      throw std::invalid_argument("sweep: grid values must lie in (1/2, 1)");
    if (i > 0 && !(o.p_grid[i] < o.p_grid[i - 1]))
      throw std::invalid_argument("sweep: grid must be strictly decreasing toward 1/2");
  }

  // The carry-size expectation does not depend on p; estimate it once and
  // share the same base samples across the whole grid.
  const furst::OdometerSystem base;
  const auto mu_z = furst::FiniteSupportMeasure<furst::IntegerGroup>::point_mass({}, 1);
  const auto carry = furst::expected_cocycle_size(mu_z, furst::OdometerCocycle{}, base,
                                                  o.samples, o.seed, o.threads);

  Table t;
  t.command = "sweep";
  t.columns = {"p",       "exact_finset_entropy", "odometer_skew_entropy",
               "stderr",  "samples",              "seed",
               "version"};
  for (double pv : o.p_grid) {
    const furst::BernoulliParam p(pv);
    const double scale = furst::phi(p);
    t.add_row({pv, furst::exact_entropy_finset_action(mu, p), scale * carry.mean,
               scale * carry.std_error, static_cast<std::uint64_t>(o.samples), o.seed,
               std::string(FURST_VERSION)});
  }
  return emit(t, o.out_path, o.format);
}

int run_cocycle_check(const Options& o) {
  const furst::OdometerSystem base;
  const auto report = furst::cocycle_identity_check(furst::OdometerCocycle{}, base,
                                                    o.samples, o.seed);
  Table t;
  t.command = "cocycle-check";
  t.columns = {"trials", "passed", "witness", "seed", "version"};
  std::string witness;
  if (report.witness) {
    std::ostringstream msg;
    msg << "g=" << report.witness->g << " h=" << report.witness->h
        << " state_seed=" << report.witness->state_seed << ": "
        << report.witness->detail;
    witness = msg.str();
  }
  t.add_row({static_cast<std::uint64_t>(report.trials), report.passed, witness, o.seed,
             std::string(FURST_VERSION)});
  const int code = emit(t, o.out_path, o.format);
  if (code != kOk) return code;
  if (!report.passed) {
    std::cerr << "violation: cocycle identity failed, witness " << witness << "\n";
    return kViolation;
  }
  return kOk;
}

int run_mc_entropy(const Options& o) {
  Table t;
  t.command = "mc-entropy";
  t.columns = {"system", "p", "mean", "stderr", "samples", "seed", "version"};
  const auto samples_cell = static_cast<std::uint64_t>(o.samples);
  const std::string ver(FURST_VERSION);

  if (o.system == "bernoulli") {
    const auto mu = require_measure<furst::FinSetGroup>(
        furst::load_measure_file(require_mu_path(o)), "finset");
    for (double pv : resolve_p_values(o)) {
      const furst::BernoulliParam p(pv);
      const furst::BernoulliFinsetSystem sys(p);
      const auto est = furst::mc_entropy(sys, mu, o.samples, o.seed, o.threads);
      t.add_row({o.system, pv, est.mean, est.std_error, samples_cell, o.seed, ver});
    }
  } else if (o.system == "odometer") {
    const auto mu = require_measure<furst::IntegerGroup>(
        furst::load_measure_file(require_mu_path(o)), "integer");
    const furst::OdometerSystem sys;
    const auto est = furst::mc_entropy(sys, mu, o.samples, o.seed, o.threads);
    t.add_row({o.system, 0.5, est.mean, est.std_error, samples_cell, o.seed, ver});
  } else if (o.system == "skew") {
    const auto mu = require_measure<furst::IntegerGroup>(
        furst::load_measure_file(require_mu_path(o)), "integer");
    for (double pv : resolve_p_values(o)) {
      const furst::BernoulliParam p(pv);
      const auto sys =
          furst::build_skew(furst::OdometerSystem{}, furst::OdometerCocycle{}, p);
      const auto est = furst::mc_entropy(sys, mu, o.samples, o.seed, o.threads);
      t.add_row({o.system, pv, est.mean, est.std_error, samples_cell, o.seed, ver});
    }
  } else {
    throw std::invalid_argument("mc-entropy: unknown system \"" + o.system +
                                "\" (expected bernoulli, odometer or skew)");
  }
  return emit(t, o.out_path, o.format);
}

int run_spectral(const Options& o) {
  Table t;
  t.command = "spectral";
  t.columns = {"system", "trunc", "tail", "norm", "lhs", "rhs", "holds", "seed",
               "version"};
  const std::string ver(FURST_VERSION);
  std::vector<std::string> violations;

  const auto add_check = [&](const std::string& label, const auto& system,
                             const auto& mu) {
    const auto b = furst::appendix_bound_check(system, mu, o.trunc);
    t.add_row({label, static_cast<std::uint64_t>(b.trunc_n), b.tail_mass, b.norm,
               b.lhs, b.rhs, b.holds, o.seed, ver});
    if (!b.holds)
      violations.push_back(label + ": -2 log norm = " + fmt_double(b.lhs) +
                           " exceeds entropy " + fmt_double(b.rhs) + " + tail");
  };

  if (o.system == "swap") {
    const double q = o.p_given ? o.p : 0.75;
    const auto system = furst::two_point_swap(q);
    auto mu = o.mu_given
                  ? require_measure<furst::CyclicGroup>(
                        furst::load_measure_file(o.mu_path), "cyclic")
                  : furst::FiniteSupportMeasure<furst::CyclicGroup>::point_mass(
                        furst::CyclicGroup(2), 1);
    add_check("swap(q=" + fmt_double(q) + ")", system, mu);
  } else if (o.system == "cyclic") {
    const auto system = furst::integer_rotation(o.n);
    auto mu = o.mu_given
                  ? require_measure<furst::IntegerGroup>(
                        furst::load_measure_file(o.mu_path), "integer")
                  : furst::FiniteSupportMeasure<furst::IntegerGroup>::uniform({}, {1, -1});
    add_check("cyclic(n=" + std::to_string(o.n) + ")", system, mu);
  } else if (o.system == "random") {
    for (std::size_t i = 0; i < o.count; ++i) {
      const auto rs = furst::random_finite_system(furst::derive_seed(o.seed, i));
      add_check("rand-" + std::to_string(i), rs.system, rs.mu);
    }
  } else {
    throw std::invalid_argument("spectral: unknown system \"" + o.system +
                                "\" (expected swap, cyclic or random)");
  }

  const int code = emit(t, o.out_path, o.format);
  if (code != kOk) return code;
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << "violation: " << v << "\n";
    return kViolation;
  }
  return kOk;
}

int run_jensen(const Options& o) {
  Table t;
  t.command = "jensen";
  t.columns = {"system", "element", "lhs", "rhs", "holds", "seed", "version"};
  const std::string ver(FURST_VERSION);
  std::vector<std::string> violations;

  const auto add_check = [&](const std::string& label, const std::string& element,
                             const furst::JensenBound& b) {
    t.add_row({label, element, b.lhs, b.rhs, b.holds, o.seed, ver});
    if (!b.holds)
      violations.push_back(label + " element " + element + ": lhs " +
                           fmt_double(b.lhs) + " > rhs " + fmt_double(b.rhs));
  };

  if (o.system == "swap") {
    std::vector<double> q_grid = o.grid_given
                                     ? o.p_grid
                                     : std::vector<double>{0.5, 0.55, 0.6, 0.65, 0.7,
                                                           0.75, 0.8, 0.85, 0.9, 0.95};
    for (double q : q_grid) {
      const auto system = furst::two_point_swap(q);
      add_check("swap(q=" + fmt_double(q) + ")", "1",
                furst::jensen_bound_check(system, 1u));
    }
  } else if (o.system == "random") {
    for (std::size_t i = 0; i < o.count; ++i) {
      const auto rs = furst::random_finite_system(furst::derive_seed(o.seed, i));
      std::size_t j = 0;
      for (const auto& [g, w] : rs.mu.atoms())
        add_check("rand-" + std::to_string(i), "g" + std::to_string(j++),
                  furst::jensen_bound_check(rs.system, g));
    }
  } else {
    throw std::invalid_argument("jensen: unknown system \"" + o.system +
                                "\" (expected swap or random)");
  }

  const int code = emit(t, o.out_path, o.format);
  if (code != kOk) return code;
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << "violation: " << v << "\n";
    return kViolation;
  }
  return kOk;
}

int run_quotient_curve(const Options& o) {
  auto mu = o.mu_given ? require_measure<furst::IntegerGroup>(
                             furst::load_measure_file(o.mu_path), "integer")
                       : furst::FiniteSupportMeasure<furst::IntegerGroup>::uniform(
                             {}, {1, -1});
  if (o.n_list.empty())
    throw std::invalid_argument("quotient-curve: --n-list must be nonempty");
  const auto curve = furst::cyclic_gap_curve(o.n_list, mu, o.trunc);
  Table t;
  t.command = "quotient-curve";
  t.columns = {"n", "norm", "gap", "trunc", "seed", "version"};
  for (const auto& g : curve)
    t.add_row({static_cast<std::uint64_t>(g.n), g.norm, g.gap,
               static_cast<std::uint64_t>(o.trunc), o.seed,
               std::string(FURST_VERSION)});
  return emit(t, o.out_path, o.format);
}

int run_separation(const Options& o) {
  const double pv = o.p_given ? o.p : 0.75;
  const furst::BernoulliParam p(pv);
  const furst::BernoulliParam q(o.q);
  const furst::BernoulliSampler sampler(o.seed, q);
  const auto rep = furst::separation_test(sampler, o.indices, p, o.samples, o.alpha);
  Table t;
  t.command = "separation";
  t.columns = {"q",     "p",       "empirical_mean", "upper_bound", "alpha",
               "verdict", "samples", "seed",           "version"};
  t.add_row({o.q, pv, rep.empirical_mean, rep.upper_bound, rep.alpha,
             furst::to_string(rep.verdict), static_cast<std::uint64_t>(rep.n_samples),
             o.seed, std::string(FURST_VERSION)});
  return emit(t, o.out_path, o.format);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;

  // The config file provides defaults; flags always take precedence. Scan for
  // --config before the real parse so option defaults can come from it.
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) o.config_path = argv[i + 1];
    else if (a.rfind("--config=", 0) == 0) o.config_path = a.substr(9);
  }
  try {
    apply_config_file(o);
  } catch (const furst::MeasureIoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }

  CLI::App app{"furst: Furstenberg entropy experiments on nonsingular actions"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* sub, bool with_samples = true) {
    sub->add_option("--config", o.config_path, "JSON config file with defaults");
    sub->add_option("--out", o.out_path, "output path (default: stdout)");
    sub->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", o.seed, "base seed for all randomness");
    sub->add_option("--threads", o.threads, "worker cap, 0 = machine parallelism");
    if (with_samples) sub->add_option("--samples", o.samples, "Monte Carlo samples");
  };
  const auto add_p = [&](CLI::App* sub) {
    auto* p_opt = sub->add_option("--p", o.p, "Bernoulli parameter");
    auto* grid_opt =
        sub->add_option("--p-grid", o.p_grid, "comma-separated parameter grid")
            ->delimiter(',');
    return std::make_pair(p_opt, grid_opt);
  };

  auto* c_exact = app.add_subcommand("entropy-exact",
                                     "closed-form entropy of the flip action");
  c_exact->add_option("--mu", o.mu_path, "finset measure file");
  add_p(c_exact);
  add_common(c_exact, false);

  auto* c_sweep = app.add_subcommand(
      "sweep", "entropy of flip and odometer-skew actions on a p grid");
  c_sweep->add_option("--mu", o.mu_path, "finset measure file");
  add_p(c_sweep);
  add_common(c_sweep);

  auto* c_cocycle = app.add_subcommand("cocycle-check",
                                       "odometer cocycle identity on random triples");
  add_common(c_cocycle);

  auto* c_mc = app.add_subcommand("mc-entropy", "Monte Carlo Furstenberg entropy");
  c_mc->add_option("--system", o.system, "bernoulli, odometer or skew");
  c_mc->add_option("--mu", o.mu_path, "measure file");
  add_p(c_mc);
  add_common(c_mc);

  auto* c_spectral = app.add_subcommand(
      "spectral", "Markov operator norm vs entropy on finite systems");
  c_spectral->add_option("--system", o.system, "swap, cyclic or random");
  c_spectral->add_option("--mu", o.mu_path, "measure file (optional)");
  c_spectral->add_option("--p", o.p, "state weight q for the swap system");
  c_spectral->add_option("--n", o.n, "quotient size for the cyclic system");
  c_spectral->add_option("--count", o.count, "number of random systems");
  c_spectral->add_option("--trunc", o.trunc, "truncation of the averaged measure");
  add_common(c_spectral, false);

  auto* c_jensen = app.add_subcommand(
      "jensen", "per-element overlap bound vs entropy integral");
  c_jensen->add_option("--system", o.system, "swap or random");
  c_jensen->add_option("--p-grid", o.p_grid, "q grid for the swap family")
      ->delimiter(',');
  c_jensen->add_option("--count", o.count, "number of random systems");
  add_common(c_jensen, false);

  auto* c_quotient = app.add_subcommand(
      "quotient-curve", "spectral gap of integer rotations on growing quotients");
  c_quotient->add_option("--n-list", o.n_list, "comma-separated quotient sizes")
      ->delimiter(',');
  c_quotient->add_option("--mu", o.mu_path, "integer measure file (optional)");
  c_quotient->add_option("--trunc", o.trunc, "truncation of the averaged measure");
  add_common(c_quotient, false);

  auto* c_sep = app.add_subcommand(
      "separation", "frequency test against the reference product measure");
  c_sep->add_option("--q", o.q, "parameter of the sampled product law");
  c_sep->add_option("--p", o.p, "reference parameter, must exceed 1/2");
  c_sep->add_option("--alpha", o.alpha, "one-sided confidence level");
  c_sep->add_option("--indices", o.indices, "coordinates to average")->delimiter(',');
  add_common(c_sep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  o.p_given = o.p_given || c_exact->count("--p") || c_sweep->count("--p") ||
              c_mc->count("--p") || c_spectral->count("--p") || c_sep->count("--p");
  o.grid_given = o.grid_given || c_exact->count("--p-grid") ||
                 c_sweep->count("--p-grid") || c_mc->count("--p-grid") ||
                 c_jensen->count("--p-grid");
  o.mu_given = o.mu_given || c_exact->count("--mu") || c_sweep->count("--mu") ||
               c_mc->count("--mu") || c_spectral->count("--mu") ||
               c_quotient->count("--mu");

  try {
    if (c_exact->parsed()) return run_entropy_exact(o);
    if (c_sweep->parsed()) return run_sweep(o);
    if (c_cocycle->parsed()) return run_cocycle_check(o);
    if (c_mc->parsed()) return run_mc_entropy(o);
    if (c_spectral->parsed()) return run_spectral(o);
    if (c_jensen->parsed()) return run_jensen(o);
    if (c_quotient->parsed()) return run_quotient_curve(o);
    if (c_sep->parsed()) return run_separation(o);
  } catch (const furst::MeasureIoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const furst::MeasureFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kConfigError;
}
