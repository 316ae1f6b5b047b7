// Copyright (c) 2026 the furst authors.
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line with its runtime; the process exit code is the number of failures.

#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "furst/bernoulli.hpp"
#include "furst/measure.hpp"
#include "furst/nonsingular.hpp"
#include "furst/odometer.hpp"
#include "furst/random_systems.hpp"
#include "furst/skew.hpp"
#include "furst/spectral.hpp"
#include "support/cli_util.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using namespace furst;

namespace {

struct Checker {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << (notes.str().empty() ? "" : "; ") << what;
    }
  }
  void note(const std::string& s) {
    notes << (notes.str().empty() ? "" : "; ") << s;
  }
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

using FinSetMeasure = FiniteSupportMeasure<FinSetGroup>;
using IntMeasure = FiniteSupportMeasure<IntegerGroup>;
using CycMeasure = FiniteSupportMeasure<CyclicGroup>;

/// A point of the product space backed by a finite bitmask (coordinates past
/// the mask are zero). Cheap enough for exhaustive pattern sweeps.
struct MaskPoint {
  std::uint64_t bits = 0;

  bool coordinate(std::uint32_t n) const {
    return n >= 1 && n <= 64 && ((bits >> (n - 1)) & 1);
  }
  MaskPoint flipped(const FinSet& t) const {
    MaskPoint out = *this;
    for (std::uint32_t e : t) out.bits ^= std::uint64_t{1} << (e - 1);
    return out;
  }
};

// --- criterion 1 -----------------------------------------------------------

void flip_entropy_closed_form_vs_mc(Checker& c) {
  const std::vector<FinSetMeasure> measures{
      FinSetMeasure::point_mass({}, FinSet{1}),
      FinSetMeasure({}, {{FinSet{1}, 0.5}, {FinSet{1, 2}, 0.5}}),
      FinSetMeasure::uniform({}, {FinSet{1}, FinSet{2}, FinSet{3}})};
  std::uint64_t cell = 0;
  for (const auto& mu : measures) {
    for (double pv : {0.6, 0.75, 0.9}) {
      const auto t0 = std::chrono::steady_clock::now();
      const BernoulliParam p(pv);
      const BernoulliFinsetSystem sys(p);
      const auto est = mc_entropy(sys, mu, 100000, derive_seed(1000, cell));
      const double closed = exact_entropy_finset_action(mu, p);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      c.expect(std::abs(est.mean - closed) <= 4.0 * est.std_error,
               "cell " + std::to_string(cell) + ": mc " + fmt(est.mean) + " vs " +
                   fmt(closed) + " se " + fmt(est.std_error));
      c.expect(secs < 10.0, "cell " + std::to_string(cell) + " took " + fmt(secs) + "s");
      ++cell;
    }
  }
}

// --- criterion 2 -----------------------------------------------------------

void density_normalization_exhaustive(Checker& c) {
  for (double pv : {0.6, 0.75}) {
    const BernoulliParam p(pv);
    double pow_p[13], pow_q[13];
    pow_p[0] = pow_q[0] = 1.0;
    for (int k = 1; k <= 12; ++k) {
      pow_p[k] = pow_p[k - 1] * pv;
      pow_q[k] = pow_q[k - 1] * (1.0 - pv);
    }
    double worst = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
      std::vector<std::uint32_t> elems;
      for (std::uint32_t b = 0; b < 12; ++b)
        if ((mask >> b) & 1) elems.push_back(b + 1);
      const FinSet t(elems);
      const std::uint32_t width = t.max();
      double integral = 0.0;
      for (std::uint64_t pat = 0; pat < (std::uint64_t{1} << width); ++pat) {
        const MaskPoint x{pat};
        const int ones = std::popcount(pat);
        const double weight = pow_p[ones] * pow_q[width - ones];
        integral += weight * std::exp(log_rn(t, x, p));
      }
      worst = std::max(worst, std::abs(integral - 1.0));
    }
    c.expect(worst <= 1e-10, "p=" + fmt(pv) + ": worst deviation " + fmt(worst));
  }
}

// --- criterion 3 -----------------------------------------------------------

void skew_entropy_consistency(Checker& c) {
  const OdometerSystem base;
  const auto mu = IntMeasure::point_mass({}, 1);
  std::uint64_t k = 0;
  for (double pv : {0.6, 0.75, 0.9}) {
    const BernoulliParam p(pv);
    const auto formula = skew_entropy_exact(mu, OdometerCocycle{}, base, p, 100000,
                                            derive_seed(3000, k));
    c.expect(std::abs(formula.mean - 2.0 * phi(p)) <= 4.0 * formula.std_error,
             "p=" + fmt(pv) + ": formula " + fmt(formula.mean) + " vs 2*phi " +
                 fmt(2.0 * phi(p)));
    const auto direct = mc_entropy(build_skew(base, OdometerCocycle{}, p), mu, 100000,
                                   derive_seed(3100, k));
    const double combined = std::sqrt(direct.std_error * direct.std_error +
                                      formula.std_error * formula.std_error);
    c.expect(std::abs(direct.mean - formula.mean) <= 4.0 * combined,
             "p=" + fmt(pv) + ": direct " + fmt(direct.mean) + " vs formula " +
                 fmt(formula.mean));
    ++k;
  }
}

// --- criterion 4 -----------------------------------------------------------

void carry_cocycle_moments(Checker& c) {
  const OdometerSystem base;
  double total = 0.0;
  const std::size_t n = 1000000;
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = base.sample_state(derive_seed(4000, i));
    total += static_cast<double>(odometer_cocycle(1, x).size());
  }
  const double mean = total / static_cast<double>(n);
  c.expect(mean >= 1.96 && mean <= 2.04, "carry mean " + fmt(mean));

  const auto rep = cocycle_identity_check(OdometerCocycle{}, base, 10000, 4100, 8);
  c.expect(rep.passed && rep.trials == 10000, "cocycle identity failed");
}

// --- criterion 5 -----------------------------------------------------------

void entropy_gap_vanishing_sweep(Checker& c, const fs::path& dir) {
  const auto mu_path = dir / "mu-singleton.json";
  cli_util::write_file(mu_path, R"({"group":"finset","atoms":[{"g":[1],"w":1.0}]})");
  std::string grid;
  for (int k = 2; k <= 12; ++k) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), 0.5 + std::ldexp(1.0, -k));
    grid += std::string(buf, res.ptr);
    if (k < 12) grid += ",";
  }
  const auto out = dir / "sweep.csv";
  const auto r = cli_util::run_cli({"sweep", "--mu", mu_path.string(), "--p-grid",
                                    grid, "--samples", "100000", "--seed", "5",
                                    "--out", out.string()},
                                   dir);
  c.expect(r.exit_code == 0, "sweep exited with " + std::to_string(r.exit_code));
  if (r.exit_code != 0) return;
  const auto rows = cli_util::parse_csv(cli_util::read_file(out));
  c.expect(rows.size() == 12, "expected 11 grid rows");
  const auto c_exact = cli_util::column_index(rows[0], "exact_finset_entropy");
  const auto c_skew = cli_util::column_index(rows[0], "odometer_skew_entropy");
  double prev_e = 1e300, prev_s = 1e300, last_e = 0, last_s = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    last_e = std::stod(rows[i][c_exact]);
    last_s = std::stod(rows[i][c_skew]);
    c.expect(last_e < prev_e && last_s < prev_s,
             "row " + std::to_string(i) + " not strictly decreasing");
    prev_e = last_e;
    prev_s = last_s;
  }
  c.expect(last_e < 1e-4, "final exact entropy " + fmt(last_e));
  c.expect(last_s < 1e-4, "final skew entropy " + fmt(last_s));
}

// --- criterion 6 -----------------------------------------------------------

void jensen_bound_everywhere(Checker& c) {
  for (int i = 0; i < 10; ++i) {
    const double q = 0.5 + 0.05 * i;
    const auto b = jensen_bound_check(two_point_swap(q), 1u);
    c.expect(b.holds, "swap q=" + fmt(q) + " violated");
    if (i == 5) {  // q = 3/4
      c.expect(std::abs(b.lhs - std::log(4.0 / 3.0)) <= 1e-12,
               "q=3/4 lhs " + fmt(b.lhs));
      c.expect(std::abs(b.rhs - phi(BernoulliParam(0.75))) <= 1e-12,
               "q=3/4 rhs " + fmt(b.rhs));
    }
  }
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto rs = random_finite_system(derive_seed(6000, s));
    for (const auto& [g, w] : rs.mu.atoms()) {
      const auto b = jensen_bound_check(rs.system, g);
      c.expect(b.holds, "random system " + std::to_string(s) + " violated: lhs " +
                            fmt(b.lhs) + " rhs " + fmt(b.rhs));
    }
  }
}

// --- criterion 7 -----------------------------------------------------------

void spectral_chain_bound(Checker& c) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto rs = random_finite_system(derive_seed(6000, s));
    const auto b = appendix_bound_check(rs.system, rs.mu, 20);
    c.expect(b.holds, "random system " + std::to_string(s) + ": lhs " + fmt(b.lhs) +
                          " rhs " + fmt(b.rhs));
  }
  const auto swap = two_point_swap(0.75);
  const auto mu = CycMeasure::point_mass(CyclicGroup(2), 1);
  const auto b = appendix_bound_check(swap, mu, 20);
  double odd_weight = 0.0;
  for (int n = 1; n <= 20; n += 2) odd_weight += std::ldexp(1.0, -n - 1);
  const double hand =
      phi(BernoulliParam(0.75)) * odd_weight / (1.0 - std::ldexp(1.0, -21));
  c.expect(std::abs(b.rhs - hand) <= 1e-9,
           "swap averaged entropy " + fmt(b.rhs) + " vs hand " + fmt(hand));
  c.expect(b.holds, "swap chain bound violated");
}

// --- criterion 8 -----------------------------------------------------------

void quotient_gap_curve(Checker& c) {
  const unsigned trunc = 40;
  const std::vector<std::uint32_t> ns{2, 4, 8, 16, 32, 64, 128, 256};
  const auto curve =
      cyclic_gap_curve(ns, IntMeasure::uniform({}, {1, -1}), trunc);
  double prev_gap = 1e300;
  for (const auto& pt : curve) {
    double expected = 0.0;
    for (std::uint32_t j = 1; j < pt.n; ++j)
      expected = std::max(expected, std::abs(oracles::bar_series(
                                        std::cos(2.0 * std::numbers::pi * j / pt.n),
                                        trunc)));
    c.expect(std::abs(pt.norm - expected) <= 1e-8,
             "n=" + std::to_string(pt.n) + " norm " + fmt(pt.norm) + " vs " +
                 fmt(expected));
    c.expect(pt.gap < prev_gap, "gap not decreasing at n=" + std::to_string(pt.n));
    prev_gap = pt.gap;
  }
  c.expect(prev_gap > 0.0 && prev_gap < 0.01,
           "final gap " + fmt(prev_gap) + " not near zero");
}

// --- criterion 9 -----------------------------------------------------------

void separation_repetitions(Checker& c) {
  const BernoulliParam p(0.75);
  const std::vector<std::uint32_t> indices{1, 2, 3, 4, 5, 6, 7, 8};
  int flagged = 0;
  for (std::uint64_t rep = 0; rep < 100; ++rep) {
    const auto r = separation_test(BernoulliSampler(derive_seed(9000, rep),
                                                    BernoulliParam(0.3)),
                                   indices, p, 10000, 0.01);
    flagged += r.verdict == SeparationVerdict::EvidenceOfSingularity ? 1 : 0;
  }
  c.expect(flagged >= 99, "singular law flagged only " + std::to_string(flagged) +
                              "/100 times");
  int inconclusive = 0;
  for (std::uint64_t rep = 0; rep < 100; ++rep) {
    const auto r = separation_test(BernoulliSampler(derive_seed(9100, rep), p),
                                   indices, p, 10000, 0.01);
    inconclusive += r.verdict == SeparationVerdict::Inconclusive ? 1 : 0;
  }
  c.expect(inconclusive >= 95, "reference law inconclusive only " +
                                   std::to_string(inconclusive) + "/100 times");
}

// --- criterion 10 ----------------------------------------------------------

void deterministic_outputs(Checker& c, const fs::path& dir) {
  const auto mu_fin = dir / "d-mu-fin.json";
  const auto mu_int = dir / "d-mu-int.json";
  cli_util::write_file(mu_fin, R"({"group":"finset","atoms":[{"g":[1],"w":1.0}]})");
  cli_util::write_file(mu_int, R"({"group":"integer","atoms":[{"g":1,"w":1.0}]})");

  const std::vector<std::pair<std::string, std::vector<std::string>>> commands{
      {"entropy-exact",
       {"entropy-exact", "--mu", mu_fin.string(), "--p-grid", "0.6,0.75", "--seed", "7"}},
      {"sweep",
       {"sweep", "--mu", mu_fin.string(), "--p-grid", "0.75,0.625", "--samples",
        "20000", "--seed", "7"}},
      {"cocycle-check", {"cocycle-check", "--samples", "2000", "--seed", "7"}},
      {"mc-entropy",
       {"mc-entropy", "--system", "skew", "--mu", mu_int.string(), "--p", "0.75",
        "--samples", "20000", "--seed", "7"}},
      {"spectral",
       {"spectral", "--system", "random", "--count", "5", "--trunc", "20", "--seed",
        "7"}},
      {"jensen", {"jensen", "--seed", "7"}},
      {"quotient-curve", {"quotient-curve", "--n-list", "2,4,8", "--seed", "7"}},
      {"separation",
       {"separation", "--q", "0.3", "--p", "0.75", "--samples", "2000", "--seed",
        "7"}},
  };

  for (const auto& [name, args] : commands) {
    for (const std::string format : {"csv", "json"}) {
      const auto out_a = dir / (name + "-a." + format);
      const auto out_b = dir / (name + "-b." + format);
      auto args_a = args;
      args_a.insert(args_a.end(), {"--format", format, "--out", out_a.string()});
      auto args_b = args;
      args_b.insert(args_b.end(), {"--format", format, "--out", out_b.string()});
      const auto ra = cli_util::run_cli(args_a, dir);
      const auto rb = cli_util::run_cli(args_b, dir);
      c.expect(ra.exit_code == 0 && rb.exit_code == 0,
               name + " (" + format + ") exited " + std::to_string(ra.exit_code) +
                   "/" + std::to_string(rb.exit_code));
      const auto bytes_a = cli_util::read_file(out_a);
      const auto bytes_b = cli_util::read_file(out_b);
      c.expect(!bytes_a.empty() && bytes_a == bytes_b,
               name + " (" + format + ") outputs differ between reruns");
    }
  }
}

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;
  std::function<void(Checker&)> run;
};

}  // namespace

int main() {
  const auto dir = cli_util::scratch_dir("acceptance");
  const std::vector<Criterion> criteria{
      {1, "flip-action entropy: closed form vs Monte Carlo", 90.0,
       flip_entropy_closed_form_vs_mc},
      {2, "density normalization, exhaustive bit patterns", 5.0,
       density_normalization_exhaustive},
      {3, "skew-product entropy: formula vs direct estimate", 60.0,
       skew_entropy_consistency},
      {4, "carry cocycle moments and identity", 60.0, carry_cocycle_moments},
      {5, "entropy vanishing along the parameter sweep", 120.0,
       [&dir](Checker& c) { entropy_gap_vanishing_sweep(c, dir); }},
      {6, "overlap bound holds exactly", 10.0, jensen_bound_everywhere},
      {7, "spectral chain bound on finite systems", 30.0, spectral_chain_bound},
      {8, "quotient gap curve matches the cosine series", 10.0, quotient_gap_curve},
      {9, "separation test verdict rates", 60.0, separation_repetitions},
      {10, "byte-identical reruns of every command", 120.0,
       [&dir](Checker& c) { deterministic_outputs(c, dir); }},
  };

  int failures = 0;
  for (const auto& crit : criteria) {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      crit.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(secs < crit.time_limit_s,
             "runtime " + fmt(secs) + "s over limit " + fmt(crit.time_limit_s) + "s");
    const bool pass = c.ok;
    failures += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << crit.id << ": "
              << crit.name << " [" << fmt(secs) << "s]";
    if (!pass) std::cout << " -- " << c.notes.str();
    std::cout << "\n";
  }

  std::error_code ec;
  fs::remove_all(dir, ec);
  if (failures == 0) std::cout << "all criteria passed\n";
  return failures;
}
