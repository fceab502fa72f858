// One line per acceptance criterion: PASS/FAIL, wall time, measured values.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fracdyn/analysis.hpp"
#include "fracdyn/kernel.hpp"
#include "fracdyn/lyapunov.hpp"
#include "fracdyn/maps.hpp"
#include "fracdyn/simulator.hpp"
#include "fracdyn/zero_one.hpp"
#include "support/oracles.hpp"

using namespace fracdyn;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

constexpr double kX0Candidates[] = {0.2, 0.3, 0.5};

SimConfig gompertz_run(double x0) {
  return SimConfig{MapSpec::gompertz(1.0), FractionalOrder(0.8), x0, 1000};
}

const KernelTable& shared_kernel() {
  static const KernelTable kernel(FractionalOrder(0.8), 1000);
  return kernel;
}

std::vector<double> logistic_series(double r, std::size_t count, std::size_t drop) {
  std::vector<double> out;
  double y = 0.3;
  for (std::size_t i = 0; i < count; ++i) {
    y = r * y * (1 - y);
    if (i >= drop) out.push_back(y);
  }
  return out;
}

double bounding_box_diagonal(const TranslationPath& path) {
  const auto [pmin, pmax] = std::minmax_element(path.p.begin(), path.p.end());
  const auto [qmin, qmax] = std::minmax_element(path.q.begin(), path.q.end());
  return std::hypot(*pmax - *pmin, *qmax - *qmin);
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

// --- criteria ---------------------------------------------------------------

Verdict kernel_bound() {
  Verdict v{true, ""};
  for (double q : {0.1, 0.25, 0.5, 0.8, 1.0}) {
    const auto report = check_partial_sum_bound(KernelTable(FractionalOrder(q), 100000));
    v.pass = v.pass && report.violations == 0 && report.checked == 100000;
    v.detail += fmt("q=%g violations=%zu min_margin=%.4g; ", q, report.violations, report.worst_margin);
  }
  return v;
}

Verdict integer_order_reduction() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const KernelTable kernel(FractionalOrder(1.0), 200);
  double worst = 0.0;
  int completed = 0;
  for (int draw = 0; draw < 20; ++draw) {
    const MapSpec map = draw % 2 == 0 ? MapSpec::gompertz(0.05 + 0.75 * unit(rng), 0.66 + 0.105 * unit(rng))
                                      : MapSpec::logistic(0.5 + 2.0 * unit(rng));
    const double x0 = 0.05 + 0.9 * unit(rng);
    const auto traj = simulate(SimConfig{map, FractionalOrder(1.0), x0, 200}, kernel);
    if (!traj.completed()) continue;
    ++completed;
    double x = x0;
    for (std::size_t n = 1; n <= 200; ++n) {
      x += map_eval(map, x);
      worst = std::max(worst, std::abs(traj.samples[n] - x));
    }
  }
  return {completed == 20 && worst <= 1e-9, fmt("draws=%d/20 max_abs_error=%.3g", completed, worst)};
}

Verdict zero_one_validation() {
  const auto chaotic = run_test01(logistic_series(3.9, 1000, 200));
  const auto periodic = run_test01(logistic_series(3.55, 1000, 200));
  const auto periodic_35 = run_test01(logistic_series(3.5, 1000, 200));
  const double diag_ratio = bounding_box_diagonal(chaotic.pq_path) / bounding_box_diagonal(periodic.pq_path);

  // Same c, twice the length.
  const auto longer = logistic_series(3.55, 2000, 200);
  const auto M_long = mean_square_displacement(translation_variables(longer, periodic.diagnostic_c),
                                               longer.size() / 10);
  const double max_short = *std::max_element(periodic.M_curve.begin(), periodic.M_curve.end());
  const double max_long = *std::max_element(M_long.begin(), M_long.end());
  const double growth = max_long / max_short;

  const bool pass = chaotic.K >= 0.9 && std::abs(periodic.K) <= 0.1 && std::abs(periodic_35.K) <= 0.1 &&
                    diag_ratio > 10.0 && growth <= 1.1;
  return {pass, fmt("K(3.9)=%.4f K(3.55)=%.4f K(3.5)=%.4f pq_diag_ratio=%.1f M_max_ratio(2N/N)=%.3f",
                    chaotic.K, periodic.K, periodic_35.K, diag_ratio, growth)};
}

Verdict chaotic_baseline() {
  Verdict v{true, ""};
  for (double x0 : kX0Candidates) {
    const auto run = analyze_run(gompertz_run(x0), shared_kernel(), ControlSchedule::none());
    const auto& s = run.trajectory.samples;
    const bool bounded = run.trajectory.completed() &&
                         std::all_of(s.begin(), s.end(), [](double x) { return x >= 0.0 && x <= 1.5; });
    const double K = run.test01 ? run.test01->K : NAN;
    const double le = run.tangent ? run.tangent->lambda : NAN;
    v.pass = v.pass && bounded && K >= 0.9 && le > 0.0;
    v.detail += fmt("x0=%g K=%.4f le=%.4f in[0,1.5]=%s; ", x0, K, le, bounded ? "yes" : "no");
  }
  return v;
}

struct ControlTarget {
  std::size_t delta;
  double gamma;
  std::vector<std::size_t> elements;  // accepted NSPO sizes
  double k_bound;
  bool check_le;
};

// Passes when some x0 reproduces the orbit size with K (and LE) in band.
Verdict suppression(const ControlTarget& target) {
  Verdict v;
  for (double x0 : kX0Candidates) {
    const auto control = ControlSchedule::multiplicative(target.gamma, target.delta, 500);
    const auto run = analyze_run(gompertz_run(x0), shared_kernel(), control);
    const double K = run.test01 ? run.test01->K : NAN;
    const double le = run.tangent ? run.tangent->lambda : NAN;
    const bool size_ok = run.nspo.found && std::find(target.elements.begin(), target.elements.end(),
                                                     run.nspo.element_count) != target.elements.end();
    const bool ok = size_ok && std::abs(K) <= target.k_bound && (!target.check_le || le <= 0.05);
    v.pass = v.pass || ok;
    v.detail += fmt("x0=%g nspo=%s elements=%zu closing_period=%zu err=%.2g K=%.4f le=%.4f%s; ", x0,
                    run.nspo.found ? "yes" : "no", run.nspo.element_count, run.nspo.period,
                    run.nspo.closing_error, K, le, ok ? " <ok>" : "");
  }
  return v;
}

std::vector<SweepRow> gamma_sweep(ControlMode mode, std::size_t delta, double lo, double hi) {
  SweepSpec spec{SweepAxis::Gamma, lo, hi, 201, gompertz_run(0.3), ControlSchedule{mode, 0.0, delta, 500}};
  return run_sweep(spec);
}

Verdict no_suppression_beyond_five() {
  const auto rows = gamma_sweep(ControlMode::Multiplicative, 6, -0.1, 0.1);
  std::string found;
  std::size_t count = 0;
  for (const auto& row : rows) {
    if (!row.nspo.found) continue;
    ++count;
    found += fmt(" gamma=%.4g(period %zu, err %.2g)", row.param_value, row.nspo.period, row.nspo.closing_error);
  }
  return {count == 0, fmt("nspo_points=%zu/201%s", count, found.c_str())};
}

Verdict sign_structure() {
  std::size_t mult_neg = 0, mult_nonneg = 0, add_neg = 0, add_pos = 0;
  for (const auto& row : gamma_sweep(ControlMode::Multiplicative, 1, -0.1, 0.1)) {
    if (row.nspo.found) (row.param_value < 0 ? mult_neg : mult_nonneg)++;
  }
  for (const auto& row : gamma_sweep(ControlMode::Additive, 2, -0.5, 0.5)) {
    if (row.nspo.found && row.param_value < 0) ++add_neg;
    if (row.nspo.found && row.param_value > 0) ++add_pos;
  }
  const bool pass = mult_neg > 0 && mult_nonneg == 0 && add_neg > 0 && add_pos > 0;
  return {pass, fmt("mult(delta=1): nspo at gamma<0: %zu, gamma>=0: %zu; add(delta=2): gamma<0: %zu, gamma>0: %zu",
                    mult_neg, mult_nonneg, add_neg, add_pos)};
}

Verdict derivative_correctness() {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> r_dist(0.05, 1.0), p_dist(0.66, 0.765), x_dist(0.01, 1.4);
  double worst_rel = 0.0;
  for (int draw = 0; draw < 10; ++draw) {
    const auto spec = MapSpec::gompertz(r_dist(rng), p_dist(rng));
    for (int i = 0; i < 100; ++i) {
      const double x = x_dist(rng);
      const double exact = map_derivative(spec, x);
      const double fd = oracle::central_difference(spec, x, 1e-4 * x);
      worst_rel = std::max(worst_rel, std::abs(fd - exact) / std::abs(exact));
    }
  }

  int agree = 0;
  const KernelTable kernel(FractionalOrder(1.0), 1000);
  for (double R : oracle::kSignDrawsR) {
    // q = 1 reduces to x + r x (1 - x), conjugate to the logistic map at R = 1 + r.
    const SimConfig config{MapSpec::logistic(R - 1.0), FractionalOrder(1.0), 0.3, 1000};
    LyapunovOptions options;
    options.from_step = 300;
    const auto state = lyapunov_exponent(simulate(config, kernel), config, kernel, options);
    const double reference = oracle::separation_exponent(R, 0.3 * (R - 1.0) / R, 300, 5000);
    if ((state.lambda > 0) == (reference > 0)) ++agree;
  }
  return {worst_rel <= 1e-6 && agree == 20,
          fmt("fd_max_rel_error=%.3g over 1000 points; le_sign_agreement=%d/20", worst_rel, agree)};
}

struct Criterion {
  const char* id;
  const char* title;
  double time_limit;  // seconds; 0 when none is stated
  std::function<Verdict()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1", "kernel partial-sum bound, n <= 1e5", 5.0, kernel_bound},
      {"2", "q = 1 reduces to the direct recurrence", 1.0, integer_order_reduction},
      {"3", "0-1 test on the logistic map", 10.0, zero_one_validation},
      {"4", "uncontrolled Gompertz run is chaotic", 5.0, chaotic_baseline},
      {"5a", "delta=1 gamma=-0.0132: 10-element NSPO, |K|<=0.05, le<=0.05", 0.0,
       [] { return suppression({1, -0.0132, {10}, 0.05, true}); }},
      {"5b", "delta=1 gamma=-0.05: 4-element NSPO (caption), |K|<=0.05", 0.0,
       [] { return suppression({1, -0.05, {4}, 0.05, false}); }},
      {"6", "delta=3 gamma=-0.04: 5- or 6-element NSPO, |K|<=0.05", 0.0,
       [] { return suppression({3, -0.04, {5, 6}, 0.05, false}); }},
      {"7", "delta=5 gamma=-0.0722: 19-element NSPO, |K|<=0.1", 0.0,
       [] { return suppression({5, -0.0722, {19}, 0.1, false}); }},
      {"8", "delta=6 gamma sweep: no NSPO", 0.0, no_suppression_beyond_five},
      {"9", "NSPO sign structure of gamma", 0.0, sign_structure},
      {"10", "derivative and LE sign oracles", 0.0, derivative_correctness},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && seconds > c.time_limit) {
      v.pass = false;
      v.detail += fmt(" [over time limit %.0fs]", c.time_limit);
    }
    if (!v.pass) ++failures;
    std::printf("%s criterion %-3s %-62s (%.2fs) %s\n", v.pass ? "PASS" : "FAIL", c.id, c.title, seconds,
                v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
