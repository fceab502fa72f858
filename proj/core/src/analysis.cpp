#include "fracdyn/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracdyn/parallel.hpp"

namespace fracdyn {

namespace {

double closing_error(std::span<const double> tail, std::size_t period) {
  double worst = 0.0;
  for (std::size_t n = 0; n + period < tail.size(); ++n) {
    worst = std::max(worst, std::abs(tail[n + period] - tail[n]));
  }
  return worst;
}

SimConfig config_at(const SweepSpec& spec, double value) {
  SimConfig config = spec.base;
  switch (spec.axis) {
    case SweepAxis::R:
      config.map = config.map.with_r(value);
      break;
    case SweepAxis::P:
      config.map = config.map.with_p(value);
      break;
    case SweepAxis::Q:
      config.q = FractionalOrder(value);
      break;
    case SweepAxis::Gamma:
      break;
  }
  return config;
}

ControlSchedule control_at(const SweepSpec& spec, double value) {
  ControlSchedule control = spec.control;
  if (spec.axis == SweepAxis::Gamma) control.gamma = value;
  return control;
}

}  // namespace

NspoResult detect_nspo(std::span<const double> tail, double tolerance, std::size_t max_period) {
  if (max_period == 0) throw std::invalid_argument("max_period must be positive");
  if (!(tolerance > 0.0)) throw std::invalid_argument("NSPO tolerance must be positive");
  if (tail.size() < 3 * max_period) {
    throw std::invalid_argument("tail of " + std::to_string(tail.size()) +
                                " samples too short for max_period " + std::to_string(max_period));
  }
  NspoResult result;
  for (std::size_t period = 1; period <= max_period; ++period) {
    const double err = closing_error(tail, period);
    if (err <= tolerance) {
      result.found = true;
      result.period = period;
      result.closing_error = err;
      result.elements.assign(tail.end() - static_cast<std::ptrdiff_t>(period), tail.end());
      result.element_count = count_distinct(result.elements, tolerance);
      return result;
    }
    result.closing_error = std::min(result.closing_error, err);
  }
  return result;
}

NspoResult detect_nspo(const Trajectory& trajectory, std::size_t tail_points, double tolerance,
                       std::size_t max_period) {
  if (!trajectory.completed()) throw std::invalid_argument("NSPO detection needs a completed trajectory");
  if (tail_points > trajectory.samples.size()) {
    throw std::invalid_argument("tail longer than trajectory");
  }
  std::span<const double> samples(trajectory.samples);
  return detect_nspo(samples.last(tail_points), tolerance, max_period);
}

std::size_t count_distinct(std::span<const double> values, double tolerance) {
  if (values.empty()) return 0;
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t count = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] > tolerance) ++count;
  }
  return count;
}

std::size_t analysis_window_start(const SimConfig& config, const ControlSchedule& control,
                                  double transient_cut) {
  if (!(transient_cut >= 0.0 && transient_cut < 1.0)) {
    throw std::invalid_argument("transient cut must lie in [0, 1)");
  }
  const std::size_t steps = config.steps;
  std::size_t start = static_cast<std::size_t>(std::floor(transient_cut * static_cast<double>(steps)));
  if (control.active() && control.n_star < steps) {
    start = std::max(start, control.n_star + (steps - control.n_star) / 5);
  }
  return start;
}

RunAnalysis analyze_run(const SimConfig& config, const KernelTable& kernel,
                        const ControlSchedule& control, const AnalysisOptions& options) {
  RunAnalysis run;
  run.window_start = analysis_window_start(config, control, options.transient_cut);
  const std::size_t window = config.steps + 1 - std::min(run.window_start, config.steps + 1);
  if (options.tail_points > window) {
    throw std::invalid_argument("tail_points exceeds the post-transient window");
  }

  run.trajectory = simulate(config, kernel, control);
  if (!run.trajectory.completed()) {
    run.note = "diverged";
    return run;
  }

  run.nspo = detect_nspo(run.trajectory, options.tail_points, options.nspo_tolerance,
                         options.max_period);

  std::span<const double> samples(run.trajectory.samples);
  run.test01 = run_test01(samples.subspan(run.window_start), options.test01);

  LyapunovOptions lyap;
  lyap.indexing = options.indexing;
  lyap.from_step = run.window_start;
  lyap.control = control;
  try {
    run.tangent = lyapunov_exponent(run.trajectory, config, kernel, lyap);
    if (run.tangent->truncated && run.tangent->reported_n < config.steps) {
      run.singular = true;
      run.note = "tangent overflow";
      run.tangent.reset();
    }
  } catch (const DomainError& e) {
    run.singular = true;
    run.note = e.what();
  } catch (const std::invalid_argument& e) {
    run.singular = true;
    run.note = e.what();
  }
  return run;
}

void SweepSpec::validate() const {
  if (!(lo < hi)) throw std::invalid_argument("sweep range needs lo < hi");
  if (grid_count < 2) throw std::invalid_argument("sweep grid needs at least 2 points");
  if (axis == SweepAxis::Gamma && !control.active()) {
    throw std::invalid_argument("gamma sweep needs a control mode");
  }
  if (axis == SweepAxis::P && base.map.family() != MapFamily::GompertzLike) {
    throw std::invalid_argument("p sweep applies to the gompertz family only");
  }
  base.validate();
  // Endpoints must be admissible; interior points then are too.
  for (double v : {lo, hi}) {
    (void)config_at(*this, v);
    control_at(*this, v).validate();
  }
  control.validate();
}

std::vector<double> sweep_grid(double lo, double hi, std::size_t grid_count) {
  if (grid_count < 2) throw std::invalid_argument("sweep grid needs at least 2 points");
  std::vector<double> grid(grid_count);
  const double last = static_cast<double>(grid_count - 1);
  for (std::size_t i = 0; i < grid_count; ++i) {
    const double k = static_cast<double>(i);
    grid[i] = (lo * (last - k) + hi * k) / last;
  }
  return grid;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const auto grid = sweep_grid(spec.lo, spec.hi, spec.grid_count);

  std::optional<KernelTable> shared;
  if (spec.axis != SweepAxis::Q) shared.emplace(spec.base.q, spec.base.steps);

  AnalysisOptions options = spec.analysis;
  options.test01.threads = 1;  // parallelism lives at the grid level

  std::vector<SweepRow> rows(grid.size());
  parallel_for(
      grid.size(),
      [&](std::size_t i) {
        const double value = grid[i];
        const SimConfig config = config_at(spec, value);
        const ControlSchedule control = control_at(spec, value);

        std::optional<KernelTable> own;
        if (!shared) own.emplace(config.q, config.steps);
        const KernelTable& kernel = shared ? *shared : *own;

        const RunAnalysis run = analyze_run(config, kernel, control, options);
        SweepRow& row = rows[i];
        row.param_value = value;
        if (!run.trajectory.completed()) {
          row.diverged = true;
          row.divergence = run.trajectory.divergence;
          return;
        }
        std::span<const double> samples(run.trajectory.samples);
        const auto tail = samples.last(options.tail_points);
        row.tail.assign(tail.begin(), tail.end());
        row.nspo = run.nspo;
        row.singular = run.singular;
        if (run.test01) row.K = run.test01->K;
        if (run.tangent) row.le = run.tangent->lambda;
      },
      spec.threads);
  return rows;
}

WindowClass classify_window(const SweepRow& row) {
  if (row.diverged) return WindowClass::Diverged;
  if (!row.K || !row.le) return WindowClass::Indeterminate;
  if (*row.K >= 0.9 && *row.le > 0.0) return WindowClass::Chaotic;
  if (std::abs(*row.K) <= 0.1 && *row.le <= 0.05) return WindowClass::Regular;
  return WindowClass::Indeterminate;
}

std::string_view axis_name(SweepAxis axis) noexcept {
  switch (axis) {
    case SweepAxis::R:
      return "r";
    case SweepAxis::P:
      return "p";
    case SweepAxis::Q:
      return "q";
    case SweepAxis::Gamma:
      return "gamma";
  }
  return "unknown";
}

std::optional<SweepAxis> parse_axis(std::string_view name) noexcept {
  if (name == "r") return SweepAxis::R;
  if (name == "p") return SweepAxis::P;
  if (name == "q") return SweepAxis::Q;
  if (name == "gamma") return SweepAxis::Gamma;
  return std::nullopt;
}

std::string_view window_class_name(WindowClass cls) noexcept {
  switch (cls) {
    case WindowClass::Chaotic:
      return "chaotic";
    case WindowClass::Regular:
      return "regular";
    case WindowClass::Diverged:
      return "diverged";
    case WindowClass::Indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

}  // namespace fracdyn
