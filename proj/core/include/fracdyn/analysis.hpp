#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fracdyn/kernel.hpp"
#include "fracdyn/lyapunov.hpp"
#include "fracdyn/simulator.hpp"
#include "fracdyn/zero_one.hpp"

namespace fracdyn {

inline constexpr double kDefaultNspoTolerance = 1e-3;
inline constexpr std::size_t kDefaultMaxPeriod = 32;
inline constexpr std::size_t kDefaultTailPoints = 100;
inline constexpr double kDefaultTransientCut = 0.5;

/// Numerically stable periodic orbit found in a trajectory tail.
struct NspoResult {
  bool found = false;
  /// Smallest T <= max_period with max_n |x(n+T) - x(n)| <= tolerance; 0 when
  /// not found.
  std::size_t period = 0;
  /// Closing error of `period`; when not found, the smallest error over all
  /// candidate periods.
  double closing_error = std::numeric_limits<double>::infinity();
  /// The last `period` tail values (one full cycle).
  std::vector<double> elements;
  /// Number of distinct values among `elements` once values closer than the
  /// tolerance are merged: the points a phase portrait of the cycle shows.
  std::size_t element_count = 0;
};

/// Throws std::invalid_argument when tail.size() < 3 * max_period or the
/// tolerance is not positive.
NspoResult detect_nspo(std::span<const double> tail, double tolerance = kDefaultNspoTolerance,
                       std::size_t max_period = kDefaultMaxPeriod);

/// Uses the last `tail_points` samples of a completed trajectory.
NspoResult detect_nspo(const Trajectory& trajectory, std::size_t tail_points,
                       double tolerance = kDefaultNspoTolerance,
                       std::size_t max_period = kDefaultMaxPeriod);

/// Values closer than `tolerance` (after sorting) count once.
std::size_t count_distinct(std::span<const double> values, double tolerance);

struct AnalysisOptions {
  double transient_cut = kDefaultTransientCut;
  std::size_t tail_points = kDefaultTailPoints;
  double nspo_tolerance = kDefaultNspoTolerance;
  std::size_t max_period = kDefaultMaxPeriod;
  DerivativeIndexing indexing = DerivativeIndexing::Previous;
  Test01Config test01;
};

/// First sample of the analysed window: ⌊transient_cut·N⌋, and for controlled
/// runs no earlier than n* + ⌊(N - n*)/5⌋ so the post-activation settling is
/// discarded.
std::size_t analysis_window_start(const SimConfig& config, const ControlSchedule& control,
                                  double transient_cut);

/// Everything measured on one run: orbit, windowed LE, K, NSPO.
struct RunAnalysis {
  Trajectory trajectory;
  std::size_t window_start = 0;
  std::optional<TangentState> tangent;
  std::optional<Test01Result> test01;
  NspoResult nspo;
  bool singular = false;  // LE undefined (derivative singularity or overflow)
  std::string note;       // why tangent/test01 are absent
};

RunAnalysis analyze_run(const SimConfig& config, const KernelTable& kernel,
                        const ControlSchedule& control, const AnalysisOptions& options = {});

enum class SweepAxis { R, P, Q, Gamma };

struct SweepSpec {
  SweepAxis axis = SweepAxis::R;
  double lo = 0.0;
  double hi = 1.0;
  std::size_t grid_count = 2;
  SimConfig base;
  ControlSchedule control;
  AnalysisOptions analysis;
  std::size_t threads = 0;  // 0: worker_count()

  /// Throws std::invalid_argument on an empty range, grid_count < 2, or
  /// endpoints that are not admissible parameter values.
  void validate() const;
};

struct SweepRow {
  double param_value = 0.0;
  std::vector<double> tail;  // empty when diverged
  std::optional<double> le;
  std::optional<double> K;
  bool diverged = false;
  std::optional<Divergence> divergence;
  bool singular = false;
  NspoResult nspo;
};

/// grid_count points from lo to hi inclusive; endpoints exact.
std::vector<double> sweep_grid(double lo, double hi, std::size_t grid_count);

/// One row per grid point in axis order. Grid points run concurrently and
/// share one read-only kernel (one per point for the Q axis).
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

enum class WindowClass { Chaotic, Regular, Diverged, Indeterminate };

WindowClass classify_window(const SweepRow& row);

std::string_view axis_name(SweepAxis axis) noexcept;
std::optional<SweepAxis> parse_axis(std::string_view name) noexcept;
std::string_view window_class_name(WindowClass cls) noexcept;

}  // namespace fracdyn
