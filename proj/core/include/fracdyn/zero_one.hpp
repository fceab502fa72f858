#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace fracdyn {

// 0-1 test for chaos on a scalar observable φ(1..N).

enum class GrowthEstimator {
  LogLogRegression,  // least-squares slope of log M(n) against log n
  Correlation,       // correlation of n with the oscillation-corrected displacement
};

inline constexpr std::size_t kDefaultCCount = 100;
inline constexpr std::size_t kMinSeriesLength = 100;
inline constexpr std::size_t kMinDisplacementLength = 10;
inline constexpr double kMinPositiveDisplacement = 1e-12;

struct Test01Config {
  /// Explicit frequencies; when empty, c_count evenly spaced values
  /// spanning [π/5, 4π/5] are used.
  std::vector<double> c_values;
  std::size_t c_count = kDefaultCCount;
  /// Largest lag of M; defaults to N/10 and may not exceed it.
  std::optional<std::size_t> n_cut;
  GrowthEstimator estimator = GrowthEstimator::Correlation;
  std::size_t threads = 0;  // 0: worker_count()
};

struct TranslationPath {
  std::vector<double> p;  // p[n-1] = Σ_{j<=n} φ(j) cos(jc)
  std::vector<double> q;  // q[n-1] = Σ_{j<=n} φ(j) sin(jc)
};

struct GrowthRate {
  double K = 0.0;
  bool degenerate = false;  // no usable growth signal; K forced to 0
};

struct Test01Result {
  double K = 0.0;  // median of per_c_K
  std::vector<double> c_values;
  std::vector<double> per_c_K;
  std::size_t degenerate_count = 0;
  std::size_t diagnostic_index = 0;  // c whose K is the (lower) median
  double diagnostic_c = 0.0;
  TranslationPath pq_path;           // at diagnostic_c
  std::vector<double> M_curve;       // M(1..n_cut) at diagnostic_c
};

std::vector<double> default_c_values(std::size_t count = kDefaultCCount);

/// Throws std::invalid_argument for an empty series or c outside (0, 2π).
TranslationPath translation_variables(std::span<const double> series, double c);

/// M(n) = 1/(N-n) Σ_{j=1..N-n} [p(j+n)-p(j)]² + [q(j+n)-q(j)]², n = 1..n_cut.
/// Throws std::invalid_argument unless 1 <= n_cut < N.
std::vector<double> mean_square_displacement(const TranslationPath& path, std::size_t n_cut);

/// D(n) = M(n) - mean² (1 - cos nc)/(1 - cos c): removes the bounded
/// oscillation a nonzero-mean observable adds to M.
std::vector<double> remove_oscillatory_term(std::span<const double> M, double c, double mean);

/// Growth rate of a displacement curve indexed by lag n = 1..size.
/// Throws std::invalid_argument when fewer than 10 lags are given.
GrowthRate growth_rate(std::span<const double> M,
                       GrowthEstimator estimator = GrowthEstimator::LogLogRegression);

/// Full test; per-c work runs concurrently, results are merged in c order.
/// Throws std::invalid_argument for series shorter than 100 samples or an
/// invalid configuration.
Test01Result run_test01(std::span<const double> series, const Test01Config& config = {});

}  // namespace fracdyn
