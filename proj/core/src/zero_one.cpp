#include "fracdyn/zero_one.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fracdyn/parallel.hpp"

namespace fracdyn {

namespace {

constexpr double kLowC = std::numbers::pi / 5.0;
constexpr double kHighC = 4.0 * std::numbers::pi / 5.0;
// A corrected displacement this small next to M is rounding noise.
constexpr double kDegenerateRatio = 1e-9;

double median_of(std::vector<double> values) {
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  if (values.size() % 2 == 1) return values[mid];
  const double upper = values[mid];
  const double lower = *std::max_element(values.begin(), values.begin() + mid);
  return 0.5 * (lower + upper);
}

GrowthRate regression_slope(std::span<const double> M) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < M.size(); ++i) {
    if (!(M[i] > kMinPositiveDisplacement)) continue;
    const double lx = std::log(static_cast<double>(i + 1));
    const double ly = std::log(M[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++used;
  }
  if (used < 2) return {0.0, true};
  const double n = static_cast<double>(used);
  const double denom = n * sxx - sx * sx;
  if (!(denom > 0.0)) return {0.0, true};
  return {(n * sxy - sx * sy) / denom, false};
}

GrowthRate correlation_with_lag(std::span<const double> D) {
  const double n = static_cast<double>(D.size());
  const double mean_lag = (n + 1.0) / 2.0;
  const double mean_d = std::accumulate(D.begin(), D.end(), 0.0) / n;
  double cov = 0.0, var_lag = 0.0, var_d = 0.0;
  for (std::size_t i = 0; i < D.size(); ++i) {
    const double dl = static_cast<double>(i + 1) - mean_lag;
    const double dd = D[i] - mean_d;
    cov += dl * dd;
    var_lag += dl * dl;
    var_d += dd * dd;
  }
  if (!(var_d > 0.0)) return {0.0, true};
  return {cov / std::sqrt(var_lag * var_d), false};
}

struct PerC {
  double K = 0.0;
  bool degenerate = false;
};

PerC evaluate_c(std::span<const double> series, double c, std::size_t n_cut, double mean,
                GrowthEstimator estimator) {
  const auto path = translation_variables(series, c);
  const auto M = mean_square_displacement(path, n_cut);
  if (estimator == GrowthEstimator::LogLogRegression) {
    const auto g = growth_rate(M, estimator);
    return {g.K, g.degenerate};
  }
  const auto D = remove_oscillatory_term(M, c, mean);
  double scale = 0.0, residual = 0.0;
  for (std::size_t i = 0; i < M.size(); ++i) {
    scale = std::max(scale, std::abs(M[i]));
    residual = std::max(residual, std::abs(D[i]));
  }
  if (residual <= kDegenerateRatio * scale) return {0.0, true};
  const auto g = growth_rate(D, estimator);
  return {g.K, g.degenerate};
}

}  // namespace

std::vector<double> default_c_values(std::size_t count) {
  if (count == 0) throw std::invalid_argument("c_count must be positive");
  if (count == 1) return {0.5 * (kLowC + kHighC)};
  std::vector<double> values(count);
  const double step = (kHighC - kLowC) / static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) values[k] = kLowC + step * static_cast<double>(k);
  values.back() = kHighC;
  return values;
}

TranslationPath translation_variables(std::span<const double> series, double c) {
  if (series.empty()) throw std::invalid_argument("translation variables need a nonempty series");
  if (!(c > 0.0 && c < 2.0 * std::numbers::pi)) {
    throw std::invalid_argument("frequency c must lie in (0, 2π)");
  }
  TranslationPath path;
  path.p.resize(series.size());
  path.q.resize(series.size());
  double p = 0.0, q = 0.0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double angle = static_cast<double>(i + 1) * c;
    p += series[i] * std::cos(angle);
    q += series[i] * std::sin(angle);
    path.p[i] = p;
    path.q[i] = q;
  }
  return path;
}

std::vector<double> mean_square_displacement(const TranslationPath& path, std::size_t n_cut) {
  const std::size_t N = path.p.size();
  if (path.q.size() != N) throw std::invalid_argument("p and q paths differ in length");
  if (n_cut == 0 || n_cut >= N) {
    throw std::invalid_argument("n_cut must satisfy 1 <= n_cut < series length");
  }
  std::vector<double> M(n_cut);
  for (std::size_t lag = 1; lag <= n_cut; ++lag) {
    double sum = 0.0;
    for (std::size_t j = 0; j + lag < N; ++j) {
      const double dp = path.p[j + lag] - path.p[j];
      const double dq = path.q[j + lag] - path.q[j];
      sum += dp * dp + dq * dq;
    }
    M[lag - 1] = sum / static_cast<double>(N - lag);
  }
  return M;
}

std::vector<double> remove_oscillatory_term(std::span<const double> M, double c, double mean) {
  std::vector<double> D(M.size());
  const double denom = 1.0 - std::cos(c);
  for (std::size_t i = 0; i < M.size(); ++i) {
    const double lag = static_cast<double>(i + 1);
    D[i] = M[i] - mean * mean * (1.0 - std::cos(lag * c)) / denom;
  }
  return D;
}

GrowthRate growth_rate(std::span<const double> M, GrowthEstimator estimator) {
  if (M.size() < kMinDisplacementLength) {
    throw std::invalid_argument("growth rate needs at least 10 displacement values");
  }
  return estimator == GrowthEstimator::LogLogRegression ? regression_slope(M)
                                                        : correlation_with_lag(M);
}

Test01Result run_test01(std::span<const double> series, const Test01Config& config) {
  const std::size_t N = series.size();
  if (N < kMinSeriesLength) {
    throw std::invalid_argument("0-1 test needs at least " + std::to_string(kMinSeriesLength) +
                                " samples, got " + std::to_string(N));
  }
  const std::size_t n_cut = config.n_cut.value_or(N / 10);
  if (n_cut < kMinDisplacementLength || n_cut > N / 10) {
    throw std::invalid_argument("n_cut must lie in [10, N/10]");
  }

  Test01Result result;
  result.c_values = config.c_values.empty() ? default_c_values(config.c_count) : config.c_values;
  for (double c : result.c_values) {
    if (!(c >= kLowC - 1e-12 && c <= kHighC + 1e-12)) {
      throw std::invalid_argument("c values must lie in [π/5, 4π/5]");
    }
  }

  const double mean = std::accumulate(series.begin(), series.end(), 0.0) / static_cast<double>(N);
  const std::size_t count = result.c_values.size();
  std::vector<PerC> per_c(count);
  parallel_for(
      count,
      [&](std::size_t k) {
        per_c[k] = evaluate_c(series, result.c_values[k], n_cut, mean, config.estimator);
      },
      config.threads);

  result.per_c_K.reserve(count);
  for (const auto& r : per_c) {
    result.per_c_K.push_back(r.K);
    if (r.degenerate) ++result.degenerate_count;
  }
  result.K = median_of(result.per_c_K);

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return result.per_c_K[a] < result.per_c_K[b];
  });
  result.diagnostic_index = order[(count - 1) / 2];
  result.diagnostic_c = result.c_values[result.diagnostic_index];
  result.pq_path = translation_variables(series, result.diagnostic_c);
  result.M_curve = mean_square_displacement(result.pq_path, n_cut);
  return result;
}

}  // namespace fracdyn
