#include "fracdyn/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fracdyn {

std::vector<double> tangent_recurrence(std::span<const double> factors,
                                       const KernelTable& kernel,
                                       std::span<const double> impulse_scale) {
  if (factors.size() > kernel.capacity()) {
    throw std::invalid_argument("tangent recurrence longer than kernel capacity");
  }
  if (!impulse_scale.empty() && impulse_scale.size() < factors.size() + 1) {
    throw std::invalid_argument("impulse scale shorter than tangent sequence");
  }
  const auto coeff = kernel.memory_coefficients();

  std::vector<double> a;
  a.reserve(factors.size() + 1);
  a.push_back(1.0);

  std::vector<double> drive;  // a(j) g(j)
  drive.reserve(factors.size());
  for (std::size_t n = 0; n < factors.size(); ++n) {
    drive.push_back(a[n] * factors[n]);
    double next = memory_update(1.0, coeff, drive);
    if (!impulse_scale.empty()) next *= impulse_scale[n + 1];
    if (!std::isfinite(next)) break;
    a.push_back(next);
  }
  return a;
}

double running_lambda(std::span<const double> a, std::size_t n) {
  if (n == 0) return 0.0;
  if (n > a.size()) throw std::out_of_range("running lambda index beyond tangent sequence");
  return std::log(std::abs(a[n - 1])) / static_cast<double>(n);
}

TangentState lyapunov_exponent(const Trajectory& trajectory, const SimConfig& config,
                               const KernelTable& kernel, const LyapunovOptions& options) {
  if (!trajectory.completed()) {
    throw std::invalid_argument("lyapunov exponent needs a completed trajectory");
  }
  if (!(kernel.order() == config.q)) {
    throw std::invalid_argument("kernel order does not match simulation order");
  }
  const std::size_t steps = trajectory.samples.size() - 1;
  if (steps < 2) throw std::invalid_argument("trajectory too short for a lyapunov estimate");
  if (options.from_step + 1 >= steps) {
    throw std::invalid_argument("lyapunov window start leaves no samples to average");
  }

  TangentState state;
  state.from_step = options.from_step;

  const std::size_t shift = options.indexing == DerivativeIndexing::Current ? 1 : 0;
  std::vector<double> factors(steps);
  for (std::size_t j = 0; j < steps; ++j) {
    double x = trajectory.samples[j + shift];
    if (config.map.family() == MapFamily::GompertzLike) {
      if (!(x > 0.0)) {
        throw DomainError("derivative singularity: sample " + std::to_string(j + shift) +
                          " is not positive");
      }
      if (x < kSingularityFloor) {
        x = kSingularityFloor;
        ++state.clamped_evaluations;
      }
    }
    factors[j] = map_derivative(config.map, x);
  }

  std::vector<double> scale;
  if (options.control && options.control->mode == ControlMode::Multiplicative) {
    scale.assign(steps + 1, 1.0);
    const double factor = 1.0 + options.control->gamma;
    for (std::size_t event : trajectory.control_events) {
      if (event + 1 <= steps) scale[event + 1] = factor;
    }
  }

  state.a = tangent_recurrence(factors, kernel, scale);
  state.truncated = state.a.size() < steps + 1;

  // a(n-1) must exist and lie past the window start.
  const std::size_t n = std::min(steps, state.a.size());
  if (n <= options.from_step + 1) {
    throw std::invalid_argument("tangent sequence overflowed before the lyapunov window");
  }
  state.reported_n = n;
  const double log_start = std::log(std::abs(state.a[options.from_step]));
  state.lambda = (std::log(std::abs(state.a[n - 1])) - log_start) /
                 static_cast<double>(n - options.from_step);
  return state;
}

}  // namespace fracdyn
