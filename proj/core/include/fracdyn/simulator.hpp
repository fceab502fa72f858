#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "fracdyn/kernel.hpp"
#include "fracdyn/maps.hpp"

namespace fracdyn {

inline constexpr double kDefaultDivergenceThreshold = 1e6;
inline constexpr std::size_t kDefaultActivationStep = 500;

struct SimConfig {
  MapSpec map;
  FractionalOrder q;
  double x0;
  std::size_t steps;
  double divergence_threshold = kDefaultDivergenceThreshold;

  /// Throws std::invalid_argument on an inadmissible configuration.
  void validate() const;
};

enum class ControlMode { None, Multiplicative, Additive };

/// Impulses applied to x(n+1) at every step n with n >= n_star and
/// n mod delta == 0 (absolute step counter).
struct ControlSchedule {
  ControlMode mode = ControlMode::None;
  double gamma = 0.0;
  std::size_t delta = 1;
  std::size_t n_star = kDefaultActivationStep;

  static ControlSchedule none() { return {}; }
  static ControlSchedule multiplicative(double gamma, std::size_t delta,
                                        std::size_t n_star = kDefaultActivationStep) {
    return {ControlMode::Multiplicative, gamma, delta, n_star};
  }
  static ControlSchedule additive(double gamma, std::size_t delta,
                                  std::size_t n_star = kDefaultActivationStep) {
    return {ControlMode::Additive, gamma, delta, n_star};
  }

  bool active() const noexcept { return mode != ControlMode::None; }
  bool fires_at(std::size_t n) const noexcept {
    return active() && n >= n_star && n % delta == 0;
  }
  /// The impulse itself: (1+γ)x or x+γ.
  double apply(double x) const noexcept;

  void validate() const;
};

enum class DivergenceReason { NonFinite, ThresholdExceeded, DomainViolation };

struct Divergence {
  std::size_t step;  // index of the first offending sample
  DivergenceReason reason;
};

struct Trajectory {
  std::vector<double> samples;             // x(0..n_end)
  std::optional<Divergence> divergence;    // empty when completed
  std::vector<std::size_t> control_events; // schedule indices n where x(n+1) was impulsed

  bool completed() const noexcept { return !divergence.has_value(); }
  std::size_t last_step() const noexcept { return samples.empty() ? 0 : samples.size() - 1; }
};

/// Integrates x(n) = x0 + Σ_{j=1..n} c(n-j) f(x(j-1)), c the kernel's memory
/// coefficients, applying impulses from `control`. Stops at the first sample
/// that is non-finite, exceeds the divergence threshold or leaves the map
/// domain; that sample is not stored.
///
/// Throws std::invalid_argument when the kernel order differs from config.q
/// or its capacity is below config.steps.
Trajectory simulate(const SimConfig& config, const KernelTable& kernel,
                    const ControlSchedule& control = ControlSchedule::none());

std::string_view reason_name(DivergenceReason reason) noexcept;
std::string_view mode_name(ControlMode mode) noexcept;
std::optional<ControlMode> parse_mode(std::string_view name) noexcept;

}  // namespace fracdyn
