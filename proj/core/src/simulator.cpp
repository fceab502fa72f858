#include "fracdyn/simulator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracdyn {

void SimConfig::validate() const {
  if (steps == 0) throw std::invalid_argument("steps must be positive");
  if (!std::isfinite(x0)) throw std::invalid_argument("x0 must be finite");
  if (map.family() == MapFamily::GompertzLike && !(x0 >= 0.0 && x0 <= 1.5)) {
    throw std::invalid_argument("gompertz x0 must lie in [0, 1.5]");
  }
  if (!(divergence_threshold > 0.0)) {
    throw std::invalid_argument("divergence threshold must be positive");
  }
}

double ControlSchedule::apply(double x) const noexcept {
  switch (mode) {
    case ControlMode::Multiplicative:
      return (1.0 + gamma) * x;
    case ControlMode::Additive:
      return x + gamma;
    case ControlMode::None:
      break;
  }
  return x;
}

void ControlSchedule::validate() const {
  if (delta == 0) throw std::invalid_argument("control stride delta must be >= 1");
  if (!std::isfinite(gamma)) throw std::invalid_argument("gamma must be finite");
  if (mode == ControlMode::Multiplicative && std::abs(gamma) > 0.1) {
    throw std::invalid_argument("multiplicative gamma must lie in [-0.1, 0.1]");
  }
  if (mode == ControlMode::Additive && std::abs(gamma) > 0.5) {
    throw std::invalid_argument("additive gamma must satisfy |gamma| <= 0.5");
  }
}

Trajectory simulate(const SimConfig& config, const KernelTable& kernel,
                    const ControlSchedule& control) {
  config.validate();
  control.validate();
  if (!(kernel.order() == config.q)) {
    throw std::invalid_argument("kernel order does not match simulation order");
  }
  if (kernel.capacity() < config.steps) {
    throw std::invalid_argument("kernel capacity " + std::to_string(kernel.capacity()) +
                                " below requested steps " + std::to_string(config.steps));
  }

  const auto coeff = kernel.memory_coefficients();
  const std::size_t steps = config.steps;

  Trajectory traj;
  traj.samples.reserve(steps + 1);
  traj.samples.push_back(config.x0);

  if (!in_domain(config.map, config.x0)) {
    traj.divergence = Divergence{0, DivergenceReason::DomainViolation};
    return traj;
  }

  // f(x(j)) for every stored sample; the memory sum runs over this history.
  std::vector<double> drive;
  drive.reserve(steps);

  for (std::size_t n = 0; n < steps; ++n) {
    drive.push_back(map_eval(config.map, traj.samples[n]));

    // x(n+1) = x0 + Σ_{i=0..n} c(n-i) f(x(i))
    double next = memory_update(config.x0, coeff, drive);

    if (control.fires_at(n)) {
      next = control.apply(next);
      traj.control_events.push_back(n);
    }

    if (!std::isfinite(next)) {
      traj.divergence = Divergence{n + 1, DivergenceReason::NonFinite};
      break;
    }
    if (std::abs(next) > config.divergence_threshold) {
      traj.divergence = Divergence{n + 1, DivergenceReason::ThresholdExceeded};
      break;
    }
    if (!in_domain(config.map, next)) {
      traj.divergence = Divergence{n + 1, DivergenceReason::DomainViolation};
      break;
    }
    traj.samples.push_back(next);
  }
  return traj;
}

std::string_view reason_name(DivergenceReason reason) noexcept {
  switch (reason) {
    case DivergenceReason::NonFinite:
      return "non-finite state";
    case DivergenceReason::ThresholdExceeded:
      return "divergence threshold exceeded";
    case DivergenceReason::DomainViolation:
      return "state left the map domain";
  }
  return "unknown";
}

std::string_view mode_name(ControlMode mode) noexcept {
  switch (mode) {
    case ControlMode::None:
      return "none";
    case ControlMode::Multiplicative:
      return "mult";
    case ControlMode::Additive:
      return "add";
  }
  return "unknown";
}

std::optional<ControlMode> parse_mode(std::string_view name) noexcept {
  if (name == "none") return ControlMode::None;
  if (name == "mult" || name == "multiplicative") return ControlMode::Multiplicative;
  if (name == "add" || name == "additive") return ControlMode::Additive;
  return std::nullopt;
}

}  // namespace fracdyn
