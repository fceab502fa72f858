#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fracdyn/kernel.hpp"
#include "fracdyn/simulator.hpp"

namespace fracdyn {

/// Which base state multiplies a(j-1) in the tangent memory sum.
enum class DerivativeIndexing {
  Previous,  // f'(x(j-1)): term-by-term derivative of the integrator (default)
  Current,   // f'(x(j)): shifted index, kept for comparison
};

inline constexpr double kSingularityFloor = 1e-12;

struct LyapunovOptions {
  DerivativeIndexing indexing = DerivativeIndexing::Previous;
  /// Start s of the averaging window: λ = (ln|a(n-1)| - ln|a(s)|)/(n - s).
  /// s = 0 gives the plain (1/n) ln|a(n-1)|.
  std::size_t from_step = 0;
  /// When set, multiplicative impulses scale the tangent by (1+γ) at the
  /// trajectory's control events.
  std::optional<ControlSchedule> control;
};

struct TangentState {
  std::vector<double> a;            // a(0..), a(0) = 1
  double lambda = 0.0;
  std::size_t reported_n = 0;       // n in ln|a(n-1)|
  std::size_t from_step = 0;
  bool truncated = false;           // a became non-finite before the end
  std::size_t clamped_evaluations = 0;
};

/// Solves a(n) = 1 + Σ_{j=1..n} c(n-j) a(j-1) g(j-1) for n = 1..factors.size(),
/// where g are the per-step derivative factors and c the kernel's memory
/// coefficients. `impulse_scale[n]`, when non-empty, multiplies a(n) after
/// its memory sum. Stops at the first non-finite value (not stored).
std::vector<double> tangent_recurrence(std::span<const double> factors,
                                       const KernelTable& kernel,
                                       std::span<const double> impulse_scale = {});

/// Finite-time Lyapunov exponent from the linearized memory recurrence
/// along a completed trajectory.
///
/// Throws std::invalid_argument for a diverged or too-short trajectory or a
/// kernel mismatch, and DomainError when a derivative argument is <= 0 on
/// the GompertzLike family. Arguments in (0, 1e-12) are clamped and counted.
TangentState lyapunov_exponent(const Trajectory& trajectory, const SimConfig& config,
                               const KernelTable& kernel, const LyapunovOptions& options = {});

/// ln|a(n-1)|/n for 1 <= n <= a.size(); 0 for n = 0.
double running_lambda(std::span<const double> a, std::size_t n);

}  // namespace fracdyn
