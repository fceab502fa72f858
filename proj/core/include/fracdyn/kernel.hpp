#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracdyn {

/// Order of the Caputo delta difference, 0 < q <= 1.
class FractionalOrder {
 public:
  /// Throws std::invalid_argument when q is outside (0, 1].
  explicit FractionalOrder(double q);

  double value() const noexcept { return q_; }
  bool is_integer() const noexcept { return q_ == 1.0; }

  friend bool operator==(FractionalOrder, FractionalOrder) = default;

 private:
  double q_;
};

inline constexpr std::size_t kDefaultKernelCapacity = 10000;

/// Memory weights Γ(m+q)/Γ(m+1) for lags m = 0..capacity-1.
///
/// Every weight is evaluated in the log domain as
/// exp(lnΓ(m+q) - lnΓ(m+1)), which stays representable far beyond the
/// point where Γ itself overflows (m ~ 170). The table also keeps the
/// weights pre-divided by Γ(q) (the "memory coefficients" used by the
/// integrators) and the running partial sums.
///
/// Immutable after construction; safe to share read-only across threads.
class KernelTable {
 public:
  /// Throws std::invalid_argument when capacity is zero.
  KernelTable(FractionalOrder q, std::size_t capacity);

  FractionalOrder order() const noexcept { return q_; }
  std::size_t capacity() const noexcept { return weights_.size(); }

  /// Γ(m+q)/Γ(m+1). Unchecked.
  double weight(std::size_t lag) const noexcept { return weights_[lag]; }
  std::span<const double> weights() const noexcept { return weights_; }

  /// Γ(m+q)/(Γ(m+1)Γ(q)); coefficient 0 is exactly 1.
  std::span<const double> memory_coefficients() const noexcept {
    return coefficients_;
  }

  /// Σ_{m<n} weight(m). Throws std::out_of_range unless 1 <= n <= capacity.
  double partial_sum(std::size_t n) const;

 private:
  FractionalOrder q_;
  std::vector<double> weights_;
  std::vector<double> coefficients_;
  std::vector<double> prefix_;
};

KernelTable build_kernel(FractionalOrder q, std::size_t capacity = kDefaultKernelCapacity);

/// base + Σ_{i=0..n} coefficients[n-i]·history[i] with n = history.size() - 1,
/// evaluated in compensated (twice-working-precision) arithmetic.
double memory_update(double base, std::span<const double> coefficients,
                     std::span<const double> history);

double kernel_partial_sum(const KernelTable& table, std::size_t n);

/// Outcome of checking |Σ_{m<n} w(m) - n^q/q| <= 1/q for n = 1..capacity.
struct KernelBoundReport {
  double q = 0.0;
  std::size_t checked = 0;
  std::size_t violations = 0;
  double worst_margin = 0.0;  // min over n of 1/q - |S(n) - n^q/q|
  std::size_t worst_n = 0;
  bool monotone = true;

  bool ok() const noexcept { return violations == 0 && monotone; }
};

KernelBoundReport check_partial_sum_bound(const KernelTable& table);

}  // namespace fracdyn
