#include "fracdyn/kernel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fracdyn {

FractionalOrder::FractionalOrder(double q) : q_(q) {
  if (!(q > 0.0 && q <= 1.0)) {
    throw std::invalid_argument("fractional order must satisfy 0 < q <= 1, got " +
                                std::to_string(q));
  }
}

KernelTable::KernelTable(FractionalOrder q, std::size_t capacity) : q_(q) {
  if (capacity == 0) {
    throw std::invalid_argument("kernel capacity must be positive");
  }
  const double order = q.value();
  const long double log_gamma_q = std::lgamma(static_cast<long double>(order));

  weights_.resize(capacity);
  coefficients_.resize(capacity);
  prefix_.resize(capacity + 1);
  prefix_[0] = 0.0;
  for (std::size_t m = 0; m < capacity; ++m) {
    const long double lag = static_cast<long double>(m);
    const long double log_ratio = std::lgamma(lag + order) - std::lgamma(lag + 1.0L);
    weights_[m] = static_cast<double>(std::exp(log_ratio));
    coefficients_[m] = static_cast<double>(std::exp(log_ratio - log_gamma_q));
    prefix_[m + 1] = prefix_[m] + weights_[m];
  }
}

double KernelTable::partial_sum(std::size_t n) const {
  if (n == 0 || n > capacity()) {
    throw std::out_of_range("partial sum length " + std::to_string(n) +
                            " outside [1, " + std::to_string(capacity()) + "]");
  }
  return prefix_[n];
}

KernelTable build_kernel(FractionalOrder q, std::size_t capacity) {
  return KernelTable(q, capacity);
}

double kernel_partial_sum(const KernelTable& table, std::size_t n) {
  return table.partial_sum(n);
}

double memory_update(double base, std::span<const double> coefficients,
                     std::span<const double> history) {
  const std::size_t n = history.size();
  double sum = base;
  double error = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = coefficients[n - 1 - i];
    const double product = c * history[i];
    const double product_error = std::fma(c, history[i], -product);
    const double t = sum + product;
    const double z = t - sum;
    error += (sum - (t - z)) + (product - z) + product_error;
    sum = t;
  }
  return sum + error;
}

KernelBoundReport check_partial_sum_bound(const KernelTable& table) {
  const double q = table.order().value();
  KernelBoundReport report;
  report.q = q;
  report.worst_margin = std::numeric_limits<double>::infinity();
  double previous = 0.0;
  for (std::size_t n = 1; n <= table.capacity(); ++n) {
    const double sum = table.partial_sum(n);
    const double growth = std::pow(static_cast<double>(n), q) / q;
    const double margin = 1.0 / q - std::abs(sum - growth);
    if (margin < 0.0) ++report.violations;
    if (margin < report.worst_margin) {
      report.worst_margin = margin;
      report.worst_n = n;
    }
    if (sum < previous) report.monotone = false;
    previous = sum;
    ++report.checked;
  }
  return report;
}

}  // namespace fracdyn
