#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fracdyn {

/// Raised when a map (or its derivative) is evaluated outside its domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class MapFamily { GompertzLike, Logistic };

inline constexpr double kCanonicalGompertzPower = 2.0 / 3.0;

/// One-dimensional map f_{r,p}. GompertzLike: 6.75 r (x^p - x) with
/// r in [0, 1], p in [0.66, 0.765]. Logistic: r x (1 - x) with r in [0, 4]
/// (p is fixed to 1).
class MapSpec {
 public:
  static MapSpec gompertz(double r, double p = kCanonicalGompertzPower);
  static MapSpec logistic(double r);

  MapFamily family() const noexcept { return family_; }
  double r() const noexcept { return r_; }
  double p() const noexcept { return p_; }

  /// Same family with a different r (or p); validated.
  MapSpec with_r(double r) const;
  MapSpec with_p(double p) const;

  friend bool operator==(const MapSpec&, const MapSpec&) = default;

 private:
  MapSpec(MapFamily family, double r, double p);

  MapFamily family_;
  double r_;
  double p_;
};

/// Whether x is an admissible state (x >= 0 for GompertzLike).
bool in_domain(const MapSpec& spec, double x) noexcept;

/// f(x). Throws DomainError for x < 0 on the GompertzLike family.
double map_eval(const MapSpec& spec, double x);

/// f'(x). Throws DomainError for x <= 0 on the GompertzLike family.
double map_derivative(const MapSpec& spec, double x);

std::string_view family_name(MapFamily family) noexcept;
std::optional<MapFamily> parse_family(std::string_view name) noexcept;

}  // namespace fracdyn
