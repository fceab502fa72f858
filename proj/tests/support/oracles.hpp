#pragma once

#include <cmath>

#include "fracdyn/maps.hpp"

namespace fracdyn::oracle {

// Five-point central difference; truncation error O(h^4).
inline double central_difference(const MapSpec& spec, double x, double h) {
  return (-map_eval(spec, x + 2 * h) + 8 * map_eval(spec, x + h) - 8 * map_eval(spec, x - h) +
          map_eval(spec, x - 2 * h)) /
         (12 * h);
}

// Benettin two-orbit estimate for y -> R y (1 - y): keep a 1e-9 companion,
// accumulate the log stretch and renormalise every step.
inline double separation_exponent(double R, double y0, int transient, int steps) {
  constexpr double d0 = 1e-9;
  double y = y0;
  for (int i = 0; i < transient; ++i) y = R * y * (1 - y);
  double z = y + d0;
  double sum = 0.0;
  for (int i = 0; i < steps; ++i) {
    y = R * y * (1 - y);
    z = R * z * (1 - z);
    double d = std::abs(z - y);
    if (d == 0.0) d = 1e-300;
    sum += std::log(d / d0);
    z = y + d0 * (z >= y ? 1.0 : -1.0);
  }
  return sum / steps;
}

// Logistic parameters straddling periodic windows and chaotic bands.
inline constexpr double kSignDrawsR[20] = {3.2,  3.3,  3.45, 3.5,  3.55, 3.6,  3.63, 3.65, 3.7,  3.74,
                                           3.75, 3.8,  3.83, 3.84, 3.85, 3.87, 3.9,  3.95, 3.98, 3.99};

}  // namespace fracdyn::oracle
