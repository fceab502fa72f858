#include "fracdyn/maps.hpp"

#include <cmath>
#include <sstream>

namespace fracdyn {

namespace {

constexpr double kGompertzScale = 6.75;
constexpr double kMinPower = 0.66;
constexpr double kMaxPower = 0.765;

[[noreturn]] void reject(const char* what, double value) {
  std::ostringstream os;
  os << what << " (got " << value << ")";
  throw std::invalid_argument(os.str());
}

}  // namespace

MapSpec::MapSpec(MapFamily family, double r, double p) : family_(family), r_(r), p_(p) {
  switch (family) {
    case MapFamily::GompertzLike:
      if (!(r >= 0.0 && r <= 1.0)) reject("gompertz r must lie in [0, 1]", r);
      if (!(p == kCanonicalGompertzPower || (p >= kMinPower && p <= kMaxPower)))
        reject("gompertz p must lie in [0.66, 0.765]", p);
      break;
    case MapFamily::Logistic:
      if (!(r >= 0.0 && r <= 4.0)) reject("logistic r must lie in [0, 4]", r);
      if (p != 1.0) reject("logistic map has fixed p = 1", p);
      break;
  }
}

MapSpec MapSpec::gompertz(double r, double p) { return MapSpec(MapFamily::GompertzLike, r, p); }

MapSpec MapSpec::logistic(double r) { return MapSpec(MapFamily::Logistic, r, 1.0); }

MapSpec MapSpec::with_r(double r) const { return MapSpec(family_, r, p_); }

MapSpec MapSpec::with_p(double p) const { return MapSpec(family_, r_, p); }

bool in_domain(const MapSpec& spec, double x) noexcept {
  if (!std::isfinite(x)) return false;
  return spec.family() != MapFamily::GompertzLike || x >= 0.0;
}

double map_eval(const MapSpec& spec, double x) {
  switch (spec.family()) {
    case MapFamily::GompertzLike:
      if (!(x >= 0.0)) throw DomainError("gompertz map undefined for negative state");
      if (x == 0.0) return 0.0;
      return kGompertzScale * spec.r() * (std::pow(x, spec.p()) - x);
    case MapFamily::Logistic:
      return spec.r() * x * (1.0 - x);
  }
  return 0.0;
}

double map_derivative(const MapSpec& spec, double x) {
  switch (spec.family()) {
    case MapFamily::GompertzLike:
      if (!(x > 0.0)) throw DomainError("gompertz derivative singular at x <= 0");
      return kGompertzScale * spec.r() * (spec.p() * std::pow(x, spec.p() - 1.0) - 1.0);
    case MapFamily::Logistic:
      return spec.r() * (1.0 - 2.0 * x);
  }
  return 0.0;
}

std::string_view family_name(MapFamily family) noexcept {
  switch (family) {
    case MapFamily::GompertzLike:
      return "gompertz";
    case MapFamily::Logistic:
      return "logistic";
  }
  return "unknown";
}

std::optional<MapFamily> parse_family(std::string_view name) noexcept {
  if (name == "gompertz") return MapFamily::GompertzLike;
  if (name == "logistic") return MapFamily::Logistic;
  return std::nullopt;
}

}  // namespace fracdyn
