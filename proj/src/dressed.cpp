#include "trimodal/dressed.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace trimodal {

DressedParams::DressedParams(double ratio, double detuning) : r(ratio), delta(detuning) {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) {
    throw std::invalid_argument("coupling ratio r must be positive, got " + std::to_string(ratio));
  }
  if (!std::isfinite(detuning)) throw std::invalid_argument("detuning must be finite");
}

MixingAngle mixing_angle(int n, const DressedParams& params) {
  if (n < -1) throw std::invalid_argument("mixing angle needs n >= -1, got " + std::to_string(n));
  const double r2 = params.r * params.r;
  const double denom = std::sqrt(n * (r2 + 1.0) + 2.0 * r2 + 1.0);
  return {params.r * std::sqrt(n + 2.0) / denom, std::sqrt(n + 1.0) / denom};
}

double splitting(int n, const DressedParams& params) {
  if (n < 0) throw std::invalid_argument("splitting needs n >= 0, got " + std::to_string(n));
  const double coupling = params.r * params.r * (n + 2.0) + (n + 1.0);
  const double d = params.delta;
  // -d/2 + sqrt(d^2 + 4c)/2, written to avoid cancellation for large positive d.
  if (d > 0.0) return 2.0 * coupling / (d + std::sqrt(d * d + 4.0 * coupling));
  return 0.5 * (-d + std::sqrt(d * d + 4.0 * coupling));
}

DressedPair dressed_vectors(int n, const DressedParams& params) {
  if (n < 0) throw std::invalid_argument("dressed vectors need n >= 0, got " + std::to_string(n));
  const auto angle = mixing_angle(n, params);
  return {{angle.sin, angle.cos}, {angle.cos, -angle.sin}};
}

int reference_level(int n_total) {
  if (n_total < 2 || n_total % 2 != 0) {
    throw std::invalid_argument("no reference pair level for N=" + std::to_string(n_total));
  }
  return n_total - 2;
}

double dimensionless_hopping(int n_total, const DressedParams& params, double xi_physical) {
  if (n_total != 2 && n_total != 4 && n_total != 6) {
    throw std::invalid_argument("hopping scale defined for N in {2,4,6}, got " + std::to_string(n_total));
  }
  const int ref = reference_level(n_total);
  const double c = mixing_angle(ref, params).cos;
  return xi_physical / (splitting(ref, params) * c * c);
}

double dressed_weight(int n, int n_total, const DressedParams& params) {
  const int ref = reference_level(n_total);
  const double cn = mixing_angle(n, params).cos;
  const double cr = mixing_angle(ref, params).cos;
  return splitting(n, params) * cn * cn / (splitting(ref, params) * cr * cr);
}

}  // namespace trimodal
