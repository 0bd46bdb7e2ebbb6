#pragma once

// Dressed-atom quantities of a single cavity. Energies are in units of hbar*g2
// and the detuning is carried as delta = Delta / (hbar*g2).

#include <array>

namespace trimodal {

struct DressedParams {
  double r = 1.0;      ///< g1 / g2, strictly positive
  double delta = 0.0;  ///< mid-level detuning in units of hbar*g2

  DressedParams() = default;
  DressedParams(double ratio, double detuning);
};

struct MixingAngle {
  double cos;
  double sin;

  double tan() const { return sin / cos; }
};

/// Mixing angle of the |e,n>, |g,n+2> pair. n = -1 is the bare |g,1> boundary
/// and gives (1, 0). Throws for n < -1.
MixingAngle mixing_angle(int n, const DressedParams& params);

/// (E_n^+ - E_n^-) / (hbar*g2); strictly positive.
double splitting(int n, const DressedParams& params);

/// Coefficients over (|e,n>, |g,n+2>).
struct DressedPair {
  std::array<double, 2> plus;
  std::array<double, 2> minus;
};

DressedPair dressed_vectors(int n, const DressedParams& params);

/// The pair level whose splitting sets the time unit of a manifold: N - 2.
int reference_level(int n_total);

/// Dimensionless hopping xi from a physical rate (units of g2), for N in {2, 4, 6}.
double dimensionless_hopping(int n_total, const DressedParams& params, double xi_physical);

/// Weight of the level-n dressed projector relative to the manifold's
/// reference level: splitting(n) cos^2(theta_n) / (splitting(ref) cos^2(theta_ref)).
double dressed_weight(int n, int n_total, const DressedParams& params);

}  // namespace trimodal
