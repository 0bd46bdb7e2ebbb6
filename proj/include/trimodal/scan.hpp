#pragma once

// Time-domain analysis in xi*t: extrema of weighted |amplitude|^2 sums,
// period-averaged occupations and periodicity of generator spectra.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "trimodal/analytic.hpp"
#include "trimodal/dynamics.hpp"
#include "trimodal/evolve.hpp"

namespace trimodal {

/// Sum of k * |X|^2 terms, e.g. "|C|^2+|F|^2" or "2*|B|^2 + 1/2*|E|^2".
struct Objective {
  struct Term {
    double weight;
    std::string label;
  };
  std::vector<Term> terms;

  /// Throws std::invalid_argument with the offending position on bad syntax.
  static Objective parse(std::string_view text);
  std::string to_string() const;
  double operator()(const AmplitudeSet& amplitudes) const;
};

/// Labelled amplitudes as a function of xi*t.
struct Source {
  std::vector<std::string> labels;
  std::function<AmplitudeSet(double)> evaluate;
};

Source analytic_source(Family family, std::span<const Complex> args);
/// Evolves `initial` under `generator` and reads amplitudes through the
/// family's layout. Requires generator.xi() > 0.
Source numeric_source(const Generator& generator, const StateVector& initial, Family layout);

enum class ExtremumKind { min, max };

struct ExtremumReport {
  double xi_t = 0.0;
  double value = 0.0;
  ExtremumKind kind = ExtremumKind::min;
  double refined_to = 0.0;  ///< width of the final bracket in xi*t
  bool at_endpoint = false;
};

/// Grid scan over [lo, hi], bracketing every sign change of the discrete
/// derivative, then golden-section refinement. Steps with |df| <= 1e-13 count
/// as flat. Endpoint extrema are included with at_endpoint set.
/// Throws std::invalid_argument for grid < 16, an empty window or an objective
/// label the source does not provide.
std::vector<ExtremumReport> scan_extrema(const Objective& objective, const Source& source, double lo, double hi,
                                         std::size_t grid);

struct ExtremumCheck {
  double derivative;         ///< central difference, step 1e-6
  double second_difference;  ///< f(x+h) - 2 f(x) + f(x-h), h = 1e-4
  bool ok;
};

/// |derivative| <= 1e-6 and the second difference has the sign of the kind.
ExtremumCheck verify_extremum(const Objective& objective, const Source& source, const ExtremumReport& report);

/// Amplitude X of the layout as an exponential sum in xi*t.
ExponentialSum amplitude_series(const Generator& generator, const StateVector& initial, Family layout,
                                std::string_view label);

/// (1/T) int_0^T |X|^2 d(xi t), exact for an exponential sum.
double dwell_time(const ExponentialSum& amplitude, double period);
/// Composite Simpson rule with `intervals` subintervals (made even).
double dwell_time_quadrature(const std::function<Complex(double)>& amplitude, double period,
                             std::size_t intervals = 1000000);
double dwell_time(std::string_view label, const Source& source, double period, std::size_t intervals = 1000000);

struct PeriodReport {
  std::optional<double> state_period;    ///< up to a global phase, in xi*t
  std::optional<double> modulus_period;  ///< of every |amplitude|^2, in xi*t
};

/// Periods from eigenvalue differences. A difference ratio counts as rational
/// when it is within 1e-9 (relative) of p/q with q <= 1000.
PeriodReport detect_period(const Generator& generator);
/// For a bare matrix in units of xi.
PeriodReport detect_period(const Eigen::MatrixXcd& matrix);

}  // namespace trimodal
