#pragma once

// Exact evolution by spectral decomposition: psi(t) = V exp(-i Lambda t) V^dagger psi(0).

#include <array>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "trimodal/basis.hpp"
#include "trimodal/dynamics.hpp"

namespace trimodal {

struct Spectrum {
  Eigen::VectorXd frequencies;  ///< ascending
  Eigen::MatrixXcd modes;       ///< orthonormal eigenvectors, column k for frequencies(k)
};

/// Throws NumericalContractError for a non-Hermitian matrix.
Spectrum spectrum(const Eigen::MatrixXcd& matrix);
Spectrum spectrum(const Generator& generator);

std::vector<double> eigenfrequencies(const Eigen::MatrixXcd& matrix);
std::vector<double> eigenfrequencies(const Generator& generator);

/// X(t) = sum_k c_k exp(-i w_k t) with distinct w_k.
struct ExponentialSum {
  std::vector<double> omega;
  std::vector<Complex> coeff;

  Complex operator()(double t) const;
  /// (1/T) int_0^T |X|^2 dt, exact: cross terms integrate to sinc-type factors.
  double mean_square(double period) const;
};

enum class TimeUnit { t, xi_t };

class Propagator {
 public:
  Propagator(const Generator& generator, const StateVector& initial);

  Eigen::VectorXcd amplitudes_at(double t) const;
  StateVector at(double t) const;
  /// Amplitude of one basis state as an exponential sum in t; frequencies
  /// closer than 1e-9 (relative) are merged.
  ExponentialSum component(std::size_t basis_index) const;

  const Spectrum& spectrum() const noexcept { return spectrum_; }
  const ManifoldPtr& manifold_ptr() const noexcept { return manifold_; }

 private:
  ManifoldPtr manifold_;
  Spectrum spectrum_;
  Eigen::VectorXcd weights_;  // V^dagger psi(0)
};

struct Trajectory {
  std::vector<double> times;  ///< as given, in `unit`
  TimeUnit unit = TimeUnit::t;
  std::vector<StateVector> states;
  Generator generator;

  /// Physical dimensionless time of sample k.
  double t_at(std::size_t k) const;
  double xi_t_at(std::size_t k) const;
};

/// Throws std::invalid_argument when the initial state lives on another manifold.
Trajectory propagate(const Generator& generator, const StateVector& initial, std::span<const double> times,
                     TimeUnit unit = TimeUnit::t);

/// Per-time norm of each excitation sector (0..3 excited atoms).
std::vector<std::array<double, 4>> sector_probabilities(const Trajectory& trajectory);

/// Uniform grid on [start, stop] in xi*t with `per_pi` points per pi interval.
std::vector<double> uniform_grid(double start, double stop, std::size_t count);
std::vector<double> default_xi_t_grid(double periods = 1.0, std::size_t per_pi = 4096);

}  // namespace trimodal
