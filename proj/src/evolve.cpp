#include "trimodal/evolve.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "trimodal/error.hpp"

namespace trimodal {

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr double kMergeTolerance = 1e-9;

Eigen::Index as_index(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

Spectrum spectrum(const Eigen::MatrixXcd& matrix) {
  if (matrix.rows() != matrix.cols()) throw NumericalContractError("spectrum of a non-square matrix");
  if (matrix.size() == 0) return {Eigen::VectorXd(0), Eigen::MatrixXcd(0, 0)};
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  const double defect = hermiticity_defect(matrix);
  if (defect > kHermitianTolerance * scale) {
    throw NumericalContractError("generator is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix);
  if (solver.info() != Eigen::Success) throw NumericalContractError("eigendecomposition did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Spectrum spectrum(const Generator& generator) { return spectrum(generator.matrix()); }

std::vector<double> eigenfrequencies(const Eigen::MatrixXcd& matrix) {
  const auto s = spectrum(matrix);
  return {s.frequencies.data(), s.frequencies.data() + s.frequencies.size()};
}

std::vector<double> eigenfrequencies(const Generator& generator) { return eigenfrequencies(generator.matrix()); }

Complex ExponentialSum::operator()(double t) const {
  Complex sum{};
  for (std::size_t k = 0; k < omega.size(); ++k) sum += coeff[k] * std::polar(1.0, -omega[k] * t);
  return sum;
}

double ExponentialSum::mean_square(double period) const {
  if (!(period > 0.0)) throw std::invalid_argument("averaging period must be positive");
  double total = 0.0;
  for (std::size_t k = 0; k < omega.size(); ++k) {
    total += std::norm(coeff[k]);
    for (std::size_t l = k + 1; l < omega.size(); ++l) {
      // c_k conj(c_l) <exp(-i (w_k - w_l) t)> plus its conjugate.
      const double d = omega[k] - omega[l];
      const Complex avg = (std::polar(1.0, -d * period) - 1.0) / Complex(0.0, -d * period);
      total += 2.0 * std::real(coeff[k] * std::conj(coeff[l]) * avg);
    }
  }
  return total;
}

Propagator::Propagator(const Generator& generator, const StateVector& initial)
    : manifold_(generator.manifold_ptr()), spectrum_(trimodal::spectrum(generator)) {
  if (initial.manifold().n_total() != generator.manifold().n_total()) {
    throw std::invalid_argument("initial state and generator live on different manifolds");
  }
  weights_ = spectrum_.modes.adjoint() * initial.amplitudes();
}

Eigen::VectorXcd Propagator::amplitudes_at(double t) const {
  Eigen::VectorXcd phased(weights_.size());
  for (Eigen::Index k = 0; k < weights_.size(); ++k) {
    phased(k) = weights_(k) * std::polar(1.0, -spectrum_.frequencies(k) * t);
  }
  return spectrum_.modes * phased;
}

StateVector Propagator::at(double t) const { return StateVector(manifold_, amplitudes_at(t)); }

ExponentialSum Propagator::component(std::size_t basis_index) const {
  ExponentialSum sum;
  const auto row = as_index(basis_index);
  for (Eigen::Index k = 0; k < weights_.size(); ++k) {
    const double w = spectrum_.frequencies(k);
    const Complex c = spectrum_.modes(row, k) * weights_(k);
    const double scale = std::max(1.0, std::abs(w));
    if (!sum.omega.empty() && std::abs(sum.omega.back() - w) <= kMergeTolerance * scale) {
      sum.coeff.back() += c;
    } else {
      sum.omega.push_back(w);
      sum.coeff.push_back(c);
    }
  }
  return sum;
}

double Trajectory::t_at(std::size_t k) const {
  return unit == TimeUnit::t ? times.at(k) : times.at(k) / generator.xi();
}

double Trajectory::xi_t_at(std::size_t k) const {
  return unit == TimeUnit::xi_t ? times.at(k) : times.at(k) * generator.xi();
}

Trajectory propagate(const Generator& generator, const StateVector& initial, std::span<const double> times,
                     TimeUnit unit) {
  if (unit == TimeUnit::xi_t && !(generator.xi() > 0.0)) {
    throw std::invalid_argument("times in xi*t units need xi > 0");
  }
  const Propagator propagator(generator, initial);
  Trajectory traj{{times.begin(), times.end()}, unit, {}, generator};
  traj.states.reserve(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double t = traj.t_at(k);
    if (t == 0.0) {
      traj.states.push_back(initial);
    } else {
      traj.states.push_back(propagator.at(t));
    }
  }
  return traj;
}

std::vector<std::array<double, 4>> sector_probabilities(const Trajectory& trajectory) {
  std::vector<std::array<double, 4>> out;
  out.reserve(trajectory.states.size());
  const auto& manifold = trajectory.generator.manifold();
  for (const auto& state : trajectory.states) {
    std::array<double, 4> p{};
    for (std::size_t i = 0; i < manifold.dimension(); ++i) {
      p[static_cast<std::size_t>(manifold.sector_of(i))] += std::norm(state.amplitude(i));
    }
    out.push_back(p);
  }
  return out;
}

std::vector<double> uniform_grid(double start, double stop, std::size_t count) {
  if (count < 2) throw std::invalid_argument("a time grid needs at least two points");
  std::vector<double> grid(count);
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) grid[k] = start + step * static_cast<double>(k);
  grid.back() = stop;
  return grid;
}

std::vector<double> default_xi_t_grid(double periods, std::size_t per_pi) {
  const auto count = static_cast<std::size_t>(std::llround(periods * static_cast<double>(per_pi))) + 1;
  return uniform_grid(0.0, periods * std::numbers::pi, count);
}

}  // namespace trimodal
