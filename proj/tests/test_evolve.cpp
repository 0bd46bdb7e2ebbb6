#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "trimodal/basis.hpp"
#include "trimodal/dynamics.hpp"
#include "trimodal/error.hpp"
#include "trimodal/evolve.hpp"

using namespace trimodal;
using std::numbers::pi;

namespace {

StateVector random_state(const ManifoldPtr& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd v(static_cast<Eigen::Index>(m->dimension()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return StateVector::normalized(m, v);
}

// 1 - |<a|b>|, zero exactly when the states agree up to a global phase.
double phase_free_gap(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) { return 1.0 - std::abs(a.dot(b)); }

}  // namespace

TEST_SUITE("evolve") {
  TEST_CASE("spectrum of a 2x2 example") {
    Eigen::MatrixXcd m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    const auto s = spectrum(m);
    CHECK(s.frequencies(0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(s.frequencies(1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eigenfrequencies(Eigen::MatrixXcd::Zero(3, 3)) == std::vector<double>{0.0, 0.0, 0.0});
  }

  TEST_CASE("spectral decomposition reconstructs the generator") {
    for (int n : {2, 4, 6}) {
      const auto m = enumerate_manifold(n);
      const auto g = build_full_generator(m, DressedParams(0.8, 1.1), 3.0);
      const auto s = spectrum(g);
      const Eigen::MatrixXcd back = s.modes * s.frequencies.cast<Complex>().asDiagonal() * s.modes.adjoint();
      CHECK((back - g.matrix()).cwiseAbs().maxCoeff() <= 1e-10);
      for (Eigen::Index k = 1; k < s.frequencies.size(); ++k) CHECK(s.frequencies(k) >= s.frequencies(k - 1));
    }
  }

  TEST_CASE("non-Hermitian input is a contract violation") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(spectrum(m), NumericalContractError);
    CHECK_THROWS_AS(spectrum(Eigen::MatrixXcd::Zero(2, 3)), NumericalContractError);
  }

  TEST_CASE("evolution at t=0 is the identity") {
    const auto m = enumerate_manifold(4);
    const auto psi = random_state(m, 11);
    const Propagator u(build_large_xi_generator(m, 2.0), psi);
    CHECK((u.amplitudes_at(0.0) - psi.amplitudes()).norm() <= 1e-13);
  }

  TEST_CASE("single-cavity start empties the other cavities at xi t = pi/3") {
    const auto m = enumerate_manifold(2);
    const auto g = build_large_xi_generator(m, 1.0);
    const auto traj = propagate(g, StateVector::basis(m, BasisState::parse("g0,g0,g2")), std::vector<double>{pi / 3.0});
    const auto& s = traj.states[0];
    CHECK(std::abs(s.amplitude(BasisState::parse("g0,g2,g0"))) <= 1e-14);
    CHECK(std::abs(s.amplitude(BasisState::parse("g2,g0,g0"))) <= 1e-14);
    CHECK(std::abs(s.amplitude(BasisState::parse("g0,g0,g2"))) == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("group property and unitarity") {
    const auto m = enumerate_manifold(6);
    const auto g = build_full_generator(m, DressedParams(1.2, -0.5), 1.7);
    const auto psi = random_state(m, 5);
    const Propagator u(g, psi);
    const double t1 = 0.37, t2 = 1.91;
    const Propagator v(g, u.at(t1));
    CHECK((v.amplitudes_at(t2) - u.amplitudes_at(t1 + t2)).norm() <= 1e-11);
    for (double t : {0.1, 3.0, 40.0}) CHECK(u.amplitudes_at(t).norm() == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("component exponential sums agree with the propagator") {
    const auto m = enumerate_manifold(4);
    const auto psi = random_state(m, 9);
    const Propagator u(build_large_xi_generator(m, 1.0), psi);
    for (std::size_t i = 0; i < m->dimension(); ++i) {
      const auto sum = u.component(i);
      for (double t : {0.0, 0.4, 2.2}) {
        CHECK(std::abs(sum(t) - u.amplitudes_at(t)(static_cast<Eigen::Index>(i))) <= 1e-12);
      }
    }
  }

  TEST_CASE("mean square of an exponential sum") {
    const ExponentialSum x{{0.0, 2.0}, {Complex(0.6), Complex(0.0, 0.8)}};
    // Over a common period the cross term averages out.
    CHECK(x.mean_square(pi) == doctest::Approx(1.0).epsilon(1e-14));
    const ExponentialSum y{{1.0}, {Complex(0.5)}};
    CHECK(y.mean_square(0.3) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK_THROWS_AS(x.mean_square(0.0), std::invalid_argument);
  }

  TEST_CASE("manifold mismatch and grid preconditions") {
    const auto g = build_large_xi_generator(enumerate_manifold(2), 1.0);
    const auto psi = StateVector::basis(enumerate_manifold(4), BasisState::parse("g0,g0,g4"));
    CHECK_THROWS_AS(propagate(g, psi, std::vector<double>{0.0}), std::invalid_argument);
    CHECK_THROWS_AS(uniform_grid(0.0, 1.0, 1), std::invalid_argument);
    const auto grid = default_xi_t_grid(1.0, 4096);
    CHECK(grid.size() == 4097);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == doctest::Approx(pi).epsilon(1e-15));
  }

  TEST_CASE("time units") {
    const auto m = enumerate_manifold(2);
    const auto g = build_large_xi_generator(m, 4.0);
    const auto psi = random_state(m, 2);
    const std::vector<double> xi_t = {0.0, 0.5, 1.0};
    const auto a = propagate(g, psi, xi_t, TimeUnit::xi_t);
    const std::vector<double> t = {0.0, 0.125, 0.25};
    const auto b = propagate(g, psi, t, TimeUnit::t);
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(a.t_at(k) == doctest::Approx(t[k]).epsilon(1e-15));
      CHECK(b.xi_t_at(k) == doctest::Approx(xi_t[k]).epsilon(1e-15));
      CHECK((a.states[k].amplitudes() - b.states[k].amplitudes()).norm() <= 1e-13);
    }
  }

  TEST_CASE("every N=2 state returns up to a phase at xi t = pi") {
    const auto m = enumerate_manifold(2);
    for (double xi : {1.0, 2.5}) {
      const auto g = build_large_xi_generator(m, xi);
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto psi = random_state(m, seed);
        const Propagator u(g, psi);
        CHECK(phase_free_gap(u.amplitudes_at(pi / xi), psi.amplitudes()) <= 1e-12);
        // A generic state does not return at a third of that.
        CHECK(phase_free_gap(u.amplitudes_at(pi / (3.0 * xi)), psi.amplitudes()) > 1e-6);
      }
    }
  }

  TEST_CASE("sector probabilities are conserved under the large-hopping generator") {
    const auto m = enumerate_manifold(6);
    const auto psi = random_state(m, 3);
    const auto traj = propagate(build_large_xi_generator(m, 1.0), psi, uniform_grid(0.0, 5.0, 7));
    const auto probs = sector_probabilities(traj);
    for (const auto& row : probs) {
      for (int k = 0; k < 4; ++k) CHECK(std::abs(row[static_cast<std::size_t>(k)] - probs[0][static_cast<std::size_t>(k)]) <= 1e-12);
    }
  }

  TEST_CASE("full dynamics approach the large-hopping limit as xi grows") {
    const auto m = enumerate_manifold(4);
    const auto psi = random_state(m, 21);
    const DressedParams p(1.0, 0.0);
    const double tau = 0.9;  // fixed xi*t
    std::vector<double> gaps;
    for (double xi : {10.0, 100.0, 1000.0}) {
      const Propagator full(build_full_generator(m, p, xi), psi);
      const Propagator large(build_large_xi_generator(m, xi), psi);
      gaps.push_back((full.amplitudes_at(tau / xi) - large.amplitudes_at(tau / xi)).norm());
    }
    CHECK(gaps[1] < gaps[0]);
    CHECK(gaps[2] < gaps[1]);
    CHECK(gaps[2] < 1e-2);
  }
}
