#include "trimodal/entanglement.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "trimodal/analytic.hpp"

namespace trimodal {

namespace {

/// Nonzero entries T(i, j, k) of a manifold state viewed as a d x d x d tensor.
struct StateTensor {
  struct Entry {
    Eigen::Index i, j, k;
    Complex value;
  };
  Eigen::Index d;
  std::vector<Entry> entries;
};

StateTensor to_tensor(const StateVector& state) {
  const auto& m = state.manifold();
  StateTensor t{static_cast<Eigen::Index>(m.local_dimension()), {}};
  for (std::size_t s = 0; s < m.dimension(); ++s) {
    const Complex v = state.amplitude(s);
    if (v == Complex{}) continue;
    const auto& levels = m.state(s).levels;
    t.entries.push_back({static_cast<Eigen::Index>(*m.local_index(levels[0])),
                         static_cast<Eigen::Index>(*m.local_index(levels[1])),
                         static_cast<Eigen::Index>(*m.local_index(levels[2])), v});
  }
  return t;
}

// Contraction of T with the conjugates of two factors, leaving slot `free` open.
Eigen::VectorXcd contract(const StateTensor& t, const ProductState& p, int free) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(t.d);
  const auto& x = p.factors[0];
  const auto& y = p.factors[1];
  const auto& z = p.factors[2];
  for (const auto& e : t.entries) {
    switch (free) {
      case 0: out(e.i) += e.value * std::conj(y(e.j)) * std::conj(z(e.k)); break;
      case 1: out(e.j) += e.value * std::conj(x(e.i)) * std::conj(z(e.k)); break;
      default: out(e.k) += e.value * std::conj(x(e.i)) * std::conj(y(e.j)); break;
    }
  }
  return out;
}

struct RunOutcome {
  double overlap;
  ProductState product;
  bool converged;
};

RunOutcome power_iterate(const StateTensor& t, ProductState p, const OverlapOptions& options) {
  double previous = -1.0;
  double current = 0.0;
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    for (int slot = 0; slot < 3; ++slot) {
      Eigen::VectorXcd v = contract(t, p, slot);
      const double n = v.norm();
      if (n == 0.0) return {0.0, p, true};  // start orthogonal to the state
      p.factors[static_cast<std::size_t>(slot)] = v / n;
      current = n * n;
    }
    if (current - previous < options.tol) return {current, p, true};
    previous = current;
  }
  return {current, p, false};
}

Eigen::VectorXcd unit_vector(std::size_t d, std::size_t i) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(d));
  v(static_cast<Eigen::Index>(i)) = 1.0;
  return v;
}

Eigen::VectorXcd random_unit_vector(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v / v.norm();
}

StateVector symmetric_ground_state(double xi_t) {
  const auto manifold = enumerate_manifold(6);
  return assemble_state(manifold, n6_symmetric_amplitudes(1.0, 0.0, xi_t)[0]);
}

}  // namespace

OverlapResult max_product_overlap(const StateVector& state, const OverlapOptions& options) {
  if (options.restarts < 1) throw std::invalid_argument("restarts must be at least 1");
  if (!(options.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (options.max_sweeps < 1) throw std::invalid_argument("max_sweeps must be at least 1");

  const auto tensor = to_tensor(state);
  const auto& m = state.manifold();
  const std::size_t d = m.local_dimension();

  OverlapResult best;
  best.overlap = -1.0;
  auto consider = [&](const RunOutcome& run) {
    if (run.overlap > best.overlap) {
      best.overlap = run.overlap;
      best.maximizer = run.product;
      best.converged = run.converged;
    }
  };

  // The first factor is overwritten by the first update, so only y and z seed a run.
  for (std::size_t s = 0; s < m.dimension(); ++s) {
    const auto& levels = m.state(s).levels;
    ProductState p{{unit_vector(d, *m.local_index(levels[0])), unit_vector(d, *m.local_index(levels[1])),
                    unit_vector(d, *m.local_index(levels[2]))}};
    consider(power_iterate(tensor, p, options));
  }
  std::mt19937_64 rng(options.seed);
  for (int r = 0; r < options.restarts; ++r) {
    ProductState p;
    for (auto& f : p.factors) f = random_unit_vector(d, rng);
    consider(power_iterate(tensor, p, options));
  }
  best.overlap = std::min(best.overlap, 1.0);
  best.entanglement = best.overlap > 0.0 ? -std::log2(best.overlap) : std::numeric_limits<double>::infinity();
  best.restarts_used = options.restarts;
  return best;
}

double product_overlap(const StateVector& state, const ProductState& product) {
  const auto tensor = to_tensor(state);
  const Eigen::VectorXcd v = contract(tensor, product, 0);
  return std::norm(product.factors[0].dot(v));
}

double closed_form_overlap_n2(Complex a, Complex c) { return std::norm(a) + std::norm(c); }

double geometric_entanglement(const StateVector& state, const OverlapOptions& options) {
  return max_product_overlap(state, options).entanglement;
}

StateVector half_period_symmetric_state(int l) {
  if (l < 0) throw std::invalid_argument("l must be non-negative");
  return symmetric_ground_state((l + 0.5) * std::numbers::pi / std::sqrt(66.0));
}

StateVector quarter_period_symmetric_state(int l) {
  if (l < 0) throw std::invalid_argument("l must be non-negative");
  return symmetric_ground_state((l + 0.5) * std::numbers::pi / (2.0 * std::sqrt(66.0)));
}

OverlapResult quarter_period_symmetric_check(int l, const OverlapOptions& options) {
  return max_product_overlap(quarter_period_symmetric_state(l), options);
}

}  // namespace trimodal
