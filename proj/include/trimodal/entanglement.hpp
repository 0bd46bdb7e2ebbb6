#pragma once

// Geometric measure of entanglement E = -log2 max_phi |<phi|psi>|^2 over all
// product states of the three cavity qudits, found by higher-order power
// iteration (alternating rank-1 updates) from many starts.

#include <array>
#include <cstdint>

#include <Eigen/Dense>

#include "trimodal/basis.hpp"

namespace trimodal {

struct ProductState {
  std::array<Eigen::VectorXcd, 3> factors;  ///< over Manifold::alphabet(), unit norm
};

struct OverlapResult {
  double overlap = 0.0;
  ProductState maximizer;
  double entanglement = 0.0;
  int restarts_used = 0;
  bool converged = false;
};

struct OverlapOptions {
  explicit OverlapOptions(std::uint64_t rng_seed) : seed(rng_seed) {}

  std::uint64_t seed;
  int restarts = 64;
  double tol = 1e-12;
  int max_sweeps = 10000;
};

/// Deterministic starts from every basis state of the manifold, then
/// `restarts` starts drawn uniformly on the complex unit spheres.
/// Throws std::invalid_argument when restarts < 1 or tol <= 0.
OverlapResult max_product_overlap(const StateVector& state, const OverlapOptions& options);

/// |<x (x) y (x) z | psi>|^2
double product_overlap(const StateVector& state, const ProductState& product);

/// The claimed maximizer for the symmetric N=2 family: |A|^2 + |C|^2.
double closed_form_overlap_n2(Complex a, Complex c);

double geometric_entanglement(const StateVector& state, const OverlapOptions& options);

/// All-ground symmetric N=6 state (a = 1) at xi*t = (l + 1/2) pi / sqrt(66),
/// where the four-photon amplitude vanishes.
StateVector half_period_symmetric_state(int l);
/// Same family at xi*t = (l + 1/2) pi / (2 sqrt(66)).
StateVector quarter_period_symmetric_state(int l);

OverlapResult quarter_period_symmetric_check(int l, const OverlapOptions& options);

}  // namespace trimodal
