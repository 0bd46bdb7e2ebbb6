#pragma once

// Hermitian generators M of i d|psi>/dt = M |psi> over a fixed-total manifold,
// in the dimensionless units where the reference dressed splitting times
// cos^2 of its mixing angle is one.

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "trimodal/basis.hpp"
#include "trimodal/dressed.hpp"

namespace trimodal {

enum class GeneratorMode { full, large_hopping };

std::string_view to_string(GeneratorMode mode);
GeneratorMode parse_mode(std::string_view text);

class Generator {
 public:
  Generator(ManifoldPtr manifold, Eigen::MatrixXcd matrix, GeneratorMode mode, DressedParams params, double xi);

  const Manifold& manifold() const noexcept { return *manifold_; }
  const ManifoldPtr& manifold_ptr() const noexcept { return manifold_; }
  const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }
  GeneratorMode mode() const noexcept { return mode_; }
  const DressedParams& params() const noexcept { return params_; }
  double xi() const noexcept { return xi_; }

 private:
  ManifoldPtr manifold_;
  Eigen::MatrixXcd matrix_;
  GeneratorMode mode_;
  DressedParams params_;
  double xi_;
};

/// <bra| xi sum_{i<j} (a_i^+2 a_j^2 + h.c.) |ket>.
double hopping_element(const BasisState& bra, const BasisState& ket, double xi);

/// Hopping-only generator; atomic labels are frozen, so it is block-diagonal
/// by excitation sector. Requires xi > 0.
Generator build_large_xi_generator(const ManifoldPtr& manifold, double xi);

/// Hopping plus, for each cavity in span{|e,n>, |g,n+2>}, the dressed projector
/// w_n [[tan^2, tan], [tan, 1]]. Requires xi >= 0 and N >= 2.
Generator build_full_generator(const ManifoldPtr& manifold, const DressedParams& params, double xi);

/// max |M - M^dagger|
double hermiticity_defect(const Eigen::MatrixXcd& matrix);

/// Generator compressed onto an orthonormal set of manifold vectors.
struct ReducedBlock {
  Eigen::MatrixXcd matrix;     ///< V^dagger M V
  Eigen::MatrixXcd embedding;  ///< V, manifold dimension x block dimension
};

ReducedBlock reduce(const Generator& generator, std::span<const StateVector> orthonormal);
ReducedBlock restrict_to(const Generator& generator, std::span<const std::size_t> indices);

struct SymmetryBlocks {
  ReducedBlock symmetric;
  ReducedBlock antisymmetric;
};

/// Splits the generator into the +1 / -1 eigenspaces of a cavity exchange.
/// With `subset`, only those basis indices are used; the subset must be
/// closed under the exchange. Throws std::invalid_argument when the
/// generator does not commute with the exchange.
SymmetryBlocks symmetry_blocks(const Generator& generator, std::pair<int, int> exchange,
                               std::optional<std::span<const std::size_t>> subset = std::nullopt);

/// Basis indices reachable from `seed` through nonzero generator entries.
std::vector<std::size_t> connected_block(const Generator& generator, std::size_t seed);

}  // namespace trimodal
