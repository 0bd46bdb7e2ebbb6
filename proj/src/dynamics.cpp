#include "trimodal/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "trimodal/error.hpp"

namespace trimodal {

namespace {

constexpr double kCommuteTolerance = 1e-12;

Eigen::Index as_index(std::size_t i) { return static_cast<Eigen::Index>(i); }

Eigen::MatrixXcd hopping_matrix(const Manifold& manifold, double xi) {
  const auto dim = as_index(manifold.dimension());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t k = 0; k < manifold.dimension(); ++k) {
    const auto& ket = manifold.state(k);
    for (int to = 0; to < 3; ++to) {
      for (int from = 0; from < 3; ++from) {
        if (to == from || ket.levels[from].photons() < 2) continue;
        BasisState bra = ket;
        bra.levels[to] = CavityLevel(ket.levels[to].excitation(), ket.levels[to].photons() + 2);
        bra.levels[from] = CavityLevel(ket.levels[from].excitation(), ket.levels[from].photons() - 2);
        m(as_index(manifold.index_of(bra)), as_index(k)) += hopping_element(bra, ket, xi);
      }
    }
  }
  return m;
}

}  // namespace

std::string_view to_string(GeneratorMode mode) {
  return mode == GeneratorMode::full ? "full" : "large_hopping";
}

GeneratorMode parse_mode(std::string_view text) {
  if (text == "full") return GeneratorMode::full;
  if (text == "large_hopping" || text == "large-hopping") return GeneratorMode::large_hopping;
  throw std::invalid_argument("unknown generator mode '" + std::string(text) + "'");
}

Generator::Generator(ManifoldPtr manifold, Eigen::MatrixXcd matrix, GeneratorMode mode, DressedParams params,
                     double xi)
    : manifold_(std::move(manifold)), matrix_(std::move(matrix)), mode_(mode), params_(params), xi_(xi) {
  const auto dim = as_index(manifold_->dimension());
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw std::invalid_argument("generator matrix does not match the manifold dimension");
  }
}

double hopping_element(const BasisState& bra, const BasisState& ket, double xi) {
  int gained = -1;
  int lost = -1;
  for (int c = 0; c < 3; ++c) {
    if (bra.levels[c].excitation() != ket.levels[c].excitation()) return 0.0;
    const int diff = bra.levels[c].photons() - ket.levels[c].photons();
    if (diff == 0) continue;
    if (diff == 2 && gained < 0) {
      gained = c;
    } else if (diff == -2 && lost < 0) {
      lost = c;
    } else {
      return 0.0;
    }
  }
  if (gained < 0 || lost < 0) return 0.0;
  const double n = ket.levels[gained].photons();
  const double m = ket.levels[lost].photons();
  return xi * std::sqrt((n + 1.0) * (n + 2.0)) * std::sqrt(m * (m - 1.0));
}

Generator build_large_xi_generator(const ManifoldPtr& manifold, double xi) {
  if (!(xi > 0.0)) throw std::invalid_argument("large-hopping generator needs xi > 0");
  return Generator(manifold, hopping_matrix(*manifold, xi), GeneratorMode::large_hopping, DressedParams{}, xi);
}

Generator build_full_generator(const ManifoldPtr& manifold, const DressedParams& params, double xi) {
  if (!(xi >= 0.0)) throw std::invalid_argument("full generator needs xi >= 0");
  const int n_total = manifold->n_total();
  Eigen::MatrixXcd m = hopping_matrix(*manifold, xi);
  if (n_total >= 2) {
    for (std::size_t k = 0; k < manifold->dimension(); ++k) {
      const auto& ket = manifold->state(k);
      for (int c = 0; c < 3; ++c) {
        const auto& level = ket.levels[c];
        // Pair index n of the span {|e,n>, |g,n+2>} this cavity sits in.
        const int n = level.is_excited() ? level.photons() : level.photons() - 2;
        if (n < 0) continue;  // |g,0> is a bare eigenstate
        const auto angle = mixing_angle(n, params);
        const double w = dressed_weight(n, n_total, params);
        const double t = angle.tan();
        BasisState partner = ket;
        partner.levels[c] = level.is_excited() ? CavityLevel::ground(n + 2) : CavityLevel::excited(n);
        const auto p = as_index(manifold->index_of(partner));
        m(as_index(k), as_index(k)) += w * (level.is_excited() ? t * t : 1.0);
        m(p, as_index(k)) += w * t;
      }
    }
  }
  return Generator(manifold, std::move(m), GeneratorMode::full, params, xi);
}

double hermiticity_defect(const Eigen::MatrixXcd& matrix) {
  if (matrix.size() == 0) return 0.0;
  return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

ReducedBlock reduce(const Generator& generator, std::span<const StateVector> orthonormal) {
  const auto dim = as_index(generator.manifold().dimension());
  Eigen::MatrixXcd v(dim, static_cast<Eigen::Index>(orthonormal.size()));
  for (std::size_t j = 0; j < orthonormal.size(); ++j) {
    if (orthonormal[j].manifold().n_total() != generator.manifold().n_total()) {
      throw std::invalid_argument("reduction vector lives on a different manifold");
    }
    v.col(as_index(j)) = orthonormal[j].amplitudes();
  }
  const Eigen::MatrixXcd gram = v.adjoint() * v;
  if (gram.size() > 0 &&
      (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() > 1e-10) {
    throw NumericalContractError("reduction vectors are not orthonormal");
  }
  return {v.adjoint() * generator.matrix() * v, v};
}

ReducedBlock restrict_to(const Generator& generator, std::span<const std::size_t> indices) {
  const auto dim = as_index(generator.manifold().dimension());
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(dim, static_cast<Eigen::Index>(indices.size()));
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= generator.manifold().dimension()) throw std::out_of_range("basis index out of range");
    v(as_index(indices[j]), as_index(j)) = 1.0;
  }
  return {v.adjoint() * generator.matrix() * v, v};
}

SymmetryBlocks symmetry_blocks(const Generator& generator, std::pair<int, int> exchange_pair,
                               std::optional<std::span<const std::size_t>> subset) {
  const auto& manifold = generator.manifold();
  const auto perm = exchange(exchange_pair.first, exchange_pair.second);
  const Eigen::MatrixXd p = permutation_matrix(manifold, perm);
  const Eigen::MatrixXcd pc = p.cast<Complex>();
  const double commutator = (pc * generator.matrix() - generator.matrix() * pc).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, generator.matrix().cwiseAbs().maxCoeff());
  if (commutator > kCommuteTolerance * scale) {
    throw std::invalid_argument("generator does not commute with the cavity exchange");
  }

  std::vector<std::size_t> members;
  if (subset) {
    members.assign(subset->begin(), subset->end());
  } else {
    members.resize(manifold.dimension());
    for (std::size_t i = 0; i < members.size(); ++i) members[i] = i;
  }
  std::sort(members.begin(), members.end());
  const auto image = manifold.induced_permutation(perm);

  std::vector<Eigen::VectorXcd> sym;
  std::vector<Eigen::VectorXcd> anti;
  const auto dim = as_index(manifold.dimension());
  const double h = 1.0 / std::sqrt(2.0);
  for (std::size_t i : members) {
    const std::size_t j = image[i];
    if (!std::binary_search(members.begin(), members.end(), j)) {
      throw std::invalid_argument("basis subset is not closed under the cavity exchange");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    if (j == i) {
      v(as_index(i)) = 1.0;
      sym.push_back(v);
    } else if (i < j) {
      v(as_index(i)) = h;
      v(as_index(j)) = h;
      sym.push_back(v);
      v(as_index(j)) = -h;
      anti.push_back(v);
    }
  }

  auto assemble = [&](const std::vector<Eigen::VectorXcd>& cols) {
    Eigen::MatrixXcd v(dim, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) v.col(as_index(c)) = cols[c];
    return ReducedBlock{v.adjoint() * generator.matrix() * v, v};
  };
  return {assemble(sym), assemble(anti)};
}

std::vector<std::size_t> connected_block(const Generator& generator, std::size_t seed) {
  const auto& m = generator.matrix();
  const std::size_t dim = generator.manifold().dimension();
  std::vector<bool> seen(dim, false);
  std::vector<std::size_t> stack{seed};
  std::vector<std::size_t> block;
  seen.at(seed) = true;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    block.push_back(i);
    for (std::size_t j = 0; j < dim; ++j) {
      if (!seen[j] && std::abs(m(as_index(j), as_index(i))) > 0.0) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  std::sort(block.begin(), block.end());
  return block;
}

}  // namespace trimodal
