#pragma once

// Restricted Fock bases of three cavities, each holding one effective
// two-level atom and a photon mode that only ever changes by pairs.
//
// A cavity level |g,n> carries local number n, |e,n> carries n + 2. The sum
// over the three cavities is conserved by the hopping Hamiltonian, so every
// dynamical problem lives in one fixed-total manifold.

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace trimodal {

using Complex = std::complex<double>;

enum class Excitation : std::uint8_t { ground = 0, excited = 1 };

/// Atom/photon configuration of a single cavity. Photon counts are even.
class CavityLevel {
 public:
  CavityLevel(Excitation excitation, int photons);

  static CavityLevel ground(int photons) { return {Excitation::ground, photons}; }
  static CavityLevel excited(int photons) { return {Excitation::excited, photons}; }

  /// Accepts "g2", "g:2", "e0", "e:0".
  static CavityLevel parse(std::string_view text);

  Excitation excitation() const noexcept { return excitation_; }
  int photons() const noexcept { return photons_; }
  bool is_excited() const noexcept { return excitation_ == Excitation::excited; }
  int local_number() const noexcept { return photons_ + (is_excited() ? 2 : 0); }

  /// "g:2" / "e:0"
  std::string to_string() const;

  // Ground before excited, then ascending photon number.
  auto operator<=>(const CavityLevel&) const = default;

 private:
  Excitation excitation_;
  int photons_;
};

struct BasisState {
  std::array<CavityLevel, 3> levels;

  int total() const noexcept;
  int excited_count() const noexcept;
  std::string to_string() const;  // "g:0,g:0,g:2"

  /// Parses "g0,g0,g2" (colons optional).
  static BasisState parse(std::string_view text);

  auto operator<=>(const BasisState&) const = default;
};

/// Sector-major canonical order: excited-atom count first, then the levels
/// lexicographically with cavity 1 most significant.
bool canonical_less(const BasisState& lhs, const BasisState& rhs);

/// Image of cavity i is cavity perm[i] (zero-based).
using CavityPermutation = std::array<int, 3>;

BasisState apply(const CavityPermutation& perm, const BasisState& state);
std::array<CavityPermutation, 6> all_permutations();
std::array<CavityPermutation, 3> cyclic_permutations();
CavityPermutation exchange(int first, int second);

class Manifold {
 public:
  explicit Manifold(int n_total);

  int n_total() const noexcept { return n_total_; }
  std::size_t dimension() const noexcept { return states_.size(); }
  const std::vector<BasisState>& states() const noexcept { return states_; }
  const BasisState& state(std::size_t index) const { return states_.at(index); }

  std::optional<std::size_t> find(const BasisState& state) const;
  /// Throws std::invalid_argument when the state is not a member.
  std::size_t index_of(const BasisState& state) const;

  int sector_of(std::size_t index) const { return states_.at(index).excited_count(); }
  /// Indices with the given number of excited atoms; contiguous by construction.
  std::span<const std::size_t> sector(int excited) const;
  /// offsets[k] is the first index of sector k, offsets[4] == dimension().
  const std::array<std::size_t, 5>& sector_offsets() const noexcept { return offsets_; }

  /// Single-cavity qudit alphabet: g0, g2, ..., gN, e0, ..., e(N-2).
  const std::vector<CavityLevel>& alphabet() const noexcept { return alphabet_; }
  std::size_t local_dimension() const noexcept { return alphabet_.size(); }
  std::optional<std::size_t> local_index(const CavityLevel& level) const;

  /// Basis-index permutation induced by a cavity permutation.
  std::vector<std::size_t> induced_permutation(const CavityPermutation& perm) const;

 private:
  int n_total_;
  std::vector<CavityLevel> alphabet_;
  std::vector<BasisState> states_;
  std::map<BasisState, std::size_t> index_;
  std::vector<std::size_t> identity_indices_;
  std::array<std::size_t, 5> offsets_{};
};

using ManifoldPtr = std::shared_ptr<const Manifold>;

/// All cavity triples with conserved total n_total (even, >= 0).
ManifoldPtr enumerate_manifold(int n_total);

/// Complex amplitudes over a manifold; unit norm is enforced.
class StateVector {
 public:
  static constexpr double kNormTolerance = 1e-9;

  /// Throws std::invalid_argument on a size mismatch or a norm off by more
  /// than kNormTolerance.
  StateVector(ManifoldPtr manifold, Eigen::VectorXcd amplitudes);

  /// Rescales to unit norm; throws for the zero vector.
  static StateVector normalized(ManifoldPtr manifold, Eigen::VectorXcd amplitudes);
  static StateVector basis(ManifoldPtr manifold, const BasisState& state);

  const Manifold& manifold() const noexcept { return *manifold_; }
  const ManifoldPtr& manifold_ptr() const noexcept { return manifold_; }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
  Complex amplitude(std::size_t index) const { return amplitudes_(static_cast<Eigen::Index>(index)); }
  Complex amplitude(const BasisState& state) const;
  double norm() const { return amplitudes_.norm(); }

 private:
  ManifoldPtr manifold_;
  Eigen::VectorXcd amplitudes_;
};

/// One cavity's factor in a product state: a superposition of levels.
using CavityFactor = std::vector<std::pair<CavityLevel, Complex>>;

/// Tensor product of three normalized cavity factors. Every cross term must
/// land in the manifold (otherwise UnsupportedProduct).
StateVector product_state(const ManifoldPtr& manifold, const std::array<CavityFactor, 3>& factors);

enum class SymmetrizeKind { even_perms, all_perms };

/// Normalized sum of the distinct permutation images of a basis state.
StateVector symmetrize(const ManifoldPtr& manifold, const BasisState& state, SymmetrizeKind kind);

StateVector permute_cavities(const StateVector& state, const CavityPermutation& perm);

/// Real permutation matrix P with P e_s = e_{perm(s)}.
Eigen::MatrixXd permutation_matrix(const Manifold& manifold, const CavityPermutation& perm);

}  // namespace trimodal
