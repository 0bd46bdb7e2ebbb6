#include "trimodal/basis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "trimodal/error.hpp"

namespace trimodal {

CavityLevel::CavityLevel(Excitation excitation, int photons)
    : excitation_(excitation), photons_(photons) {
  if (photons < 0 || photons % 2 != 0) {
    throw std::invalid_argument("cavity photon number must be a non-negative even integer, got " +
                                std::to_string(photons));
  }
}

CavityLevel CavityLevel::parse(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("malformed cavity level '" + std::string(text) + "'"); };
  if (text.size() < 2) throw fail();
  Excitation excitation;
  if (text[0] == 'g') {
    excitation = Excitation::ground;
  } else if (text[0] == 'e') {
    excitation = Excitation::excited;
  } else {
    throw fail();
  }
  std::string_view digits = text.substr(1);
  if (!digits.empty() && digits[0] == ':') digits.remove_prefix(1);
  int photons = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), photons);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) throw fail();
  return {excitation, photons};
}

std::string CavityLevel::to_string() const {
  return std::string(is_excited() ? "e:" : "g:") + std::to_string(photons_);
}

int BasisState::total() const noexcept {
  return levels[0].local_number() + levels[1].local_number() + levels[2].local_number();
}

int BasisState::excited_count() const noexcept {
  return static_cast<int>(levels[0].is_excited()) + static_cast<int>(levels[1].is_excited()) +
         static_cast<int>(levels[2].is_excited());
}

std::string BasisState::to_string() const {
  return levels[0].to_string() + "," + levels[1].to_string() + "," + levels[2].to_string();
}

BasisState BasisState::parse(std::string_view text) {
  std::array<std::string_view, 3> parts;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t comma = text.find(',', start);
    if ((i < 2) == (comma == std::string_view::npos)) {
      throw std::invalid_argument("basis state needs three comma-separated levels: '" + std::string(text) + "'");
    }
    parts[i] = text.substr(start, i < 2 ? comma - start : std::string_view::npos);
    start = comma + 1;
  }
  return BasisState{{CavityLevel::parse(parts[0]), CavityLevel::parse(parts[1]), CavityLevel::parse(parts[2])}};
}

bool canonical_less(const BasisState& lhs, const BasisState& rhs) {
  const int le = lhs.excited_count();
  const int re = rhs.excited_count();
  if (le != re) return le < re;
  return lhs.levels < rhs.levels;
}

BasisState apply(const CavityPermutation& perm, const BasisState& state) {
  BasisState out = state;
  for (int i = 0; i < 3; ++i) out.levels[perm[i]] = state.levels[i];
  return out;
}

std::array<CavityPermutation, 6> all_permutations() {
  return {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
}

std::array<CavityPermutation, 3> cyclic_permutations() { return {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}}; }

CavityPermutation exchange(int first, int second) {
  if (first < 0 || first > 2 || second < 0 || second > 2 || first == second) {
    throw std::invalid_argument("exchange needs two distinct cavities in 0..2");
  }
  CavityPermutation perm{0, 1, 2};
  std::swap(perm[first], perm[second]);
  return perm;
}

Manifold::Manifold(int n_total) : n_total_(n_total) {
  if (n_total < 0 || n_total % 2 != 0) {
    throw std::invalid_argument("manifold total must be a non-negative even integer, got " +
                                std::to_string(n_total));
  }
  for (int n = 0; n <= n_total; n += 2) alphabet_.push_back(CavityLevel::ground(n));
  for (int n = 0; n + 2 <= n_total; n += 2) alphabet_.push_back(CavityLevel::excited(n));

  for (const auto& a : alphabet_) {
    for (const auto& b : alphabet_) {
      for (const auto& c : alphabet_) {
        BasisState s{{a, b, c}};
        if (s.total() == n_total) states_.push_back(s);
      }
    }
  }
  std::sort(states_.begin(), states_.end(), canonical_less);
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);

  identity_indices_.resize(states_.size());
  std::iota(identity_indices_.begin(), identity_indices_.end(), std::size_t{0});
  std::size_t cursor = 0;
  for (int k = 0; k <= 3; ++k) {
    offsets_[k] = cursor;
    while (cursor < states_.size() && states_[cursor].excited_count() == k) ++cursor;
  }
  offsets_[4] = states_.size();
}

std::optional<std::size_t> Manifold::find(const BasisState& state) const {
  auto it = index_.find(state);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Manifold::index_of(const BasisState& state) const {
  if (auto idx = find(state)) return *idx;
  throw std::invalid_argument("state " + state.to_string() + " is not in the N=" + std::to_string(n_total_) +
                              " manifold");
}

std::span<const std::size_t> Manifold::sector(int excited) const {
  if (excited < 0 || excited > 3) throw std::invalid_argument("sector index must be in 0..3");
  return std::span<const std::size_t>(identity_indices_)
      .subspan(offsets_[excited], offsets_[excited + 1] - offsets_[excited]);
}

std::optional<std::size_t> Manifold::local_index(const CavityLevel& level) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), level);
  if (it == alphabet_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - alphabet_.begin());
}

std::vector<std::size_t> Manifold::induced_permutation(const CavityPermutation& perm) const {
  std::vector<std::size_t> image(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) image[i] = index_.at(apply(perm, states_[i]));
  return image;
}

ManifoldPtr enumerate_manifold(int n_total) { return std::make_shared<const Manifold>(n_total); }

StateVector::StateVector(ManifoldPtr manifold, Eigen::VectorXcd amplitudes)
    : manifold_(std::move(manifold)), amplitudes_(std::move(amplitudes)) {
  if (!manifold_) throw std::invalid_argument("state vector needs a manifold");
  if (static_cast<std::size_t>(amplitudes_.size()) != manifold_->dimension()) {
    throw std::invalid_argument("state vector has " + std::to_string(amplitudes_.size()) +
                                " amplitudes, manifold dimension is " + std::to_string(manifold_->dimension()));
  }
  const double norm = amplitudes_.norm();
  if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
    throw std::invalid_argument("state vector is not normalized (norm " + std::to_string(norm) + ")");
  }
}

StateVector StateVector::normalized(ManifoldPtr manifold, Eigen::VectorXcd amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw std::invalid_argument("cannot normalize a zero state");
  amplitudes /= norm;
  return StateVector(std::move(manifold), std::move(amplitudes));
}

StateVector StateVector::basis(ManifoldPtr manifold, const BasisState& state) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(manifold->dimension()));
  amps(static_cast<Eigen::Index>(manifold->index_of(state))) = 1.0;
  return StateVector(std::move(manifold), std::move(amps));
}

Complex StateVector::amplitude(const BasisState& state) const {
  return amplitude(manifold_->index_of(state));
}

StateVector product_state(const ManifoldPtr& manifold, const std::array<CavityFactor, 3>& factors) {
  constexpr double kFactorTolerance = 1e-9;
  std::array<std::map<CavityLevel, Complex>, 3> merged;
  for (int c = 0; c < 3; ++c) {
    for (const auto& [level, coeff] : factors[c]) merged[c][level] += coeff;
    double norm2 = 0.0;
    for (const auto& [level, coeff] : merged[c]) norm2 += std::norm(coeff);
    if (std::abs(norm2 - 1.0) > kFactorTolerance) {
      throw std::invalid_argument("cavity " + std::to_string(c + 1) + " factor is not normalized (sum |c|^2 = " +
                                  std::to_string(norm2) + ")");
    }
  }

  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(manifold->dimension()));
  for (const auto& [l0, c0] : merged[0]) {
    if (c0 == Complex{}) continue;
    for (const auto& [l1, c1] : merged[1]) {
      if (c1 == Complex{}) continue;
      for (const auto& [l2, c2] : merged[2]) {
        if (c2 == Complex{}) continue;
        const BasisState s{{l0, l1, l2}};
        auto idx = manifold->find(s);
        if (!idx) {
          throw UnsupportedProduct("product term " + s.to_string() + " has total " + std::to_string(s.total()) +
                                   ", outside the N=" + std::to_string(manifold->n_total()) + " manifold");
        }
        amps(static_cast<Eigen::Index>(*idx)) += c0 * c1 * c2;
      }
    }
  }
  return StateVector::normalized(manifold, std::move(amps));
}

StateVector symmetrize(const ManifoldPtr& manifold, const BasisState& state, SymmetrizeKind kind) {
  manifold->index_of(state);
  std::set<BasisState> images;
  if (kind == SymmetrizeKind::even_perms) {
    for (const auto& p : cyclic_permutations()) images.insert(apply(p, state));
  } else {
    for (const auto& p : all_permutations()) images.insert(apply(p, state));
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(manifold->dimension()));
  for (const auto& s : images) amps(static_cast<Eigen::Index>(manifold->index_of(s))) = 1.0;
  return StateVector::normalized(manifold, std::move(amps));
}

StateVector permute_cavities(const StateVector& state, const CavityPermutation& perm) {
  const auto image = state.manifold().induced_permutation(perm);
  Eigen::VectorXcd out(state.amplitudes().size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    out(static_cast<Eigen::Index>(image[i])) = state.amplitude(i);
  }
  return StateVector(state.manifold_ptr(), std::move(out));
}

Eigen::MatrixXd permutation_matrix(const Manifold& manifold, const CavityPermutation& perm) {
  const auto image = manifold.induced_permutation(perm);
  const auto dim = static_cast<Eigen::Index>(manifold.dimension());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t i = 0; i < image.size(); ++i) p(static_cast<Eigen::Index>(image[i]), static_cast<Eigen::Index>(i)) = 1.0;
  return p;
}

}  // namespace trimodal
