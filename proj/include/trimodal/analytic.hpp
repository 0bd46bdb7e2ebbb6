#pragma once

// Closed-form large-hopping amplitudes for the documented initial-state
// families. Amplitudes are functions of the product xi*t only.
//
// Each family names its amplitudes with letters; the letter -> basis-state
// mapping is a per-family table (Layout), so the same letter in two families
// never refers to the same thing by accident.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "trimodal/basis.hpp"
#include "trimodal/evolve.hpp"

namespace trimodal {

enum class Family {
  n2_symmetric_pair,          ///< "eq9": g0|g0|(a g2 + b e0), labels A, B, C
  n2_general,                 ///< "A3": arbitrary N=2 amplitudes, labels A..F
  n4_single_cavity,           ///< "eq15": g0|g0|(a g4 + b e2)
  n4_two_cavity,              ///< "eq17": g0|(a g2 + b e0)|(c g2 + d e0)
  n6_six_photons,             ///< "C5C6": g6|g0|g0, labels A and F closed form
  n6_symmetric_ground,        ///< "D8": (a g2 + b e0)^3, labels A, F, K
  n6_symmetric_one_excited,   ///< "D9": labels B, E, G, J
  n6_symmetric_all_excited,   ///< "D10": label D
  n6_symmetric_two_excited,   ///< "D11": labels C, H
  n6_excited_asymmetric,      ///< "E3": e2|g2|g0, labels A..F
};

inline constexpr std::array<Family, 10> kAllFamilies = {
    Family::n2_symmetric_pair,        Family::n2_general,
    Family::n4_single_cavity,         Family::n4_two_cavity,
    Family::n6_six_photons,           Family::n6_symmetric_ground,
    Family::n6_symmetric_one_excited, Family::n6_symmetric_all_excited,
    Family::n6_symmetric_two_excited, Family::n6_excited_asymmetric,
};

/// Short key used on the command line ("eq9", "A3", "eq15", ...).
std::string_view family_key(Family family);
/// Accepts the short key or the enumerator name.
Family parse_family(std::string_view text);

int family_manifold(Family family);
/// Number of complex initial-state parameters (a, b, c, d or six initials).
std::size_t family_arity(Family family);
/// Default parameters: the first factor coefficient is 1, the rest 0.
std::vector<Complex> family_default_args(Family family);
/// xi*t length over which the family is sampled for oracle comparison.
double family_window(Family family);
/// Whether the layout covers the whole evolved state (all other amplitudes vanish).
bool family_is_complete(Family family);

struct AmplitudeSet {
  Family family;
  std::vector<std::string> labels;
  std::vector<Complex> values;

  /// Throws std::invalid_argument for an unknown label.
  Complex operator[](std::string_view label) const;
  bool has(std::string_view label) const;
};

struct LayoutTerm {
  BasisState state;
  double weight;  ///< amplitude of this basis state is weight * X
};

struct LayoutEntry {
  std::string label;
  std::vector<LayoutTerm> terms;
};

using Layout = std::vector<LayoutEntry>;

/// Letter -> basis-state table for every label the family can report,
/// including labels without a closed form (the six-photon family).
const Layout& family_layout(Family family);

/// Product (or general) initial state of the family for the given parameters.
StateVector family_initial_state(Family family, std::span<const Complex> args);

/// Closed-form amplitudes at xi*t. Throws std::invalid_argument when the
/// parameter count is wrong or a factor is not normalized.
AmplitudeSet evaluate_family(Family family, std::span<const Complex> args, double xi_t);

/// Reads the layout amplitudes of a manifold state: X = c(first term) / weight.
AmplitudeSet read_amplitudes(Family family, const StateVector& state);

/// Sum_X X * Sum_terms weight |term>; must have unit norm.
StateVector assemble_state(const ManifoldPtr& manifold, const AmplitudeSet& set);

/// sum_k weight_k |X_k|^2 == expected
struct ConservationLaw {
  std::vector<std::pair<std::string, double>> terms;
  double expected;
};

std::vector<ConservationLaw> conservation_laws(Family family, std::span<const Complex> args);
/// Largest |sum - expected| over the family's laws (0 when it has none).
double conservation_residual(Family family, std::span<const Complex> args, const AmplitudeSet& set);

// Named entry points, one per family.
AmplitudeSet n2_amplitudes(const std::array<Complex, 6>& initials, double xi_t);
AmplitudeSet n2_symmetric_amplitudes(Complex a, Complex b, double xi_t);
AmplitudeSet n4_single_cavity_amplitudes(Complex a, Complex b, double xi_t);
AmplitudeSet n4_two_cavity_amplitudes(Complex a, Complex b, Complex c, Complex d, double xi_t);
AmplitudeSet n6_six_photon_amplitudes(double xi_t);
/// D8, D9, D10, D11 in that order.
std::array<AmplitudeSet, 4> n6_symmetric_amplitudes(Complex a, Complex b, double xi_t);
AmplitudeSet n6_excited_asymmetric_amplitudes(double xi_t);

/// Coefficient matrices of the symmetric N=6 amplitude equations exactly as
/// printed, in units of xi: (A, F, K), (B, E, G, J), (C, H).
Eigen::MatrixXd printed_afk_block();
Eigen::MatrixXd printed_begj_block();
Eigen::MatrixXd printed_ch_block();

/// One-excitation symmetric amplitudes as exponential sums, for a^2 b = 1:
/// X(xi t) = sum_k c_k exp(-i w_k xi t).
struct ExponentialTable {
  std::vector<std::string> labels;  // B, E, G, J
  std::vector<ExponentialSum> sums;
};

/// The published four-decimal coefficients and frequencies.
ExponentialTable published_one_excited_table();
/// Recomputed from the printed (B, E, G, J) block by exact diagonalization.
ExponentialTable recomputed_one_excited_table();

}  // namespace trimodal
