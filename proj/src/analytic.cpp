#include "trimodal/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

namespace trimodal {

namespace {

constexpr double kArgsNormTolerance = 1e-9;
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt6 = std::sqrt(6.0);

/// exp(i w x)
Complex ph(double w, double x) { return std::polar(1.0, w * x); }

BasisState bs(std::string_view text) { return BasisState::parse(text); }

std::vector<LayoutTerm> single(std::string_view text) { return {{bs(text), 1.0}}; }

std::vector<LayoutTerm> pair_of(std::string_view first, std::string_view second, double weight = 1.0) {
  return {{bs(first), weight}, {bs(second), weight}};
}

/// Distinct images of a basis state under a permutation set, each with weight 1/sqrt(count).
template <std::size_t K>
std::vector<LayoutTerm> orbit(std::string_view text, const std::array<CavityPermutation, K>& perms) {
  std::set<BasisState> images;
  const auto seed = bs(text);
  for (const auto& p : perms) images.insert(apply(p, seed));
  std::vector<LayoutTerm> terms;
  const double w = 1.0 / std::sqrt(static_cast<double>(images.size()));
  for (const auto& s : images) terms.push_back({s, w});
  // Keep the seed first so read_amplitudes divides by a term that is always present.
  std::stable_partition(terms.begin(), terms.end(), [&](const LayoutTerm& t) { return t.state == seed; });
  return terms;
}

std::vector<LayoutTerm> cyclic_orbit(std::string_view text) { return orbit(text, cyclic_permutations()); }
std::vector<LayoutTerm> full_orbit(std::string_view text) { return orbit(text, all_permutations()); }

std::map<Family, Layout> build_layouts() {
  const double h = 1.0 / kSqrt2;
  std::map<Family, Layout> m;
  m[Family::n2_symmetric_pair] = {
      {"A", single("g0,g0,g2")}, {"B", pair_of("g0,g2,g0", "g2,g0,g0", h)}, {"C", single("g0,g0,e0")}};
  m[Family::n2_general] = {{"A", single("g0,g0,g2")}, {"B", single("g0,g2,g0")}, {"C", single("g2,g0,g0")},
                           {"D", single("g0,g0,e0")}, {"E", single("g0,e0,g0")}, {"F", single("e0,g0,g0")}};
  m[Family::n4_single_cavity] = {{"A", pair_of("g4,g0,g0", "g0,g4,g0")}, {"B", pair_of("g0,g2,g2", "g2,g0,g2")},
                                 {"C", single("g2,g2,g0")},                {"E", pair_of("g0,g2,e0", "g2,g0,e0")},
                                 {"F", single("g0,g0,g4")},                {"K", single("g0,g0,e2")}};
  m[Family::n4_two_cavity] = {{"A", single("g4,g0,g0")},
                              {"B", pair_of("g2,g0,g2", "g2,g2,g0")},
                              {"D", pair_of("g2,e0,g0", "g0,e2,g0")},
                              {"E", pair_of("g2,g0,e0", "g0,g0,e2")},
                              {"F", pair_of("g0,g0,g4", "g0,g4,g0")},
                              {"L", single("g0,e0,e0")},
                              {"M", single("g0,e0,g2")},
                              {"N", single("g0,g2,e0")},
                              {"P", single("g0,g2,g2")}};
  m[Family::n6_six_photons] = {{"A", single("g6,g0,g0")},
                               {"B", pair_of("g4,g2,g0", "g4,g0,g2")},
                               {"E", pair_of("g2,g4,g0", "g2,g0,g4")},
                               {"G", pair_of("g0,g6,g0", "g0,g0,g6")},
                               {"K", pair_of("g0,g4,g2", "g0,g2,g4")},
                               {"F", single("g2,g2,g2")}};
  m[Family::n6_symmetric_ground] = {
      {"A", single("g2,g2,g2")}, {"F", full_orbit("g4,g2,g0")}, {"K", cyclic_orbit("g6,g0,g0")}};
  m[Family::n6_symmetric_one_excited] = {{"B", cyclic_orbit("e0,g2,g2")},
                                         {"E", full_orbit("g4,e0,g0")},
                                         {"G", full_orbit("e2,g2,g0")},
                                         {"J", cyclic_orbit("e4,g0,g0")}};
  m[Family::n6_symmetric_all_excited] = {{"D", single("e0,e0,e0")}};
  m[Family::n6_symmetric_two_excited] = {{"C", cyclic_orbit("e0,e0,g2")}, {"H", full_orbit("e2,e0,g0")}};
  m[Family::n6_excited_asymmetric] = {{"A", single("e0,g2,g2")}, {"B", single("e0,g4,g0")},
                                      {"C", single("e0,g0,g4")}, {"D", single("e2,g2,g0")},
                                      {"E", single("e2,g0,g2")}, {"F", single("e4,g0,g0")}};
  return m;
}

void require_normalized(std::initializer_list<Complex> factor, const char* what) {
  double s = 0.0;
  for (const auto& c : factor) s += std::norm(c);
  if (std::abs(s - 1.0) > kArgsNormTolerance) {
    throw std::invalid_argument(std::string(what) + " is not normalized (sum |c|^2 = " + std::to_string(s) + ")");
  }
}

void require_arity(Family family, std::span<const Complex> args) {
  if (args.size() != family_arity(family)) {
    throw std::invalid_argument("family " + std::string(family_key(family)) + " takes " +
                                std::to_string(family_arity(family)) + " parameters, got " +
                                std::to_string(args.size()));
  }
}

AmplitudeSet make_set(Family family, std::vector<std::string> labels, std::vector<Complex> values) {
  return {family, std::move(labels), std::move(values)};
}

CavityFactor factor(std::initializer_list<std::pair<std::string_view, Complex>> terms) {
  CavityFactor f;
  for (const auto& [text, c] : terms) f.emplace_back(CavityLevel::parse(text), c);
  return f;
}

ExponentialTable table_from_printed_block() {
  const auto s = spectrum(Eigen::MatrixXcd(printed_begj_block().cast<Complex>()));
  ExponentialTable table{{"B", "E", "G", "J"}, {}};
  // Initial condition B(0) = sqrt(3) (with a^2 b factored out), the others zero.
  for (Eigen::Index row = 0; row < 4; ++row) {
    ExponentialSum sum;
    for (Eigen::Index k = 0; k < 4; ++k) {
      sum.omega.push_back(s.frequencies(k));
      sum.coeff.push_back(kSqrt3 * s.modes(row, k) * std::conj(s.modes(0, k)));
    }
    table.sums.push_back(std::move(sum));
  }
  return table;
}

}  // namespace

std::string_view family_key(Family family) {
  switch (family) {
    case Family::n2_symmetric_pair: return "eq9";
    case Family::n2_general: return "A3";
    case Family::n4_single_cavity: return "eq15";
    case Family::n4_two_cavity: return "eq17";
    case Family::n6_six_photons: return "C5C6";
    case Family::n6_symmetric_ground: return "D8";
    case Family::n6_symmetric_one_excited: return "D9";
    case Family::n6_symmetric_all_excited: return "D10";
    case Family::n6_symmetric_two_excited: return "D11";
    case Family::n6_excited_asymmetric: return "E3";
  }
  throw std::logic_error("unhandled family");
}

Family parse_family(std::string_view text) {
  static const std::map<std::string, Family, std::less<>> names = {
      {"n2_symmetric_pair", Family::n2_symmetric_pair},
      {"n2_general", Family::n2_general},
      {"n4_single_cavity", Family::n4_single_cavity},
      {"n4_two_cavity", Family::n4_two_cavity},
      {"n6_six_photons", Family::n6_six_photons},
      {"n6_symmetric_ground", Family::n6_symmetric_ground},
      {"n6_symmetric_one_excited", Family::n6_symmetric_one_excited},
      {"n6_symmetric_all_excited", Family::n6_symmetric_all_excited},
      {"n6_symmetric_two_excited", Family::n6_symmetric_two_excited},
      {"n6_excited_asymmetric", Family::n6_excited_asymmetric},
  };
  for (Family f : kAllFamilies) {
    if (family_key(f) == text) return f;
  }
  if (auto it = names.find(text); it != names.end()) return it->second;
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

int family_manifold(Family family) {
  switch (family) {
    case Family::n2_symmetric_pair:
    case Family::n2_general: return 2;
    case Family::n4_single_cavity:
    case Family::n4_two_cavity: return 4;
    default: return 6;
  }
}

std::size_t family_arity(Family family) {
  switch (family) {
    case Family::n2_general: return 6;
    case Family::n4_two_cavity: return 4;
    case Family::n6_six_photons:
    case Family::n6_excited_asymmetric: return 0;
    default: return 2;
  }
}

std::vector<Complex> family_default_args(Family family) {
  std::vector<Complex> args(family_arity(family), 0.0);
  if (family == Family::n4_two_cavity) {
    args[0] = 1.0;
    args[2] = 1.0;
  } else if (!args.empty()) {
    args[0] = 1.0;
  }
  return args;
}

double family_window(Family family) {
  using std::numbers::pi;
  switch (family) {
    case Family::n6_six_photons: return 2.0 * pi;
    case Family::n6_symmetric_ground: return pi / std::sqrt(66.0);
    case Family::n6_symmetric_two_excited: return pi / kSqrt2;
    default: return pi;
  }
}

bool family_is_complete(Family family) {
  switch (family) {
    case Family::n2_symmetric_pair:
    case Family::n2_general:
    case Family::n4_single_cavity:
    case Family::n4_two_cavity:
    case Family::n6_excited_asymmetric: return true;
    default: return false;
  }
}

Complex AmplitudeSet::operator[](std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return values[i];
  }
  throw std::invalid_argument("family " + std::string(family_key(family)) + " has no amplitude '" +
                              std::string(label) + "'");
}

bool AmplitudeSet::has(std::string_view label) const {
  for (const auto& l : labels) {
    if (l == label) return true;
  }
  return false;
}

const Layout& family_layout(Family family) {
  static const std::map<Family, Layout> layouts = build_layouts();
  return layouts.at(family);
}

StateVector family_initial_state(Family family, std::span<const Complex> args) {
  require_arity(family, args);
  const auto manifold = enumerate_manifold(family_manifold(family));
  switch (family) {
    case Family::n2_symmetric_pair:
      return product_state(manifold, {factor({{"g0", 1.0}}), factor({{"g0", 1.0}}),
                                      factor({{"g2", args[0]}, {"e0", args[1]}})});
    case Family::n2_general: {
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(manifold->dimension()));
      const auto& layout = family_layout(family);
      for (std::size_t i = 0; i < 6; ++i) {
        v(static_cast<Eigen::Index>(manifold->index_of(layout[i].terms[0].state))) = args[i];
      }
      return StateVector(manifold, v);
    }
    case Family::n4_single_cavity:
      return product_state(manifold, {factor({{"g0", 1.0}}), factor({{"g0", 1.0}}),
                                      factor({{"g4", args[0]}, {"e2", args[1]}})});
    case Family::n4_two_cavity:
      return product_state(manifold, {factor({{"g0", 1.0}}), factor({{"g2", args[0]}, {"e0", args[1]}}),
                                      factor({{"g2", args[2]}, {"e0", args[3]}})});
    case Family::n6_six_photons:
      return StateVector::basis(manifold, bs("g6,g0,g0"));
    case Family::n6_symmetric_ground:
    case Family::n6_symmetric_one_excited:
    case Family::n6_symmetric_all_excited:
    case Family::n6_symmetric_two_excited: {
      const auto f = factor({{"g2", args[0]}, {"e0", args[1]}});
      return product_state(manifold, {f, f, f});
    }
    case Family::n6_excited_asymmetric:
      return StateVector::basis(manifold, bs("e2,g2,g0"));
  }
  throw std::logic_error("unhandled family");
}

AmplitudeSet evaluate_family(Family family, std::span<const Complex> args, double xi_t) {
  require_arity(family, args);
  switch (family) {
    case Family::n2_symmetric_pair: return n2_symmetric_amplitudes(args[0], args[1], xi_t);
    case Family::n2_general: {
      std::array<Complex, 6> init{};
      std::copy(args.begin(), args.end(), init.begin());
      return n2_amplitudes(init, xi_t);
    }
    case Family::n4_single_cavity: return n4_single_cavity_amplitudes(args[0], args[1], xi_t);
    case Family::n4_two_cavity: return n4_two_cavity_amplitudes(args[0], args[1], args[2], args[3], xi_t);
    case Family::n6_six_photons: return n6_six_photon_amplitudes(xi_t);
    case Family::n6_symmetric_ground: return n6_symmetric_amplitudes(args[0], args[1], xi_t)[0];
    case Family::n6_symmetric_one_excited: return n6_symmetric_amplitudes(args[0], args[1], xi_t)[1];
    case Family::n6_symmetric_all_excited: return n6_symmetric_amplitudes(args[0], args[1], xi_t)[2];
    case Family::n6_symmetric_two_excited: return n6_symmetric_amplitudes(args[0], args[1], xi_t)[3];
    case Family::n6_excited_asymmetric: return n6_excited_asymmetric_amplitudes(xi_t);
  }
  throw std::logic_error("unhandled family");
}

AmplitudeSet read_amplitudes(Family family, const StateVector& state) {
  if (state.manifold().n_total() != family_manifold(family)) {
    throw std::invalid_argument("state does not live on the family's manifold");
  }
  AmplitudeSet set{family, {}, {}};
  for (const auto& entry : family_layout(family)) {
    const auto& first = entry.terms.front();
    set.labels.push_back(entry.label);
    set.values.push_back(state.amplitude(first.state) / first.weight);
  }
  return set;
}

StateVector assemble_state(const ManifoldPtr& manifold, const AmplitudeSet& set) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(manifold->dimension()));
  for (const auto& entry : family_layout(set.family)) {
    if (!set.has(entry.label)) continue;
    const Complex x = set[entry.label];
    for (const auto& term : entry.terms) {
      v(static_cast<Eigen::Index>(manifold->index_of(term.state))) += term.weight * x;
    }
  }
  return StateVector(manifold, v);
}

std::vector<ConservationLaw> conservation_laws(Family family, std::span<const Complex> args) {
  require_arity(family, args);
  auto n2 = [](Complex c) { return std::norm(c); };
  switch (family) {
    case Family::n2_symmetric_pair:
      return {{{{"A", 1.0}, {"B", 1.0}}, n2(args[0])}, {{{"C", 1.0}}, n2(args[1])}};
    case Family::n2_general:
      return {{{{"A", 1.0}, {"B", 1.0}, {"C", 1.0}}, n2(args[0]) + n2(args[1]) + n2(args[2])},
              {{{"D", 1.0}}, n2(args[3])},
              {{{"E", 1.0}}, n2(args[4])},
              {{{"F", 1.0}}, n2(args[5])}};
    case Family::n4_single_cavity:
      return {{{{"E", 2.0}, {"K", 1.0}}, n2(args[1])},
              {{{"A", 2.0}, {"B", 2.0}, {"C", 1.0}, {"F", 1.0}}, n2(args[0])}};
    case Family::n4_two_cavity: {
      const double a = n2(args[0]), b = n2(args[1]), c = n2(args[2]), d = n2(args[3]);
      return {{{{"A", 1.0}, {"B", 2.0}, {"F", 2.0}, {"P", 1.0}}, a * c},
              {{{"L", 1.0}}, b * d},
              {{{"D", 2.0}, {"M", 1.0}}, b * c},
              {{{"E", 2.0}, {"N", 1.0}}, a * d}};
    }
    case Family::n6_six_photons: return {};
    case Family::n6_symmetric_ground:
      return {{{{"A", 1.0}, {"F", 1.0}, {"K", 1.0}}, std::pow(n2(args[0]), 3)}};
    case Family::n6_symmetric_one_excited:
      return {{{{"B", 1.0}, {"E", 1.0}, {"G", 1.0}, {"J", 1.0}}, 3.0 * n2(args[0]) * n2(args[0]) * n2(args[1])}};
    case Family::n6_symmetric_all_excited: return {{{{"D", 1.0}}, std::pow(n2(args[1]), 3)}};
    case Family::n6_symmetric_two_excited:
      return {{{{"C", 1.0}, {"H", 1.0}}, 3.0 * n2(args[0]) * n2(args[1]) * n2(args[1])}};
    case Family::n6_excited_asymmetric:
      return {{{{"A", 1.0}, {"B", 1.0}, {"C", 1.0}, {"D", 1.0}, {"E", 1.0}, {"F", 1.0}}, 1.0}};
  }
  throw std::logic_error("unhandled family");
}

double conservation_residual(Family family, std::span<const Complex> args, const AmplitudeSet& set) {
  double worst = 0.0;
  for (const auto& law : conservation_laws(family, args)) {
    double sum = 0.0;
    for (const auto& [label, w] : law.terms) sum += w * std::norm(set[label]);
    worst = std::max(worst, std::abs(sum - law.expected));
  }
  return worst;
}

AmplitudeSet n2_amplitudes(const std::array<Complex, 6>& x0, double xi_t) {
  double s = 0.0;
  for (const auto& c : x0) s += std::norm(c);
  if (std::abs(s - 1.0) > kArgsNormTolerance) throw std::invalid_argument("N=2 initial amplitudes not normalized");
  const Complex fast = ph(-4.0, xi_t) / 3.0;
  const Complex slow = ph(2.0, xi_t) / 3.0;
  const Complex sum = x0[0] + x0[1] + x0[2];
  return make_set(Family::n2_general, {"A", "B", "C", "D", "E", "F"},
                  {sum * fast + (2.0 * x0[0] - x0[1] - x0[2]) * slow,
                   sum * fast + (-x0[0] + 2.0 * x0[1] - x0[2]) * slow,
                   sum * fast + (-x0[0] - x0[1] + 2.0 * x0[2]) * slow, x0[3], x0[4], x0[5]});
}

AmplitudeSet n2_symmetric_amplitudes(Complex a, Complex b, double xi_t) {
  require_normalized({a, b}, "(a, b)");
  const Complex e4 = ph(-4.0, xi_t);
  const Complex e2 = ph(2.0, xi_t);
  return make_set(Family::n2_symmetric_pair, {"A", "B", "C"},
                  {a * (e4 + 2.0 * e2) / 3.0, a * kSqrt2 * (e4 - e2) / 3.0, b});
}

AmplitudeSet n4_single_cavity_amplitudes(Complex a, Complex b, double xi_t) {
  require_normalized({a, b}, "(a, b)");
  const Complex p8 = ph(8.0, xi_t), p6 = ph(6.0, xi_t), m12 = ph(-12.0, xi_t), m4 = ph(-4.0, xi_t);
  const Complex p2 = ph(2.0, xi_t);
  return make_set(Family::n4_single_cavity, {"A", "B", "C", "E", "F", "K"},
                  {a / 15.0 * (3.0 * p8 - 2.0 * p6 + 2.0 * m12 - 3.0 * m4),
                   a * kSqrt6 / 15.0 * (-p8 - p6 + m12 + m4),
                   a * kSqrt6 / 15.0 * (-p8 + 2.0 * p6 + m12 - 2.0 * m4),
                   b / 3.0 * (-p2 + m4),
                   a / 15.0 * (3.0 * p8 + 4.0 * p6 + 2.0 * m12 + 6.0 * m4),
                   b / 3.0 * (2.0 * p2 + m4)});
}

AmplitudeSet n4_two_cavity_amplitudes(Complex a, Complex b, Complex c, Complex d, double xi_t) {
  require_normalized({a, b}, "(a, b)");
  require_normalized({c, d}, "(c, d)");
  const Complex p8 = ph(8.0, xi_t), p6 = ph(6.0, xi_t), m12 = ph(-12.0, xi_t), m4 = ph(-4.0, xi_t);
  const Complex p2 = ph(2.0, xi_t);
  const Complex ac = a * c;
  return make_set(Family::n4_two_cavity, {"A", "B", "D", "E", "F", "L", "M", "N", "P"},
                  {ac * kSqrt6 / 15.0 * (-p8 + 2.0 * p6 - 2.0 * m4 + m12),
                   ac / 15.0 * (2.0 * p8 - 3.0 * p6 - 2.0 * m4 + 3.0 * m12),
                   b * c / 3.0 * (-p2 + m4),
                   a * d / 3.0 * (-p2 + m4),
                   ac * kSqrt6 / 15.0 * (-p8 - p6 + m4 + m12),
                   b * d,
                   b * c / 3.0 * (2.0 * p2 + m4),
                   a * d / 3.0 * (2.0 * p2 + m4),
                   ac / 15.0 * (2.0 * p8 + 6.0 * p6 + 4.0 * m4 + 3.0 * m12)});
}

AmplitudeSet n6_six_photon_amplitudes(double xi_t) {
  const double s313 = std::sqrt(313.0);
  const double s241 = std::sqrt(241.0);
  const double s10 = std::sqrt(10.0);
  const Complex a = 2.0 / 11.0 + 10.0 / 29.0 * ph(-2.0, xi_t) +
                    5.0 / 66.0 * (1.0 + 7.0 / s313) * ph(-7.0 + s313, xi_t) +
                    5.0 / 66.0 * (1.0 - 7.0 / s313) * ph(-(7.0 + s313), xi_t) +
                    14.0 / 87.0 * (1.0 + 8.0 / (7.0 * s241)) * ph(1.0 + s241, xi_t) +
                    14.0 / 87.0 * (1.0 - 8.0 / (7.0 * s241)) * ph(1.0 - s241, xi_t);
  const Complex f = -s10 / 11.0 + s10 / 22.0 * (1.0 + 7.0 / s313) * ph(-(7.0 - s313), xi_t) +
                    s10 / 22.0 * (1.0 - 7.0 / s313) * ph(-(7.0 + s313), xi_t);
  return make_set(Family::n6_six_photons, {"A", "F"}, {a, f});
}

std::array<AmplitudeSet, 4> n6_symmetric_amplitudes(Complex a, Complex b, double xi_t) {
  require_normalized({a, b}, "(a, b)");
  const double w = 2.0 * std::sqrt(66.0) * xi_t;
  const Complex a3 = a * a * a;
  const Complex i{0.0, 1.0};
  AmplitudeSet ground = make_set(Family::n6_symmetric_ground, {"A", "F", "K"},
                                 {a3 / 11.0 * (6.0 * std::cos(w) + 5.0),
                                  -a3 / 11.0 * std::sqrt(66.0) * i * std::sin(w),
                                  std::sqrt(30.0) * a3 / 11.0 * (std::cos(w) - 1.0)});

  static const ExponentialTable table = recomputed_one_excited_table();
  AmplitudeSet one{Family::n6_symmetric_one_excited, table.labels, {}};
  for (const auto& sum : table.sums) one.values.push_back(a * a * b * sum(xi_t));

  AmplitudeSet all = make_set(Family::n6_symmetric_all_excited, {"D"}, {b * b * b});
  const double w2 = 2.0 * kSqrt2 * xi_t;
  AmplitudeSet two = make_set(Family::n6_symmetric_two_excited, {"C", "H"},
                              {kSqrt3 * a * b * b * std::cos(w2), -kSqrt3 * a * b * b * i * std::sin(w2)});
  return {ground, one, all, two};
}

AmplitudeSet n6_excited_asymmetric_amplitudes(double xi_t) {
  const Complex m4 = ph(-4.0, xi_t), p6 = ph(6.0, xi_t), p8 = ph(8.0, xi_t), m12 = ph(-12.0, xi_t);
  const Complex ae = (-2.0 * m4 - 3.0 * p6 + 2.0 * p8 + 3.0 * m12) / 15.0;
  const Complex bf = kSqrt6 / 15.0 * (m4 - p6 - p8 + m12);
  const Complex c = kSqrt6 / 15.0 * (-2.0 * m4 + 2.0 * p6 - p8 + m12);
  const Complex d = (4.0 * m4 + 6.0 * p6 + 2.0 * p8 + 3.0 * m12) / 15.0;
  return make_set(Family::n6_excited_asymmetric, {"A", "B", "C", "D", "E", "F"}, {ae, bf, c, d, ae, bf});
}

Eigen::MatrixXd printed_afk_block() {
  const double c = 2.0 * std::sqrt(30.0);
  Eigen::MatrixXd m(3, 3);
  m << 0, 12, 0, 12, 0, c, 0, c, 0;
  return m;
}

Eigen::MatrixXd printed_begj_block() {
  const double x = 4.0 * kSqrt3, y = 2.0 * kSqrt2, z = 2.0 * kSqrt6;
  Eigen::MatrixXd m(4, 4);
  m << 0, x, y, 0,  //
      x, 0, z, 0,   //
      y, z, 0, x,   //
      0, 0, x, 0;
  return m;
}

Eigen::MatrixXd printed_ch_block() {
  Eigen::MatrixXd m(2, 2);
  m << 0, 2.0 * kSqrt2, 2.0 * kSqrt2, 0;
  return m;
}

ExponentialTable published_one_excited_table() {
  // exp(-11.2644 i xi t), exp(-3.7306 i xi t), exp(8.6745 i xi t), exp(6.3205 i xi t)
  const std::vector<double> omega = {11.2644, 3.7306, -8.6745, -6.3205};
  auto sum = [&](std::initializer_list<double> c) {
    return ExponentialSum{omega, std::vector<Complex>(c.begin(), c.end())};
  };
  return {{"B", "E", "G", "J"},
          {sum({0.4054, 0.3995, 0.0838, 0.8433}), sum({0.4607, 0.3401, -0.2040, -0.5968}),
           sum({0.4860, -0.3061, 0.2427, -0.4227}), sum({0.2989, -0.5684, -0.1939, 0.4633})}};
}

ExponentialTable recomputed_one_excited_table() { return table_from_printed_block(); }

}  // namespace trimodal
