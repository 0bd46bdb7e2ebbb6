#include "trimodal/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "trimodal/analytic.hpp"
#include "trimodal/basis.hpp"
#include "trimodal/dynamics.hpp"
#include "trimodal/entanglement.hpp"
#include "trimodal/evolve.hpp"
#include "trimodal/scan.hpp"

namespace trimodal {

namespace {

constexpr double kPi = std::numbers::pi;

// Tolerances of the acceptance criteria.
constexpr double kGeneratorTol = 1e-12;
constexpr double kSpectrumTol = 1e-9;
constexpr double kRoundedSpectrumTol = 1e-3;
constexpr double kOracleTol = 1e-9;
constexpr double kOracleRoundedTol = 5e-4;
constexpr double kConservationTol = 1e-12;
constexpr double kPublishedTableTol = 1e-3;
constexpr double kExtremumValueTol = 5e-5;
constexpr double kExtremumTimeTol = 1e-3;
constexpr double kSpecialTimeTol = 1e-9;
constexpr double kThreeDecimalTol = 1e-3;
constexpr double kTwoDecimalTol = 5e-3;
constexpr double kLog546Tol = 0.05;
constexpr double kClosedFormOverlapTol = 1e-6;
constexpr double kDwellTol = 1e-9;
constexpr double kNormTol = 1e-10;
constexpr double kSectorTol = 1e-10;
constexpr double kSymmetryTol = 1e-9;
constexpr double kReturnDistance = 1e-3;

constexpr std::size_t kOracleSamples = 1000;
constexpr std::size_t kGridPerPi = 4096;
constexpr std::size_t kRandomCount = 100;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt_list(const std::vector<double>& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + fmt(values[i]);
  return s + "}";
}

SubCheck check(std::string name, bool pass, std::string detail) {
  return {std::move(name), pass, std::move(detail), false};
}

SubCheck info(std::string name, std::string detail) { return {std::move(name), true, std::move(detail), true}; }

SubCheck near(std::string name, double got, double want, double tol) {
  const double err = std::abs(got - want);
  return check(std::move(name), err <= tol,
               "got " + fmt(got) + ", want " + fmt(want) + ", |diff| " + fmt(err) + " (tol " + fmt(tol) + ")");
}

double max_deviation(std::vector<double> got, std::vector<double> want) {
  if (got.size() != want.size()) return INFINITY;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  double err = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) err = std::max(err, std::abs(got[i] - want[i]));
  return err;
}

SubCheck spectrum_check(std::string name, const Eigen::MatrixXcd& block, std::vector<double> want, double tol) {
  const auto got = eigenfrequencies(block);
  const double err = max_deviation(got, want);
  return check(std::move(name), err <= tol,
               "got " + fmt_list(got) + ", want " + fmt_list(want) + ", max |diff| " + fmt(err) + " (tol " +
                   fmt(tol) + ")");
}

Generator large(int n, double xi = 1.0) { return build_large_xi_generator(enumerate_manifold(n), xi); }

BasisState bs(const char* text) { return BasisState::parse(text); }

double prob(const AmplitudeSet& set, const char* label) { return std::norm(set[label]); }

double sample_time(double window, std::size_t k, std::size_t count) {
  return window * static_cast<double>(k) / static_cast<double>(count - 1);
}

std::size_t grid_for(double window) {
  return static_cast<std::size_t>(std::ceil(window / kPi * static_cast<double>(kGridPerPi))) + 1;
}

Eigen::VectorXcd random_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v / v.norm();
}

// -------------------------------------------------------------------------

CriterionResult dimensions() {
  CriterionResult c{1, "basis dimensions", {}};
  const std::array<std::size_t, 3> want = {6, 18, 38};
  for (int i = 0; i < 3; ++i) {
    const int n = 2 * (i + 1);
    const auto m = enumerate_manifold(n);
    c.checks.push_back(check("N=" + std::to_string(n) + " dimension", m->dimension() == want[static_cast<std::size_t>(i)],
                             "got " + std::to_string(m->dimension()) + ", want " +
                                 std::to_string(want[static_cast<std::size_t>(i)])));
  }
  const auto m6 = enumerate_manifold(6);
  const std::array<std::size_t, 4> sectors = {10, 18, 9, 1};
  bool ok = true;
  std::string got;
  for (int k = 0; k < 4; ++k) {
    const auto size = m6->sector(k).size();
    ok = ok && size == sectors[static_cast<std::size_t>(k)];
    got += (k ? "," : "") + std::to_string(size);
  }
  c.checks.push_back(check("N=6 sector sizes", ok, "got " + got + ", want 10,18,9,1"));
  return c;
}

// Coefficient matrix of the six-state N=2 equations over
// (g0g0g2, g0g2g0, g2g0g0, g0g0e0, g0e0g0, e0g0g0).
Eigen::MatrixXd n2_reference_matrix(double tan_theta, double xi) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(6, 6);
  for (int i = 0; i < 3; ++i) {
    m(i, i) = 1.0;
    m(i + 3, i + 3) = tan_theta * tan_theta;
    m(i, i + 3) = m(i + 3, i) = tan_theta;
    for (int j = 0; j < 3; ++j) {
      if (i != j) m(i, j) = 2.0 * xi;
    }
  }
  return m;
}

CriterionResult generator_fidelity() {
  CriterionResult c{2, "generator fidelity", {}};
  const auto m2 = enumerate_manifold(2);
  const std::array<BasisState, 6> order = {bs("g0,g0,g2"), bs("g0,g2,g0"), bs("g2,g0,g0"),
                                           bs("g0,g0,e0"), bs("g0,e0,g0"), bs("e0,g0,g0")};
  for (double r : {0.5, 1.0, 2.0}) {
    for (double xi : {1.0, 50.0}) {
      const DressedParams params(r, 0.0);
      const auto gen = build_full_generator(m2, params, xi);
      const double t = mixing_angle(0, params).tan();
      const Eigen::MatrixXd want = n2_reference_matrix(t, xi);
      double err = 0.0;
      for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
          const auto gi = static_cast<Eigen::Index>(m2->index_of(order[static_cast<std::size_t>(i)]));
          const auto gj = static_cast<Eigen::Index>(m2->index_of(order[static_cast<std::size_t>(j)]));
          err = std::max(err, std::abs(gen.matrix()(gi, gj) - want(i, j)));
        }
      }
      c.checks.push_back(check("six-state matrix r=" + fmt(r) + " xi=" + fmt(xi), err <= kGeneratorTol,
                               "max entry error " + fmt(err) + " (tol " + fmt(kGeneratorTol) + ")"));

      // Three-state reduction onto A, (B + C)/sqrt2, D of the symmetric pair.
      Eigen::VectorXcd pair = Eigen::VectorXcd::Zero(6);
      pair(static_cast<Eigen::Index>(m2->index_of(bs("g0,g2,g0")))) = 1.0;
      pair(static_cast<Eigen::Index>(m2->index_of(bs("g2,g0,g0")))) = 1.0;
      const std::vector<StateVector> basis = {StateVector::basis(m2, bs("g0,g0,g2")),
                                              StateVector::normalized(m2, pair),
                                              StateVector::basis(m2, bs("g0,g0,e0"))};
      Eigen::MatrixXd three(3, 3);
      three << 1.0, 2.0 * std::sqrt(2.0) * xi, t, 2.0 * std::sqrt(2.0) * xi, 1.0 + 2.0 * xi, 0.0, t, 0.0, t * t;
      const auto block = reduce(gen, basis).matrix;
      const double err3 = (block - three.cast<Complex>()).cwiseAbs().maxCoeff();
      c.checks.push_back(check("symmetric three-state reduction r=" + fmt(r) + " xi=" + fmt(xi),
                               err3 <= kGeneratorTol,
                               "max entry error " + fmt(err3) + " (tol " + fmt(kGeneratorTol) + ")"));
    }
  }
  return c;
}

std::vector<StateVector> symmetric_vectors(const ManifoldPtr& m, std::initializer_list<const char*> seeds) {
  std::vector<StateVector> out;
  for (const char* s : seeds) out.push_back(symmetrize(m, bs(s), SymmetrizeKind::all_perms));
  return out;
}

CriterionResult eigenfrequencies_check() {
  CriterionResult c{3, "block eigenfrequencies", {}};
  const double s241 = std::sqrt(241.0);
  const double s313 = std::sqrt(313.0);

  const auto g2 = large(2);
  const auto s0 = g2.manifold().sector(0);
  const std::vector<std::size_t> sector0(s0.begin(), s0.end());
  c.checks.push_back(spectrum_check("N=2 ground sector", restrict_to(g2, sector0).matrix, {-2, -2, 4}, kSpectrumTol));

  const auto g6 = large(6);
  const auto m6 = g6.manifold_ptr();
  const auto b_block = connected_block(g6, m6->index_of(bs("e2,g2,g0")));
  const auto b_sym = symmetry_blocks(g6, {1, 2}, std::span<const std::size_t>(b_block)).symmetric.matrix;
  c.checks.push_back(spectrum_check("N=6 one-excited block, 2<->3 symmetric", b_sym, {-8, -6, 4, 12}, kSpectrumTol));

  const auto a = m6->sector(0);
  const std::vector<std::size_t> sector_a(a.begin(), a.end());
  const auto a_blocks = symmetry_blocks(g6, {1, 2}, std::span<const std::size_t>(sector_a));
  c.checks.push_back(spectrum_check("N=6 all-ground sector, 2<->3 antisymmetric", a_blocks.antisymmetric.matrix,
                                    {14, -2, 1 + s241, 1 - s241}, kSpectrumTol));
  c.checks.push_back(spectrum_check("N=6 all-ground sector, 2<->3 symmetric", a_blocks.symmetric.matrix,
                                    {0, 2, -1 + s241, -1 - s241, 7 + s313, 7 - s313}, kSpectrumTol));

  const double s66 = 2.0 * std::sqrt(66.0);
  const auto afk = reduce(g6, symmetric_vectors(m6, {"g2,g2,g2", "g4,g2,g0", "g6,g0,g0"})).matrix;
  c.checks.push_back(spectrum_check("fully symmetric (A, F, K) block", afk, {0, s66, -s66}, kSpectrumTol));
  const auto ch = reduce(g6, symmetric_vectors(m6, {"e0,e0,g2", "e2,e0,g0"})).matrix;
  c.checks.push_back(
      spectrum_check("fully symmetric (C, H) block", ch, {2 * std::sqrt(2.0), -2 * std::sqrt(2.0)}, kSpectrumTol));
  const auto begj = reduce(g6, symmetric_vectors(m6, {"e0,g2,g2", "g4,e0,g0", "e2,g2,g0", "e4,g0,g0"})).matrix;
  c.checks.push_back(spectrum_check("fully symmetric (B, E, G, J) block", begj,
                                    {-11.2644, -3.7306, 6.3205, 8.6745}, kRoundedSpectrumTol));

  c.checks.push_back(info("printed (A, F, K) coefficient matrix spectrum",
                          fmt_list(eigenfrequencies(printed_afk_block().cast<Complex>()))));
  c.checks.push_back(info("printed (B, E, G, J) coefficient matrix spectrum",
                          fmt_list(eigenfrequencies(printed_begj_block().cast<Complex>()))));
  c.checks.push_back(info("printed (C, H) coefficient matrix spectrum",
                          fmt_list(eigenfrequencies(printed_ch_block().cast<Complex>()))));
  return c;
}

// -------------------------------------------------------------------------

std::string fmt_args(std::span<const Complex> args) {
  std::string s;
  for (std::size_t i = 0; i < args.size(); ++i) {
    s += (i ? "," : "") + fmt(args[i].real());
    if (args[i].imag() != 0.0) s += (args[i].imag() < 0 ? "" : "+") + fmt(args[i].imag()) + "i";
  }
  return s.empty() ? "-" : s;
}

OracleRow oracle_row(Family family, const std::vector<Complex>& args) {
  const auto gen = large(family_manifold(family));
  const auto& m = gen.manifold();
  const auto initial = family_initial_state(family, args);
  const Propagator prop(gen, initial);
  const auto& layout = family_layout(family);

  std::vector<bool> covered(m.dimension(), false);
  for (const auto& entry : layout) {
    for (const auto& term : entry.terms) covered[m.index_of(term.state)] = true;
  }

  const double window = family_window(family);
  OracleRow row;
  row.family = std::string(family_key(family));
  row.args = fmt_args(args);
  const bool rounded = family == Family::n6_symmetric_one_excited;
  row.tolerance = rounded ? kOracleRoundedTol : kOracleTol;
  row.conservation_tolerance = rounded ? kOracleRoundedTol : kConservationTol;

  for (std::size_t k = 0; k < kOracleSamples; ++k) {
    const double x = sample_time(window, k, kOracleSamples);
    const Eigen::VectorXcd numeric = prop.amplitudes_at(x);
    const auto analytic = evaluate_family(family, args, x);
    for (const auto& entry : layout) {
      if (!analytic.has(entry.label)) continue;
      const Complex value = analytic[entry.label];
      for (const auto& term : entry.terms) {
        const auto idx = static_cast<Eigen::Index>(m.index_of(term.state));
        row.max_error = std::max(row.max_error, std::abs(numeric(idx) - term.weight * value));
      }
    }
    if (family_is_complete(family)) {
      for (std::size_t i = 0; i < m.dimension(); ++i) {
        if (!covered[i]) row.max_error = std::max(row.max_error, std::abs(numeric(static_cast<Eigen::Index>(i))));
      }
    }
    row.conservation = std::max(row.conservation, conservation_residual(family, args, analytic));
  }
  row.pass = row.max_error <= row.tolerance && row.conservation <= row.conservation_tolerance;
  return row;
}

// Generic parameters per family, exercising every closed-form term.
std::vector<Complex> generic_args(Family family, std::mt19937_64& rng) {
  const Complex i(0.0, 1.0);
  switch (family) {
    case Family::n2_general: {
      const auto v = random_state(6, rng);
      return {v.data(), v.data() + v.size()};
    }
    case Family::n4_two_cavity: return {0.6, 0.8 * i, 0.8, -0.6};
    case Family::n6_six_photons:
    case Family::n6_excited_asymmetric: return {};
    default: return {0.6, 0.8 * i};
  }
}

CriterionResult oracle_equivalence(std::vector<OracleRow>& table, std::mt19937_64& rng) {
  CriterionResult c{4, "closed forms against numeric evolution", {}};
  for (Family f : kAllFamilies) {
    std::vector<std::vector<Complex>> cases = {family_default_args(f)};
    if (family_arity(f) > 0) cases.push_back(generic_args(f, rng));
    for (const auto& args : cases) {
      const auto row = oracle_row(f, args);
      table.push_back(row);
      c.checks.push_back(check(row.family + " (" + row.args + ")", row.pass,
                               "max amplitude error " + fmt(row.max_error) + " (tol " + fmt(row.tolerance) +
                                   "), conservation residual " + fmt(row.conservation) + " (tol " +
                                   fmt(row.conservation_tolerance) + ")"));
    }
  }

  // Published four-decimal frequencies and coefficients against the values
  // recomputed from the printed coefficient matrix.
  const auto published = published_one_excited_table();
  const auto recomputed = recomputed_one_excited_table();
  double err = 0.0;
  for (std::size_t l = 0; l < published.labels.size(); ++l) {
    const auto& p = published.sums[l];
    const auto& r = recomputed.sums[l];
    for (std::size_t k = 0; k < p.omega.size(); ++k) {
      double best = INFINITY;
      for (std::size_t j = 0; j < r.omega.size(); ++j) {
        best = std::min(best, std::max(std::abs(p.omega[k] - r.omega[j]), std::abs(p.coeff[k] - r.coeff[j])));
      }
      err = std::max(err, best);
    }
  }
  c.checks.push_back(check("published one-excited exponential table vs recomputed", err <= kPublishedTableTol,
                           "max deviation " + fmt(err) + " (tol " + fmt(kPublishedTableTol) + ")"));
  return c;
}

// -------------------------------------------------------------------------

struct Anchor {
  double xi_t;
  double value;
};

// Finds a reported extremum of the requested kind near the anchor; appends checks.
std::optional<ExtremumReport> expect_extremum(CriterionResult& c, const std::string& what,
                                              const std::vector<ExtremumReport>& found, ExtremumKind kind,
                                              Anchor anchor) {
  const ExtremumReport* best = nullptr;
  for (const auto& e : found) {
    if (e.kind != kind || e.at_endpoint) continue;
    if (!best || std::abs(e.xi_t - anchor.xi_t) < std::abs(best->xi_t - anchor.xi_t)) best = &e;
  }
  const std::string label = what + (kind == ExtremumKind::min ? " minimum near " : " maximum near ") + fmt(anchor.xi_t);
  if (!best) {
    c.checks.push_back(check(label, false, "no extremum of that kind reported"));
    return std::nullopt;
  }
  c.checks.push_back(near(label + ": location", best->xi_t, anchor.xi_t, kExtremumTimeTol));
  c.checks.push_back(near(label + ": value", best->value, anchor.value, kExtremumValueTol));
  return *best;
}

CriterionResult extrema(std::vector<ExtremumReport>& eq15_minima, std::vector<ExtremumReport>& eq17_minima,
                        std::vector<ExtremumReport>& e3_minima, std::optional<ExtremumReport>& n6_minimum) {
  CriterionResult c{5, "extrema of occupation sums", {}};
  const Complex one = 1.0;

  {
    const std::vector<Complex> args = {0.0, 1.0};
    const auto set = evaluate_family(Family::n4_single_cavity, args, kPi / 6.0);
    c.checks.push_back(near("eq15 (a=0, b=1) |K|^2 at pi/6", prob(set, "K"), 1.0 / 9.0, kExtremumValueTol));
    c.checks.push_back(near("eq15 (a=0, b=1) 2|E|^2 at pi/6", 2.0 * prob(set, "E"), 8.0 / 9.0, kExtremumValueTol));
    const auto found = scan_extrema(Objective::parse("|K|^2"), analytic_source(Family::n4_single_cavity, args), 0.0,
                                    kPi, grid_for(kPi));
    expect_extremum(c, "eq15 (a=0, b=1) |K|^2", found, ExtremumKind::min, {kPi / 6.0, 1.0 / 9.0});
  }
  {
    const std::vector<Complex> args = {one, 0.0};
    const auto found = scan_extrema(Objective::parse("|C|^2+|F|^2"), analytic_source(Family::n4_single_cavity, args),
                                    0.0, kPi, grid_for(kPi));
    for (const Anchor a : {Anchor{0.2094, 0.1960}, Anchor{0.8378, 0.1960}}) {
      if (auto e = expect_extremum(c, "eq15 (a=1) |C|^2+|F|^2", found, ExtremumKind::min, a)) eq15_minima.push_back(*e);
    }
  }
  {
    const std::vector<Complex> args = {one, 0.0, one, 0.0};
    const auto source = analytic_source(Family::n4_two_cavity, args);
    const auto found = scan_extrema(Objective::parse("|A|^2+|P|^2"), source, 0.0, kPi, grid_for(kPi));
    for (const Anchor a : {Anchor{0.1930, 0.1829}, Anchor{0.8542, 0.1829}, Anchor{1.2402, 0.1829}}) {
      if (auto e = expect_extremum(c, "eq17 (a=c=1) |A|^2+|P|^2", found, ExtremumKind::min, a)) {
        eq17_minima.push_back(*e);
      }
    }
    if (!eq17_minima.empty()) {
      const auto set = source.evaluate(eq17_minima.front().xi_t);
      const std::string at = " at " + fmt(eq17_minima.front().xi_t);
      c.checks.push_back(near("eq17 |A|^2" + at, prob(set, "A"), 0.1070, kExtremumValueTol));
      c.checks.push_back(near("eq17 2|B|^2" + at, 2.0 * prob(set, "B"), 0.2112, kExtremumValueTol));
      c.checks.push_back(near("eq17 2|F|^2" + at, 2.0 * prob(set, "F"), 0.6060, kExtremumValueTol));
      c.checks.push_back(near("eq17 |P|^2" + at, prob(set, "P"), 0.0759, kExtremumValueTol));
    }
  }
  {
    const auto found = scan_extrema(Objective::parse("|C|^2+|D|^2"),
                                    analytic_source(Family::n6_excited_asymmetric, {}), 0.0, kPi, grid_for(kPi));
    for (const Anchor a : {Anchor{0.1930, 0.1829}, Anchor{0.8542, 0.1829}}) {
      if (auto e = expect_extremum(c, "E3 |C|^2+|D|^2", found, ExtremumKind::min, a)) e3_minima.push_back(*e);
    }
  }
  {
    const auto gen = large(6);
    const auto initial = family_initial_state(Family::n6_six_photons, {});
    const auto source = numeric_source(gen, initial, Family::n6_six_photons);
    const double window = 2.0 * kPi;
    const auto found = scan_extrema(Objective::parse("|A|^2+|F|^2"), source, 0.0, window, grid_for(window));
    n6_minimum = expect_extremum(c, "N=6 |A|^2+|F|^2", found, ExtremumKind::min, {1.7500, 0.001833});
    if (n6_minimum) {
      const auto set = source.evaluate(n6_minimum->xi_t);
      const std::string at = " at " + fmt(n6_minimum->xi_t);
      c.checks.push_back(near("N=6 2|B|^2" + at, 2.0 * prob(set, "B"), 0.140493, kExtremumValueTol));
      c.checks.push_back(near("N=6 2|E|^2" + at, 2.0 * prob(set, "E"), 0.055394, kExtremumValueTol));
      c.checks.push_back(near("N=6 2|G|^2" + at, 2.0 * prob(set, "G"), 0.459478, kExtremumValueTol));
      c.checks.push_back(near("N=6 2|K|^2" + at, 2.0 * prob(set, "K"), 0.342801, kExtremumValueTol));
      // The listed components are reproduced at the rounded time instead.
      const auto rounded = source.evaluate(1.75);
      c.checks.push_back(info("N=6 components at 1.7500",
                              "2|B|^2=" + fmt(2.0 * prob(rounded, "B")) + " 2|E|^2=" + fmt(2.0 * prob(rounded, "E")) +
                                  " 2|G|^2=" + fmt(2.0 * prob(rounded, "G")) +
                                  " 2|K|^2=" + fmt(2.0 * prob(rounded, "K"))));
    }
    if (auto mx = expect_extremum(c, "N=6 |A|^2+|F|^2", found, ExtremumKind::max, {3.0318, 0.95166})) {
      const auto set = source.evaluate(mx->xi_t);
      const std::string at = " at " + fmt(mx->xi_t);
      c.checks.push_back(near("N=6 |A|^2" + at, prob(set, "A"), 0.89530, kExtremumValueTol));
      c.checks.push_back(near("N=6 2|B|^2" + at, 2.0 * prob(set, "B"), 0.00137, kExtremumValueTol));
      c.checks.push_back(near("N=6 2|E|^2" + at, 2.0 * prob(set, "E"), 0.02296, kExtremumValueTol));
      c.checks.push_back(near("N=6 |F|^2" + at, prob(set, "F"), 0.05637, kExtremumValueTol));
      c.checks.push_back(near("N=6 2|G|^2" + at, 2.0 * prob(set, "G"), 0.02225, kExtremumValueTol));
      c.checks.push_back(near("N=6 2|K|^2" + at, 2.0 * prob(set, "K"), 0.00176, kExtremumValueTol));
    }
  }
  return c;
}

// -------------------------------------------------------------------------

AmplitudeSet numeric_at(Family family, std::span<const Complex> args, double xi_t) {
  const auto gen = large(family_manifold(family));
  const Propagator prop(gen, family_initial_state(family, args));
  return read_amplitudes(family, prop.at(xi_t));
}

CriterionResult special_times() {
  CriterionResult c{6, "special times", {}};
  const Complex one = 1.0;
  const double third = kPi / 3.0;
  {
    const std::vector<Complex> args = {one, 0.0};
    const auto set = numeric_at(Family::n2_symmetric_pair, args, third);
    c.checks.push_back(near("N=2 (a=1) |B| at pi/3", std::abs(set["B"]), 0.0, kSpecialTimeTol));
  }
  {
    const std::vector<Complex> args = {one, 0.0};
    const auto set = numeric_at(Family::n4_single_cavity, args, third);
    c.checks.push_back(near("eq15 (a=1) |C|^2 at pi/3", prob(set, "C"), 0.72, kSpecialTimeTol));
    c.checks.push_back(near("eq15 (a=1) |F|^2 at pi/3", prob(set, "F"), 0.28, kSpecialTimeTol));
  }
  {
    const std::vector<Complex> args = {one, 0.0, one, 0.0};
    const auto set = numeric_at(Family::n4_two_cavity, args, third);
    c.checks.push_back(near("eq17 (a=c=1) |A|^2 at pi/3", prob(set, "A"), 0.72, kSpecialTimeTol));
    c.checks.push_back(near("eq17 (a=c=1) |P|^2 at pi/3", prob(set, "P"), 0.28, kSpecialTimeTol));
  }
  {
    const auto set = numeric_at(Family::n6_excited_asymmetric, {}, third);
    c.checks.push_back(near("E3 |C|^2 at pi/3", prob(set, "C"), 18.0 / 25.0, kSpecialTimeTol));
    c.checks.push_back(near("E3 |D|^2 at pi/3", prob(set, "D"), 7.0 / 25.0, kSpecialTimeTol));
    const auto fifth = numeric_at(Family::n6_excited_asymmetric, {}, kPi / 5.0);
    const double s = std::sin(kPi / 5.0);
    c.checks.push_back(near("E3 |A|^2 at pi/5", prob(fifth, "A"), 4.0 / 9.0 * s * s, kSpecialTimeTol));
  }
  return c;
}

// -------------------------------------------------------------------------

StateVector numeric_state(Family family, std::span<const Complex> args, double xi_t) {
  const auto gen = large(family_manifold(family));
  return Propagator(gen, family_initial_state(family, args)).at(xi_t);
}

SubCheck entanglement_check(const std::string& name, const StateVector& state, double want, double tol,
                            const std::string& combination_label, double combination, std::uint64_t seed) {
  const auto result = max_product_overlap(state, OverlapOptions(seed));
  auto c = near(name, result.entanglement, want, tol);
  c.detail += "; optimizer overlap " + fmt(result.overlap) + ", " + combination_label + " " + fmt(combination) +
              " (entanglement " + fmt(-std::log2(combination)) + ")";
  return c;
}

CriterionResult entanglement_values(const std::vector<ExtremumReport>& eq15_minima,
                                    const std::vector<ExtremumReport>& eq17_minima,
                                    const std::vector<ExtremumReport>& e3_minima,
                                    const std::optional<ExtremumReport>& n6_minimum, std::uint64_t seed,
                                    std::mt19937_64& rng) {
  CriterionResult c{7, "geometric entanglement", {}};
  const Complex one = 1.0;
  {
    const std::vector<Complex> args = {one, 0.0};
    const double x = kPi / 6.0;
    const auto set = evaluate_family(Family::n2_symmetric_pair, args, x);
    c.checks.push_back(entanglement_check("N=2 (a=1) at pi/6", numeric_state(Family::n2_symmetric_pair, args, x),
                                          3.170, kThreeDecimalTol, "|A|^2+|C|^2",
                                          closed_form_overlap_n2(set["A"], set["C"]), seed));
  }
  if (!eq15_minima.empty()) {
    const std::vector<Complex> args = {one, 0.0};
    const double x = eq15_minima.front().xi_t;
    const auto set = evaluate_family(Family::n4_single_cavity, args, x);
    c.checks.push_back(entanglement_check("eq15 (a=1) at " + fmt(x), numeric_state(Family::n4_single_cavity, args, x),
                                          2.351, kThreeDecimalTol, "|C|^2+|F|^2",
                                          prob(set, "C") + prob(set, "F"), seed));
  } else {
    c.checks.push_back(check("eq15 (a=1) minimum state", false, "minimum not located"));
  }
  if (!eq17_minima.empty()) {
    const std::vector<Complex> args = {one, 0.0, one, 0.0};
    const double x = eq17_minima.front().xi_t;
    const auto set = evaluate_family(Family::n4_two_cavity, args, x);
    c.checks.push_back(entanglement_check("eq17 (a=c=1) at " + fmt(x), numeric_state(Family::n4_two_cavity, args, x),
                                          2.450, kThreeDecimalTol, "|A|^2+|P|^2",
                                          prob(set, "A") + prob(set, "P"), seed));
  } else {
    c.checks.push_back(check("eq17 (a=c=1) minimum state", false, "minimum not located"));
  }
  if (!e3_minima.empty()) {
    const double x = e3_minima.front().xi_t;
    const auto set = evaluate_family(Family::n6_excited_asymmetric, {}, x);
    c.checks.push_back(entanglement_check("E3 at " + fmt(x), numeric_state(Family::n6_excited_asymmetric, {}, x),
                                          2.450, kThreeDecimalTol, "|C|^2+|D|^2",
                                          prob(set, "C") + prob(set, "D"), seed));
  } else {
    c.checks.push_back(check("E3 minimum state", false, "minimum not located"));
  }
  if (n6_minimum) {
    const double x = n6_minimum->xi_t;
    const auto set = evaluate_family(Family::n6_six_photons, {}, x);
    c.checks.push_back(entanglement_check("N=6 six-photon state at " + fmt(x),
                                          numeric_state(Family::n6_six_photons, {}, x), std::log2(546.0), kLog546Tol,
                                          "|A|^2+|F|^2", prob(set, "A") + prob(set, "F"), seed));
  } else {
    c.checks.push_back(check("N=6 six-photon minimum state", false, "minimum not located"));
  }
  {
    const auto state = half_period_symmetric_state(0);
    const auto set = read_amplitudes(Family::n6_symmetric_ground, state);
    c.checks.push_back(entanglement_check("symmetric N=6, four-photon amplitude zero", state, 6.92, kTwoDecimalTol,
                                          "|A|^2", prob(set, "A"), seed));
  }
  {
    const auto state = quarter_period_symmetric_state(0);
    const auto set = read_amplitudes(Family::n6_symmetric_ground, state);
    c.checks.push_back(entanglement_check("symmetric N=6, quarter period l=0", state, 2.28, kTwoDecimalTol,
                                          "|A|^2", prob(set, "A"), seed));
    const double l0 = quarter_period_symmetric_check(0, OverlapOptions(seed)).overlap;
    const double l1 = quarter_period_symmetric_check(1, OverlapOptions(seed)).overlap;
    c.checks.push_back(near("symmetric N=6, quarter period l=1 vs l=0 overlap", l1, l0, kClosedFormOverlapTol));
  }
  {
    const std::vector<Complex> args = {one, 0.0};
    const auto gen = large(2);
    const Propagator prop(gen, family_initial_state(Family::n2_symmetric_pair, args));
    std::uniform_real_distribution<double> time(0.0, kPi);
    double worst = 0.0;
    double worst_at = 0.0;
    double opt_at = 0.0;
    double closed_at = 0.0;
    for (std::size_t k = 0; k < kRandomCount; ++k) {
      const double x = time(rng);
      const auto state = prop.at(x);
      const auto set = read_amplitudes(Family::n2_symmetric_pair, state);
      const double closed = closed_form_overlap_n2(set["A"], set["C"]);
      const double opt = max_product_overlap(state, OverlapOptions(seed)).overlap;
      if (std::abs(opt - closed) >= worst) {
        worst = std::abs(opt - closed);
        worst_at = x;
        opt_at = opt;
        closed_at = closed;
      }
    }
    c.checks.push_back(check("optimizer vs |A|^2+|C|^2 on 100 random N=2 times", worst <= kClosedFormOverlapTol,
                             "max |diff| " + fmt(worst) + " at xi t = " + fmt(worst_at) + " (optimizer " +
                                 fmt(opt_at) + ", closed form " + fmt(closed_at) + "; tol " +
                                 fmt(kClosedFormOverlapTol) + ")"));
  }
  return c;
}

// -------------------------------------------------------------------------

CriterionResult dwell_times(std::mt19937_64& rng) {
  CriterionResult c{8, "dwell times", {}};
  const auto gen = large(2);
  const Complex one = 1.0;
  {
    const std::vector<Complex> args = {one, 0.0};
    const auto initial = family_initial_state(Family::n2_symmetric_pair, args);
    const auto series = amplitude_series(gen, initial, Family::n2_symmetric_pair, "B");
    c.checks.push_back(near("N=2 (a=1) B, closed form", dwell_time(series, kPi), 4.0 / 9.0, kDwellTol));
    c.checks.push_back(near("N=2 (a=1) B, quadrature",
                            dwell_time("B", analytic_source(Family::n2_symmetric_pair, args), kPi), 4.0 / 9.0,
                            kDwellTol));
  }
  {
    const std::vector<Complex> args = {one, 0.0, 0.0, 0.0, 0.0, 0.0};
    const auto initial = family_initial_state(Family::n2_general, args);
    const auto source = analytic_source(Family::n2_general, args);
    for (const auto& [label, want] : {std::pair{"A", 5.0 / 9.0}, std::pair{"B", 2.0 / 9.0}, std::pair{"C", 2.0 / 9.0}}) {
      const auto series = amplitude_series(gen, initial, Family::n2_general, label);
      c.checks.push_back(near(std::string("N=2 A(0)=1, ") + label + ", closed form", dwell_time(series, kPi), want,
                              kDwellTol));
      c.checks.push_back(near(std::string("N=2 A(0)=1, ") + label + ", quadrature", dwell_time(label, source, kPi),
                              want, kDwellTol));
    }
  }
  {
    std::size_t violations = 0;
    double worst = -INFINITY;
    double worst_a0 = 0.0;
    double worst_dwell = 0.0;
    const auto m = gen.manifold_ptr();
    const auto a_index = static_cast<Eigen::Index>(m->index_of(bs("g0,g0,g2")));
    for (std::size_t k = 0; k < kRandomCount; ++k) {
      const StateVector initial(m, random_state(m->dimension(), rng));
      const double a0 = std::norm(initial.amplitudes()(a_index));
      const double dwell = dwell_time(amplitude_series(gen, initial, Family::n2_general, "A"), kPi);
      const double excess = dwell - (2.0 / 9.0 + a0 / 3.0);
      if (excess > kDwellTol) ++violations;
      if (excess > worst) {
        worst = excess;
        worst_a0 = a0;
        worst_dwell = dwell;
      }
    }
    c.checks.push_back(check("dwell(A) <= 2/9 + |A(0)|^2/3 on 100 random N=2 states", violations == 0,
                             std::to_string(violations) + " violations; worst excess " + fmt(worst) + " (dwell " +
                                 fmt(worst_dwell) + ", |A(0)|^2 " + fmt(worst_a0) + ")"));
  }
  return c;
}

// -------------------------------------------------------------------------

struct PropertyCase {
  std::string name;
  Generator generator;
  StateVector initial;
  std::vector<CavityPermutation> symmetries;
};

CriterionResult properties() {
  CriterionResult c{9, "conservation and invariants", {}};
  const Complex one = 1.0;
  const std::vector<Complex> eq9 = {0.6, Complex(0.0, 0.8)};
  const std::vector<Complex> eq17 = {0.6, Complex(0.0, 0.8), 0.8, -0.6};
  const std::vector<Complex> d1 = {0.6, Complex(0.0, 0.8)};
  const DressedParams params(1.0, 0.0);
  const auto m2 = enumerate_manifold(2);
  const auto m4 = enumerate_manifold(4);
  const auto m6 = enumerate_manifold(6);
  const auto sym12 = exchange(0, 1);
  const auto sym23 = exchange(1, 2);
  const auto perms = all_permutations();
  const std::vector<CavityPermutation> every(perms.begin(), perms.end());

  std::vector<PropertyCase> cases = {
      {"N=2 symmetric pair, large", large(2), family_initial_state(Family::n2_symmetric_pair, eq9), {sym12}},
      {"N=2 symmetric pair, full xi=3", build_full_generator(m2, params, 3.0),
       family_initial_state(Family::n2_symmetric_pair, eq9), {sym12}},
      {"N=4 two-cavity, large", large(4), family_initial_state(Family::n4_two_cavity, eq17), {}},
      {"N=4 single-cavity, full xi=2", build_full_generator(m4, params, 2.0),
       family_initial_state(Family::n4_single_cavity, eq9), {sym12}},
      {"N=6 six photons, large", large(6), family_initial_state(Family::n6_six_photons, {}), {sym23}},
      {"N=6 symmetric product, large", large(6), family_initial_state(Family::n6_symmetric_ground, d1), every},
      {"N=6 symmetric product, full xi=5", build_full_generator(m6, params, 5.0),
       family_initial_state(Family::n6_symmetric_ground, d1), every},
  };

  const auto grid = uniform_grid(0.0, 2.0 * kPi, 2049);
  for (const auto& pc : cases) {
    const Propagator prop(pc.generator, pc.initial);
    double norm_err = 0.0;
    double sym_err = 0.0;
    std::vector<std::vector<std::size_t>> induced;
    for (const auto& p : pc.symmetries) induced.push_back(pc.generator.manifold().induced_permutation(p));
    for (double x : grid) {
      const Eigen::VectorXcd v = prop.amplitudes_at(x / pc.generator.xi());
      norm_err = std::max(norm_err, std::abs(v.norm() - 1.0));
      for (const auto& perm : induced) {
        for (std::size_t i = 0; i < perm.size(); ++i) {
          sym_err = std::max(sym_err, std::abs(v(static_cast<Eigen::Index>(perm[i])) - v(static_cast<Eigen::Index>(i))));
        }
      }
    }
    c.checks.push_back(check(pc.name + ": norm", norm_err <= kNormTol, "max |norm - 1| " + fmt(norm_err)));
    if (!induced.empty()) {
      c.checks.push_back(check(pc.name + ": permutation symmetry", sym_err <= kSymmetryTol,
                               "max amplitude change " + fmt(sym_err)));
    }
  }

  // Sector norms and the per-family conservation lists, from numeric trajectories.
  auto sector_case = [&](const std::string& name, Family family, const std::vector<Complex>& args,
                         std::array<double, 4> want) {
    const auto gen = large(family_manifold(family));
    const auto traj = propagate(gen, family_initial_state(family, args), grid, TimeUnit::xi_t);
    double err = 0.0;
    for (const auto& p : sector_probabilities(traj)) {
      for (std::size_t k = 0; k < 4; ++k) err = std::max(err, std::abs(p[k] - want[k]));
    }
    double law_err = 0.0;
    for (const auto& state : traj.states) {
      law_err = std::max(law_err, conservation_residual(family, args, read_amplitudes(family, state)));
    }
    c.checks.push_back(check(name + ": sector norms", err <= kSectorTol, "max deviation " + fmt(err)));
    c.checks.push_back(check(name + ": conservation sums", law_err <= kSectorTol, "max residual " + fmt(law_err)));
  };
  const double a2 = std::norm(eq9[0]);
  const double b2 = std::norm(eq9[1]);
  sector_case("N=2 symmetric pair", Family::n2_symmetric_pair, eq9, {a2, b2, 0.0, 0.0});
  const double c2 = std::norm(eq17[2]);
  const double d2 = std::norm(eq17[3]);
  sector_case("N=4 two-cavity", Family::n4_two_cavity, eq17, {a2 * c2, b2 * c2 + a2 * d2, b2 * d2, 0.0});
  sector_case("N=6 symmetric product", Family::n6_symmetric_ground, d1,
              {a2 * a2 * a2, 3 * a2 * a2 * b2, 3 * a2 * b2 * b2, b2 * b2 * b2});

  // No return of the six-photon state over fifty periods of the slowest closed family.
  {
    const auto gen = large(6);
    const auto initial = family_initial_state(Family::n6_six_photons, {});
    const Propagator prop(gen, initial);
    const double lo = kPi;
    const double hi = 51.0 * kPi;
    const auto times = uniform_grid(lo, hi, 50 * kGridPerPi + 1);
    double closest = INFINITY;
    double closest_at = lo;
    for (double x : times) {
      const double fidelity = std::abs(initial.amplitudes().dot(prop.amplitudes_at(x)));
      const double d = std::sqrt(std::max(0.0, 2.0 - 2.0 * fidelity));
      if (d < closest) {
        closest = d;
        closest_at = x;
      }
    }
    c.checks.push_back(check("six-photon state never returns on [pi, 51 pi]", closest > kReturnDistance,
                             "min phase-free distance " + fmt(closest) + " at xi t = " + fmt(closest_at)));
  }

  // Full dynamics approaches the hopping-only limit as xi grows.
  {
    const std::vector<Complex> args = {one, 0.0};
    std::vector<double> deviation;
    for (double xi : {10.0, 100.0, 1000.0}) {
      const auto initial = family_initial_state(Family::n2_symmetric_pair, args);
      const Propagator full(build_full_generator(m2, params, xi), initial);
      const Propagator hop(build_large_xi_generator(m2, xi), initial);
      double dev = 0.0;
      for (std::size_t k = 0; k < kOracleSamples; ++k) {
        const double t = sample_time(kPi, k, kOracleSamples) / xi;
        dev = std::max(dev, (full.amplitudes_at(t) - hop.amplitudes_at(t)).norm());
      }
      deviation.push_back(dev);
    }
    const bool monotone = deviation[0] > deviation[1] && deviation[1] > deviation[2];
    c.checks.push_back(check("full vs hopping-only deviation decreases for xi = 10, 100, 1000", monotone,
                             "max state distance over xi t in [0, pi]: " + fmt_list(deviation)));
  }
  return c;
}

}  // namespace

bool CriterionResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.pass || c.informational; });
}

bool SuiteReport::all_pass() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.pass(); });
}

SuiteReport run_acceptance_suite(std::uint64_t seed) {
  SuiteReport report;
  std::mt19937_64 rng(seed);
  std::vector<ExtremumReport> eq15_minima;
  std::vector<ExtremumReport> eq17_minima;
  std::vector<ExtremumReport> e3_minima;
  std::optional<ExtremumReport> n6_minimum;

  report.criteria.push_back(dimensions());
  report.criteria.push_back(generator_fidelity());
  report.criteria.push_back(eigenfrequencies_check());
  report.criteria.push_back(oracle_equivalence(report.oracle, rng));
  report.criteria.push_back(extrema(eq15_minima, eq17_minima, e3_minima, n6_minimum));
  report.criteria.push_back(special_times());
  report.criteria.push_back(entanglement_values(eq15_minima, eq17_minima, e3_minima, n6_minimum, seed, rng));
  report.criteria.push_back(dwell_times(rng));
  report.criteria.push_back(properties());
  return report;
}

void print_report(std::ostream& out, const SuiteReport& report) {
  char line[256];
  out << "family  args                      max|analytic-numeric|  tol      conservation  tol      status\n";
  for (const auto& row : report.oracle) {
    std::snprintf(line, sizeof line, "%-7s %-25s %-22.3e %-8.0e %-13.3e %-8.0e %s\n", row.family.c_str(),
                  row.args.substr(0, 25).c_str(), row.max_error, row.tolerance, row.conservation,
                  row.conservation_tolerance, row.pass ? "PASS" : "FAIL");
    out << line;
  }
  out << '\n';
  for (const auto& c : report.criteria) {
    out << "[" << c.id << "] " << c.title << '\n';
    for (const auto& s : c.checks) {
      out << "    " << (s.informational ? "INFO" : (s.pass ? "pass" : "FAIL")) << "  " << s.name << ": " << s.detail
          << '\n';
    }
  }
  out << '\n';
  for (const auto& c : report.criteria) {
    std::size_t failed = 0;
    std::size_t total = 0;
    for (const auto& s : c.checks) {
      if (s.informational) continue;
      ++total;
      if (!s.pass) ++failed;
    }
    std::snprintf(line, sizeof line, "criterion %d %-40s %s (%zu/%zu checks)\n", c.id, c.title.c_str(),
                  c.pass() ? "PASS" : "FAIL", total - failed, total);
    out << line;
  }
}

}  // namespace trimodal
