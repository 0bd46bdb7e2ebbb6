#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "trimodal/analytic.hpp"
#include "trimodal/dynamics.hpp"
#include "trimodal/scan.hpp"

using namespace trimodal;
using std::numbers::pi;

namespace {

// Brute-force interior minima of f on a very fine grid, as (x, value).
std::vector<std::pair<double, double>> fine_minima(const std::function<double(double)>& f, double lo, double hi,
                                                   std::size_t n) {
  std::vector<double> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = f(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n));
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 1; i < n; ++i) {
    if (v[i] < v[i - 1] && v[i] <= v[i + 1]) {
      out.emplace_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n), v[i]);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("scan") {
  TEST_CASE("objective parsing") {
    const auto o = Objective::parse("2*|B|^2 + 1/2*|E|^2 - |K|^2");
    REQUIRE(o.terms.size() == 3);
    CHECK(o.terms[0].weight == 2.0);
    CHECK(o.terms[0].label == "B");
    CHECK(o.terms[1].weight == 0.5);
    CHECK(o.terms[2].weight == -1.0);
    CHECK(Objective::parse(o.to_string()).to_string() == o.to_string());
    CHECK(Objective::parse("|C|^2+|F|^2").terms.size() == 2);
    for (const char* bad : {"", "|C^2", "|C|^2 |F|^2", "2|C|^2", "1/0*|C|^2", "|  |^2", "1..2*|C|^2"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(Objective::parse(bad), std::invalid_argument);
    }
  }

  TEST_CASE("objective evaluation") {
    const auto set = n2_symmetric_amplitudes(0.6, 0.8, 0.0);
    CHECK(Objective::parse("|A|^2+|C|^2")(set) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(Objective::parse("3*|C|^2")(set) == doctest::Approx(1.92).epsilon(1e-15));
  }

  TEST_CASE("single-cavity N=4 minima agree with a brute-force grid") {
    const std::vector<Complex> args = {1.0, 0.0};
    const auto source = analytic_source(Family::n4_single_cavity, args);
    const auto objective = Objective::parse("|C|^2+|F|^2");
    const auto found = scan_extrema(objective, source, 0.0, pi, 4096);
    const auto reference =
        fine_minima([&](double x) { return objective(source.evaluate(x)); }, 0.0, pi, 2000000);
    std::vector<ExtremumReport> minima;
    for (const auto& e : found) {
      if (e.kind == ExtremumKind::min && !e.at_endpoint) minima.push_back(e);
    }
    REQUIRE(minima.size() == reference.size());
    for (std::size_t i = 0; i < minima.size(); ++i) {
      CHECK(minima[i].xi_t == doctest::Approx(reference[i].first).epsilon(1e-5));
      CHECK(minima[i].value <= reference[i].second + 1e-12);
    }
    CHECK(minima.front().xi_t == doctest::Approx(pi / 15.0).epsilon(1e-8));
    CHECK(minima.front().value == doctest::Approx(0.195992).epsilon(1e-5));
  }

  TEST_CASE("every reported interior extremum passes the derivative check") {
    const std::vector<Complex> args = {Complex(0.6), Complex(0.0, 0.8), Complex(0.8), Complex(-0.6)};
    const auto source = analytic_source(Family::n4_two_cavity, args);
    const auto objective = Objective::parse("|A|^2+|P|^2");
    for (const auto& e : scan_extrema(objective, source, 0.0, pi, 4096)) {
      if (e.at_endpoint) continue;
      CHECK(e.refined_to <= 1e-10);
      const auto check = verify_extremum(objective, source, e);
      CHECK(check.ok);
    }
  }

  TEST_CASE("flat objective has no extrema") {
    const std::vector<Complex> args = {0.6, 0.8};
    const auto source = analytic_source(Family::n6_symmetric_all_excited, args);
    CHECK(scan_extrema(Objective::parse("|D|^2"), source, 0.0, pi, 64).empty());
  }

  TEST_CASE("scan preconditions") {
    const std::vector<Complex> args = {1.0, 0.0};
    const auto source = analytic_source(Family::n2_symmetric_pair, args);
    const auto objective = Objective::parse("|B|^2");
    CHECK_THROWS_AS(scan_extrema(objective, source, 0.0, pi, 15), std::invalid_argument);
    CHECK_THROWS_AS(scan_extrema(objective, source, 1.0, 1.0, 64), std::invalid_argument);
    CHECK_THROWS_AS(scan_extrema(Objective::parse("|Q|^2"), source, 0.0, pi, 64), std::invalid_argument);
  }

  TEST_CASE("analytic and numeric sources agree") {
    const std::vector<Complex> args = {Complex(0.6), Complex(0.0, 0.8)};
    const auto analytic = analytic_source(Family::n4_single_cavity, args);
    const auto g = build_large_xi_generator(enumerate_manifold(4), 3.0);
    const auto numeric = numeric_source(g, family_initial_state(Family::n4_single_cavity, args),
                                        Family::n4_single_cavity);
    for (double x : {0.1, 0.8, 2.5}) {
      const auto a = analytic.evaluate(x);
      const auto n = numeric.evaluate(x);
      for (const auto& label : a.labels) CHECK(std::abs(a[label] - n[label]) <= 1e-10);
    }
    CHECK_THROWS_AS(numeric_source(g, family_initial_state(Family::n2_symmetric_pair, std::vector<Complex>{1.0, 0.0}),
                                   Family::n2_symmetric_pair),
                    std::invalid_argument);
  }

  TEST_CASE("dwell time: exact average against quadrature") {
    const std::vector<Complex> args = {1.0, 0.0};
    const auto source = analytic_source(Family::n4_single_cavity, args);
    const auto g = build_large_xi_generator(enumerate_manifold(4), 1.0);
    const auto initial = family_initial_state(Family::n4_single_cavity, args);
    for (const char* label : {"A", "B", "C", "F"}) {
      const auto series = amplitude_series(g, initial, Family::n4_single_cavity, label);
      const double exact = dwell_time(series, pi);
      const double quad = dwell_time(label, source, pi, 20000);
      CHECK(exact == doctest::Approx(quad).epsilon(1e-9));
    }
    // Constant amplitude: the average is |b|^6.
    const std::vector<Complex> ab = {Complex(0.6), Complex(0.0, 0.8)};
    const auto flat = analytic_source(Family::n6_symmetric_all_excited, ab);
    CHECK(dwell_time("D", flat, 1.0, 100) == doctest::Approx(std::pow(0.8, 6)).epsilon(1e-14));
  }

  TEST_CASE("quadrature of a known integral") {
    // (1/T) int_0^T |cos x|^2 dx over T = pi is 1/2.
    const double v = dwell_time_quadrature([](double x) { return Complex(std::cos(x)); }, pi, 64);
    CHECK(v == doctest::Approx(0.5).epsilon(1e-7));
  }

  TEST_CASE("period detection") {
    const auto n2 = detect_period(build_large_xi_generator(enumerate_manifold(2), 2.0));
    REQUIRE(n2.state_period.has_value());
    REQUIRE(n2.modulus_period.has_value());
    CHECK(*n2.state_period == doctest::Approx(pi).epsilon(1e-12));
    CHECK(*n2.modulus_period == doctest::Approx(pi / 3.0).epsilon(1e-12));

    const auto printed = detect_period(Eigen::MatrixXcd(printed_afk_block().cast<Complex>()));
    REQUIRE(printed.state_period.has_value());
    CHECK(*printed.state_period == doctest::Approx(pi / std::sqrt(66.0)).epsilon(1e-12));

    // 7 +- sqrt(313) and 0 are incommensurate.
    const auto n6 = detect_period(build_large_xi_generator(enumerate_manifold(6), 1.0));
    CHECK_FALSE(n6.state_period.has_value());
  }
}
