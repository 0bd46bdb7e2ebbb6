#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "trimodal/io.hpp"

using namespace trimodal;
using std::numbers::pi;

TEST_SUITE("io") {
  TEST_CASE("doubles and complex numbers round-trip exactly") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int i = 0; i < 200; ++i) {
      const double x = u(rng) * std::pow(10.0, i % 7 - 3);
      CHECK(std::stod(format_double(x)) == x);
      const Complex c(u(rng), u(rng) * 1e-9);
      CHECK(parse_complex(format_complex(c)) == c);
    }
    CHECK(parse_complex("1.5") == Complex(1.5, 0.0));
    CHECK(parse_complex("-2j") == Complex(0.0, -2.0));
    CHECK(parse_complex("0.6-0.8j") == Complex(0.6, -0.8));
    CHECK(parse_complex("1e-3+2E+2j") == Complex(1e-3, 200.0));
    CHECK(parse_complex("j") == Complex(0.0, 1.0));
    CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("1+xj"), std::invalid_argument);
  }

  TEST_CASE("time expressions and ranges") {
    CHECK(parse_time_expression("pi") == pi);
    CHECK(parse_time_expression("2pi") == 2.0 * pi);
    CHECK(parse_time_expression("2*pi") == 2.0 * pi);
    CHECK(parse_time_expression("pi/3") == pi / 3.0);
    CHECK(parse_time_expression("-3pi/4") == -3.0 * pi / 4.0);
    CHECK(parse_time_expression("1.5") == 1.5);
    CHECK(parse_time_expression("+0.25") == 0.25);
    for (const char* bad : {"", "tau", "pi/", "3pi/x", "pi pi"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_time_expression(bad), ParseError);
    }
    const auto r = parse_time_range("0:pi:9");
    CHECK(r.lo == 0.0);
    CHECK(r.hi == pi);
    CHECK(r.samples == 9);
    CHECK(parse_time_range("pi/3:pi/2").samples == 0);
    CHECK_THROWS_AS(parse_time_range("1:1"), ParseError);
    CHECK_THROWS_AS(parse_time_range("0:1:1"), ParseError);
    CHECK_THROWS_AS(parse_time_range("0:1:2.5"), ParseError);
    CHECK_THROWS_AS(parse_time_range("0"), ParseError);
  }

  TEST_CASE("basis CSV lists every state in order") {
    std::ostringstream out;
    write_basis_csv(out, *enumerate_manifold(2));
    const std::string text = out.str();
    CHECK(text.rfind("# index,sector,cav1,cav2,cav3\n", 0) == 0);
    CHECK(text.find("0,0,g:0,g:0,g:2\n") != std::string::npos);
    CHECK(text.find("5,1,e:0,g:0,g:0\n") != std::string::npos);
  }

  TEST_CASE("matrix CSV round trip is bit-identical") {
    const auto g = build_full_generator(enumerate_manifold(4), DressedParams(1.3, 0.7), 2.2);
    std::ostringstream out;
    write_matrix_csv(out, g.matrix());
    std::istringstream in(out.str());
    const auto back = read_matrix_csv(in);
    REQUIRE(back.rows() == g.matrix().rows());
    CHECK((back - g.matrix()).cwiseAbs().maxCoeff() == 0.0);
    std::istringstream ragged("1,2\n3\n");
    CHECK_THROWS_AS(read_matrix_csv(ragged), ParseError);
    const auto sidecar = generator_sidecar(g);
    CHECK(sidecar["N"] == 4);
  }

  TEST_CASE("trajectory CSV round trip") {
    const auto m = enumerate_manifold(2);
    const auto g = build_large_xi_generator(m, 2.0);
    const std::vector<double> times = {0.0, 0.3, 1.1};
    const auto traj = propagate(g, StateVector::basis(m, BasisState::parse("g0,g0,g2")), times, TimeUnit::xi_t);
    std::ostringstream out;
    write_trajectory_csv(out, traj, {"note"});
    std::istringstream in(out.str());
    const auto table = read_trajectory_csv(in);
    REQUIRE(table.t.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(table.xi_t[k] == times[k]);
      CHECK(table.t[k] == times[k] / 2.0);
      CHECK((table.amplitudes[k] - traj.states[k].amplitudes()).cwiseAbs().maxCoeff() == 0.0);
    }
    std::istringstream odd("0,0,1\n");
    CHECK_THROWS_AS(read_trajectory_csv(odd), ParseError);
  }

  TEST_CASE("initial-state grammar") {
    const auto f = parse_init_spec("g0|g0|0.6:g2+0.8j:e0");
    CHECK(f[0].size() == 1);
    CHECK(f[0][0].second == Complex(1.0));
    REQUIRE(f[2].size() == 2);
    CHECK(f[2][0].first == CavityLevel::ground(2));
    CHECK(f[2][1].second == Complex(0.0, 0.8));
    CHECK(f[2][1].first == CavityLevel::excited(0));
    const auto g = parse_init_spec("g:2|0.6+0.1j:g2+e:0|g0");
    CHECK(g[0][0].first == CavityLevel::ground(2));
    CHECK(g[1][0].second == Complex(0.6, 0.1));
    CHECK(parse_init_spec(format_init_spec(f)) == f);
    CHECK_THROWS_AS(parse_init_spec("g0|g0"), ParseError);
    CHECK_THROWS_AS(parse_init_spec("g0||g2"), ParseError);
    CHECK_THROWS_AS(parse_init_spec("g0|g0|x:g2"), ParseError);
    CHECK_THROWS_AS(parse_init_spec("g0|g0|g3"), ParseError);
  }

  TEST_CASE("state JSON") {
    nlohmann::json doc = {{"N", 2}, {"amplitudes", nlohmann::json::array()}};
    for (int i = 0; i < 6; ++i) doc["amplitudes"].push_back({i == 0 ? 1.0 + 5e-7 : 0.0, 0.0});
    const auto s = parse_state_json(doc);
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(parse_state_json(state_to_json(s)).amplitudes() == s.amplitudes());
    doc["amplitudes"][0] = {0.9, 0.0};
    CHECK_THROWS_WITH_AS(parse_state_json(doc), doctest::Contains("norm 0.9"), ParseError);
    doc["amplitudes"].erase(5);
    CHECK_THROWS_AS(parse_state_json(doc), ParseError);
    CHECK_THROWS_AS(parse_state_json(nlohmann::json{{"amplitudes", nlohmann::json::array()}}), ParseError);
  }

  TEST_CASE("run config: defaults, canonical form and idempotence") {
    const nlohmann::json doc = {{"N", 2}, {"initial", "g0|g0|g2"}, {"times", {{"stop", 1.0}}}};
    const auto cfg = parse_run_config(doc);
    CHECK(cfg.mode == GeneratorMode::large_hopping);
    CHECK(cfg.xi == 1.0);
    CHECK(cfg.samples == 4097);
    CHECK(cfg.unit == TimeUnit::xi_t);
    CHECK_FALSE(cfg.trajectory_path.has_value());
    const auto once = emit_run_config(cfg);
    const auto twice = emit_run_config(parse_run_config(once));
    CHECK(once == twice);
    CHECK(once["initial"][2][0][0] == "g:2");

    auto bad = doc;
    bad["times"]["unit"] = "seconds";
    CHECK_THROWS_WITH_AS(parse_run_config(bad), doctest::Contains("times.unit"), ParseError);
    bad = doc;
    bad.erase("initial");
    CHECK_THROWS_WITH_AS(parse_run_config(bad), doctest::Contains("initial"), ParseError);
    bad = doc;
    bad["mode"] = "exact";
    CHECK_THROWS_WITH_AS(parse_run_config(bad), doctest::Contains("mode"), ParseError);
    bad = doc;
    bad["times"]["samples"] = 1;
    CHECK_THROWS_AS(parse_run_config(bad), ParseError);
  }
}
