#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "trimodal/basis.hpp"
#include "trimodal/error.hpp"

using namespace trimodal;

namespace {

// Brute force over every per-cavity level with local number <= n.
std::size_t brute_force_dimension(int n) {
  std::vector<CavityLevel> alphabet;
  for (int p = 0; p <= n; p += 2) alphabet.push_back(CavityLevel::ground(p));
  for (int p = 0; p + 2 <= n; p += 2) alphabet.push_back(CavityLevel::excited(p));
  std::size_t count = 0;
  for (const auto& a : alphabet) {
    for (const auto& b : alphabet) {
      for (const auto& c : alphabet) {
        if (a.local_number() + b.local_number() + c.local_number() == n) ++count;
      }
    }
  }
  return count;
}

CavityFactor level(const char* text, Complex c = 1.0) { return {{CavityLevel::parse(text), c}}; }

}  // namespace

TEST_SUITE("basis") {
  TEST_CASE("cavity levels parse, print and carry the local number") {
    CHECK(CavityLevel::parse("g2") == CavityLevel::ground(2));
    CHECK(CavityLevel::parse("e:0") == CavityLevel::excited(0));
    CHECK(CavityLevel::parse("e:4").to_string() == "e:4");
    CHECK(CavityLevel::ground(4).local_number() == 4);
    CHECK(CavityLevel::excited(4).local_number() == 6);
    CHECK_THROWS_AS(CavityLevel::parse("g3"), std::invalid_argument);
    CHECK_THROWS_AS(CavityLevel::parse("x2"), std::invalid_argument);
    CHECK_THROWS_AS(CavityLevel::parse("g"), std::invalid_argument);
    CHECK_THROWS_AS(CavityLevel::ground(-2), std::invalid_argument);
  }

  TEST_CASE("documented manifold dimensions") {
    CHECK(enumerate_manifold(2)->dimension() == 6);
    CHECK(enumerate_manifold(4)->dimension() == 18);
    CHECK(enumerate_manifold(6)->dimension() == 38);
    const auto m0 = enumerate_manifold(0);
    REQUIRE(m0->dimension() == 1);
    CHECK(m0->state(0) == BasisState::parse("g0,g0,g0"));
  }

  TEST_CASE("dimension matches brute-force enumeration") {
    for (int n : {0, 2, 4, 6, 8}) {
      CAPTURE(n);
      CHECK(enumerate_manifold(n)->dimension() == brute_force_dimension(n));
    }
  }

  TEST_CASE("odd or negative totals are rejected") {
    CHECK_THROWS_AS(enumerate_manifold(3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_manifold(-2), std::invalid_argument);
  }

  TEST_CASE("N=6 sectors are 10, 18, 9, 1 and contiguous") {
    const auto m = enumerate_manifold(6);
    const std::array<std::size_t, 4> sizes = {10, 18, 9, 1};
    for (int k = 0; k < 4; ++k) {
      const auto s = m->sector(k);
      CHECK(s.size() == sizes[static_cast<std::size_t>(k)]);
      for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i] == m->sector_offsets()[static_cast<std::size_t>(k)] + i);
        CHECK(m->state(s[i]).excited_count() == k);
      }
    }
    CHECK(m->sector_offsets()[4] == 38);
  }

  TEST_CASE("basis order is canonical and the index is its inverse") {
    for (int n : {2, 4, 6, 8}) {
      const auto m = enumerate_manifold(n);
      const auto& states = m->states();
      CHECK(std::is_sorted(states.begin(), states.end(), canonical_less));
      std::set<BasisState> unique(states.begin(), states.end());
      CHECK(unique.size() == states.size());
      for (std::size_t i = 0; i < states.size(); ++i) {
        CHECK(m->index_of(states[i]) == i);
        CHECK(states[i].total() == n);
      }
    }
    const auto m2 = enumerate_manifold(2);
    CHECK_FALSE(m2->find(BasisState::parse("g2,g2,g0")).has_value());
    CHECK_THROWS_AS(m2->index_of(BasisState::parse("g2,g2,g0")), std::invalid_argument);
    CHECK(m2->local_dimension() == 3);
    CHECK(enumerate_manifold(4)->local_dimension() == 5);
    CHECK(enumerate_manifold(6)->local_dimension() == 7);
  }

  TEST_CASE("product state of the symmetric pair family") {
    const auto m = enumerate_manifold(2);
    const Complex a(0.6, 0.0);
    const Complex b(0.0, 0.8);
    const auto s = product_state(m, {level("g0"), level("g0"), CavityFactor{{CavityLevel::parse("g2"), a},
                                                                           {CavityLevel::parse("e0"), b}}});
    CHECK(std::abs(s.amplitude(BasisState::parse("g0,g0,g2")) - a) < 1e-15);
    CHECK(std::abs(s.amplitude(BasisState::parse("g0,g0,e0")) - b) < 1e-15);
    CHECK(std::abs(s.norm() - 1.0) < 1e-12);
  }

  TEST_CASE("single-term product") {
    const auto m = enumerate_manifold(6);
    const auto s = product_state(m, {level("g2"), level("g2"), level("g2")});
    CHECK(s.amplitude(BasisState::parse("g2,g2,g2")) == Complex(1.0));
  }

  TEST_CASE("two-cavity product amplitudes expand by hand") {
    const auto m = enumerate_manifold(4);
    const Complex a(0.6, 0.0), b(0.0, 0.8), c(0.8, 0.0), d(-0.6, 0.0);
    const CavityFactor f2 = {{CavityLevel::parse("g2"), a}, {CavityLevel::parse("e0"), b}};
    const CavityFactor f3 = {{CavityLevel::parse("g2"), c}, {CavityLevel::parse("e0"), d}};
    const auto s = product_state(m, {level("g0"), f2, f3});
    CHECK(std::abs(s.amplitude(BasisState::parse("g0,g2,g2")) - a * c) < 1e-15);
    CHECK(std::abs(s.amplitude(BasisState::parse("g0,g2,e0")) - a * d) < 1e-15);
    CHECK(std::abs(s.amplitude(BasisState::parse("g0,e0,g2")) - b * c) < 1e-15);
    CHECK(std::abs(s.amplitude(BasisState::parse("g0,e0,e0")) - b * d) < 1e-15);
    double rest = 0.0;
    for (std::size_t i = 0; i < m->dimension(); ++i) rest += std::norm(s.amplitude(i));
    CHECK(rest == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("product state preconditions") {
    const auto m = enumerate_manifold(2);
    CHECK_THROWS_AS(product_state(m, {level("g0"), level("g2"), level("g2")}), UnsupportedProduct);
    CHECK_THROWS_AS(product_state(m, {level("g0"), level("g0"), level("g2", 0.5)}), std::invalid_argument);
  }

  TEST_CASE("symmetrize merges duplicate images") {
    const auto m = enumerate_manifold(6);
    const auto k = symmetrize(m, BasisState::parse("g6,g0,g0"), SymmetrizeKind::even_perms);
    int terms = 0;
    for (std::size_t i = 0; i < m->dimension(); ++i) {
      if (std::abs(k.amplitude(i)) > 0) {
        ++terms;
        CHECK(std::abs(k.amplitude(i) - 1.0 / std::sqrt(3.0)) < 1e-15);
      }
    }
    CHECK(terms == 3);

    const auto f = symmetrize(m, BasisState::parse("g4,g2,g0"), SymmetrizeKind::all_perms);
    terms = 0;
    for (std::size_t i = 0; i < m->dimension(); ++i) {
      if (std::abs(f.amplitude(i)) > 0) {
        ++terms;
        CHECK(std::abs(f.amplitude(i) - 1.0 / std::sqrt(6.0)) < 1e-15);
      }
    }
    CHECK(terms == 6);

    const auto a = symmetrize(m, BasisState::parse("g2,g2,g2"), SymmetrizeKind::all_perms);
    CHECK(a.amplitude(BasisState::parse("g2,g2,g2")) == Complex(1.0));
  }

  TEST_CASE("symmetrized states are fixed points of the permutation group") {
    for (int n : {2, 4, 6}) {
      const auto m = enumerate_manifold(n);
      for (const auto& s : m->states()) {
        const auto all = symmetrize(m, s, SymmetrizeKind::all_perms);
        for (const auto& p : all_permutations()) {
          CHECK((permute_cavities(all, p).amplitudes() - all.amplitudes()).norm() < 1e-14);
        }
        const auto even = symmetrize(m, s, SymmetrizeKind::even_perms);
        for (const auto& p : cyclic_permutations()) {
          CHECK((permute_cavities(even, p).amplitudes() - even.amplitudes()).norm() < 1e-14);
        }
      }
    }
  }

  TEST_CASE("permute_cavities: identity, involution, norm") {
    const auto m = enumerate_manifold(4);
    Eigen::VectorXcd v(static_cast<Eigen::Index>(m->dimension()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(std::sin(1.0 + i), std::cos(2.0 * i));
    const auto s = StateVector::normalized(m, v);
    CHECK((permute_cavities(s, {0, 1, 2}).amplitudes() - s.amplitudes()).norm() == 0.0);
    const auto swap = exchange(1, 2);
    const auto twice = permute_cavities(permute_cavities(s, swap), swap);
    CHECK((twice.amplitudes() - s.amplitudes()).norm() == 0.0);
    CHECK(permute_cavities(s, {2, 0, 1}).norm() == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("the symmetric pair form is fixed under 1<->2") {
    const auto m = enumerate_manifold(2);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(6);
    v(static_cast<Eigen::Index>(m->index_of(BasisState::parse("g0,g0,g2")))) = 0.5;
    v(static_cast<Eigen::Index>(m->index_of(BasisState::parse("g0,g2,g0")))) = Complex(0.0, 0.5);
    v(static_cast<Eigen::Index>(m->index_of(BasisState::parse("g2,g0,g0")))) = Complex(0.0, 0.5);
    v(static_cast<Eigen::Index>(m->index_of(BasisState::parse("g0,g0,e0")))) = 0.5;
    const StateVector s(m, v);
    CHECK((permute_cavities(s, exchange(0, 1)).amplitudes() - s.amplitudes()).norm() == 0.0);
  }

  TEST_CASE("permutation matrices are orthogonal and match induced permutations") {
    const auto m = enumerate_manifold(6);
    for (const auto& p : all_permutations()) {
      const auto P = permutation_matrix(*m, p);
      CHECK((P * P.transpose() - Eigen::MatrixXd::Identity(38, 38)).norm() == 0.0);
      const auto induced = m->induced_permutation(p);
      for (std::size_t s = 0; s < induced.size(); ++s) {
        CHECK(m->state(induced[s]) == apply(p, m->state(s)));
      }
    }
  }

  TEST_CASE("state vectors enforce unit norm") {
    const auto m = enumerate_manifold(2);
    CHECK_THROWS_AS(StateVector(m, Eigen::VectorXcd::Zero(6)), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(m, Eigen::VectorXcd::Ones(5) / std::sqrt(5.0)), std::invalid_argument);
    CHECK_THROWS_AS(StateVector::normalized(m, Eigen::VectorXcd::Zero(6)), std::invalid_argument);
    CHECK_NOTHROW(StateVector(m, Eigen::VectorXcd::Ones(6) / std::sqrt(6.0)));
  }
}
