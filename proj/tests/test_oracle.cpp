#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "generators.hpp"
#include "rotavg/errors.hpp"
#include "rotavg/evaluator.hpp"
#include "rotavg/oracle.hpp"

using namespace rotavg;
using namespace rotavg::oracle;

namespace {

Mat3 random_rotation(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return euler_matrix({2 * std::numbers::pi * u(rng), std::acos(2 * u(rng) - 1), 2 * std::numbers::pi * u(rng)});
}

}  // namespace

TEST_CASE("Euler matrix special angles") {
  const Mat3 id = euler_matrix({0, 0, 0});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(id[i][j] == doctest::Approx(i == j ? 1.0 : 0.0));

  const Mat3 m = euler_matrix({0, std::numbers::pi / 2, 0});
  const double expected[3][3] = {{0, 0, 1}, {0, 1, 0}, {-1, 0, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(std::abs(m[i][j] - expected[i][j]) < 1e-15);
}

TEST_CASE("Euler matrices are rotations") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 10000; ++i) {
    const Mat3 g = random_rotation(rng);
    CHECK(orthogonality_defect(g) <= 1e-14);
    CHECK(std::abs(det(g) - 1.0) <= 1e-14);
  }
}

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  for (int n = 1; n <= 12; ++n) {
    const auto rule = gauss_legendre(n);
    for (int degree = 0; degree <= 2 * n - 1; ++degree) {
      double sum = 0;
      for (const auto& [x, w] : rule) sum += w * std::pow(x, degree);
      const double exact = degree % 2 ? 0.0 : 2.0 / (degree + 1);
      CHECK(std::abs(sum - exact) < 1e-13);
    }
  }
}

TEST_CASE("quadrature examples") {
  CHECK(std::abs(quadrature_average(PowerMatrix()) - 1.0) <= 1e-12);
  CHECK(std::abs(quadrature_average(PowerMatrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) - 1.0 / 6) <= 1e-10);
  CHECK_THROWS_AS(quadrature_average(PowerMatrix(), QuadratureSpec{0, 1, 1}), PreconditionError);
}

TEST_CASE("rank-9 counterexample value is stable under refinement") {
  const PowerMatrix m({{1, 1, 1}, {1, 2, 0}, {1, 0, 2}});
  const QuadratureSpec spec = QuadratureSpec::for_rank(9);
  const double v = quadrature_average(m, spec);
  CHECK(std::abs(v) > 1e-6);
  CHECK(std::abs(v - quadrature_average(m, spec.refined())) <= 1e-12);
  // regression constant frozen from this oracle
  CHECK(std::abs(v - 0.0015873015873015873) <= 1e-12);
}

TEST_CASE("quadrature agrees with exact values") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 150; ++i) {
    const PowerMatrix m = testing::random_power_matrix(rng, static_cast<int>(rng() % 11));
    CAPTURE(m.str());
    CHECK(std::abs(quadrature_average(m) - evaluate(m).to_double()) <= 1e-10);
  }
}

TEST_CASE("refining the quadrature changes nothing when S+V+W+X is even") {
  std::mt19937_64 rng(41);
  int tested = 0;
  while (tested < 40) {
    const PowerMatrix m = testing::random_power_matrix(rng, static_cast<int>(rng() % 9));
    if ((m(0, 2) + m(1, 2) + m(2, 0) + m(2, 1)) % 2) continue;
    const QuadratureSpec spec = QuadratureSpec::for_rank(m.rank());
    CHECK(std::abs(quadrature_average(m, spec) - quadrature_average(m, spec.refined())) <= 1e-12);
    ++tested;
  }
}

TEST_CASE("Monte Carlo examples") {
  const MonteCarloEstimate one = monte_carlo_average(PowerMatrix(), 1000, 5);
  CHECK(one.mean == 1.0);
  CHECK(one.std_error == 0.0);

  const MonteCarloEstimate third = monte_carlo_average(PowerMatrix({{2, 0, 0}, {0, 0, 0}, {0, 0, 0}}), 1000000, 1);
  CHECK(std::abs(third.mean - 1.0 / 3) <= 3 * third.std_error);

  const MonteCarloEstimate zero = monte_carlo_average(PowerMatrix({{1, 1, 0}, {0, 0, 0}, {0, 0, 0}}), 200000, 2);
  CHECK(std::abs(zero.mean) <= 4 * zero.std_error);

  CHECK_THROWS_AS(monte_carlo_average(PowerMatrix(), 0, 1), PreconditionError);
}

TEST_CASE("Monte Carlo is deterministic and independent of thread count") {
  const PowerMatrix m({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const auto a = monte_carlo_average(m, 50000, 99, 1);
  const auto b = monte_carlo_average(m, 50000, 99, 4);
  const auto c = monte_carlo_average(m, 50000, 100, 1);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(a.mean != c.mean);
}

TEST_CASE("invariance probe") {
  std::mt19937_64 rng(43);
  const Mat3 identity{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const PowerMatrix m({{2, 1, 0}, {0, 1, 0}, {0, 0, 0}});
  const QuadratureSpec spec = QuadratureSpec::for_rank(4);
  CHECK(invariance_probe(m, identity, Side::left, spec) == quadrature_average(m, spec));

  for (int i = 0; i < 10; ++i) {
    const PowerMatrix m4 = testing::random_power_matrix(rng, 4);
    const Mat3 h = random_rotation(rng);
    const double base = quadrature_average(m4, spec);
    CHECK(std::abs(invariance_probe(m4, h, Side::left, spec) - base) <= 1e-9);
    CHECK(std::abs(invariance_probe(m4, h, Side::right, spec) - base) <= 1e-9);
  }

  // diag(-1,-1,1) flips the sign of the integrand when W+X+Y and n differ in parity
  const Mat3 flip{{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
  const PowerMatrix odd({{2, 0, 0}, {1, 0, 0}, {0, 0, 0}});
  const QuadratureSpec s2 = QuadratureSpec::for_rank(3);
  const double plain = quadrature_average(odd, s2);
  const double flipped = invariance_probe(odd, flip, Side::left, s2);
  CHECK(std::abs(plain) <= 1e-12);
  CHECK(std::abs(flipped) <= 1e-12);
  CHECK(std::abs(plain + flipped) <= 1e-12);
  // pointwise: the flipped integrand is the negative of the plain one
  const Mat3 g = random_rotation(rng);
  const Mat3 hg = multiply(flip, g);
  CHECK(hg[0][0] * hg[0][0] * hg[1][0] == doctest::Approx(-(g[0][0] * g[0][0] * g[1][0])));

  const Mat3 reflection{{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  CHECK_THROWS_AS(invariance_probe(m, reflection, Side::left, spec), PreconditionError);
}
