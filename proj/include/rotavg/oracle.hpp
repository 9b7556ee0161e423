#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "rotavg/power_matrix.hpp"

namespace rotavg::oracle {

// Floating-point route to the same averages, by direct integration over
// z-y-z Euler angles. Used only to bound the exact evaluator.

using Mat3 = std::array<std::array<double, 3>, 3>;

/// alpha in [0, 2pi), beta in [0, pi], gamma in [0, 2pi).
struct AngleTriple {
  double alpha = 0;
  double beta = 0;
  double gamma = 0;
};

/// z-y-z rotation with right-handed screw.
Mat3 euler_matrix(const AngleTriple& angles);

Mat3 multiply(const Mat3& a, const Mat3& b);
double det(const Mat3& m);
/// max |(m^T m - 1)_{ij}|
double orthogonality_defect(const Mat3& m);

struct QuadratureSpec {
  int alpha_points = 1;
  int beta_points = 1;
  int gamma_points = 1;

  /// n+2 points on each axis: exact for every rank-n monomial.
  static QuadratureSpec for_rank(int rank);
  QuadratureSpec refined() const { return {2 * alpha_points, 2 * beta_points, 2 * gamma_points}; }
};

/// Gauss-Legendre nodes and weights on [-1, 1].
std::vector<std::pair<double, double>> gauss_legendre(int points);

/// Periodic trapezoidal rules in alpha and gamma, Gauss-Legendre in cos(beta).
/// Throws PreconditionError for a spec with a zero or negative count.
double quadrature_average(const PowerMatrix& chi, const QuadratureSpec& spec);
double quadrature_average(const PowerMatrix& chi);

struct MonteCarloEstimate {
  double mean = 0;
  double std_error = 0;
};

/// Haar sampling via uniform alpha, cos(beta), gamma. Samples are drawn in
/// fixed blocks, each with its own seeded mt19937_64, so the estimate depends
/// only on (samples, seed), never on thread count.
MonteCarloEstimate monte_carlo_average(const PowerMatrix& chi, std::uint64_t samples, std::uint64_t seed,
                                       unsigned threads = 1);

/// Fixed set of 20 power matrices of ranks 2 to 6 (mixing zero and nonzero
/// averages) for Monte Carlo consistency runs.
std::vector<PowerMatrix> monte_carlo_battery();

enum class Side { left, right };

/// Quadrature of the monomial evaluated at h*g (left) or g*h (right).
/// Throws PreconditionError if h is not a rotation to within 1e-10.
double invariance_probe(const PowerMatrix& chi, const Mat3& h, Side side, const QuadratureSpec& spec);

}  // namespace rotavg::oracle
