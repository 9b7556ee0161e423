#include "rotavg/oracle.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "rotavg/errors.hpp"
#include "rotavg/parallel.hpp"

namespace rotavg::oracle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::uint64_t kBlockSize = 4096;

double monomial(const PowerMatrix& chi, const Mat3& g) {
  double p = 1.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = chi(i, j); k > 0; --k) p *= g[i][j];
    }
  }
  return p;
}

template <class Integrand>
double integrate(const QuadratureSpec& spec, Integrand f) {
  if (spec.alpha_points < 1 || spec.beta_points < 1 || spec.gamma_points < 1) {
    throw PreconditionError("quadrature needs at least one point per axis");
  }
  const auto nodes = gauss_legendre(spec.beta_points);
  double total = 0;
  for (int a = 0; a < spec.alpha_points; ++a) {
    const double alpha = kTwoPi * a / spec.alpha_points;
    for (const auto& [x, w] : nodes) {
      const double beta = std::acos(x);
      double inner = 0;
      for (int c = 0; c < spec.gamma_points; ++c) {
        inner += f(euler_matrix({alpha, beta, kTwoPi * c / spec.gamma_points}));
      }
      total += w * inner;
    }
  }
  // (1/8pi^2) * (2pi/Na) * (2pi/Ng); the cos(beta) weights already carry sin(beta) dbeta.
  return total / (2.0 * spec.alpha_points * spec.gamma_points);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unit_interval(std::mt19937_64& engine) { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }

}  // namespace

Mat3 euler_matrix(const AngleTriple& angles) {
  const double ca = std::cos(angles.alpha), sa = std::sin(angles.alpha);
  const double cb = std::cos(angles.beta), sb = std::sin(angles.beta);
  const double cg = std::cos(angles.gamma), sg = std::sin(angles.gamma);
  return {{{-sa * sg + ca * cb * cg, -cg * sa - ca * cb * sg, ca * sb},
           {ca * sg + cb * cg * sa, ca * cg - cb * sa * sg, sa * sb},
           {-cg * sb, sb * sg, cb}}};
}

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

double det(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double orthogonality_defect(const Mat3& m) {
  double worst = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double dot = 0;
      for (int k = 0; k < 3; ++k) dot += m[k][i] * m[k][j];
      worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

QuadratureSpec QuadratureSpec::for_rank(int rank) {
  const int points = std::max(rank, 0) + 2;
  return {points, points, points};
}

std::vector<std::pair<double, double>> gauss_legendre(int points) {
  if (points < 1) throw PreconditionError("Gauss-Legendre rule needs at least one point");
  std::vector<std::pair<double, double>> rule(static_cast<std::size_t>(points));
  for (int i = 0; i < (points + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= points; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = points * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule[static_cast<std::size_t>(i)] = {x, w};
    rule[static_cast<std::size_t>(points - 1 - i)] = {-x, w};
  }
  return rule;
}

double quadrature_average(const PowerMatrix& chi, const QuadratureSpec& spec) {
  return integrate(spec, [&](const Mat3& g) { return monomial(chi, g); });
}

double quadrature_average(const PowerMatrix& chi) {
  return quadrature_average(chi, QuadratureSpec::for_rank(chi.rank()));
}

MonteCarloEstimate monte_carlo_average(const PowerMatrix& chi, std::uint64_t samples, std::uint64_t seed,
                                       unsigned threads) {
  if (samples < 1) throw PreconditionError("Monte Carlo needs at least one sample");
  const std::uint64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<double> sums(blocks), squares(blocks);
  parallel_for(blocks, threads, [&](std::size_t b) {
    std::mt19937_64 engine(splitmix64(seed ^ splitmix64(b)));
    const std::uint64_t begin = b * kBlockSize;
    const std::uint64_t end = std::min(samples, begin + kBlockSize);
    double s = 0, s2 = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      const double alpha = kTwoPi * unit_interval(engine);
      const double beta = std::acos(2.0 * unit_interval(engine) - 1.0);
      const double gamma = kTwoPi * unit_interval(engine);
      const double f = monomial(chi, euler_matrix({alpha, beta, gamma}));
      s += f;
      s2 += f * f;
    }
    sums[b] = s;
    squares[b] = s2;
  });
  double s = 0, s2 = 0;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    s += sums[b];
    s2 += squares[b];
  }
  const double n = static_cast<double>(samples);
  MonteCarloEstimate est;
  est.mean = s / n;
  if (samples > 1) {
    const double var = std::max(0.0, (s2 - n * est.mean * est.mean) / (n - 1.0));
    est.std_error = std::sqrt(var / n);
  }
  return est;
}

double invariance_probe(const PowerMatrix& chi, const Mat3& h, Side side, const QuadratureSpec& spec) {
  if (orthogonality_defect(h) > 1e-10 || std::abs(det(h) - 1.0) > 1e-10) {
    throw PreconditionError("probe matrix is not a rotation");
  }
  return integrate(spec, [&](const Mat3& g) {
    return monomial(chi, side == Side::left ? multiply(h, g) : multiply(g, h));
  });
}

}  // namespace rotavg::oracle

namespace rotavg::oracle {

std::vector<PowerMatrix> monte_carlo_battery() {
  return {
      PowerMatrix({{2, 0, 0}, {0, 0, 0}, {0, 0, 0}}), PowerMatrix({{1, 0, 0}, {1, 0, 0}, {0, 0, 0}}),
      PowerMatrix({{1, 1, 0}, {0, 0, 0}, {0, 0, 0}}), PowerMatrix({{0, 0, 0}, {0, 0, 0}, {0, 0, 2}}),
      PowerMatrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), PowerMatrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
      PowerMatrix({{3, 0, 0}, {0, 0, 0}, {0, 0, 0}}), PowerMatrix({{2, 0, 0}, {0, 2, 0}, {0, 0, 0}}),
      PowerMatrix({{4, 0, 0}, {0, 0, 0}, {0, 0, 0}}), PowerMatrix({{1, 1, 0}, {1, 1, 0}, {0, 0, 0}}),
      PowerMatrix({{0, 0, 0}, {0, 0, 2}, {0, 2, 0}}), PowerMatrix({{2, 0, 0}, {0, 0, 0}, {0, 0, 2}}),
      PowerMatrix({{3, 0, 0}, {0, 1, 0}, {0, 0, 1}}), PowerMatrix({{1, 0, 0}, {0, 0, 1}, {0, 3, 0}}),
      PowerMatrix({{1, 1, 1}, {1, 1, 0}, {0, 0, 0}}), PowerMatrix({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}),
      PowerMatrix({{1, 1, 0}, {1, 1, 0}, {0, 0, 2}}), PowerMatrix({{6, 0, 0}, {0, 0, 0}, {0, 0, 0}}),
      PowerMatrix({{0, 0, 0}, {0, 2, 2}, {0, 2, 0}}), PowerMatrix({{1, 0, 1}, {0, 2, 0}, {1, 0, 1}}),
  };
}

}  // namespace rotavg::oracle
