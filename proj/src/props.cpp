#include "rotavg/props.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "rotavg/combinatorics.hpp"
#include "rotavg/errors.hpp"
#include "rotavg/parallel.hpp"
#include "rotavg/symmetry.hpp"

namespace rotavg::props {

namespace {

void enumerate_into(int cell, int remaining, PowerMatrix::Entries& e,
                    const std::function<void(const PowerMatrix&)>& visit) {
  if (cell == 8) {
    e[8] = remaining;
    visit(PowerMatrix(e));
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    e[static_cast<std::size_t>(cell)] = v;
    enumerate_into(cell + 1, remaining - v, e, visit);
  }
}

template <class Predicate>
PropositionReport check_orbits(int n, const std::string& claim, EvaluationCache& cache, unsigned threads,
                               Predicate is_violation) {
  PropositionReport report;
  report.rank = n;
  report.claim = claim;
  for (const OrbitValue& o : evaluate_orbits(n, cache, threads)) {
    report.checked += o.orbit_size;
    if (is_violation(o)) report.violations.push_back(o.representative);
  }
  report.verdict = report.violations.empty() ? Verdict::holds : Verdict::fails_with_witnesses;
  return report;
}

void require_odd_prime(int n) {
  if (n < 3 || !is_prime(n)) throw PreconditionError(std::to_string(n) + " is not an odd prime");
}

}  // namespace

void for_each_power_matrix(int n, const std::function<void(const PowerMatrix&)>& visit) {
  if (n < 0) throw PreconditionError("rank must be nonnegative");
  PowerMatrix::Entries e{};
  enumerate_into(0, n, e, visit);
}

RankEnumeration enumerate_power_matrices(int n) {
  RankEnumeration out;
  out.rank = n;
  out.matrices.reserve(count_power_matrices(std::max(n, 0)));
  for_each_power_matrix(n, [&](const PowerMatrix& m) { out.matrices.push_back(m); });
  return out;
}

std::size_t count_power_matrices(int n) { return binomial(n + 8, 8).get_ui(); }

std::vector<PowerMatrix> orbit(const PowerMatrix& chi) {
  std::vector<PowerMatrix> images;
  images.reserve(72);
  for (const SymmetryOp& op : symmetry_ops()) images.push_back(apply_symmetry(chi, op));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

std::vector<OrbitValue> evaluate_orbits(int n, EvaluationCache& cache, unsigned threads) {
  std::map<PowerMatrix, std::size_t> sizes;
  for_each_power_matrix(n, [&](const PowerMatrix& m) { ++sizes[canonicalize(m).representative]; });
  std::vector<OrbitValue> out;
  out.reserve(sizes.size());
  for (const auto& [rep, size] : sizes) out.push_back({rep, size, ExactRational()});
  parallel_for(out.size(), threads, [&](std::size_t i) { out[i].value = evaluate(out[i].representative, cache, false); });
  return out;
}

nlohmann::json to_json(const PropositionReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const PowerMatrix& m : report.violations) {
    violations.push_back({{m(0, 0), m(0, 1), m(0, 2)}, {m(1, 0), m(1, 1), m(1, 2)}, {m(2, 0), m(2, 1), m(2, 2)}});
  }
  return {{"rank", report.rank},
          {"claim", report.claim},
          {"checked", report.checked},
          {"violations", violations},
          {"verdict", report.verdict == Verdict::holds ? "holds" : "fails-with-witnesses"}};
}

PropositionReport verify_even_rule(int n, EvaluationCache& cache, unsigned threads) {
  if (n < 0 || n % 2) throw PreconditionError("even rule needs an even rank, got " + std::to_string(n));
  return check_orbits(n, "nonzero iff selection rule", cache, threads, [](const OrbitValue& o) {
    return !o.value.is_zero() != selection_rule(o.representative);
  });
}

PropositionReport verify_odd_rule(int n, EvaluationCache& cache, unsigned threads) {
  if (n < 0 || n % 2 == 0) throw PreconditionError("odd rule needs an odd rank, got " + std::to_string(n));
  return check_orbits(n, "nonzero iff selection rule and det != 0", cache, threads, [](const OrbitValue& o) {
    const bool predicted = selection_rule(o.representative) && determinant(o.representative) != 0;
    return !o.value.is_zero() != predicted;
  });
}

PropositionReport verify_prime_nondivisible(int n, EvaluationCache& cache, unsigned threads) {
  require_odd_prime(n);
  return check_orbits(n, "selection rule and n does not divide det imply nonzero", cache, threads,
                      [n](const OrbitValue& o) {
                        return selection_rule(o.representative) && determinant(o.representative) % n != 0 &&
                               o.value.is_zero();
                      });
}

PropositionReport probe_prime_converse(int n, EvaluationCache& cache, unsigned threads) {
  require_odd_prime(n);
  return check_orbits(n, "nonzero implies n does not divide det", cache, threads, [n](const OrbitValue& o) {
    return !o.value.is_zero() && determinant(o.representative) % n == 0;
  });
}

PowerMatrix counterexample_family(int V, int Y, int W) {
  if (V < 2 || V % 2 || Y < 2 || Y % 2) throw PreconditionError("V and Y must be even and at least 2");
  if (W < 1 || W % 2 == 0 || W > V * Y - 3) throw PreconditionError("W must be odd with 1 <= W <= VY-3");
  return PowerMatrix({{0, 0, 0}, {1, 1, V}, {W, V * Y - W - 2, Y}});
}

ExactRational first_order_term(const PowerMatrix& chi) {
  const int n = chi.rank();
  if (n % 2 == 0) throw PreconditionError("first-order term is defined for odd rank");
  if (!selection_rule(chi)) throw PreconditionError("selection rule fails for " + chi.str());
  const int Q = chi(0, 0), R = chi(0, 1), S = chi(0, 2);
  const int T = chi(1, 0), U = chi(1, 1), V = chi(1, 2);
  const int W = chi(2, 0), X = chi(2, 1), Y = chi(2, 2);
  BigInt num = double_factorial(Q + R + T + U + Y - 2) * double_factorial(T + U + V - 2) *
               double_factorial(Q + R + S - 2) * double_factorial(R + U + X - 2) *
               double_factorial(Q + T + W - 2);
  num *= BigInt(determinant(chi) - static_cast<long>(n) * (static_cast<long>(Q) * U - static_cast<long>(R) * T));
  return ExactRational(num, double_factorial(n));
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::vector<PowerMatrix>> expected_rule_exceptions(int n) {
  if (n < 0) return std::nullopt;
  if (n == 8) return std::vector{canonicalize(PowerMatrix({{0, 0, 0}, {1, 1, 2}, {1, 1, 2}})).representative};
  if (n == 9) return std::vector{canonicalize(PowerMatrix({{1, 1, 1}, {1, 2, 0}, {1, 0, 2}})).representative};
  const bool even_claim = n % 2 == 0 && (n <= 6 || n == 10 || n == 12 || (n + 1 >= 3 && is_prime(n + 1)));
  const bool odd_claim = n % 2 == 1 && (n <= 7 || n == 11 || n == 13);
  if (even_claim || odd_claim) return std::vector<PowerMatrix>{};
  return std::nullopt;
}

PropositionReport verify_vanishing_rule(int n, EvaluationCache& cache, unsigned threads) {
  return n % 2 == 0 ? verify_even_rule(n, cache, threads) : verify_odd_rule(n, cache, threads);
}

}  // namespace rotavg::props
