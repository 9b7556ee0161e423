#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "generators.hpp"
#include "rotavg/errors.hpp"
#include "rotavg/props.hpp"
#include "rotavg/symmetry.hpp"

using namespace rotavg;
using namespace rotavg::props;

namespace {

const PowerMatrix kRank8Exception({{0, 0, 0}, {1, 1, 2}, {1, 1, 2}});
const PowerMatrix kRank9Exception({{1, 1, 1}, {1, 2, 0}, {1, 0, 2}});

/// Every rank-n matrix violating the vanishing rule, found by direct closed
/// form evaluation of each matrix (no canonicalisation or cache involved).
std::set<PowerMatrix> direct_violations(int n) {
  std::set<PowerMatrix> out;
  for_each_power_matrix(n, [&](const PowerMatrix& m) {
    const bool rule = selection_rule(m);
    const bool nonzero = rule && !evaluate_closed_form(m).is_zero();
    const bool predicted = n % 2 == 0 ? rule : rule && determinant(m) != 0;
    if (nonzero != predicted) out.insert(m);
  });
  return out;
}

}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(enumerate_power_matrices(0).matrices.size() == 1);
  CHECK(enumerate_power_matrices(1).matrices.size() == 9);
  CHECK(enumerate_power_matrices(4).matrices.size() == 495);
  for (int n = 0; n <= 14; ++n) {
    const auto e = enumerate_power_matrices(n);
    CHECK(e.matrices.size() == count_power_matrices(n));
    CHECK(std::is_sorted(e.matrices.begin(), e.matrices.end()));
    CHECK(std::adjacent_find(e.matrices.begin(), e.matrices.end()) == e.matrices.end());
    for (const auto& m : e.matrices) CHECK(m.rank() == n);
  }
  CHECK_THROWS_AS(enumerate_power_matrices(-1), PreconditionError);
}

TEST_CASE("orbit sizes partition the enumeration") {
  EvaluationCache cache;
  for (int n = 0; n <= 8; ++n) {
    std::size_t total = 0;
    for (const auto& o : evaluate_orbits(n, cache)) {
      total += o.orbit_size;
      CHECK(orbit(o.representative).size() == o.orbit_size);
      CHECK(canonicalize(o.representative).representative == o.representative);
    }
    CHECK(total == count_power_matrices(n));
  }
}

TEST_CASE("even rule at small ranks") {
  EvaluationCache cache;
  for (int n : {0, 2, 4, 6}) {
    const auto r = verify_even_rule(n, cache);
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.checked == count_power_matrices(n));
  }
  CHECK(verify_even_rule(4, cache).checked == 495);
  CHECK_THROWS_AS(verify_even_rule(3, cache), PreconditionError);
}

TEST_CASE("rank 8 exceptions are exactly one orbit") {
  EvaluationCache cache;
  const auto r = verify_even_rule(8, cache);
  CHECK(r.verdict == Verdict::fails_with_witnesses);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0] == canonicalize(kRank8Exception).representative);
  const auto expected = orbit(kRank8Exception);
  CHECK(direct_violations(8) == std::set<PowerMatrix>(expected.begin(), expected.end()));
}

TEST_CASE("odd rule at small ranks") {
  EvaluationCache cache;
  for (int n : {1, 3, 5, 7}) CHECK(verify_odd_rule(n, cache).verdict == Verdict::holds);
  CHECK_THROWS_AS(verify_odd_rule(2, cache), PreconditionError);
}

TEST_CASE("rank 9 exceptions are exactly one orbit") {
  EvaluationCache cache;
  const auto r = verify_odd_rule(9, cache);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0] == canonicalize(kRank9Exception).representative);
  const auto expected = orbit(kRank9Exception);
  CHECK(direct_violations(9) == std::set<PowerMatrix>(expected.begin(), expected.end()));
}

TEST_CASE("prime rank divisibility rule") {
  EvaluationCache cache;
  for (int n : {3, 5, 7}) CHECK(verify_prime_nondivisible(n, cache).verdict == Verdict::holds);
  CHECK_THROWS_AS(verify_prime_nondivisible(9, cache), PreconditionError);
  CHECK_THROWS_AS(probe_prime_converse(2, cache), PreconditionError);
  // whatever the probe finds must be a genuine converse witness
  for (const auto& m : probe_prime_converse(7, cache).violations) {
    CHECK(determinant(m) % 7 == 0);
    CHECK_FALSE(evaluate(m).is_zero());
  }
}

TEST_CASE("reports are independent of thread count") {
  EvaluationCache a, b;
  const auto r1 = verify_even_rule(8, a, 1);
  const auto r4 = verify_even_rule(8, b, 4);
  CHECK(to_json(r1) == to_json(r4));
}

TEST_CASE("counterexample family") {
  CHECK(counterexample_family(2, 2, 1) == kRank8Exception);
  for (auto [V, Y, W] : {std::tuple{2, 4, 1}, std::tuple{4, 2, 3}}) {
    const PowerMatrix m = counterexample_family(V, Y, W);
    CHECK(m.rank() == 14);
    CHECK(m.rank() == (V + 1) * (Y + 1) - 1);
    CHECK(selection_rule(m));
    CHECK(evaluate(m).is_zero());
  }
  CHECK_THROWS_AS(counterexample_family(3, 2, 1), PreconditionError);
  CHECK_THROWS_AS(counterexample_family(2, 2, 2), PreconditionError);
  CHECK_THROWS_AS(counterexample_family(2, 2, 3), PreconditionError);
  CHECK_THROWS_AS(counterexample_family(0, 2, 1), PreconditionError);
}

TEST_CASE("first-order term matches the extracted summands") {
  auto extracted = [](const PowerMatrix& m) {
    ExactRational sum;
    for (const auto& t : closed_form_expansion(m).terms) {
      if (t.q + t.r + t.t + t.u == 1) sum += t.term;
    }
    return sum;
  };
  const PowerMatrix id({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(first_order_term(id) == extracted(id));
  CHECK(first_order_term(id).str() == "-2/3");

  std::mt19937_64 rng(73);
  for (int i = 0; i < 100; ++i) {
    const PowerMatrix m = testing::random_admissible(rng, 5, 5);
    CHECK(first_order_term(m) == extracted(m));
    const PowerMatrix m7 = testing::random_admissible(rng, 7, 11);
    if (m7.rank() % 2) CHECK(first_order_term(m7) == extracted(m7));
  }

  // bracket det - n(QU - RT) vanishes
  const PowerMatrix flat({{0, 0, 1}, {0, 0, 1}, {1, 1, 1}});
  CHECK(determinant(flat) == 0);
  CHECK(first_order_term(flat).is_zero());

  CHECK_THROWS_AS(first_order_term(PowerMatrix({{2, 0, 0}, {0, 0, 0}, {0, 0, 0}})), PreconditionError);
  CHECK_THROWS_AS(first_order_term(PowerMatrix({{1, 1, 1}, {0, 0, 0}, {0, 0, 0}})), PreconditionError);
}

TEST_CASE("expected exception table") {
  CHECK(expected_rule_exceptions(4)->empty());
  CHECK(expected_rule_exceptions(13)->empty());
  CHECK(expected_rule_exceptions(16)->empty());  // 17 is prime
  CHECK(expected_rule_exceptions(8)->size() == 1);
  CHECK(expected_rule_exceptions(9)->size() == 1);
  CHECK_FALSE(expected_rule_exceptions(14).has_value());
  CHECK_FALSE(expected_rule_exceptions(15).has_value());
}
