#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rotavg/evaluator.hpp"
#include "rotavg/power_matrix.hpp"

namespace rotavg::props {

struct RankEnumeration {
  int rank = 0;
  std::vector<PowerMatrix> matrices;  // lexicographic, each exactly once
};

/// Every nonnegative 3x3 integer matrix with entry sum n. Throws
/// PreconditionError for negative n.
RankEnumeration enumerate_power_matrices(int n);
void for_each_power_matrix(int n, const std::function<void(const PowerMatrix&)>& visit);
/// C(n+8, 8)
std::size_t count_power_matrices(int n);

/// All distinct images of chi under the 72 symmetry ops, sorted.
std::vector<PowerMatrix> orbit(const PowerMatrix& chi);

struct OrbitValue {
  PowerMatrix representative;
  std::size_t orbit_size = 0;
  ExactRational value;  // value at the representative
};

/// One entry per symmetry orbit of rank n, sorted by representative, with
/// values computed in parallel.
std::vector<OrbitValue> evaluate_orbits(int n, EvaluationCache& cache, unsigned threads = 1);

enum class Verdict { holds, fails_with_witnesses };

struct PropositionReport {
  int rank = 0;
  std::string claim;
  std::size_t checked = 0;               // matrices covered, counting whole orbits
  std::vector<PowerMatrix> violations;   // one canonical witness per orbit
  Verdict verdict = Verdict::holds;
};

nlohmann::json to_json(const PropositionReport& report);

/// "nonzero iff selection rule", for even n.
PropositionReport verify_even_rule(int n, EvaluationCache& cache, unsigned threads = 1);
/// "nonzero iff selection rule and det != 0", for odd n.
PropositionReport verify_odd_rule(int n, EvaluationCache& cache, unsigned threads = 1);
/// Odd prime n: selection rule and n not dividing det imply nonzero.
PropositionReport verify_prime_nondivisible(int n, EvaluationCache& cache, unsigned threads = 1);
/// Odd prime n: scans for nonzero averages whose det is divisible by n (the
/// converse of the rule above). Witnesses found land in `violations`.
PropositionReport probe_prime_converse(int n, EvaluationCache& cache, unsigned threads = 1);

/// [[0,0,0],[1,1,V],[W,VY-W-2,Y]] for even V,Y >= 2 and odd 1 <= W <= VY-3.
/// Throws PreconditionError outside that range.
PowerMatrix counterexample_family(int V, int Y, int W);

/// Closed aggregate of the q+r+t+u = 1 summands of the closed-form sum
/// (without the common prefactor). Requires odd rank and the selection rule.
ExactRational first_order_term(const PowerMatrix& chi);

bool is_prime(int n);

/// Canonical witnesses expected to violate the even/odd vanishing rule at
/// rank n: empty where the rule is known to hold exactly (even n in
/// {0,2,4,6,10,12} or n+1 an odd prime; odd n in {1,3,5,7,11,13}), the single
/// known orbit at ranks 8 and 9, and nullopt where nothing is claimed.
std::optional<std::vector<PowerMatrix>> expected_rule_exceptions(int n);

/// Runs the rule matching the parity of n.
PropositionReport verify_vanishing_rule(int n, EvaluationCache& cache, unsigned threads = 1);

}  // namespace rotavg::props
