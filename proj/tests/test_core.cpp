#include <doctest.h>

#include <random>
#include <set>

#include "generators.hpp"
#include "rotavg/errors.hpp"
#include "rotavg/power_matrix.hpp"
#include "rotavg/rational.hpp"
#include "rotavg/symmetry.hpp"

using namespace rotavg;

TEST_CASE("rational text form") {
  CHECK(ExactRational::parse("6/36").str() == "1/6");
  CHECK(ExactRational::parse(" -4/2 ").str() == "-2");
  CHECK(ExactRational::parse("0/5").str() == "0");
  CHECK(ExactRational::parse("1/1").str() == "1");
  CHECK_THROWS_AS(ExactRational::parse("3/-4"), ParseError);
}

TEST_CASE("rational parse errors") {
  CHECK_THROWS_AS(ExactRational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(ExactRational::parse("abc"), ParseError);
  CHECK_THROWS_AS(ExactRational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(ExactRational::parse(""), ParseError);
  CHECK_THROWS_AS(ExactRational::parse("1/"), ParseError);
}

TEST_CASE("rational arithmetic stays in lowest terms") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  for (int i = 0; i < 500; ++i) {
    const ExactRational a(BigInt(num(rng)), BigInt(den(rng)));
    const ExactRational b(BigInt(num(rng)), BigInt(den(rng)));
    for (const ExactRational& r : {a + b, a - b, a * b, -a}) {
      CHECK(gcd(r.numerator(), r.denominator()) == 1);
      CHECK(r.denominator() > 0);
      CHECK(ExactRational::parse(r.str()) == r);
    }
  }
}

TEST_CASE("from_multi_index tallies pairs") {
  CHECK(from_multi_index({{1}, {1}}) == PowerMatrix({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  const PowerMatrix empty = from_multi_index({{}, {}});
  CHECK(empty == PowerMatrix());
  CHECK(empty.rank() == 0);
  CHECK(from_multi_index({{2, 3, 2}, {3, 2, 3}}) == PowerMatrix({{0, 0, 0}, {0, 0, 2}, {0, 1, 0}}));
  CHECK_THROWS_AS(from_multi_index({{1, 2}, {1}}), PreconditionError);
  CHECK_THROWS_AS(from_multi_index({{4}, {1}}), PreconditionError);
  CHECK_THROWS_AS(from_multi_index({{1}, {0}}), PreconditionError);
}

TEST_CASE("from_multi_index rank equals length") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> idx(1, 3), len(0, 15);
  for (int i = 0; i < 200; ++i) {
    MultiIndex m;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) {
      m.lab.push_back(idx(rng));
      m.mol.push_back(idx(rng));
    }
    CHECK(from_multi_index(m).rank() == n);
  }
}

TEST_CASE("negative entries are rejected") {
  CHECK_THROWS_AS(PowerMatrix({{0, -1, 0}, {0, 0, 0}, {0, 0, 0}}), PreconditionError);
}

TEST_CASE("selection rule") {
  CHECK(selection_rule(PowerMatrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  CHECK_FALSE(selection_rule(PowerMatrix({{1, 1, 0}, {0, 0, 0}, {0, 0, 0}})));
  CHECK(selection_rule(PowerMatrix({{0, 0, 0}, {1, 1, 2}, {1, 1, 2}})));
  CHECK(selection_rule(PowerMatrix()));
  // a single unit entry never passes: two rows have sum 0
  for (int c = 0; c < 9; ++c) {
    PowerMatrix::Entries e{};
    e[static_cast<std::size_t>(c)] = 1;
    CHECK_FALSE(selection_rule(PowerMatrix(e)));
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(PowerMatrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 1);
  CHECK(determinant(PowerMatrix({{1, 1, 1}, {1, 2, 0}, {1, 0, 2}})) == 0);
  CHECK(determinant(PowerMatrix({{3, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
}

TEST_CASE("apply_symmetry examples") {
  const PowerMatrix m({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK(apply_symmetry(m, SymmetryOp{}) == m);
  CHECK(apply_symmetry(m, SymmetryOp{{0, 1, 2}, {0, 1, 2}, true}) == PowerMatrix({{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}));
  const PowerMatrix id({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(apply_symmetry(id, SymmetryOp{{1, 0, 2}, {0, 1, 2}, false}) == PowerMatrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
}

TEST_CASE("symmetry group has 72 distinct closed elements") {
  const auto ops = symmetry_ops();
  const PowerMatrix probe({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  std::set<PowerMatrix> images;
  for (const auto& op : ops) images.insert(apply_symmetry(probe, op));
  CHECK(images.size() == 72);
  CHECK(ops[0] == SymmetryOp{});
  int odd = 0;
  for (const auto& a : ops) {
    odd += a.sign() < 0;
    for (const auto& b : ops) {
      const SymmetryOp c = compose(a, b);
      CHECK(c.sign() == a.sign() * b.sign());
    }
  }
  CHECK(odd == 36);
}

TEST_CASE("canonicalize examples") {
  const PowerMatrix id({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const PowerMatrix swapped({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  const CanonicalForm a = canonicalize(id);
  const CanonicalForm b = canonicalize(swapped);
  CHECK(a.representative == b.representative);
  CHECK(a.representative == PowerMatrix({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  CHECK(b.sign == -a.sign);

  const CanonicalForm self = canonicalize(a.representative);
  CHECK(self.representative == a.representative);
  CHECK(self.sign == 1);

  // two equal rows at odd rank
  CHECK(canonicalize(PowerMatrix({{1, 0, 0}, {1, 0, 0}, {0, 0, 1}})).sign == 0);
  CHECK(canonicalize(PowerMatrix({{1, 1, 1}, {1, 1, 1}, {0, 0, 1}})).sign == 0);
  // even rank always +1
  CHECK(canonicalize(PowerMatrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}})).sign == 1);
}

TEST_CASE("canonical representative is orbit invariant and minimal") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const PowerMatrix m = testing::random_power_matrix(rng, static_cast<int>(rng() % 12));
    const CanonicalForm c = canonicalize(m);
    for (const auto& op : symmetry_ops()) {
      const PowerMatrix image = apply_symmetry(m, op);
      CHECK(canonicalize(image).representative == c.representative);
      CHECK_FALSE(image < c.representative);
      CHECK(selection_rule(image) == selection_rule(m));
    }
  }
}

TEST_CASE("determinant transforms with permutation sign") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const PowerMatrix m = testing::random_power_matrix(rng, 9);
    CHECK(determinant(m.transposed()) == determinant(m));
    for (const auto& op : symmetry_ops()) CHECK(determinant(apply_symmetry(m, op)) == op.sign() * determinant(m));
  }
}
