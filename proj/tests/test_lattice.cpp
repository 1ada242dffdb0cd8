#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toric/lattice.hpp"

using namespace toric;

namespace {

IntVec iv(std::initializer_list<long long> xs) {
  IntVec v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

bool snf_invariants_hold(const IntMatrix& m) {
  SnfResult snf = smith_normal_form(m);
  if (snf.u * m * snf.v != snf.d) return false;
  Int du = determinant(snf.u), dv = determinant(snf.v);
  if (abs(du) != 1 || abs(dv) != 1) return false;
  auto diag = snf.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0) return false;
    if (i > 0 && diag[i - 1] != 0 && diag[i] != 0 && diag[i] % diag[i - 1] != 0)
      return false;
    if (i > 0 && diag[i - 1] == 0 && diag[i] != 0) return false;
  }
  // Off-diagonal of D vanishes.
  for (std::size_t i = 0; i < snf.d.rows(); ++i)
    for (std::size_t j = 0; j < snf.d.cols(); ++j)
      if (i != j && snf.d.at(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("primitive") {
  CHECK(primitive(iv({1, 0})) == iv({1, 0}));
  CHECK(primitive(iv({2, 4, -6})) == iv({1, 2, -3}));
  CHECK_THROWS_AS(primitive(iv({0, 0})), ToricError);

  SUBCASE("idempotent on random vectors") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> entry(-30, 30);
    for (int t = 0; t < 200; ++t) {
      IntVec v(4);
      for (Int& x : v) x = entry(rng);
      if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; }))
        continue;
      IntVec p = primitive(v);
      CHECK(primitive(p) == p);
      CHECK(is_primitive(p));
    }
  }
}

TEST_CASE("smith normal form on pinned examples") {
  SUBCASE("identity") {
    auto snf = smith_normal_form(IntMatrix::identity(2));
    CHECK(snf.d == IntMatrix::identity(2));
  }
  SUBCASE("diag(2,3) has invariant factors 1, 6") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 3;
    auto snf = smith_normal_form(m);
    CHECK(snf.diagonal() == std::vector<Int>{1, 6});
    CHECK(snf.u * m * snf.v == snf.d);
  }
  SUBCASE("1x2 gcd row") {
    IntMatrix m(1, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 4;
    auto snf = smith_normal_form(m);
    CHECK(snf.d.at(0, 0) == 2);
    CHECK(snf.d.at(0, 1) == 0);
  }
}

TEST_CASE("smith normal form invariants on random matrices") {
  std::mt19937 rng(42);
  for (int t = 0; t < 300; ++t) {
    IntMatrix m = oracles::random_matrix(rng);
    CAPTURE(t);
    CHECK(snf_invariants_hold(m));
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix::identity(3)) == 1);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), ToricError);
  IntMatrix m = IntMatrix::from_cols({iv({0, 1}), iv({-1, -2})});
  CHECK(determinant(m) == 1);
  CHECK(oracles::cofactor_determinant(m) == 1);

  SUBCASE("matches cofactor expansion and SNF diagonal up to sign") {
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
      IntMatrix a = oracles::random_matrix(rng, 5);
      if (a.rows() != a.cols()) continue;
      Int d = determinant(a);
      CHECK(d == oracles::cofactor_determinant(a));
      Int prod = 1;
      for (const Int& x : smith_normal_form(a).diagonal()) prod *= x;
      CHECK(abs(d) == prod);
    }
  }
}

TEST_CASE("cokernel invariants") {
  SUBCASE("zero map") {
    auto inv = cokernel_invariants(IntMatrix(2, 0));
    CHECK(inv.free_rank == 2);
    CHECK(inv.torsion.empty());
  }
  SUBCASE("diag(1,2)") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(1, 1) = 2;
    auto inv = cokernel_invariants(m);
    CHECK(inv.free_rank == 0);
    CHECK(inv.torsion == std::vector<Int>{2});
  }
  SUBCASE("CP^2 divisor relation matrix") {
    IntMatrix m = IntMatrix::from_cols({iv({1, 0, -1}), iv({0, 1, -1})});
    auto inv = cokernel_invariants(m);
    CHECK(inv.free_rank == 1);
    CHECK(inv.torsion.empty());
  }
  SUBCASE("invariant under column permutation") {
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
      IntMatrix m = oracles::random_matrix(rng, 4);
      std::vector<IntVec> cols;
      for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
      auto base = cokernel_invariants(m);
      std::shuffle(cols.begin(), cols.end(), rng);
      CHECK(cokernel_invariants(IntMatrix::from_cols(cols)) == base);
    }
  }
}

TEST_CASE("lattice_spans") {
  CHECK(lattice_spans({iv({1, 0}), iv({0, 1})}, 2));
  CHECK_FALSE(lattice_spans({iv({2, 0}), iv({0, 1})}, 2));
  CHECK_FALSE(lattice_spans({iv({1, 0})}, 2));
  CHECK(lattice_spans({iv({2, 1}), iv({1, 1})}, 2));
}

TEST_CASE("hermite normal form") {
  // HNF is a canonical form: unimodular row mixes of the same lattice agree.
  IntMatrix a = IntMatrix::from_rows({iv({1, 0, 1, 3}), iv({0, 1, 0, 1})});
  IntMatrix mixed =
      IntMatrix::from_rows({iv({1, 1, 1, 4}), iv({2, 3, 2, 9})});  // row ops
  CHECK(hermite_normal_form(a) == hermite_normal_form(mixed));

  std::mt19937 rng(23);
  std::uniform_int_distribution<long long> entry(-4, 4);
  for (int t = 0; t < 50; ++t) {
    IntMatrix m = oracles::random_matrix(rng, 4);
    // Random unimodular row operation.
    IntMatrix u = IntMatrix::identity(m.rows());
    if (m.rows() >= 2) u.at(0, m.rows() - 1) = entry(rng);
    CHECK(hermite_normal_form(u * m) == hermite_normal_form(m));
  }
}
