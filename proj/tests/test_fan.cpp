#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toric/fan.hpp"
#include "toric/generators.hpp"

using namespace toric;

namespace {

Fan cp2_fan() {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {0, 1}, {-1, -1}};
  f.max_cones = {{0, 1}, {1, 2}, {0, 2}};
  return f;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ToricError& e) {
    return e.kind();
  }
  FAIL("expected a ToricError");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("validate accepts the CP^2 fan") {
  ValidatedFan vf = ValidatedFan::validate(cp2_fan());
  CHECK(vf.is_complete());
  CHECK(vf.is_smooth());
  CHECK(vf.is_simply_connected());
  // The separating functionals found by Fourier-Motzkin exist for small
  // integer coefficients too.
  CHECK(oracles::exhaustive_separator({}, {{Int(1), Int(0)}, {Int(0), Int(1)}},
                                      {{Int(-1), Int(-1)}}, 2, 3));
}

TEST_CASE("validate rejections") {
  SUBCASE("dependent rays in one cone") {
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {-1, 0}, {0, 1}};
    f.max_cones = {{0, 1}, {1, 2}, {0, 2}};
    CHECK(kind_of([&] { ValidatedFan::validate(f); }) ==
          ErrorKind::NotSimplicial);
  }
  SUBCASE("overlapping cones without a common face") {
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {0, 1}, {1, 1}};
    f.max_cones = {{0, 1}, {0, 2}};
    CHECK(kind_of([&] { ValidatedFan::validate(f); }) ==
          ErrorKind::FanAxiomViolation);
    // Cross-check: no small integer separating functional either.
    CHECK_FALSE(oracles::exhaustive_separator(
        {{Int(1), Int(0)}}, {{Int(0), Int(1)}}, {{Int(1), Int(1)}}, 2, 6));
  }
  SUBCASE("duplicate ray") {
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {1, 0}, {0, 1}};
    f.max_cones = {{0, 2}, {1, 2}};
    CHECK(kind_of([&] { ValidatedFan::validate(f); }) == ErrorKind::DuplicateRay);
  }
  SUBCASE("non-primitive ray") {
    Fan f;
    f.dim = 2;
    f.rays = {{2, 0}, {0, 1}};
    f.max_cones = {{0, 1}};
    CHECK(kind_of([&] { ValidatedFan::validate(f); }) ==
          ErrorKind::NonPrimitiveRay);
  }
  SUBCASE("dimension zero") {
    Fan f;
    f.dim = 0;
    CHECK(kind_of([&] { ValidatedFan::validate(f); }) ==
          ErrorKind::InvalidDimension);
  }
}

TEST_CASE("completeness by wall counting") {
  CHECK(ValidatedFan::validate(cp2_fan()).is_complete());

  SUBCASE("a single cone is not complete") {
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {0, 1}};
    f.max_cones = {{0, 1}};
    ValidatedFan vf = ValidatedFan::validate(f);
    CHECK_FALSE(vf.is_complete());
    CHECK_THROWS_AS(vf.is_simply_connected(), ToricError);
  }
  SUBCASE("Hirzebruch fans are complete for any twist") {
    for (long long a = -3; a <= 5; ++a)
      CHECK(ValidatedFan::validate(hirzebruch(a)).is_complete());
  }
}

TEST_CASE("completeness agrees with the exact sampling oracle") {
  std::mt19937 rng(99);
  std::vector<Fan> complete = {cp2_fan(), hirzebruch(2), projective_space(3)};
  for (const Fan& f : complete) {
    ValidatedFan vf = ValidatedFan::validate(f);
    REQUIRE(vf.is_complete());
    CHECK_FALSE(oracles::find_uncovered_point(vf, rng, 1000).has_value());
  }

  Fan half;  // upper half plane only
  half.dim = 2;
  half.rays = {{1, 0}, {0, 1}, {-1, 0}};
  half.max_cones = {{0, 1}, {1, 2}};
  ValidatedFan vf = ValidatedFan::validate(half);
  CHECK_FALSE(vf.is_complete());
  CHECK(oracles::find_uncovered_point(vf, rng, 10000).has_value());
}

TEST_CASE("every wall of a complete fan lies in exactly two cones") {
  for (const Fan& f :
       {cp2_fan(), hirzebruch(3), projective_space(4),
        product(projective_space(1), projective_space(2))}) {
    ValidatedFan vf = ValidatedFan::validate(f);
    REQUIRE(vf.is_complete());
    for (const Wall& w : vf.walls()) CHECK(w.cones.size() == 2);
  }
}

TEST_CASE("multiplicity") {
  Fan p112;
  p112.dim = 2;
  p112.rays = {{1, 0}, {0, 1}, {-1, -2}};
  p112.max_cones = {{0, 1}, {1, 2}, {0, 2}};
  ValidatedFan vf = ValidatedFan::validate(p112);
  CHECK(vf.multiplicity(0) == 1);  // {(1,0),(0,1)}
  CHECK(vf.multiplicity(1) == 1);  // {(0,1),(-1,-2)}
  CHECK(vf.multiplicity(2) == 2);  // {(1,0),(-1,-2)}
  CHECK_FALSE(vf.is_smooth());
  CHECK(vf.is_simply_connected());

  SUBCASE("invariant under ray permutation and unimodular basis change") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long long> shear(-3, 3);
    Fan g = p112;
    // Unimodular change applied to all rays.
    IntMatrix t = IntMatrix::identity(2);
    t.at(0, 1) = shear(rng);
    for (IntVec& r : g.rays) {
      IntVec nr(2, 0);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) nr[i] += t.at(i, j) * r[j];
      r = nr;
    }
    ValidatedFan vg = ValidatedFan::validate(g);
    for (std::size_t c = 0; c < 3; ++c)
      CHECK(vg.multiplicity(c) == vf.multiplicity(c));
  }
}

TEST_CASE("simple connectivity criterion") {
  CHECK(ValidatedFan::validate(cp2_fan()).is_simply_connected());

  // All rays have even coordinate sum: they generate an index-2 sublattice.
  Fan diag;
  diag.dim = 2;
  diag.rays = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  diag.max_cones = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  ValidatedFan vf = ValidatedFan::validate(diag);
  REQUIRE(vf.is_complete());
  CHECK_FALSE(vf.is_simply_connected());
}

TEST_CASE("validation report collects diagnostics") {
  ValidationReport ok = validate_report(cp2_fan());
  CHECK(ok.valid());
  CHECK(ok.complete);
  CHECK(ok.smooth);
  CHECK(ok.simply_connected);
  CHECK(ok.failures.empty());

  Fan bad = cp2_fan();
  bad.rays.push_back({1, 0});
  bad.max_cones.push_back({2, 3});
  ValidationReport rep = validate_report(bad);
  CHECK_FALSE(rep.valid());
  REQUIRE_FALSE(rep.failures.empty());
  CHECK(rep.failures.front().find("DuplicateRay") != std::string::npos);
}
