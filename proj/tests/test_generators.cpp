#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toric/complex.hpp"
#include "toric/generators.hpp"

using namespace toric;

namespace {

BottTowerSpec random_bott_spec(std::mt19937& rng, std::size_t max_total_dim) {
  std::uniform_int_distribution<std::size_t> nstages(1, 3);
  std::uniform_int_distribution<long long> deg(-3, 3);
  BottTowerSpec spec;
  std::size_t total = 0;
  std::size_t stages = nstages(rng);
  for (std::size_t s = 0; s < stages && total < max_total_dim; ++s) {
    std::uniform_int_distribution<std::size_t> ndim(
        1, std::min<std::size_t>(3, max_total_dim - total));
    BottStage stage;
    stage.fiber_dim = ndim(rng);
    for (std::size_t t = 0; t < stage.fiber_dim; ++t) {
      std::vector<long long> d(total);
      for (long long& x : d) x = deg(rng);
      stage.degrees.push_back(std::move(d));
    }
    total += stage.fiber_dim;
    spec.stages.push_back(std::move(stage));
  }
  return spec;
}

}  // namespace

TEST_CASE("projective space fans") {
  Fan p1 = projective_space(1);
  CHECK(p1.rays == std::vector<IntVec>{{1}, {-1}});
  CHECK(p1.max_cones == std::vector<RaySet>{{0}, {1}});

  Fan p2 = projective_space(2);
  CHECK(p2.rays == std::vector<IntVec>{{1, 0}, {0, 1}, {-1, -1}});
  CHECK_THROWS_AS(projective_space(0), ToricError);

  for (std::size_t n = 1; n <= 5; ++n) {
    ValidatedFan vf = ValidatedFan::validate(projective_space(n));
    CHECK(vf.is_complete());
    CHECK(vf.is_smooth());
    Classification c = classify(vf);
    REQUIRE(c.elliptic);
    CHECK(c.blocks.size() == 1);
    CHECK(c.blocks[0].size() == n + 1);
  }
}

TEST_CASE("weighted projective fans") {
  CHECK(fans_isomorphic(weighted_projective({1, 1, 1}), projective_space(2)));

  SUBCASE("P(1,1,2)") {
    Fan f = weighted_projective({1, 1, 2});
    Fan expect;
    expect.dim = 2;
    expect.rays = {{1, 0}, {0, 1}, {-1, -2}};
    expect.max_cones = {{0, 1}, {1, 2}, {0, 2}};
    CHECK(fans_isomorphic(f, expect));
    // The defining relation sum q_i v_i = 0 holds on the rays as generated.
    for (std::size_t j = 0; j < 2; ++j) {
      Int s = f.rays[0][j] + f.rays[1][j] + 2 * f.rays[2][j];
      CHECK(s == 0);
    }
  }
  SUBCASE("weight position does not matter") {
    for (const auto& w : std::vector<std::vector<long long>>{
             {2, 1, 1}, {1, 2, 1}, {1, 1, 2}})
      CHECK(fans_isomorphic(weighted_projective(w),
                            weighted_projective({1, 1, 2})));
  }
  SUBCASE("invalid weights") {
    CHECK_THROWS_AS(weighted_projective({2, 4}), ToricError);
    CHECK_THROWS_AS(weighted_projective({1, 0, 1}), ToricError);
    CHECK_THROWS_AS(weighted_projective({3}), ToricError);
  }
  SUBCASE("P(1,2,3) validates and is complete") {
    ValidatedFan vf = ValidatedFan::validate(weighted_projective({1, 2, 3}));
    CHECK(vf.is_complete());
    CHECK(vf.is_simply_connected());
    CHECK_FALSE(vf.is_smooth());
  }
}

TEST_CASE("product fans") {
  Fan p1xp1 = product(projective_space(1), projective_space(1));
  CHECK(p1xp1.rays.size() == 4);
  CHECK(p1xp1.max_cones.size() == 4);
  CHECK(fans_isomorphic(p1xp1, hirzebruch(0)));

  Fan p1xp2 = product(projective_space(1), projective_space(2));
  CHECK(p1xp2.rays.size() == 5);
  CHECK(p1xp2.max_cones.size() == 6);
  CHECK(ValidatedFan::validate(p1xp2).is_complete());

  SUBCASE("the underlying complex of a product is the join") {
    SimplicialComplex c =
        underlying_complex(ValidatedFan::validate(p1xp2));
    auto blocks = join_decomposition(c);
    REQUIRE(blocks.has_value());
    CHECK(blocks->size() == 2);
  }
}

TEST_CASE("generalized Bott fans") {
  SUBCASE("single untwisted stage is projective space") {
    BottTowerSpec spec;
    spec.stages.push_back(BottStage{3, {}});
    CHECK(fans_isomorphic(generalized_bott_fan(spec), projective_space(3)));
  }
  SUBCASE("two CP^1 stages with twist a give the Hirzebruch surface") {
    for (long long a = 0; a <= 3; ++a) {
      BottTowerSpec spec;
      spec.stages.push_back(BottStage{1, {}});
      spec.stages.push_back(BottStage{1, {{a}}});
      CHECK(fans_isomorphic(generalized_bott_fan(spec), hirzebruch(a)));
    }
  }
  SUBCASE("a (2,1) tower is elliptic with blocks of sizes 3 and 2") {
    BottTowerSpec spec;
    spec.stages.push_back(BottStage{2, {}});
    spec.stages.push_back(BottStage{1, {{2, -1}}});
    Fan f = generalized_bott_fan(spec);
    CHECK(f.rays.size() == 5);
    CHECK(f.dim == 3);
    ValidatedFan vf = ValidatedFan::validate(f);
    Classification c = classify(vf);
    REQUIRE(c.elliptic);
    std::multiset<std::size_t> sizes;
    for (const VertexSet& b : c.blocks) sizes.insert(b.size());
    CHECK(sizes == std::multiset<std::size_t>{2, 3});
  }
  SUBCASE("random towers validate, are smooth and classify as elliptic") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 25; ++t) {
      BottTowerSpec spec = random_bott_spec(rng, 4);
      Fan f = generalized_bott_fan(spec);
      ValidatedFan vf = ValidatedFan::validate(f);
      CHECK(vf.is_complete());
      CHECK(vf.is_smooth());
      CHECK(vf.is_simply_connected());
      Classification c = classify(vf);
      REQUIRE(c.elliptic);
      std::multiset<std::size_t> expect, got;
      for (const BottStage& s : spec.stages) expect.insert(s.fiber_dim + 1);
      for (const VertexSet& b : c.blocks) got.insert(b.size());
      CHECK(got == expect);
    }
  }
  SUBCASE("bad specs are rejected") {
    CHECK_THROWS_AS(generalized_bott_fan(BottTowerSpec{}), ToricError);
    BottTowerSpec bad;
    bad.stages.push_back(BottStage{1, {{1, 2, 3}}});  // no earlier coords
    CHECK_THROWS_AS(generalized_bott_fan(bad), ToricError);
  }
}

TEST_CASE("star subdivision") {
  ValidatedFan cp2 = ValidatedFan::validate(projective_space(2));

  SUBCASE("blowing up a point of CP^2 gives the first Hirzebruch surface") {
    Fan f = star_subdivision(cp2, {0, 1});
    CHECK(f.rays.size() == 4);
    CHECK(f.rays.back() == IntVec{1, 1});
    CHECK(f.max_cones.size() == 4);
    CHECK(fans_isomorphic(f, hirzebruch(1)));
    CHECK(classify(ValidatedFan::validate(f)).elliptic);
  }
  SUBCASE("subdividing all three 2-cones gives a non-elliptic hexagon") {
    Fan f = star_subdivision(cp2, {0, 1});
    f = star_subdivision(ValidatedFan::validate(f), {1, 2});
    f = star_subdivision(ValidatedFan::validate(f), {0, 2});
    CHECK(f.rays.size() == 6);
    ValidatedFan vf = ValidatedFan::validate(f);
    CHECK(vf.is_complete());
    CHECK_FALSE(classify(vf).elliptic);
  }
  SUBCASE("unknown cone") {
    CHECK_THROWS_AS(star_subdivision(cp2, {0, 1, 2}), ToricError);
    CHECK_THROWS_AS(star_subdivision(cp2, {7}), ToricError);
  }
  SUBCASE("subdividing a full cone in dim n replaces it by n cones") {
    for (const Fan& base : {projective_space(2), projective_space(3)}) {
      ValidatedFan vf = ValidatedFan::validate(base);
      Fan f = star_subdivision(vf, vf.fan().max_cones[0]);
      CHECK(f.rays.size() == base.rays.size() + 1);
      CHECK(f.max_cones.size() == base.max_cones.size() + base.dim - 1);
      CHECK(ValidatedFan::validate(f).is_complete());
    }
  }
}

TEST_CASE("every generator output validates, is complete and simply connected") {
  std::mt19937 rng(7);
  std::vector<Fan> corpus = {
      projective_space(1), projective_space(4), weighted_projective({1, 1, 2}),
      weighted_projective({1, 2, 3}), weighted_projective({2, 3, 5}),
      hirzebruch(-2), hirzebruch(5),
      product(projective_space(2), hirzebruch(1))};
  for (int t = 0; t < 5; ++t)
    corpus.push_back(generalized_bott_fan(random_bott_spec(rng, 4)));
  for (const Fan& f : corpus) {
    ValidatedFan vf = ValidatedFan::validate(f);
    CHECK(vf.is_complete());
    CHECK(vf.is_simply_connected());
  }
}

TEST_CASE("fan isomorphism search") {
  CHECK(fans_isomorphic(projective_space(2), projective_space(2)));
  CHECK_FALSE(fans_isomorphic(projective_space(2), projective_space(3)));
  CHECK_FALSE(fans_isomorphic(hirzebruch(0), hirzebruch(1)));
  CHECK(fans_isomorphic(hirzebruch(1), hirzebruch(-1)));
  CHECK_FALSE(
      fans_isomorphic(weighted_projective({1, 1, 2}), projective_space(2)));
}
