#pragma once

#include <vector>

#include "toric/fan.hpp"

namespace toric {

// One stage of a generalized Bott tower: a CP^{fiber_dim} fiber whose
// twisting line bundles have the given degrees over the coordinates of all
// earlier stages.
struct BottStage {
  std::size_t fiber_dim = 0;
  // fiber_dim degree vectors, each of length sum of earlier fiber_dims.
  std::vector<std::vector<long long>> degrees;
};

struct BottTowerSpec {
  std::vector<BottStage> stages;
};

// Fan of CP^n: rays e_1..e_n and -(e_1+...+e_n), all n-subsets as cones.
Fan projective_space(std::size_t n);

// Fan of the weighted projective space P(q_0,...,q_n); weights must be
// positive with gcd 1 and well-formed (each n-subset coprime).
Fan weighted_projective(const std::vector<long long>& weights);

// Standard Hirzebruch surface fan: (1,0),(0,1),(-1,a),(0,-1).
Fan hirzebruch(long long a);

// Product fan: embedded rays of both factors, cones = pairwise unions.
Fan product(const Fan& f1, const Fan& f2);

Fan generalized_bott_fan(const BottTowerSpec& spec);

// Stellar subdivision at the cone with the given ray set (which must span a
// cone of the fan): inserts the primitive sum of its rays as a new ray.
Fan star_subdivision(const ValidatedFan& vf, const RaySet& cone);

// Fan isomorphism up to unimodular lattice change and ray relabeling;
// backtracking search, intended for small test fans.
bool fans_isomorphic(const Fan& f1, const Fan& f2);

}  // namespace toric
