#pragma once

#include <optional>
#include <vector>

#include "toric/complex.hpp"
#include "toric/fan.hpp"

namespace toric {

// The open set Y removed coordinate subspaces description: z lies in Y iff
// its zero set contains no removed subspace index set.
struct YDescription {
  std::size_t ambient_dim = 0;               // |I|
  std::vector<VertexSet> removed_subspaces;  // minimal non-faces
  // n_i values when Y factors as a product of punctured affine spaces
  // C^{n_i+1} - {0}.
  std::optional<std::vector<std::size_t>> product_factors;
};

// The abelian group G with the characters by which it scales each
// coordinate. Weight coordinates: free part first (free_rank entries), then
// one entry per torsion factor, reduced mod that factor.
struct GroupPresentation {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;             // invariant factors > 1
  std::vector<IntVec> weights;          // one per ray
};

struct QuotientPresentation {
  YDescription y;
  GroupPresentation group;
  std::vector<std::vector<Int>> stabilizers;  // per maximal cone
  bool smooth_case = false;
};

YDescription y_description(const ValidatedFan& vf);

// Free rank and torsion of the divisor class group: cokernel of
// m -> (<m, v_i>)_i from Z^n to Z^I. Throws NotComplete.
CokernelInvariants class_group(const ValidatedFan& vf);

GroupPresentation weight_matrix(const ValidatedFan& vf);

// Invariant factors > 1 of Z^n modulo the span of the cone's rays; their
// product is the cone's multiplicity. Throws NotFullDimensional.
std::vector<Int> stabilizer_invariants(const ValidatedFan& vf, ConeIndex c);

// Full Cox presentation for an elliptic fan. Throws NotElliptic.
QuotientPresentation quotient_presentation(const ValidatedFan& vf);

struct HomotopyDegrees {
  std::vector<std::size_t> even;  // k copies of 2
  std::vector<std::size_t> odd;   // 2 n_i + 1, sorted
};

HomotopyDegrees rational_homotopy_degrees(const Classification& cls);

// HNF canonical form of the weight data (weight matrix augmented with the
// torsion relations); equal presentations up to basis change agree here.
IntMatrix canonical_weights(const GroupPresentation& g);

}  // namespace toric
