#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

using RayIndex = std::size_t;
using ConeIndex = std::size_t;
using RaySet = std::vector<RayIndex>;  // strictly increasing

// Raw fan data: ambient dimension, primitive ray generators, maximal cones
// as ray-index sets.
struct Fan {
  std::size_t dim = 0;
  std::vector<IntVec> rays;
  std::vector<RaySet> max_cones;
  std::string name;
};

// An (n-1)-ray subset of a full-dimensional maximal cone, with the maximal
// cones containing it.
struct Wall {
  RaySet rays;
  std::vector<ConeIndex> cones;
};

// A fan that passed simpliciality and the fan axiom, with cached wall
// structure and per-cone multiplicities.
class ValidatedFan {
 public:
  // Checks Fan structural invariants, simpliciality of every maximal cone,
  // and the fan axiom (pairwise intersections are common faces, certified by
  // exact rational separating functionals). Throws ToricError on failure.
  static ValidatedFan validate(const Fan& fan);

  const Fan& fan() const { return fan_; }
  std::size_t dim() const { return fan_.dim; }
  std::size_t num_rays() const { return fan_.rays.size(); }
  const std::vector<Wall>& walls() const { return walls_; }

  // Every maximal cone full-dimensional and every wall in exactly two cones.
  bool is_complete() const { return complete_; }

  // |det| of the cone's ray matrix. Throws NotFullDimensional.
  Int multiplicity(ConeIndex c) const;

  // All multiplicities 1. Requires completeness.
  bool is_smooth() const;

  // Primitive ray generators generate Z^n. Throws NotComplete.
  bool is_simply_connected() const;

  std::vector<IntVec> cone_rays(ConeIndex c) const;

 private:
  explicit ValidatedFan(Fan fan) : fan_(std::move(fan)) {}

  Fan fan_;
  std::vector<Wall> walls_;
  std::vector<std::optional<Int>> multiplicities_;  // per full-dim max cone
  bool complete_ = false;
};

// Summary of all validation checks, with diagnostics instead of exceptions.
struct ValidationReport {
  bool structural_ok = false;
  bool simplicial = false;
  bool fan_axiom_ok = false;
  bool complete = false;
  bool smooth = false;
  bool simply_connected = false;
  std::map<ConeIndex, Int> multiplicities;
  std::vector<std::string> failures;

  bool valid() const { return structural_ok && simplicial && fan_axiom_ok; }
};

ValidationReport validate_report(const Fan& fan);

}  // namespace toric
