#pragma once

#include <optional>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

using RatVec = std::vector<Rat>;

// One linear constraint  coeffs . x  (relation)  rhs.
struct LinConstraint {
  RatVec coeffs;
  Rat rhs;
  bool equality = false;  // otherwise coeffs . x >= rhs
};

// Exact feasibility of a system of linear constraints by Fourier-Motzkin
// elimination. Exponential in the worst case; the systems here have at most
// a handful of variables.
bool fm_feasible(const std::vector<LinConstraint>& constraints,
                 std::size_t num_vars);

// Exact solution of A x = b over Q (A given by integer rows). Returns one
// solution or nullopt when inconsistent; free variables are set to zero.
std::optional<RatVec> solve_linear(const std::vector<IntVec>& rows,
                                   const RatVec& rhs);

// Membership of a rational point in the simplicial cone spanned by the
// given linearly independent integer rays: p = sum lambda_i v_i, lambda >= 0.
bool point_in_simplicial_cone(const std::vector<IntVec>& rays,
                              const RatVec& point);

}  // namespace toric
