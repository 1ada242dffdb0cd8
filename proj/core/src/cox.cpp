#include "toric/cox.hpp"

#include <algorithm>
#include <cassert>

namespace toric {

YDescription y_description(const ValidatedFan& vf) {
  YDescription y;
  y.ambient_dim = vf.num_rays();
  auto complex = underlying_complex(vf);
  y.removed_subspaces = minimal_nonfaces(complex);
  if (auto blocks = join_decomposition(complex)) {
    std::vector<std::size_t> factors;
    for (const VertexSet& b : *blocks) factors.push_back(b.size() - 1);
    y.product_factors = std::move(factors);
  }
  return y;
}

namespace {

// Rows are the ray generators: the matrix of m -> (<m, v_i>)_i.
IntMatrix ray_map_matrix(const ValidatedFan& vf) {
  return IntMatrix::from_rows(vf.fan().rays);
}

}  // namespace

CokernelInvariants class_group(const ValidatedFan& vf) {
  if (!vf.is_complete())
    throw ToricError(ErrorKind::NotComplete,
                     "class group requires a complete fan");
  return cokernel_invariants(ray_map_matrix(vf));
}

GroupPresentation weight_matrix(const ValidatedFan& vf) {
  if (!vf.is_complete())
    throw ToricError(ErrorKind::NotComplete,
                     "weight matrix requires a complete fan");
  IntMatrix m = ray_map_matrix(vf);
  SnfResult snf = smith_normal_form(m);
  std::size_t num_rays = vf.num_rays();
  auto diag = snf.diagonal();
  diag.resize(num_rays, Int(0));  // rows below min(|I|, n) are free

  GroupPresentation g;
  std::vector<std::size_t> free_rows, torsion_rows;
  for (std::size_t j = 0; j < num_rays; ++j) {
    if (diag[j] == 0) free_rows.push_back(j);
    else if (diag[j] > 1) torsion_rows.push_back(j);
  }
  g.free_rank = free_rows.size();
  for (std::size_t j : torsion_rows) g.torsion.push_back(diag[j]);

  // Class of e_i in the cokernel, in the SNF-split coordinates U e_i.
  g.weights.resize(num_rays);
  for (std::size_t i = 0; i < num_rays; ++i) {
    IntVec w;
    for (std::size_t j : free_rows) w.push_back(snf.u.at(j, i));
    for (std::size_t j : torsion_rows) {
      Int r = snf.u.at(j, i) % diag[j];
      if (r < 0) r += diag[j];
      w.push_back(r);
    }
    g.weights[i] = std::move(w);
  }
  return g;
}

std::vector<Int> stabilizer_invariants(const ValidatedFan& vf, ConeIndex c) {
  if (c >= vf.fan().max_cones.size())
    throw ToricError(ErrorKind::ConeNotFound,
                     "no maximal cone " + std::to_string(c));
  if (vf.fan().max_cones[c].size() != vf.dim())
    throw ToricError(ErrorKind::NotFullDimensional,
                     "stabilizers are computed for full-dimensional cones");
  auto diag =
      smith_normal_form(IntMatrix::from_cols(vf.cone_rays(c))).diagonal();
  std::vector<Int> inv;
  for (const Int& d : diag)
    if (d > 1) inv.push_back(d);
  return inv;
}

QuotientPresentation quotient_presentation(const ValidatedFan& vf) {
  Classification cls = classify(vf);
  if (!cls.elliptic)
    throw ToricError(ErrorKind::NotElliptic, cls.reason);

  QuotientPresentation q;
  q.y = y_description(vf);
  q.group = weight_matrix(vf);
  for (std::size_t c = 0; c < vf.fan().max_cones.size(); ++c)
    q.stabilizers.push_back(stabilizer_invariants(vf, c));
  q.smooth_case = vf.is_smooth();

  assert(q.y.product_factors.has_value());
  std::size_t total = 0;
  for (std::size_t ni : *q.y.product_factors) total += ni;
  assert(total == vf.dim());
  assert(q.group.free_rank == cls.blocks.size());
  (void)total;
  return q;
}

HomotopyDegrees rational_homotopy_degrees(const Classification& cls) {
  if (!cls.elliptic)
    throw ToricError(ErrorKind::NotElliptic,
                     "homotopy degrees are defined for elliptic fans only");
  HomotopyDegrees deg;
  deg.even.assign(cls.block_dims.size(), 2);
  for (std::size_t ni : cls.block_dims) deg.odd.push_back(2 * ni + 1);
  std::sort(deg.odd.begin(), deg.odd.end());
  return deg;
}

IntMatrix canonical_weights(const GroupPresentation& g) {
  std::size_t coords = g.free_rank + g.torsion.size();
  std::size_t num_rays = g.weights.size();
  IntMatrix a(coords, num_rays + g.torsion.size());
  for (std::size_t i = 0; i < num_rays; ++i) {
    assert(g.weights[i].size() == coords);
    for (std::size_t j = 0; j < coords; ++j) a.at(j, i) = g.weights[i][j];
  }
  for (std::size_t t = 0; t < g.torsion.size(); ++t)
    a.at(g.free_rank + t, num_rays + t) = g.torsion[t];
  return hermite_normal_form(a);
}

}  // namespace toric
