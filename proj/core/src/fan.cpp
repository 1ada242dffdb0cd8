#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "toric/rational.hpp"

namespace toric {

namespace {

std::string cone_str(const RaySet& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

void check_structure(const Fan& fan) {
  if (fan.dim < 1)
    throw ToricError(ErrorKind::InvalidDimension,
                     "ambient dimension must be >= 1");
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const IntVec& v = fan.rays[i];
    if (v.size() != fan.dim)
      throw ToricError(ErrorKind::InvalidSpec,
                       "ray " + std::to_string(i) + " has wrong length");
    bool zero = std::all_of(v.begin(), v.end(),
                            [](const Int& x) { return x == 0; });
    if (zero || !is_primitive(v))
      throw ToricError(ErrorKind::NonPrimitiveRay,
                       "ray " + std::to_string(i) + " is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (fan.rays[j] == v)
        throw ToricError(ErrorKind::DuplicateRay,
                         "rays " + std::to_string(j) + " and " +
                             std::to_string(i) + " coincide");
  }
  if (fan.max_cones.empty())
    throw ToricError(ErrorKind::InvalidSpec, "fan has no maximal cones");
  std::vector<bool> used(fan.rays.size(), false);
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const RaySet& cone = fan.max_cones[c];
    if (cone.empty())
      throw ToricError(ErrorKind::InvalidSpec,
                       "maximal cone " + std::to_string(c) + " is empty");
    for (std::size_t k = 0; k < cone.size(); ++k) {
      if (cone[k] >= fan.rays.size())
        throw ToricError(ErrorKind::InvalidSpec,
                         "cone " + std::to_string(c) + " references ray " +
                             std::to_string(cone[k]));
      if (k > 0 && cone[k - 1] >= cone[k])
        throw ToricError(ErrorKind::InvalidSpec,
                         "cone " + std::to_string(c) +
                             " indices not strictly increasing");
      used[cone[k]] = true;
    }
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i])
      throw ToricError(ErrorKind::InvalidSpec,
                       "ray " + std::to_string(i) + " lies in no maximal cone");
  for (std::size_t a = 0; a < fan.max_cones.size(); ++a)
    for (std::size_t b = 0; b < fan.max_cones.size(); ++b) {
      if (a == b) continue;
      if (std::includes(fan.max_cones[b].begin(), fan.max_cones[b].end(),
                        fan.max_cones[a].begin(), fan.max_cones[a].end()))
        throw ToricError(ErrorKind::InvalidSpec,
                         "maximal cone " + std::to_string(a) +
                             " is contained in cone " + std::to_string(b));
    }
}

std::vector<IntVec> gather_rays(const Fan& fan, const RaySet& cone) {
  std::vector<IntVec> rays;
  rays.reserve(cone.size());
  for (RayIndex i : cone) rays.push_back(fan.rays[i]);
  return rays;
}

void check_simplicial(const Fan& fan) {
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    auto rays = gather_rays(fan, fan.max_cones[c]);
    if (rank(IntMatrix::from_cols(rays)) != rays.size())
      throw ToricError(ErrorKind::NotSimplicial,
                       "rays of maximal cone " + std::to_string(c) +
                           " are linearly dependent");
  }
}

// Separating-wall certificate for a pair of maximal cones: an integer
// functional vanishing on the shared rays, positive on the rest of cone a,
// negative on the rest of cone b. Its existence forces
// cone(a) intersect cone(b) = cone(shared rays).
bool separable(const Fan& fan, const RaySet& a, const RaySet& b) {
  RaySet shared;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(shared));
  std::vector<LinConstraint> sys;
  auto constraint = [&](RayIndex i, int kind) {
    LinConstraint c;
    c.coeffs.resize(fan.dim);
    for (std::size_t j = 0; j < fan.dim; ++j)
      c.coeffs[j] = Rat(kind >= 0 ? fan.rays[i][j] : -fan.rays[i][j]);
    c.rhs = kind == 0 ? Rat(0) : Rat(1);  // strictness up to scaling
    c.equality = kind == 0;
    sys.push_back(std::move(c));
  };
  for (RayIndex i : shared) constraint(i, 0);
  for (RayIndex i : a)
    if (!std::binary_search(shared.begin(), shared.end(), i)) constraint(i, 1);
  for (RayIndex i : b)
    if (!std::binary_search(shared.begin(), shared.end(), i)) constraint(i, -1);
  return fm_feasible(sys, fan.dim);
}

void check_fan_axiom(const Fan& fan) {
  for (std::size_t a = 0; a < fan.max_cones.size(); ++a)
    for (std::size_t b = a + 1; b < fan.max_cones.size(); ++b)
      if (!separable(fan, fan.max_cones[a], fan.max_cones[b]))
        throw ToricError(ErrorKind::FanAxiomViolation,
                         "cones " + std::to_string(a) + " and " +
                             std::to_string(b) +
                             " do not intersect in a common face");
}

}  // namespace

ValidatedFan ValidatedFan::validate(const Fan& fan) {
  check_structure(fan);
  check_simplicial(fan);
  check_fan_axiom(fan);

  ValidatedFan vf(fan);
  std::size_t n = fan.dim;

  bool all_full_dim = true;
  vf.multiplicities_.resize(fan.max_cones.size());
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    if (fan.max_cones[c].size() != n) {
      all_full_dim = false;
      continue;
    }
    Int det = determinant(IntMatrix::from_cols(gather_rays(fan, fan.max_cones[c])));
    vf.multiplicities_[c] = abs(det);
  }

  // Wall structure over the full-dimensional maximal cones.
  std::map<RaySet, std::vector<ConeIndex>> walls;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const RaySet& cone = fan.max_cones[c];
    if (cone.size() != n) continue;
    for (std::size_t drop = 0; drop < cone.size(); ++drop) {
      RaySet wall;
      for (std::size_t k = 0; k < cone.size(); ++k)
        if (k != drop) wall.push_back(cone[k]);
      walls[wall].push_back(c);
    }
  }
  bool walls_ok = true;
  for (auto& [rays, cones] : walls) {
    vf.walls_.push_back(Wall{rays, cones});
    if (cones.size() != 2) walls_ok = false;
  }
  vf.complete_ = all_full_dim && walls_ok && n >= 1;
  return vf;
}

Int ValidatedFan::multiplicity(ConeIndex c) const {
  if (c >= fan_.max_cones.size())
    throw ToricError(ErrorKind::ConeNotFound,
                     "no maximal cone " + std::to_string(c));
  if (!multiplicities_[c])
    throw ToricError(ErrorKind::NotFullDimensional,
                     "maximal cone " + std::to_string(c) + " has " +
                         std::to_string(fan_.max_cones[c].size()) +
                         " rays in dimension " + std::to_string(fan_.dim));
  return *multiplicities_[c];
}

bool ValidatedFan::is_smooth() const {
  for (std::size_t c = 0; c < fan_.max_cones.size(); ++c)
    if (!multiplicities_[c] || *multiplicities_[c] != 1) return false;
  return true;
}

bool ValidatedFan::is_simply_connected() const {
  if (!complete_)
    throw ToricError(ErrorKind::NotComplete,
                     "simple connectivity is only decided for complete fans");
  return lattice_spans(fan_.rays, fan_.dim);
}

std::vector<IntVec> ValidatedFan::cone_rays(ConeIndex c) const {
  if (c >= fan_.max_cones.size())
    throw ToricError(ErrorKind::ConeNotFound,
                     "no maximal cone " + std::to_string(c));
  return gather_rays(fan_, fan_.max_cones[c]);
}

ValidationReport validate_report(const Fan& fan) {
  ValidationReport rep;
  try {
    check_structure(fan);
    rep.structural_ok = true;
  } catch (const ToricError& e) {
    rep.failures.push_back(e.what());
    return rep;
  }
  try {
    check_simplicial(fan);
    rep.simplicial = true;
  } catch (const ToricError& e) {
    rep.failures.push_back(e.what());
  }
  if (rep.simplicial) {
    try {
      check_fan_axiom(fan);
      rep.fan_axiom_ok = true;
    } catch (const ToricError& e) {
      rep.failures.push_back(e.what());
    }
  }
  if (!rep.valid()) return rep;

  ValidatedFan vf = ValidatedFan::validate(fan);
  rep.complete = vf.is_complete();
  if (!rep.complete) rep.failures.push_back("fan is not complete");
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    if (fan.max_cones[c].size() == fan.dim)
      rep.multiplicities[c] = vf.multiplicity(c);
  }
  rep.smooth = vf.is_smooth();
  if (rep.complete) {
    rep.simply_connected = vf.is_simply_connected();
    if (!rep.simply_connected)
      rep.failures.push_back(
          "rays do not generate the lattice (underlying-space simple "
          "connectivity fails)");
  }
  return rep;
}

}  // namespace toric
