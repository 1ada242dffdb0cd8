#include "toric/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace toric {

namespace {

// All k-subsets of {0..m-1}, lexicographic.
std::vector<RaySet> subsets_of_size(std::size_t m, std::size_t k) {
  std::vector<RaySet> out;
  RaySet cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= m; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

Fan projective_space(std::size_t n) {
  if (n < 1)
    throw ToricError(ErrorKind::InvalidDimension,
                     "projective space needs dimension >= 1");
  Fan fan;
  fan.dim = n;
  fan.name = "CP" + std::to_string(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    fan.rays.push_back(std::move(e));
  }
  fan.rays.push_back(IntVec(n, -1));
  fan.max_cones = subsets_of_size(n + 1, n);
  return fan;
}

Fan weighted_projective(const std::vector<long long>& weights) {
  std::size_t n = weights.empty() ? 0 : weights.size() - 1;
  if (n < 1)
    throw ToricError(ErrorKind::InvalidWeights, "need at least two weights");
  Int g = 0;
  for (long long q : weights) {
    if (q < 1)
      throw ToricError(ErrorKind::InvalidWeights, "weights must be positive");
    g = gcd(g, Int(q));
  }
  if (g != 1)
    throw ToricError(ErrorKind::InvalidWeights,
                     "weights must have gcd 1 (gcd is " + g.str() + ")");

  // Rays are the images of the standard basis in Z^{n+1} / Z q. A unimodular
  // W with W q = e_1 identifies the quotient with the last n coordinates.
  IntMatrix q(n + 1, 1);
  for (std::size_t i = 0; i <= n; ++i) q.at(i, 0) = weights[i];
  SnfResult snf = smith_normal_form(q);
  IntMatrix w = snf.u;
  {
    IntMatrix uq = w * q;
    if (uq.at(0, 0) < 0)
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) w.at(i, j) = -w.at(i, j);
  }

  Fan fan;
  fan.dim = n;
  fan.name = "P(";
  for (std::size_t i = 0; i <= n; ++i)
    fan.name += (i ? "," : "") + std::to_string(weights[i]);
  fan.name += ")";
  for (std::size_t i = 0; i <= n; ++i) {
    IntVec v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = w.at(j + 1, i);
    if (!is_primitive(v))
      throw ToricError(ErrorKind::InvalidWeights,
                       "weights are not well-formed: ray " + std::to_string(i) +
                           " of the quotient lattice is not primitive");
    fan.rays.push_back(std::move(v));
  }
  fan.max_cones = subsets_of_size(n + 1, n);
  return fan;
}

Fan hirzebruch(long long a) {
  Fan fan;
  fan.dim = 2;
  fan.name = "H" + std::to_string(a);
  fan.rays = {{1, 0}, {0, 1}, {-1, Int(a)}, {0, -1}};
  fan.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  return fan;
}

Fan product(const Fan& f1, const Fan& f2) {
  ValidatedFan::validate(f1);
  ValidatedFan::validate(f2);
  Fan fan;
  fan.dim = f1.dim + f2.dim;
  fan.name = f1.name.empty() || f2.name.empty() ? "" : f1.name + "x" + f2.name;
  for (const IntVec& v : f1.rays) {
    IntVec r(fan.dim, 0);
    std::copy(v.begin(), v.end(), r.begin());
    fan.rays.push_back(std::move(r));
  }
  for (const IntVec& v : f2.rays) {
    IntVec r(fan.dim, 0);
    std::copy(v.begin(), v.end(), r.begin() + f1.dim);
    fan.rays.push_back(std::move(r));
  }
  for (const RaySet& c1 : f1.max_cones)
    for (const RaySet& c2 : f2.max_cones) {
      RaySet c = c1;
      for (RayIndex i : c2) c.push_back(i + f1.rays.size());
      fan.max_cones.push_back(std::move(c));
    }
  return fan;
}

Fan generalized_bott_fan(const BottTowerSpec& spec) {
  if (spec.stages.empty())
    throw ToricError(ErrorKind::InvalidSpec, "Bott tower needs >= 1 stage");
  std::size_t total = 0;
  for (const BottStage& s : spec.stages) {
    if (s.fiber_dim < 1)
      throw ToricError(ErrorKind::InvalidSpec, "fiber dimensions must be >= 1");
    if (!s.degrees.empty() && s.degrees.size() != s.fiber_dim)
      throw ToricError(ErrorKind::InvalidSpec,
                       "expected one degree vector per nontrivial bundle");
    for (const auto& d : s.degrees)
      if (d.size() != total)
        throw ToricError(ErrorKind::InvalidSpec,
                         "degree vector length must match earlier coordinates");
    total += s.fiber_dim;
  }

  Fan fan;
  fan.dim = total;
  std::size_t offset = 0;  // coordinates already used by earlier stages
  std::vector<std::vector<RayIndex>> stage_rays;
  for (const BottStage& s : spec.stages) {
    std::vector<RayIndex> group;
    for (std::size_t t = 0; t < s.fiber_dim; ++t) {
      IntVec r(total, 0);
      r[offset + t] = 1;
      if (!s.degrees.empty())
        for (std::size_t j = 0; j < offset; ++j) r[j] = s.degrees[t][j];
      group.push_back(fan.rays.size());
      fan.rays.push_back(std::move(r));
    }
    IntVec last(total, 0);
    for (std::size_t t = 0; t < s.fiber_dim; ++t) last[offset + t] = -1;
    group.push_back(fan.rays.size());
    fan.rays.push_back(std::move(last));
    stage_rays.push_back(std::move(group));
    offset += s.fiber_dim;
  }

  // Maximal cones: omit one ray from each stage's group.
  std::vector<std::size_t> omit(spec.stages.size(), 0);
  for (;;) {
    RaySet cone;
    for (std::size_t s = 0; s < stage_rays.size(); ++s)
      for (std::size_t k = 0; k < stage_rays[s].size(); ++k)
        if (k != omit[s]) cone.push_back(stage_rays[s][k]);
    std::sort(cone.begin(), cone.end());
    fan.max_cones.push_back(std::move(cone));
    std::size_t s = 0;
    while (s < omit.size() && ++omit[s] == stage_rays[s].size()) {
      omit[s] = 0;
      ++s;
    }
    if (s == omit.size()) break;
  }
  return fan;
}

Fan star_subdivision(const ValidatedFan& vf, const RaySet& cone) {
  const Fan& fan = vf.fan();
  if (cone.empty() || !std::is_sorted(cone.begin(), cone.end()) ||
      std::adjacent_find(cone.begin(), cone.end()) != cone.end() ||
      cone.back() >= fan.rays.size())
    throw ToricError(ErrorKind::ConeNotFound, "malformed ray set");
  bool found = std::any_of(
      fan.max_cones.begin(), fan.max_cones.end(), [&](const RaySet& mc) {
        return std::includes(mc.begin(), mc.end(), cone.begin(), cone.end());
      });
  if (!found)
    throw ToricError(ErrorKind::ConeNotFound,
                     "ray set spans no cone of the fan");
  if (cone.size() == 1) return fan;  // subdividing a ray changes nothing

  IntVec sum(fan.dim, 0);
  for (RayIndex i : cone)
    for (std::size_t j = 0; j < fan.dim; ++j) sum[j] += fan.rays[i][j];
  IntVec new_ray = primitive(sum);

  Fan out;
  out.dim = fan.dim;
  out.rays = fan.rays;
  out.rays.push_back(new_ray);
  RayIndex nr = out.rays.size() - 1;
  for (const RaySet& mc : fan.max_cones) {
    if (!std::includes(mc.begin(), mc.end(), cone.begin(), cone.end())) {
      out.max_cones.push_back(mc);
      continue;
    }
    for (RayIndex drop : cone) {
      RaySet c;
      for (RayIndex i : mc)
        if (i != drop) c.push_back(i);
      c.push_back(nr);  // nr is the largest index
      out.max_cones.push_back(std::move(c));
    }
  }
  return out;
}

namespace {

IntMatrix adjugate(const IntMatrix& m) {
  std::size_t n = m.rows();
  IntMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc++) = m.at(r, c);
        }
        ++rr;
      }
      Int cof = determinant(minor);
      adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

}  // namespace

bool fans_isomorphic(const Fan& f1, const Fan& f2) {
  if (f1.dim != f2.dim || f1.rays.size() != f2.rays.size() ||
      f1.max_cones.size() != f2.max_cones.size())
    return false;
  auto sizes = [](const Fan& f) {
    std::vector<std::size_t> s;
    for (const RaySet& c : f.max_cones) s.push_back(c.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sizes(f1) != sizes(f2)) return false;

  std::size_t n = f1.dim;
  // Anchor on a full-dimensional cone of f1; its image must be the ray set
  // of a full-dimensional cone of f2 in some order.
  auto base_it =
      std::find_if(f1.max_cones.begin(), f1.max_cones.end(),
                   [n](const RaySet& c) { return c.size() == n; });
  if (base_it == f1.max_cones.end()) return false;
  const RaySet& base = *base_it;

  IntMatrix m1 = IntMatrix::from_cols([&] {
    std::vector<IntVec> cols;
    for (RayIndex i : base) cols.push_back(f1.rays[i]);
    return cols;
  }());
  Int det1 = determinant(m1);
  if (det1 == 0) return false;
  IntMatrix adj1 = adjugate(m1);

  std::set<RaySet> cones2(f2.max_cones.begin(), f2.max_cones.end());

  for (const RaySet& target : f2.max_cones) {
    if (target.size() != n) continue;
    RaySet perm = target;
    std::sort(perm.begin(), perm.end());
    do {
      IntMatrix m2 = IntMatrix::from_cols([&] {
        std::vector<IntVec> cols;
        for (RayIndex i : perm) cols.push_back(f2.rays[i]);
        return cols;
      }());
      // T = m2 * m1^{-1}; must be integral and unimodular.
      IntMatrix t = m2 * adj1;
      bool integral = true;
      for (std::size_t i = 0; i < n && integral; ++i)
        for (std::size_t j = 0; j < n && integral; ++j) {
          if (t.at(i, j) % det1 != 0) integral = false;
          else t.at(i, j) /= det1;
        }
      if (!integral) continue;
      Int dt = determinant(t);
      if (dt != 1 && dt != -1) continue;

      // Ray bijection induced by T.
      std::map<IntVec, RayIndex> ray_index2;
      for (std::size_t i = 0; i < f2.rays.size(); ++i)
        ray_index2[f2.rays[i]] = i;
      std::vector<RayIndex> image(f1.rays.size());
      bool ok = true;
      std::set<RayIndex> hit;
      for (std::size_t i = 0; i < f1.rays.size() && ok; ++i) {
        IntVec tv(n, 0);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            tv[r] += t.at(r, c) * f1.rays[i][c];
        auto it = ray_index2.find(tv);
        if (it == ray_index2.end() || hit.count(it->second)) ok = false;
        else {
          image[i] = it->second;
          hit.insert(it->second);
        }
      }
      if (!ok) continue;
      for (const RaySet& c : f1.max_cones) {
        RaySet mapped;
        for (RayIndex i : c) mapped.push_back(image[i]);
        std::sort(mapped.begin(), mapped.end());
        if (!cones2.count(mapped)) { ok = false; break; }
      }
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

}  // namespace toric
