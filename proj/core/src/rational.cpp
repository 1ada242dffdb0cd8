#include "toric/rational.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace toric {

namespace {

// Inequality a . x >= b with primitive integer coefficient vector and exact
// rational rhs, canonical for dedup.
struct Ineq {
  std::vector<Int> coeffs;
  Rat rhs;
  bool operator<(const Ineq& o) const {
    if (coeffs != o.coeffs) return coeffs < o.coeffs;
    return rhs < o.rhs;
  }
};

Ineq normalize(const RatVec& coeffs, const Rat& rhs) {
  Int scale = 1;
  for (const Rat& c : coeffs) scale = lcm(scale, denominator(c));
  Ineq out;
  out.coeffs.resize(coeffs.size());
  Int g = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out.coeffs[i] = numerator(coeffs[i]) * (scale / denominator(coeffs[i]));
    g = gcd(g, out.coeffs[i]);
  }
  if (g == 0) {
    // 0 >= rhs: keep only the sign of rhs.
    out.rhs = rhs > 0 ? Rat(1) : Rat(0);
  } else {
    for (Int& c : out.coeffs) c /= g;
    out.rhs = rhs * Rat(scale) / Rat(g);
  }
  return out;
}

bool all_zero(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

}  // namespace

bool fm_feasible(const std::vector<LinConstraint>& constraints,
                 std::size_t num_vars) {
  std::set<Ineq> sys;
  for (const auto& c : constraints) {
    assert(c.coeffs.size() == num_vars);
    sys.insert(normalize(c.coeffs, c.rhs));
    if (c.equality) {
      RatVec neg(c.coeffs.size());
      for (std::size_t i = 0; i < c.coeffs.size(); ++i) neg[i] = -c.coeffs[i];
      sys.insert(normalize(neg, -c.rhs));
    }
  }

  for (std::size_t k = 0; k < num_vars; ++k) {
    std::vector<Ineq> pos, neg, rest;
    for (const auto& q : sys) {
      if (q.coeffs[k] > 0) pos.push_back(q);
      else if (q.coeffs[k] < 0) neg.push_back(q);
      else rest.push_back(q);
    }
    std::set<Ineq> next(rest.begin(), rest.end());
    for (const auto& p : pos)
      for (const auto& n : neg) {
        // p.coeffs[k] > 0 > n.coeffs[k]; cancel variable k.
        Int a = p.coeffs[k], b = -n.coeffs[k];
        RatVec coeffs(num_vars);
        for (std::size_t j = 0; j < num_vars; ++j)
          coeffs[j] = Rat(b * p.coeffs[j] + a * n.coeffs[j]);
        Rat rhs(b * p.rhs + a * n.rhs);
        next.insert(normalize(coeffs, rhs));
      }
    sys = std::move(next);
  }

  for (const auto& q : sys) {
    assert(all_zero(q.coeffs));
    if (q.rhs > 0) return false;
  }
  return true;
}

std::optional<RatVec> solve_linear(const std::vector<IntVec>& rows,
                                   const RatVec& rhs) {
  assert(rows.size() == rhs.size());
  std::size_t m = rows.size();
  std::size_t n = m == 0 ? 0 : rows[0].size();
  std::vector<RatVec> a(m, RatVec(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(rows[i][j]);
    a[i][n] = rhs[i];
  }

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    std::size_t p = r;
    while (p < m && a[p][j] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    Rat inv = a[r][j];
    for (std::size_t jj = j; jj <= n; ++jj) a[r][jj] /= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][j] == 0) continue;
      Rat f = a[i][j];
      for (std::size_t jj = j; jj <= n; ++jj) a[i][jj] -= f * a[r][jj];
    }
    pivot_col.push_back(j);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (a[i][n] != 0) return std::nullopt;

  RatVec x(n, Rat(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][n];
  return x;
}

bool point_in_simplicial_cone(const std::vector<IntVec>& rays,
                              const RatVec& point) {
  if (rays.empty())
    return std::all_of(point.begin(), point.end(),
                       [](const Rat& x) { return x == 0; });
  std::size_t n = rays[0].size();
  assert(point.size() == n);
  // Solve sum lambda_i v_i = p in the lambda unknowns.
  std::vector<IntVec> cols(n, IntVec(rays.size()));
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) cols[j][i] = rays[i][j];
  auto lambda = solve_linear(cols, point);
  if (!lambda) return false;
  // Rays are linearly independent, so the solution is unique; verify it
  // anyway and require nonnegative coefficients.
  for (std::size_t j = 0; j < n; ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < rays.size(); ++i)
      s += (*lambda)[i] * Rat(rays[i][j]);
    if (s != point[j]) return false;
  }
  return std::all_of(lambda->begin(), lambda->end(),
                     [](const Rat& l) { return l >= 0; });
}

}  // namespace toric
