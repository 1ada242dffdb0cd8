#include "toric/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace toric {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::FanAxiomViolation: return "FanAxiomViolation";
    case ErrorKind::DuplicateRay: return "DuplicateRay";
    case ErrorKind::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::NotElliptic: return "NotElliptic";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::ConeNotFound: return "ConeNotFound";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "UnknownError";
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    assert(rows[i].size() == c);
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<IntVec>& cols) {
  std::size_t c = cols.size();
  std::size_t r = c == 0 ? 0 : cols[0].size();
  IntMatrix m(r, c);
  for (std::size_t j = 0; j < c; ++j) {
    assert(cols[j].size() == r);
    for (std::size_t i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t i) const {
  IntVec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

IntVec IntMatrix::col(std::size_t j) const {
  IntVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  assert(cols_ == other.rows_);
  IntMatrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        p.at(i, j) += a * other.at(k, j);
    }
  return p;
}

std::vector<Int> SnfResult::diagonal() const {
  std::size_t k = std::min(d.rows(), d.cols());
  std::vector<Int> diag(k);
  for (std::size_t i = 0; i < k; ++i) diag[i] = d.at(i, i);
  return diag;
}

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g == 0) throw ToricError(ErrorKind::ZeroVector, "cannot normalize the zero vector");
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

bool is_primitive(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g == 1;
}

namespace {

// Row/column operation helpers for SNF/HNF; U tracks row ops, V column ops.

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row a += c * row b
void add_row(IntMatrix& m, std::size_t a, std::size_t b, const Int& c) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) += c * m.at(b, j);
}

void add_col(IntMatrix& m, std::size_t a, std::size_t b, const Int& c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) += c * m.at(i, b);
}

void negate_row(IntMatrix& m, std::size_t a) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  std::size_t n = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Pivot: smallest nonzero magnitude in the trailing submatrix.
      // Re-selecting it every round keeps entry growth in check.
      std::size_t pi = t, pj = t;
      Int best = 0;
      for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
          Int a = abs(d.at(i, j));
          if (a != 0 && (best == 0 || a < best)) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) goto done;
      if (pi != t) { swap_rows(d, t, pi); swap_rows(u, t, pi); }
      if (pj != t) { swap_cols(d, t, pj); swap_cols(v, t, pj); }

      bool reduced = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        add_row(d, i, t, -q);
        add_row(u, i, t, -q);
        if (d.at(i, t) != 0) reduced = false;  // remainder, pivot will shrink
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        add_col(d, j, t, -q);
        add_col(v, j, t, -q);
        if (d.at(t, j) != 0) reduced = false;
      }
      if (!reduced) continue;

      // Pivot must divide every remaining entry; if not, fold the offending
      // row in and restart the reduction.
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols() && divides; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            add_row(d, t, i, 1);
            add_row(u, t, i, 1);
            divides = false;
          }
      if (divides) break;
    }

    if (d.at(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
done:
  return SnfResult{std::move(u), std::move(d), std::move(v)};
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw ToricError(ErrorKind::NotSquare,
                     "determinant of a " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  auto diag = smith_normal_form(m).diagonal();
  return std::count_if(diag.begin(), diag.end(),
                       [](const Int& x) { return x != 0; });
}

CokernelInvariants cokernel_invariants(const IntMatrix& m) {
  auto diag = smith_normal_form(m).diagonal();
  CokernelInvariants inv;
  std::size_t nonzero = 0;
  for (const Int& x : diag) {
    if (x == 0) continue;
    ++nonzero;
    if (x > 1) inv.torsion.push_back(x);
  }
  inv.free_rank = m.rows() - nonzero;
  return inv;
}

bool lattice_spans(const std::vector<IntVec>& vectors, std::size_t n) {
  for (const auto& v : vectors) assert(v.size() == n);
  if (vectors.empty()) return n == 0;
  auto inv = cokernel_invariants(IntMatrix::from_cols(vectors));
  return inv.free_rank == 0 && inv.torsion.empty();
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  std::size_t r = 0;  // current pivot row
  for (std::size_t j = 0; j < h.cols() && r < h.rows(); ++j) {
    // Clear column j below row r by gcd steps.
    for (;;) {
      std::size_t pi = h.rows();
      Int best = 0;
      for (std::size_t i = r; i < h.rows(); ++i) {
        Int a = abs(h.at(i, j));
        if (a != 0 && (best == 0 || a < best)) { best = a; pi = i; }
      }
      if (pi == h.rows()) break;  // column zero below r
      if (pi != r) swap_rows(h, r, pi);
      bool clear = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h.at(i, j) == 0) continue;
        Int q = h.at(i, j) / h.at(r, j);
        add_row(h, i, r, -q);
        if (h.at(i, j) != 0) clear = false;
      }
      if (clear) break;
    }
    if (h.at(r, j) == 0) continue;
    if (h.at(r, j) < 0) negate_row(h, r);
    for (std::size_t i = 0; i < r; ++i) {
      // Floor division keeps entries above the pivot in [0, pivot).
      Int q = h.at(i, j) / h.at(r, j);
      if (h.at(i, j) - q * h.at(r, j) < 0) q -= 1;
      add_row(h, i, r, -q);
    }
    ++r;
  }
  return h;
}

}  // namespace toric
