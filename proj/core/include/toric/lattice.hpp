#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "toric/errors.hpp"

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);
  static IntMatrix from_cols(const std::vector<IntVec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

// U * M * V = D with U, V unimodular and D diagonal with nonnegative
// entries in a divisibility chain.
struct SnfResult {
  IntMatrix u, d, v;

  // Diagonal of D, trailing zeros included.
  std::vector<Int> diagonal() const;
};

struct CokernelInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, divisibility order

  bool operator==(const CokernelInvariants&) const = default;
};

// v / gcd of its entries. Throws ZeroVector on v = 0.
IntVec primitive(const IntVec& v);

bool is_primitive(const IntVec& v);

SnfResult smith_normal_form(const IntMatrix& m);

// Exact determinant (Bareiss fraction-free elimination). Throws NotSquare.
Int determinant(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

// Invariants of Z^rows / column-image(M).
CokernelInvariants cokernel_invariants(const IntMatrix& m);

// True iff the vectors generate Z^n as a group.
bool lattice_spans(const std::vector<IntVec>& vectors, std::size_t n);

// Row-style Hermite normal form: H = U * M with U unimodular, H upper
// echelon, pivots positive, entries above each pivot reduced mod pivot.
IntMatrix hermite_normal_form(const IntMatrix& m);

}  // namespace toric
