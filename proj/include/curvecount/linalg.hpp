#pragma once

// Exact rational linear algebra: small dense matrices and sparse vectors
// with an incremental echelon basis.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace curvecount {

using Rational = mpq_class;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix transposed() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// Reduced row echelon form; pivot columns returned through `pivots`.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  /// Basis of the right kernel, one vector per column of the result.
  Matrix kernel() const;

  /// Rows as lists of exact rationals, e.g. ["1", "-1/2"].
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Sparse vector over basis keys (wedge monomials as bitmasks), sorted by key.
using SparseVec = std::vector<std::pair<std::uint64_t, Rational>>;

/// dst += c * src
void axpy(SparseVec& dst, const Rational& c, const SparseVec& src);
Rational coefficient(const SparseVec& v, std::uint64_t key);

/// Incremental echelon basis of a span. Rows have distinct leading keys.
class RowEchelon {
 public:
  /// Reduces v against the basis and keeps the remainder if it is nonzero.
  bool insert(SparseVec v);
  /// True when v lies in the span.
  bool contains(SparseVec v) const;
  std::size_t rank() const { return rows_.size(); }

  /// Fully reduced basis: each row has a leading 1 and zeros at the other
  /// rows' leading keys. Ordered by leading key.
  std::vector<SparseVec> reduced_basis() const;

  /// The rows as stored (echelon, not necessarily reduced).
  std::vector<SparseVec> basis() const;

 private:
  void reduce(SparseVec& v) const;

  std::map<std::uint64_t, SparseVec> rows_;  // leading key -> row with leading coefficient 1
};

}  // namespace curvecount
