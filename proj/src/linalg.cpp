#include "curvecount/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvecount {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not match");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shapes do not match");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
  Matrix m = *this;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && m(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m(sel, c), m(row, c));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < cols_; ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < cols_; ++c) m(r, c) -= f * m(row, c);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots != nullptr) *pivots = std::move(piv);
  return m;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

Matrix Matrix::kernel() const {
  std::vector<std::size_t> piv;
  const Matrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix k(cols_, free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    k(free_cols[j], j) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) k(piv[i], j) = -r(i, free_cols[j]);
  }
  return k;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r].push_back((*this)(r, c).get_str());
  }
  return out;
}

void axpy(SparseVec& dst, const Rational& c, const SparseVec& src) {
  if (c == 0 || src.empty()) return;
  SparseVec out;
  out.reserve(dst.size() + src.size());
  auto a = dst.begin();
  auto b = src.begin();
  Rational tmp;
  while (a != dst.end() || b != src.end()) {
    if (b == src.end() || (a != dst.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == dst.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      tmp = a->second + c * b->second;
      if (tmp != 0) out.emplace_back(a->first, tmp);
      ++a;
      ++b;
    }
  }
  dst = std::move(out);
}

Rational coefficient(const SparseVec& v, std::uint64_t key) {
  auto it = std::lower_bound(v.begin(), v.end(), key, [](const auto& entry, std::uint64_t k) { return entry.first < k; });
  return (it != v.end() && it->first == key) ? it->second : Rational(0);
}

void RowEchelon::reduce(SparseVec& v) const {
  std::size_t i = 0;
  while (i < v.size()) {
    auto it = rows_.find(v[i].first);
    if (it == rows_.end()) {
      ++i;
      continue;
    }
    const Rational c = -v[i].second;
    axpy(v, c, it->second);
  }
}

bool RowEchelon::insert(SparseVec v) {
  reduce(v);
  if (v.empty()) return false;
  const Rational inv = 1 / v.front().second;
  if (inv != 1) {
    for (auto& [k, x] : v) x *= inv;
  }
  const std::uint64_t lead = v.front().first;
  rows_.emplace(lead, std::move(v));
  return true;
}

bool RowEchelon::contains(SparseVec v) const {
  reduce(v);
  return v.empty();
}

std::vector<SparseVec> RowEchelon::basis() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (const auto& [k, row] : rows_) out.push_back(row);
  return out;
}

std::vector<SparseVec> RowEchelon::reduced_basis() const {
  std::map<std::uint64_t, SparseVec> rows = rows_;
  // Back-substitute from the largest leading key down.
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    for (auto& [lead, row] : rows) {
      if (lead >= it->first) break;
      const Rational c = coefficient(row, it->first);
      if (c != 0) axpy(row, -c, it->second);
    }
  }
  std::vector<SparseVec> out;
  out.reserve(rows.size());
  for (auto& [k, row] : rows) out.push_back(std::move(row));
  return out;
}

}  // namespace curvecount
