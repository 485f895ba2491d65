#include "galcoh/intmat.hpp"

#include <sstream>
#include <utility>

#include "galcoh/error.hpp"

namespace galcoh {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InvalidInput("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidInput("matrix product shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix sum shape mismatch");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix difference shape mismatch");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += k * at(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += k * at(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  std::vector<Int> v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

std::vector<Int> IntMatrix::col(std::size_t j) const {
  std::vector<Int> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void IntMatrix::set_col(std::size_t j, const std::vector<Int>& v) {
  if (v.size() != rows_) throw InvalidInput("set_col length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

IntMatrix IntMatrix::hstack(const IntMatrix& right) const {
  if (rows_ != right.rows_) throw InvalidInput("hstack row count mismatch");
  IntMatrix m(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) m.at(i, cols_ + j) = right.at(i, j);
  }
  return m;
}

IntMatrix IntMatrix::col_slice(std::size_t from, std::size_t to) const {
  if (from > to || to > cols_) throw InvalidInput("col_slice out of range");
  IntMatrix m(rows_, to - from);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = from; j < to; ++j) m.at(i, j - from) = at(i, j);
  return m;
}

IntMatrix IntMatrix::row_select(const std::vector<std::size_t>& idx) const {
  IntMatrix m(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= rows_) throw InvalidInput("row_select out of range");
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(idx[i], j);
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : a_)
    if (x != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v) {
  if (v.size() != m.cols()) throw InvalidInput("mat_vec length mismatch");
  std::vector<Int> r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) r[i] += m.at(i, j) * v[j];
  return r;
}

}  // namespace galcoh
