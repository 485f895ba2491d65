#include "galcoh/linalg.hpp"

#include <utility>

#include "galcoh/error.hpp"

namespace galcoh {

FMatrix::FMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  a_.assign(rows_ * cols_, field_.zero());
}

FMatrix FMatrix::identity(const Field& field, std::size_t n) {
  FMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

FMatrix FMatrix::from_rows(const Field& field,
                           const std::vector<FVector>& rows) {
  if (rows.empty()) return FMatrix(field, 0, 0);
  FMatrix m(field, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw InvalidInput("ragged rows in matrix literal");
    for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

FMatrix FMatrix::from_cols(const Field& field,
                           const std::vector<FVector>& cols) {
  if (cols.empty()) return FMatrix(field, 0, 0);
  FMatrix m(field, cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows_)
      throw InvalidInput("ragged columns in matrix literal");
    for (std::size_t i = 0; i < m.rows_; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

const FieldElement& FMatrix::at(std::size_t i, std::size_t j) const {
  return a_[i * cols_ + j];
}

void FMatrix::set(std::size_t i, std::size_t j, FieldElement v) {
  a_[i * cols_ + j] = std::move(v);
}

FMatrix FMatrix::mul(const FMatrix& other) const {
  if (cols_ != other.rows_) throw InvalidInput("matrix product shape mismatch");
  FMatrix r(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (field_.is_zero(at(i, k))) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        r.set(i, j,
              field_.add(r.at(i, j), field_.mul(at(i, k), other.at(k, j))));
    }
  return r;
}

FMatrix FMatrix::add(const FMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw InvalidInput("matrix sum shape mismatch");
  FMatrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = field_.add(a_[i], other.a_[i]);
  return r;
}

FMatrix FMatrix::sub(const FMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw InvalidInput("matrix difference shape mismatch");
  FMatrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = field_.sub(a_[i], other.a_[i]);
  return r;
}

FVector FMatrix::apply(const FVector& v) const {
  if (v.size() != cols_) throw InvalidInput("matrix-vector shape mismatch");
  FVector r(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
  return r;
}

FVector FMatrix::col(std::size_t j) const {
  FVector r(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) r[i] = at(i, j);
  return r;
}

FMatrix FMatrix::mapped(const FieldAut& g) const {
  FMatrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = field_.apply_aut(g, a_[i]);
  return r;
}

bool FMatrix::equal(const FMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!field_.equal(a_[i], other.a_[i])) return false;
  return true;
}

namespace {

struct Echelon {
  FMatrix m;
  std::vector<std::size_t> pivot_cols;
};

/* Reduced row echelon form.  Exact arithmetic, so the pivot choice is just
 * the first nonzero entry in the column. */
Echelon rref(FMatrix m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && f.is_zero(m.at(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        FieldElement tmp = m.at(p, j);
        m.set(p, j, m.at(r, j));
        m.set(r, j, tmp);
      }
    FieldElement s = f.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j)
      m.set(r, j, f.mul(s, m.at(r, j)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      FieldElement t = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.set(i, j, f.sub(m.at(i, j), f.mul(t, m.at(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

std::size_t rank(const FMatrix& m) { return rref(m).pivot_cols.size(); }

std::optional<FVector> solve(const FMatrix& m, const FVector& rhs) {
  if (rhs.size() != m.rows()) throw InvalidInput("solve shape mismatch");
  const Field& f = m.field();
  FMatrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, m.cols(), rhs[i]);
  }
  Echelon e = rref(std::move(aug));
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
    if (e.pivot_cols[k] == m.cols()) return std::nullopt;
  FVector x(m.cols(), f.zero());
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
    x[e.pivot_cols[k]] = e.m.at(k, m.cols());
  return x;
}

std::vector<FVector> nullspace(const FMatrix& m) {
  const Field& f = m.field();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<FVector> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    FVector v(m.cols(), f.zero());
    v[c] = f.one();
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
      v[e.pivot_cols[k]] = f.neg(e.m.at(k, c));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<FMatrix> inverse(const FMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("inverse of non-square matrix");
  const Field& f = m.field();
  std::size_t n = m.rows();
  FMatrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, n + i, f.one());
  }
  Echelon e = rref(std::move(aug));
  if (e.pivot_cols.size() != n || (n > 0 && e.pivot_cols[n - 1] != n - 1))
    return std::nullopt;
  FMatrix inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, e.m.at(i, n + j));
  return inv;
}

}  // namespace galcoh
