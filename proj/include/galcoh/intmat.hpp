#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace galcoh {

using Int = mpz_class;

/* Dense matrix of arbitrary-precision integers, row major.  All the lattice
 * work in this project (normal forms, kernels, modular solving) runs on top
 * of this type; entry growth during elimination is why the entries are mpz
 * and not machine words. */
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const IntMatrix& o) const = default;

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /* row dst += k * row src */
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);
  /* col dst += k * col src */
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  std::vector<Int> row(std::size_t i) const;
  std::vector<Int> col(std::size_t j) const;
  void set_col(std::size_t j, const std::vector<Int>& v);

  /* [this | right], row counts must agree */
  IntMatrix hstack(const IntMatrix& right) const;
  /* copy of columns [from, to) */
  IntMatrix col_slice(std::size_t from, std::size_t to) const;
  /* copy of the listed rows, in order */
  IntMatrix row_select(const std::vector<std::size_t>& idx) const;

  bool is_zero() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v);

}  // namespace galcoh
