#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "galcoh/field.hpp"

namespace galcoh {

using FVector = std::vector<FieldElement>;

/* Dense matrix with entries in one exact Field.  Everything downstream is
 * small (algebra dimensions in the single or low double digits), so this
 * stores a flat row-major vector and does plain Gaussian elimination. */
class FMatrix {
 public:
  FMatrix(Field field, std::size_t rows, std::size_t cols);

  static FMatrix identity(const Field& field, std::size_t n);
  static FMatrix from_rows(const Field& field,
                           const std::vector<FVector>& rows);
  static FMatrix from_cols(const Field& field,
                           const std::vector<FVector>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const FieldElement& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, FieldElement v);

  FMatrix mul(const FMatrix& other) const;
  FMatrix add(const FMatrix& other) const;
  FMatrix sub(const FMatrix& other) const;
  FVector apply(const FVector& v) const;
  FVector col(std::size_t j) const;

  /* Entrywise image under a field automorphism. */
  FMatrix mapped(const FieldAut& g) const;

  bool equal(const FMatrix& other) const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> a_;
};

std::size_t rank(const FMatrix& m);

/* One solution of m x = rhs (free variables set to zero), if consistent. */
std::optional<FVector> solve(const FMatrix& m, const FVector& rhs);

/* Basis of the right kernel {x : m x = 0}. */
std::vector<FVector> nullspace(const FMatrix& m);

std::optional<FMatrix> inverse(const FMatrix& m);

}  // namespace galcoh
