#pragma once

#include <vector>

#include "galcoh/intmat.hpp"

namespace galcoh {

/* Finitely generated abelian group in invariant-factor form: a list
 * (d_1, ..., d_k, 0, ..., 0) with 1 < d_1 | d_2 | ... | d_k and 0 standing
 * for an infinite cyclic factor.  Factors equal to 1 are dropped on
 * construction.  Elements are coordinate vectors, one entry per factor,
 * stored reduced into [0, d_i) for the finite factors. */
class FgAbelianGroup {
 public:
  explicit FgAbelianGroup(std::vector<Int> invariant_factors);
  FgAbelianGroup() = default;  // trivial group

  const std::vector<Int>& invariant_factors() const { return f_; }
  std::size_t rank() const { return f_.size(); }
  bool is_finite() const;
  Int order() const;  // throws for infinite groups

  std::vector<Int> reduce(std::vector<Int> coords) const;
  std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const;
  std::vector<Int> neg(const std::vector<Int>& a) const;
  std::vector<Int> scale(const Int& k, const std::vector<Int>& a) const;
  std::vector<Int> zero() const { return std::vector<Int>(f_.size()); }
  bool is_zero(const std::vector<Int>& coords) const;
  Int element_order(const std::vector<Int>& coords) const;  // throws on infinite order

  bool operator==(const FgAbelianGroup& o) const = default;

 private:
  std::vector<Int> f_;
};

/* Coordinate vector in some FgAbelianGroup, kept reduced by the group ops. */
struct AbelianElement {
  std::vector<Int> c;
  bool operator==(const AbelianElement&) const = default;
};

/* Cokernel Z^rows / im(m), with the projection of ambient vectors onto the
 * invariant-factor coordinates and an ambient lift of each generator. */
struct CokernelResult {
  FgAbelianGroup group;
  std::vector<Int> project(const std::vector<Int>& ambient) const;
  std::vector<std::vector<Int>> generator_lifts;

  IntMatrix u;                     // row transform of the underlying normal form
  std::vector<std::size_t> kept;   // diagonal positions of the surviving factors
  std::vector<Int> kept_moduli;    // matching factor (0 for free positions)
};

CokernelResult cokernel_structure(const IntMatrix& m);

/* Structure of (<kernel_basis> + R) / (<image_basis> + R) inside
 * Z^n / R where R is generated by ambient_moduli * e_i.  Columns of
 * image_basis must lie in the span of kernel_basis mod the moduli. */
struct SubquotientResult {
  FgAbelianGroup group;
  std::vector<std::vector<Int>> generator_lifts;  // ambient vectors, reduced
};

SubquotientResult subquotient_structure(const IntMatrix& kernel_basis,
                                        const IntMatrix& image_basis,
                                        const std::vector<Int>& ambient_moduli);

}  // namespace galcoh
