#pragma once

#include <optional>
#include <vector>

#include "galcoh/intmat.hpp"

namespace galcoh {

/* u * input * v = s with u, v unimodular; s diagonal, nonnegative, and
 * s(i,i) divides s(i+1,i+1).  The inverses come out of the same elimination
 * run for free and save callers a unimodular inversion. */
struct SmithResult {
  IntMatrix s, u, v, u_inv, v_inv;
  std::size_t rank = 0;  // nonzero diagonal entries
};

SmithResult smith_normal_form(const IntMatrix& m);

/* Basis (columns) of the lattice { x : m x = 0 }. */
IntMatrix integer_kernel(const IntMatrix& m);

/* Solves m x == target componentwise mod moduli; modulus 0 means equality
 * over Z.  Factorizes the augmented system once so many targets can be
 * solved against the same matrix. */
class ModularSolver {
 public:
  ModularSolver(IntMatrix m, std::vector<Int> moduli);

  std::optional<std::vector<Int>> solve(const std::vector<Int>& target) const;

  /* Generators (columns) of { x : m x == 0 mod moduli } as a lattice in
   * Z^cols.  Always contains moduli * Z^cols when all moduli divide. */
  const IntMatrix& kernel() const { return kernel_; }

 private:
  std::size_t unknowns_;
  SmithResult snf_;
  IntMatrix kernel_;
};

std::optional<std::vector<Int>> solve_modular(const IntMatrix& m, const std::vector<Int>& target,
                                              const std::vector<Int>& moduli);

}  // namespace galcoh
