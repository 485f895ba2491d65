#pragma once

#include <memory>
#include <vector>

#include "galcoh/abelian.hpp"
#include "galcoh/group.hpp"
#include "galcoh/intmat.hpp"

namespace galcoh {

/* Left module over a finite group: an FgAbelianGroup together with one
 * integer action matrix per group element.  Construction checks that the
 * identity acts as the identity and that the matrices compose like the
 * multiplication table, both as congruences modulo the invariant factors. */
class GModule {
 public:
  GModule(FiniteGroup group, FgAbelianGroup coefficients, std::vector<IntMatrix> action);

  const FiniteGroup& group() const { return group_; }
  const FgAbelianGroup& coefficients() const { return coeffs_; }
  const IntMatrix& action(int g) const { return action_[g]; }
  std::size_t rank() const { return coeffs_.rank(); }

  std::vector<Int> act(int g, const std::vector<Int>& m) const;

  bool structurally_equal(const GModule& o) const;

 private:
  FiniteGroup group_;
  FgAbelianGroup coeffs_;
  std::vector<IntMatrix> action_;  // reduced mod the invariant factors
};

using GModulePtr = std::shared_ptr<const GModule>;

GModulePtr make_trivial_module(FiniteGroup group, FgAbelianGroup coefficients);

/* Multiplicative group of the field with p^n elements as a module over its
 * automorphism group: Z/(p^n - 1) with the cyclic group of order n acting
 * by multiplication by p.  The matching dictionary into actual field
 * elements lives in field.hpp (units_dictionary). */
GModulePtr make_finite_field_units(long p, long n);

/* mu_m inside the n-th cyclotomic field: Z/m as a module over (Z/n)^x,
 * the class of k acting by multiplication by k.  Requires m | n. */
GModulePtr make_roots_of_unity(long conductor, long m);

/* Morphism of group-module pairs (G, A) -> (H, B): a group map f : H -> G
 * (note the direction) and a coefficient map phi : A -> B subject to
 * phi(f(h) . a) = h . phi(a).  This is the unit of data inflation pulls
 * cochains along. */
struct TwModMorphism {
  GModulePtr source;     // (G, A)
  GModulePtr target;     // (H, B)
  GroupHom group_map;    // f : H -> G
  IntMatrix module_map;  // phi, B-rank rows by A-rank columns
};

/* Throws InvalidInput with a witness description when the data is not a
 * valid morphism. */
void validate_twmorphism(const TwModMorphism& m);

TwModMorphism compose_twmorphism(const TwModMorphism& second, const TwModMorphism& first);

}  // namespace galcoh
