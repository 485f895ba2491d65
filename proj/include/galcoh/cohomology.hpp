#pragma once

#include <optional>
#include <vector>

#include "galcoh/cochain.hpp"
#include "galcoh/snf.hpp"

namespace galcoh {

/* d(c)(g1, ..., g_{n+1}) =
 *     g1 . c(g2, ..., g_{n+1})
 *   + sum_{i=1..n} (-1)^i c(g1, ..., g_i g_{i+1}, ..., g_{n+1})
 *   + (-1)^{n+1} c(g1, ..., g_n)
 * written additively; the multiplicative story of a concrete field is this
 * same formula read through a units dictionary. */
Cochain coboundary(const Cochain& c);

struct CocycleViolation {
  std::vector<int> tuple;  // the (n+1)-tuple where d(c) is nonzero
  std::vector<Int> value;  // d(c) there, reduced
};

std::optional<CocycleViolation> cocycle_violation(const Cochain& c);
bool is_cocycle(const Cochain& c);

/* Matrix of the coboundary C^degree -> C^{degree+1} on flat coordinates. */
IntMatrix coboundary_matrix(const GModule& m, int degree);

/* Invariant factors of C^degree as an ambient for the flat coordinates. */
std::vector<Int> cochain_moduli(const GModule& m, int degree);

struct CohomologyGroup {
  FgAbelianGroup structure;
  std::vector<Cochain> generators;  // cocycle representatives, one per factor
  int degree = 0;
};

/* ker d^n / im d^{n-1} via normal forms.  Refuses when the dense degree
 * n+1 table would exceed max_table_entries. */
CohomologyGroup compute_cohomology(const GModulePtr& module, int degree,
                                   std::size_t max_table_entries = 1000000);

/* Witness tau with d(tau) = z, if one exists.  Input must be a cocycle of
 * degree >= 1. */
std::optional<Cochain> express_as_coboundary(const Cochain& z);

struct CohomologousResult {
  bool equivalent = false;
  std::optional<Cochain> witness;  // d(witness) = a - b when equivalent
};

CohomologousResult cohomologous(const Cochain& a, const Cochain& b);

/* Pullback along a morphism of group-module pairs:
 * (infl c)(h1, ..., hn) = phi(c(f(h1), ..., f(hn))). */
Cochain inflate(const TwModMorphism& t, const Cochain& c);

/* True when every value with an identity argument vanishes. */
bool is_normalized(const Cochain& c);

/* Cohomologous representative that vanishes whenever an argument is the
 * identity.  Returns the input unchanged when already normalized. */
Cochain normalize_cocycle(const Cochain& z);

}  // namespace galcoh
