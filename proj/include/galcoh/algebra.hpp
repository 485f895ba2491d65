#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "galcoh/cohomology.hpp"
#include "galcoh/linalg.hpp"

namespace galcoh {

using AlgebraElem = FVector;  // coordinates in the declared basis

/* Finite-dimensional associative unital algebra over an exact field, given
 * by structure constants: sc(i, j) holds the coordinates of b_i * b_j.
 * Construction validates the unit law and associativity on every basis
 * triple and refuses anything that fails, naming the offending indices. */
class LAlgebra {
 public:
  LAlgebra(Field field, std::vector<std::vector<AlgebraElem>> sc,
           AlgebraElem unit);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const AlgebraElem& unit() const { return unit_; }
  const AlgebraElem& sc(std::size_t i, std::size_t j) const;

  AlgebraElem zero() const;
  AlgebraElem basis(std::size_t i) const;
  AlgebraElem add(const AlgebraElem& x, const AlgebraElem& y) const;
  AlgebraElem sub(const AlgebraElem& x, const AlgebraElem& y) const;
  AlgebraElem scale(const FieldElement& c, const AlgebraElem& x) const;
  AlgebraElem product(const AlgebraElem& x, const AlgebraElem& y) const;
  bool is_zero(const AlgebraElem& x) const;
  bool equal(const AlgebraElem& x, const AlgebraElem& y) const;

  FMatrix left_mult(const AlgebraElem& x) const;
  FMatrix right_mult(const AlgebraElem& x) const;

  /* Two-sided inverse, or nullopt for a non-unit. */
  std::optional<AlgebraElem> invert(const AlgebraElem& x) const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::vector<AlgebraElem>> sc_;
  AlgebraElem unit_;

  void validate() const;
};

/* n x n matrices over f with the matrix-unit basis E_{ab} at index a*n+b. */
LAlgebra matrix_algebra(const Field& f, std::size_t n);

/* f as a one-dimensional algebra over itself. */
LAlgebra field_algebra(const Field& f);

/* Basis of {z : zx = xz for all x}, as coordinate vectors. */
std::vector<AlgebraElem> center_basis(const LAlgebra& a);

/* True when the two-sided ideal generated by each basis element is the
 * whole algebra.  For algebras whose basis vectors are units (crossed
 * products, matrix units up to completion) this is exactly simplicity; for
 * an arbitrary basis it is only the contracted per-basis criterion. */
bool is_simple(const LAlgebra& a);

/* Additive map T(x) = M . g(coords of x): g-semilinear when g twists the
 * ground field.  validate_semilinear additionally demands T(1) = 1,
 * T(xy) = T(x)T(y) on basis pairs, and invertibility. */
struct SemilinearMap {
  FMatrix matrix;
  FieldAut twist;
};

void validate_semilinear(const LAlgebra& a, const SemilinearMap& t);
AlgebraElem apply_semilinear(const LAlgebra& a, const SemilinearMap& t,
                             const AlgebraElem& x);
SemilinearMap compose_semilinear(const LAlgebra& a, const SemilinearMap& s,
                                 const SemilinearMap& t);
SemilinearMap invert_semilinear(const LAlgebra& a, const SemilinearMap& t);

/* Conjugating element for a linear algebra automorphism phi: the unique
 * (up to scalar) r with r x = phi(x) r.  The returned r is rescaled so its
 * coordinate at the unit's first support index is 1, falling back to its
 * own first nonzero coordinate when that one vanishes.  Refuses phi that is
 * not an automorphism, and reports when the solution space does not have
 * dimension exactly one (the algebra is then not central simple). */
AlgebraElem skolem_noether(const LAlgebra& a, const FMatrix& phi);

/* Crossed product of L with its Galois group along a 2-cocycle beta valued
 * in the embedded coefficient module.  The algebra lives over the prime
 * subfield K and has basis b_i u_g at index g*ldim + i, where b_i runs over
 * the power basis of L/K.  A non-cocycle beta is refused with its violating
 * triple, which is exactly where associativity of the raw structure
 * constants breaks. */
struct CrossedProduct {
  LAlgebra algebra;
  FiniteGroup group;
  Cochain beta;
  Field lfield;
  std::size_t ldim;
  CoefficientEmbedding embedding;
};

CrossedProduct crossed_product(const Field& lfield, const GaloisGroup& gal,
                               const CoefficientEmbedding& emb,
                               const Cochain& beta);

/* F(b_i u_g) = b_i tau(g) u_g as a candidate isomorphism
 * cross(beta1) -> cross(beta2); nullopt when it respects every basis
 * product, otherwise the first failing pair of basis indices. */
std::optional<std::pair<std::size_t, std::size_t>> diagonal_isomorphism_check(
    const CrossedProduct& a1, const CrossedProduct& a2, const Cochain& tau);

/* Same algebra with all structure data rewritten through g^{-1}. */
LAlgebra brauer_twist(const FieldAut& g, const LAlgebra& a);

/* Degree-3 cocycle measuring the failure of a family of semilinear lifts
 * of Gal(L/K) to be a strict action: lifts[i] must twist by gal.elements[i].
 * Pairwise composition defects are linear automorphisms, their conjugating
 * elements r(g, h) come from skolem_noether, and the associator of r lands
 * in the center, is read back through the embedding, and is checked to be a
 * cocycle before being returned. */
Cochain teichmuller_cocycle(const LAlgebra& a, const GaloisGroup& gal,
                            const std::vector<SemilinearMap>& lifts,
                            const CoefficientEmbedding& emb);

}  // namespace galcoh
