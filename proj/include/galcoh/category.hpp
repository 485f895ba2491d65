#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "galcoh/algebra.hpp"

namespace galcoh {

/* A Galois extension L/K packaged with the data every categorical operation
 * consumes: the Galois group with its automorphism dictionary and a
 * coefficient module realized inside L^x.  make_extension re-derives the
 * group from the field and checks, generator by generator and element by
 * element of the group, that the abstract module action agrees with the
 * Galois action through the embedding. */
struct GaloisExtensionDatum {
  Field field;
  GaloisGroup galois;
  CoefficientEmbedding embedding;
};

GaloisExtensionDatum make_extension(const Field& f,
                                    const CoefficientEmbedding& emb);

bool same_extension(const GaloisExtensionDatum& a,
                    const GaloisExtensionDatum& b);

/* Everything the twisted graded category Vec^omega carries at cocycle
 * level: the extension and a normalized 3-cocycle.  There is deliberately
 * no object or morphism calculus here; the monoidal structure is faithfully
 * represented by this data and all operations reduce to cochain
 * arithmetic. */
struct TwistedGradedCategory {
  GaloisExtensionDatum extension;
  Cochain omega;
};

/* Validates the cocycle condition (refusing with the violating tuple) and
 * replaces omega by a cohomologous normalized representative. */
TwistedGradedCategory make_category(const GaloisExtensionDatum& ext,
                                    const Cochain& omega);

struct PentagonResult {
  bool ok = true;
  std::vector<int> quadruple;  // first violating (a, b, c, d) when !ok
};

/* Evaluates, for every quadruple, the associator coherence identity
 *   omega(ab,c,d) * omega(a,b,cd) = omega(a,b,c) * omega(a,bc,d) * a(omega(b,c,d))
 * multiplicatively in L^x through the embedding.  This never calls the
 * additive coboundary; it is the independent cross-check that the pentagon
 * for this associator is the twisted cocycle condition. */
PentagonResult pentagon_check(const GaloisExtensionDatum& ext,
                              const Cochain& omega);
PentagonResult pentagon_check(const TwistedGradedCategory& cat);

/* An L-bimodule structure on L itself, described over the base field: the
 * left action is plain multiplication, the right action is given by one
 * matrix, the action of the primitive generator of L. */
struct BimoduleDatum {
  GaloisExtensionDatum extension;
  FMatrix right_action;
};

BimoduleDatum make_twisted_bimodule(const GaloisExtensionDatum& ext, int g);

/* The unique g whose twist realizes the right action, i.e. acting on the
 * right by l equals left multiplication by g(l).  Checks the datum first
 * (the right action must satisfy the minimal polynomial of the generator
 * and commute with the left action) and refuses anything that is not of
 * the twisted form rather than mis-grade it. */
int grading_of(const BimoduleDatum& b);

/* The diagonal summand of the Deligne product: same extension, associator
 * cocycles multiplied pointwise through the embedding. */
TwistedGradedCategory deligne_diagonal(const TwistedGradedCategory& c1,
                                       const TwistedGradedCategory& c2);

/* Fusion bookkeeping for the off-diagonal simples of the Deligne product:
 * X_{f,g,h} (x) X_{i,j,k} is X_{f,gj,k} when h = i and zero otherwise. */
struct ProductLabel {
  int f = 0, g = 0, h = 0;

  bool operator==(const ProductLabel&) const = default;
};

std::optional<ProductLabel> product_simple_label(const FiniteGroup& grp,
                                                 const ProductLabel& x,
                                                 const ProductLabel& y);

/* Tensorator witness tau with d(tau) = omega1 - omega2 when the categories
 * are equivalent as monoidal categories, nullopt otherwise. */
std::optional<Cochain> monoidally_equivalent(const TwistedGradedCategory& c1,
                                             const TwistedGradedCategory& c2);

/* Inflation at category level: pulls the cocycle back along the tower and
 * re-packages it over the bigger extension.  The tower must start at the
 * category's own pair, surject on groups (a restriction map of Galois
 * groups), land in the target extension's pair, and embed the coefficient
 * units injectively (so the declared roots really include into the bigger
 * field).  The result represents the same Morita class. */
TwistedGradedCategory categorical_inflate(const TwistedGradedCategory& cat,
                                          const TwModMorphism& tower,
                                          const GaloisExtensionDatum& target);

/* Outcome of the probe-limited Morita triviality test.  trivial = false
 * means inconclusive: no finite list of probes can certify nontriviality,
 * so this type has no "nontrivial" state on purpose. */
struct MoritaTriviality {
  bool trivial = false;
  std::optional<std::size_t> probe_index;  // nullopt: settled at level zero
  std::optional<Cochain> witness;          // d(witness) = the settled cocycle
};

MoritaTriviality morita_trivial(const TwistedGradedCategory& cat,
                                const std::vector<TwModMorphism>& probes);

/* The bimodule category of the lifted algebra, in cocycle form. */
TwistedGradedCategory teichmuller_to_category(
    const LAlgebra& a, const GaloisGroup& gal,
    const std::vector<SemilinearMap>& lifts, const CoefficientEmbedding& emb);

}  // namespace galcoh
