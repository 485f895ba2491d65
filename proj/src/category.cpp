#include "galcoh/category.hpp"

#include <string>
#include <utility>

#include "galcoh/error.hpp"

namespace galcoh {

namespace {

std::string tuple_str(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

/* Matrix over the prime field of left multiplication by a on L. */
FMatrix mult_matrix(const Field& k, const Field& l, const FieldElement& a) {
  std::size_t d = l.degree();
  FMatrix m(k, d, d);
  for (std::size_t j = 0; j < d; ++j) {
    FieldElement prod = l.mul(a, l.pow(l.gen(), Int(static_cast<long>(j))));
    for (std::size_t i = 0; i < d; ++i) m.set(i, j, k.element({prod.coeffs[i]}));
  }
  return m;
}

long module_order(const GModulePtr& m) {
  if (m->rank() == 0) return 1;
  return static_cast<long>(m->coefficients().order().get_si());
}

/* Exponent of omega at a tuple, for rank <= 1 coefficient modules. */
long exponent_at(const Cochain& c, std::size_t tuple_index) {
  if (c.module()->rank() == 0) return 0;
  return static_cast<long>(c.flat()[tuple_index].get_si());
}

}  // namespace

GaloisExtensionDatum make_extension(const Field& f,
                                    const CoefficientEmbedding& emb) {
  if (!emb.field().same(f))
    throw InvalidInput("embedding realizes a different field");
  GaloisGroup gal = galois_group(f);
  const GModulePtr& mod = emb.module();
  if (!(mod->group() == gal.group))
    throw InvalidInput("coefficient module is over a different group");
  if (mod->rank() > 0) {
    std::vector<Int> gen(mod->rank(), Int(0));
    gen[0] = Int(1);
    FieldElement gen_field = emb.to_field(gen);
    for (int g = 0; g < gal.group.size(); ++g) {
      FieldElement via_module = emb.to_field(mod->act(g, gen));
      FieldElement via_galois = f.apply_aut(gal.elements[g], gen_field);
      if (!f.equal(via_module, via_galois))
        throw CheckFailed(
            "coefficient action disagrees with the Galois action at group "
            "index " +
            std::to_string(g));
    }
  }
  return GaloisExtensionDatum{f, std::move(gal), emb};
}

bool same_extension(const GaloisExtensionDatum& a,
                    const GaloisExtensionDatum& b) {
  return a.field.same(b.field) && a.galois.group == b.galois.group &&
         a.embedding.module()->structurally_equal(*b.embedding.module());
}

TwistedGradedCategory make_category(const GaloisExtensionDatum& ext,
                                    const Cochain& omega) {
  if (omega.degree() != 3)
    throw InvalidInput("category data needs a degree-3 cochain");
  if (!omega.module()->structurally_equal(*ext.embedding.module()))
    throw InvalidInput("omega lives over different coefficients");
  if (auto v = cocycle_violation(omega))
    throw InvalidInput("omega is not a 3-cocycle: violation at " +
                       tuple_str(v->tuple));
  return TwistedGradedCategory{ext, normalize_cocycle(omega)};
}

PentagonResult pentagon_check(const GaloisExtensionDatum& ext,
                              const Cochain& omega) {
  if (omega.degree() != 3)
    throw InvalidInput("pentagon check needs a degree-3 cochain");
  if (!omega.module()->structurally_equal(*ext.embedding.module()))
    throw InvalidInput("omega lives over different coefficients");

  const Field& f = ext.field;
  int n = ext.galois.group.size();
  long m = module_order(ext.embedding.module());

  std::vector<FieldElement> val;
  for (long v = 0; v < m; ++v)
    val.push_back(ext.embedding.to_field(
        ext.embedding.module()->rank() == 0 ? std::vector<Int>{}
                                            : std::vector<Int>{Int(v)}));
  std::vector<std::vector<FieldElement>> twisted(static_cast<std::size_t>(n),
                                                 val);
  for (int g = 0; g < n; ++g)
    for (long v = 0; v < m; ++v)
      twisted[g][v] = f.apply_aut(ext.galois.elements[g], val[v]);

  std::size_t nn = static_cast<std::size_t>(n);
  auto idx = [nn](int a, int b, int c) {
    return (static_cast<std::size_t>(a) * nn + static_cast<std::size_t>(b)) *
               nn +
           static_cast<std::size_t>(c);
  };

  const FiniteGroup& grp = ext.galois.group;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          int ab = grp.mul(a, b), bc = grp.mul(b, c), cd = grp.mul(c, d);
          FieldElement lhs = f.mul(val[exponent_at(omega, idx(ab, c, d))],
                                   val[exponent_at(omega, idx(a, b, cd))]);
          FieldElement rhs = f.mul(
              f.mul(val[exponent_at(omega, idx(a, b, c))],
                    val[exponent_at(omega, idx(a, bc, d))]),
              twisted[a][exponent_at(omega, idx(b, c, d))]);
          if (!f.equal(lhs, rhs)) return PentagonResult{false, {a, b, c, d}};
        }
  return PentagonResult{true, {}};
}

PentagonResult pentagon_check(const TwistedGradedCategory& cat) {
  return pentagon_check(cat.extension, cat.omega);
}

BimoduleDatum make_twisted_bimodule(const GaloisExtensionDatum& ext, int g) {
  if (g < 0 || g >= ext.galois.group.size())
    throw InvalidInput("group index out of range");
  Field k = prime_subfield(ext.field);
  FieldElement image =
      ext.field.apply_aut(ext.galois.elements[g], ext.field.gen());
  return BimoduleDatum{ext, mult_matrix(k, ext.field, image)};
}

int grading_of(const BimoduleDatum& b) {
  const Field& l = b.extension.field;
  Field k = prime_subfield(l);
  std::size_t d = l.degree();
  if (b.right_action.rows() != d || b.right_action.cols() != d ||
      !b.right_action.field().same(k))
    throw InvalidInput("right action matrix has the wrong shape or field");

  /* Ring action: the generator's matrix must satisfy its own minimal
   * polynomial, the field modulus. */
  FMatrix acc = FMatrix::identity(k, d);
  FMatrix total(k, d, d);
  for (const mpq_class& coeff : l.modulus()) {
    FMatrix term(k, d, d);
    FieldElement scalar = k.element({coeff});
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        term.set(i, j, k.mul(scalar, acc.at(i, j)));
    total = total.add(term);
    acc = acc.mul(b.right_action);
  }
  FMatrix zero(k, d, d);
  if (!total.equal(zero))
    throw InvalidInput(
        "right action does not satisfy the generator's minimal polynomial");

  FMatrix left = mult_matrix(k, l, l.gen());
  if (!left.mul(b.right_action).equal(b.right_action.mul(left)))
    throw InvalidInput("left and right actions do not commute");

  for (int g = 0; g < b.extension.galois.group.size(); ++g) {
    FieldElement image =
        l.apply_aut(b.extension.galois.elements[g], l.gen());
    if (b.right_action.equal(mult_matrix(k, l, image))) return g;
  }
  throw InvalidInput("right action is not a Galois twist of left multiplication");
}

TwistedGradedCategory deligne_diagonal(const TwistedGradedCategory& c1,
                                       const TwistedGradedCategory& c2) {
  if (!same_extension(c1.extension, c2.extension))
    throw InvalidInput("Deligne diagonal needs matching extensions");
  const CoefficientEmbedding& emb = c1.extension.embedding;
  const Field& f = c1.extension.field;
  Cochain prod(c1.omega.module(), 3);
  for (std::size_t t = 0; t < prod.tuple_count(); ++t) {
    FieldElement u = f.mul(emb.to_field(c1.omega.value_at(t)),
                           emb.to_field(c2.omega.value_at(t)));
    prod.set_value_at(t, emb.to_module(u));
  }
  return make_category(c1.extension, prod);
}

std::optional<ProductLabel> product_simple_label(const FiniteGroup& grp,
                                                 const ProductLabel& x,
                                                 const ProductLabel& y) {
  for (int v : {x.f, x.g, x.h, y.f, y.g, y.h})
    if (v < 0 || v >= grp.size())
      throw InvalidInput("label entry out of range");
  if (x.h != y.f) return std::nullopt;
  return ProductLabel{x.f, grp.mul(x.g, y.g), y.h};
}

std::optional<Cochain> monoidally_equivalent(const TwistedGradedCategory& c1,
                                             const TwistedGradedCategory& c2) {
  if (!same_extension(c1.extension, c2.extension))
    throw InvalidInput("equivalence check needs matching extensions");
  CohomologousResult r = cohomologous(c1.omega, c2.omega);
  if (!r.equivalent) return std::nullopt;
  return r.witness;
}

namespace {

void check_tower_against(const TwModMorphism& tower,
                         const GModulePtr& source_module,
                         const std::string& what) {
  validate_twmorphism(tower);
  if (!tower.source->structurally_equal(*source_module))
    throw InvalidInput(what + " does not start at the category's coefficients");
  if (!tower.group_map.is_surjective())
    throw InvalidInput(what + " group map must be a restriction surjection");
}

void check_module_map_injective(const TwModMorphism& tower) {
  const FgAbelianGroup& src = tower.source->coefficients();
  const FgAbelianGroup& dst = tower.target->coefficients();
  if (!src.is_finite() || src.order() > Int(1000000))
    throw ResourceLimit("source coefficients too large to scan injectivity");
  std::vector<Int> v = src.zero();
  while (true) {
    /* odometer over all source values */
    std::size_t pos = 0;
    while (pos < v.size()) {
      v[pos] += 1;
      if (v[pos] < src.invariant_factors()[pos]) break;
      v[pos] = 0;
      ++pos;
    }
    if (pos == v.size()) break;
    if (src.is_zero(v)) continue;
    if (dst.is_zero(dst.reduce(mat_vec(tower.module_map, v))))
      throw InvalidInput("coefficient map does not embed the source units");
  }
}

}  // namespace

TwistedGradedCategory categorical_inflate(const TwistedGradedCategory& cat,
                                          const TwModMorphism& tower,
                                          const GaloisExtensionDatum& target) {
  check_tower_against(tower, cat.extension.embedding.module(), "tower");
  if (!tower.target->structurally_equal(*target.embedding.module()))
    throw InvalidInput("tower does not end at the target coefficients");
  check_module_map_injective(tower);
  return make_category(target, inflate(tower, cat.omega));
}

MoritaTriviality morita_trivial(const TwistedGradedCategory& cat,
                                const std::vector<TwModMorphism>& probes) {
  if (auto w = express_as_coboundary(cat.omega))
    return MoritaTriviality{true, std::nullopt, std::move(w)};
  for (std::size_t i = 0; i < probes.size(); ++i) {
    check_tower_against(probes[i], cat.extension.embedding.module(),
                        "probe " + std::to_string(i));
    Cochain lifted = inflate(probes[i], cat.omega);
    if (auto w = express_as_coboundary(lifted))
      return MoritaTriviality{true, i, std::move(w)};
  }
  return MoritaTriviality{false, std::nullopt, std::nullopt};
}

TwistedGradedCategory teichmuller_to_category(
    const LAlgebra& a, const GaloisGroup& gal,
    const std::vector<SemilinearMap>& lifts, const CoefficientEmbedding& emb) {
  Cochain t = teichmuller_cocycle(a, gal, lifts, emb);
  return make_category(make_extension(a.field(), emb), t);
}

}  // namespace galcoh
