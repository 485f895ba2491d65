#include <doctest.h>

#include <string>
#include <vector>

#include "galcoh/category.hpp"
#include "galcoh/error.hpp"

using namespace galcoh;

namespace {

GaloisExtensionDatum f4_extension() {
  Field f4 = Field::finite(2, 2);
  return make_extension(f4, CoefficientEmbedding::units(f4));
}

GaloisExtensionDatum qi_mu4_extension() {
  Field qi = Field::cyclotomic(4);
  return make_extension(qi, CoefficientEmbedding::roots(qi, 4));
}

GaloisExtensionDatum qi_mu2_extension() {
  Field qi = Field::cyclotomic(4);
  return make_extension(qi, CoefficientEmbedding::roots(qi, 2));
}

/* All dense degree-n tables over a rank-1 module of the given order. */
std::vector<Cochain> all_cochains(const GModulePtr& mod, int degree, long m) {
  std::size_t count = 1;
  for (int i = 0; i < degree; ++i)
    count *= static_cast<std::size_t>(mod->group().size());
  std::vector<Cochain> out;
  std::vector<long> flat(count, 0);
  while (true) {
    std::vector<Int> values(flat.begin(), flat.end());
    out.push_back(Cochain::from_flat(mod, degree, values));
    std::size_t pos = 0;
    while (pos < count) {
      if (++flat[pos] < m) break;
      flat[pos] = 0;
      ++pos;
    }
    if (pos == count) break;
  }
  return out;
}

}  // namespace

TEST_CASE("extension data validates the embedding against the Galois action") {
  GaloisExtensionDatum e4 = f4_extension();
  CHECK(e4.galois.group.size() == 2);
  GaloisExtensionDatum e9 =
      make_extension(Field::finite(3, 2),
                     CoefficientEmbedding::units(Field::finite(3, 2)));
  CHECK(e9.galois.group.size() == 2);
  GaloisExtensionDatum ei = qi_mu4_extension();
  CHECK(ei.embedding.module()->coefficients().order() == 4);
  GaloisExtensionDatum e8 =
      make_extension(Field::cyclotomic(8),
                     CoefficientEmbedding::roots(Field::cyclotomic(8), 8));
  CHECK(e8.galois.group.size() == 4);

  CHECK(same_extension(e4, f4_extension()));
  CHECK(!same_extension(e4, e9));
  CHECK(!same_extension(ei, qi_mu2_extension()));

  CHECK_THROWS_AS(
      make_extension(Field::finite(3, 2),
                     CoefficientEmbedding::units(Field::finite(2, 2))),
      InvalidInput);
}

TEST_CASE("make_category accepts cocycles, normalizes, refuses the rest") {
  GaloisExtensionDatum ext = qi_mu4_extension();
  const GModulePtr& mod = ext.embedding.module();

  TwistedGradedCategory trivial = make_category(ext, Cochain(mod, 3));
  CHECK(trivial.omega.is_zero());

  // A messy coboundary comes out normalized but cohomologous.
  Cochain tau = Cochain::from_flat(mod, 2, {Int(3), Int(1), Int(2), Int(1)});
  Cochain dtau = coboundary(tau);
  REQUIRE(!is_normalized(dtau));
  TwistedGradedCategory c = make_category(ext, dtau);
  CHECK(is_normalized(c.omega));
  CHECK(is_cocycle(c.omega));
  CHECK(cohomologous(c.omega, dtau).equivalent);

  Cochain bad(mod, 3);
  bad.set_value({0, 0, 0}, {Int(1)});
  try {
    make_category(ext, bad);
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("(0, 0, 0, 0)") != std::string::npos);
  }

  CHECK_THROWS_AS(make_category(ext, Cochain(mod, 2)), InvalidInput);
}

TEST_CASE("pentagon identity holds exactly for cocycles and only for them") {
  GaloisExtensionDatum ext = f4_extension();
  const GModulePtr& mod = ext.embedding.module();

  SUBCASE("exhaustive: every 3-cochain over the unit module of F_4") {
    int agree = 0;
    for (const Cochain& c : all_cochains(mod, 3, 3)) {
      PentagonResult p = pentagon_check(ext, c);
      auto v = cocycle_violation(c);
      REQUIRE(p.ok == !v);
      if (!p.ok) {
        REQUIRE(v);
        CHECK(p.quadruple == v->tuple);
      } else {
        ++agree;
      }
    }
    // |Z^3| for this module, worth pinning: with the sign action of the
    // two-element group on Z/3 every class dies, so Z^3 = B^3 and counting
    // boundaries through the ranks gives 81 / 3 = 27 of the 3^8 tables.
    CHECK(agree == 27);
  }

  SUBCASE("spot checks over Q(i) with mu_4 coefficients") {
    GaloisExtensionDatum ei = qi_mu4_extension();
    const GModulePtr& m4 = ei.embedding.module();
    CHECK(pentagon_check(ei, Cochain(m4, 3)).ok);
    for (long seed = 0; seed < 200; ++seed) {
      long s = seed;
      std::vector<Int> flat;
      for (int i = 0; i < 8; ++i) {
        flat.push_back(Int((s * 2654435761L + 17 * i) % 4));
        s = s * 48271 % 2147483647;
      }
      Cochain c = Cochain::from_flat(m4, 3, flat);
      CHECK(pentagon_check(ei, c).ok == is_cocycle(c));
    }
  }

  SUBCASE("a validated category always passes") {
    Cochain tau = Cochain::from_flat(mod, 2, {Int(2), Int(1), Int(0), Int(2)});
    TwistedGradedCategory c = make_category(ext, coboundary(tau));
    CHECK(pentagon_check(c).ok);
  }
}

TEST_CASE("bimodule gradings are recovered on every test extension") {
  for (const GaloisExtensionDatum& ext :
       {f4_extension(),
        make_extension(Field::finite(3, 2),
                       CoefficientEmbedding::units(Field::finite(3, 2))),
        qi_mu4_extension(),
        make_extension(Field::cyclotomic(8),
                       CoefficientEmbedding::roots(Field::cyclotomic(8), 8))}) {
    for (int g = 0; g < ext.galois.group.size(); ++g)
      CHECK(grading_of(make_twisted_bimodule(ext, g)) == g);
  }

  SUBCASE("the untwisted bimodule sits at the identity") {
    CHECK(grading_of(make_twisted_bimodule(f4_extension(), 0)) == 0);
  }

  SUBCASE("non-actions and non-twists are refused") {
    GaloisExtensionDatum ext = f4_extension();
    Field k = prime_subfield(ext.field);

    BimoduleDatum zero{ext, FMatrix(k, 2, 2)};
    CHECK_THROWS_AS(grading_of(zero), InvalidInput);

    // Invertible, commutes with everything in sight, but does not satisfy
    // the modulus of F_4, so it is no ring action of the field.
    FMatrix shear = FMatrix::identity(k, 2);
    shear.set(0, 1, k.one());
    try {
      grading_of(BimoduleDatum{ext, shear});
      FAIL("expected InvalidInput");
    } catch (const InvalidInput& e) {
      CHECK(std::string(e.what()).find("minimal polynomial") !=
            std::string::npos);
    }
  }
}

TEST_CASE("the diagonal of the Deligne product multiplies associators") {
  GaloisExtensionDatum ext = qi_mu4_extension();
  const GModulePtr& mod = ext.embedding.module();

  CohomologyGroup h3 = compute_cohomology(mod, 3);
  REQUIRE(h3.structure.invariant_factors() == std::vector<Int>{Int(2)});
  TwistedGradedCategory cg = make_category(ext, h3.generators[0]);
  TwistedGradedCategory ct = make_category(ext, Cochain(mod, 3));

  SUBCASE("unit law") {
    TwistedGradedCategory r = deligne_diagonal(cg, ct);
    CHECK(r.omega == cg.omega);
  }

  SUBCASE("a class against its inverse certifies trivial") {
    TwistedGradedCategory cinv = make_category(ext, -h3.generators[0]);
    TwistedGradedCategory r = deligne_diagonal(cg, cinv);
    auto w = express_as_coboundary(r.omega);
    REQUIRE(w);
    CHECK(coboundary(*w) == r.omega);
  }

  SUBCASE("coboundaries multiply to the coboundary of the product") {
    Cochain tau1 = Cochain::from_flat(mod, 2, {Int(0), Int(0), Int(0), Int(1)});
    Cochain tau2 = Cochain::from_flat(mod, 2, {Int(0), Int(0), Int(0), Int(3)});
    TwistedGradedCategory c1 = make_category(ext, coboundary(tau1));
    TwistedGradedCategory c2 = make_category(ext, coboundary(tau2));
    TwistedGradedCategory r = deligne_diagonal(c1, c2);
    CHECK(r.omega == coboundary(tau1 + tau2));
  }

  SUBCASE("associativity and commutativity on cocycle data") {
    Cochain tau = Cochain::from_flat(mod, 2, {Int(0), Int(0), Int(0), Int(2)});
    TwistedGradedCategory cd = make_category(ext, coboundary(tau));
    CHECK(deligne_diagonal(cg, cd).omega == deligne_diagonal(cd, cg).omega);
    CHECK(deligne_diagonal(deligne_diagonal(cg, cd), ct).omega ==
          deligne_diagonal(cg, deligne_diagonal(cd, ct)).omega);
  }

  SUBCASE("extension mismatch is refused") {
    TwistedGradedCategory other =
        make_category(f4_extension(),
                      Cochain(f4_extension().embedding.module(), 3));
    CHECK_THROWS_AS(deligne_diagonal(cg, other), InvalidInput);
  }
}

TEST_CASE("fusion labels of the off-diagonal simples") {
  FiniteGroup z4 = make_cyclic(4);

  auto hit = product_simple_label(z4, {0, 1, 1}, {1, 1, 0});
  REQUIRE(hit);
  CHECK(*hit == ProductLabel{0, 2, 0});

  CHECK(!product_simple_label(z4, {0, 1, 1}, {2, 1, 0}));

  auto id = product_simple_label(z4, {0, 0, 0}, {0, 0, 0});
  REQUIRE(id);
  CHECK(*id == ProductLabel{0, 0, 0});

  CHECK_THROWS_AS(product_simple_label(z4, {0, 1, 4}, {0, 0, 0}),
                  InvalidInput);
}

TEST_CASE("monoidal equivalence is decided cohomologically") {
  GaloisExtensionDatum ext = qi_mu2_extension();
  const GModulePtr& mod = ext.embedding.module();

  CohomologyGroup h3 = compute_cohomology(mod, 3);
  REQUIRE(h3.structure.invariant_factors() == std::vector<Int>{Int(2)});

  TwistedGradedCategory ct = make_category(ext, Cochain(mod, 3));
  TwistedGradedCategory cg = make_category(ext, h3.generators[0]);

  SUBCASE("reflexive with a boundary witness") {
    auto w = monoidally_equivalent(cg, cg);
    REQUIRE(w);
    CHECK(coboundary(*w).is_zero());
  }

  SUBCASE("shifting by a coboundary stays equivalent, with a valid tensorator") {
    Cochain tau = Cochain::from_flat(mod, 2, {Int(0), Int(1), Int(1), Int(1)});
    TwistedGradedCategory shifted =
        make_category(ext, cg.omega + coboundary(tau));
    auto w = monoidally_equivalent(cg, shifted);
    REQUIRE(w);
    CHECK(coboundary(*w) == cg.omega - shifted.omega);
  }

  SUBCASE("distinct classes are not equivalent, in both orders") {
    CHECK(!monoidally_equivalent(cg, ct));
    CHECK(!monoidally_equivalent(ct, cg));
  }

  SUBCASE("symmetric and transitive on equivalent data") {
    Cochain tau = Cochain::from_flat(mod, 2, {Int(0), Int(1), Int(0), Int(1)});
    TwistedGradedCategory c2 = make_category(ext, cg.omega + coboundary(tau));
    auto w12 = monoidally_equivalent(cg, c2);
    auto w21 = monoidally_equivalent(c2, cg);
    REQUIRE(w12);
    REQUIRE(w21);
    Cochain tau3 = Cochain::from_flat(mod, 2, {Int(0), Int(0), Int(1), Int(1)});
    TwistedGradedCategory c3 = make_category(ext, c2.omega + coboundary(tau3));
    CHECK(monoidally_equivalent(cg, c3));
  }
}

TEST_CASE("categorical inflation composes along towers of finite fields") {
  Field f4 = Field::finite(2, 2);
  Field f16 = Field::finite(2, 4);
  Field f256 = Field::finite(2, 8);
  GaloisExtensionDatum e4 = make_extension(f4, CoefficientEmbedding::units(f4));
  GaloisExtensionDatum e16 =
      make_extension(f16, CoefficientEmbedding::units(f16));
  GaloisExtensionDatum e256 =
      make_extension(f256, CoefficientEmbedding::units(f256));

  // Gal(F_16/F_2) -> Gal(F_4/F_2) restriction, units included by x -> x^5.
  TwModMorphism t_4_16{e4.embedding.module(), e16.embedding.module(),
                       make_hom(e16.galois.group, e4.galois.group,
                                {0, 1, 0, 1}),
                       IntMatrix::from_rows({{Int(5)}})};
  TwModMorphism t_16_256{e16.embedding.module(), e256.embedding.module(),
                         make_hom(e256.galois.group, e16.galois.group,
                                  {0, 1, 2, 3, 0, 1, 2, 3}),
                         IntMatrix::from_rows({{Int(17)}})};

  // H^3 here is trivial, so coboundaries are the whole supply of cocycles.
  Cochain tau = Cochain::from_flat(e4.embedding.module(), 2,
                                   {Int(1), Int(2), Int(0), Int(1)});
  TwistedGradedCategory cat = make_category(e4, coboundary(tau));
  REQUIRE(!cat.omega.is_zero());

  SUBCASE("identity tower changes nothing") {
    TwModMorphism ident{e4.embedding.module(), e4.embedding.module(),
                        make_hom(e4.galois.group, e4.galois.group, {0, 1}),
                        IntMatrix::identity(1)};
    TwistedGradedCategory same = categorical_inflate(cat, ident, e4);
    CHECK(same.omega == cat.omega);
  }

  SUBCASE("matches plain cochain inflation") {
    TwistedGradedCategory up = categorical_inflate(cat, t_4_16, e16);
    CHECK(up.omega == inflate(t_4_16, cat.omega));
    CHECK(!up.omega.is_zero());
  }

  SUBCASE("trivial cocycle inflates to the trivial cocycle") {
    TwistedGradedCategory triv =
        make_category(e4, Cochain(e4.embedding.module(), 3));
    CHECK(categorical_inflate(triv, t_4_16, e16).omega.is_zero());
  }

  SUBCASE("two steps equal the composite tower") {
    TwistedGradedCategory two_step =
        categorical_inflate(categorical_inflate(cat, t_4_16, e16), t_16_256,
                            e256);
    TwModMorphism composite = compose_twmorphism(t_16_256, t_4_16);
    TwistedGradedCategory one_step = categorical_inflate(cat, composite, e256);
    CHECK(two_step.omega == one_step.omega);
  }

  SUBCASE("the degenerate bottom level of the tower behaves") {
    Field f2 = Field::finite(2, 1);
    GaloisExtensionDatum e2 =
        make_extension(f2, CoefficientEmbedding::units(f2));
    TwistedGradedCategory bottom =
        make_category(e2, Cochain(e2.embedding.module(), 3));
    TwModMorphism t_2_4{e2.embedding.module(), e4.embedding.module(),
                        make_hom(e4.galois.group, e2.galois.group, {0, 0}),
                        IntMatrix(1, 0)};
    TwistedGradedCategory lifted = categorical_inflate(bottom, t_2_4, e4);
    CHECK(lifted.omega.is_zero());
    TwModMorphism t_2_16 = compose_twmorphism(t_4_16, t_2_4);
    CHECK(categorical_inflate(bottom, t_2_16, e16).omega ==
          categorical_inflate(lifted, t_4_16, e16).omega);
  }

  SUBCASE("broken towers are refused") {
    TwModMorphism not_onto{e4.embedding.module(), e16.embedding.module(),
                           make_hom(e16.galois.group, e4.galois.group,
                                    {0, 0, 0, 0}),
                           IntMatrix::from_rows({{Int(5)}})};
    CHECK_THROWS_AS(categorical_inflate(cat, not_onto, e16), InvalidInput);

    TwModMorphism collapsing{e4.embedding.module(), e16.embedding.module(),
                             make_hom(e16.galois.group, e4.galois.group,
                                      {0, 1, 0, 1}),
                             IntMatrix::from_rows({{Int(0)}})};
    CHECK_THROWS_AS(categorical_inflate(cat, collapsing, e16), InvalidInput);
  }
}

TEST_CASE("probe-limited Morita triviality") {
  GaloisExtensionDatum ext = qi_mu2_extension();
  const GModulePtr& mod = ext.embedding.module();

  SUBCASE("the trivial cocycle settles at level zero") {
    MoritaTriviality r =
        morita_trivial(make_category(ext, Cochain(mod, 3)), {});
    CHECK(r.trivial);
    CHECK(!r.probe_index);
    REQUIRE(r.witness);
    CHECK(coboundary(*r.witness).is_zero());
  }

  SUBCASE("coboundaries settle at level zero with a witness") {
    Cochain tau = Cochain::from_flat(mod, 2, {Int(0), Int(1), Int(1), Int(0)});
    TwistedGradedCategory cat = make_category(ext, coboundary(tau));
    MoritaTriviality r = morita_trivial(cat, {});
    CHECK(r.trivial);
    REQUIRE(r.witness);
    CHECK(coboundary(*r.witness) == cat.omega);
  }

  SUBCASE("a genuine class needs its killing probe") {
    CohomologyGroup h3 = compute_cohomology(mod, 3);
    REQUIRE(h3.structure.invariant_factors() == std::vector<Int>{Int(2)});
    TwistedGradedCategory cat = make_category(ext, h3.generators[0]);

    MoritaTriviality none = morita_trivial(cat, {});
    CHECK(!none.trivial);
    CHECK(!none.witness);

    // Inflating along the surjection from the cyclic group of order 4 kills
    // the class: the probe certifies triviality one level up.
    FiniteGroup z4 = make_cyclic(4);
    GModulePtr target = make_trivial_module(
        z4, FgAbelianGroup({Int(2)}));
    TwModMorphism probe{mod, target,
                        make_hom(z4, mod->group(), {0, 1, 0, 1}),
                        IntMatrix::identity(1)};

    MoritaTriviality r = morita_trivial(cat, {probe});
    CHECK(r.trivial);
    REQUIRE(r.probe_index);
    CHECK(*r.probe_index == 0);
    REQUIRE(r.witness);
    CHECK(coboundary(*r.witness) == inflate(probe, cat.omega));

    SUBCASE("a useless probe first: the killing probe still wins in order") {
      TwModMorphism ident{mod, mod,
                          make_hom(mod->group(), mod->group(), {0, 1}),
                          IntMatrix::identity(1)};
      MoritaTriviality r2 = morita_trivial(cat, {ident, probe});
      CHECK(r2.trivial);
      REQUIRE(r2.probe_index);
      CHECK(*r2.probe_index == 1);
    }

    SUBCASE("probes from the wrong pair are refused") {
      GModulePtr other = make_trivial_module(
          mod->group(), FgAbelianGroup({Int(4)}));
      TwModMorphism bad{other, target,
                        make_hom(z4, mod->group(), {0, 1, 0, 1}),
                        IntMatrix::from_rows({{Int(1)}})};
      CHECK_THROWS_AS(morita_trivial(cat, {bad}), InvalidInput);
    }
  }
}

TEST_CASE("the lifted-algebra category comes out of the full pipeline") {
  Field f4 = Field::finite(2, 2);
  GaloisGroup gal = galois_group(f4);
  CoefficientEmbedding emb = CoefficientEmbedding::units(f4);
  LAlgebra a = matrix_algebra(f4, 2);

  std::vector<SemilinearMap> strict;
  for (const FieldAut& g : gal.elements)
    strict.push_back({FMatrix::identity(f4, 4), g});
  TwistedGradedCategory cs = teichmuller_to_category(a, gal, strict, emb);
  CHECK(cs.omega.is_zero());

  TwistedGradedCategory cl =
      teichmuller_to_category(field_algebra(f4), gal,
                              {{FMatrix::identity(f4, 1), gal.elements[0]},
                               {FMatrix::identity(f4, 1), gal.elements[1]}},
                              emb);
  CHECK(cl.omega.is_zero());

  // Conjugating one lift bends the cocycle but not the Morita class.
  AlgebraElem s = a.zero();
  s[1] = f4.one();
  s[2] = f4.gen();
  auto sinv = a.invert(s);
  REQUIRE(sinv);
  FMatrix ad(f4, 4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    AlgebraElem col = a.product(a.product(s, a.basis(j)), *sinv);
    for (std::size_t i = 0; i < 4; ++i) ad.set(i, j, col[i]);
  }
  std::vector<SemilinearMap> bent = strict;
  bent[1] = compose_semilinear(
      a, SemilinearMap{ad, f4.identity_aut()}, strict[1]);
  TwistedGradedCategory cb = teichmuller_to_category(a, gal, bent, emb);
  CHECK(!cb.omega.is_zero());
  auto w = monoidally_equivalent(cs, cb);
  REQUIRE(w);
  CHECK(coboundary(*w) == cs.omega - cb.omega);
  CHECK(morita_trivial(cb, {}).trivial);
}
