#include <doctest.h>

#include <string>

#include "galcoh/error.hpp"
#include "galcoh/jsonio.hpp"

using namespace galcoh;
using nlohmann::json;

TEST_CASE("integers and rationals survive the trip, big ones as strings") {
  CHECK(int_to_json(Int(42)) == json(42));
  CHECK(json_to_int(json(-7)) == Int(-7));
  Int big("123456789012345678901234567890");
  json bj = int_to_json(big);
  REQUIRE(bj.is_string());
  CHECK(json_to_int(bj) == big);
  CHECK_THROWS_AS(json_to_int(json("12x")), InvalidInput);
  CHECK_THROWS_AS(json_to_int(json(1.5)), InvalidInput);

  mpq_class half = mpq_class(1) / 2;
  json hj = rat_to_json(half);
  CHECK(hj == json("1/2"));
  CHECK(json_to_rat(hj) == half);
  CHECK(json_to_rat(json(3)) == mpq_class(3));
  CHECK(json_to_rat(json("4/6")) == mpq_class(2) / 3);
  CHECK(rat_to_json(mpq_class(-5)) == json(-5));
  CHECK_THROWS_AS(json_to_rat(json("1/0")), InvalidInput);
  CHECK_THROWS_AS(json_to_rat(json("")), InvalidInput);
}

TEST_CASE("groups parse from both spellings") {
  FiniteGroup z4 = make_cyclic(4);
  CHECK(json_to_group(json::parse(R"({"kind":"cyclic","n":4})")) == z4);
  json t = group_to_json(z4);
  CHECK(t.at("kind") == "table");
  CHECK(json_to_group(t) == z4);
  CHECK_THROWS_AS(json_to_group(json::parse(R"({"kind":"dihedral","n":3})")),
                  InvalidInput);
  CHECK_THROWS_AS(json_to_group(json::parse(R"({"kind":"cyclic"})")), InvalidInput);
  // A non-table is caught by the group constructor itself.
  CHECK_THROWS_AS(
      json_to_group(json::parse(R"({"kind":"table","table":[[0,1],[0,1]]})")),
      InvalidInput);
}

TEST_CASE("modules: shorthands, the full spelling, and round trips") {
  GModulePtr units = json_to_module(json::parse(R"({"kind":"ff_units","p":2,"n":2})"));
  CHECK(units->structurally_equal(*make_finite_field_units(2, 2)));

  GModulePtr roots =
      json_to_module(json::parse(R"({"kind":"roots_of_unity","conductor":4,"m":2})"));
  CHECK(roots->structurally_equal(*make_roots_of_unity(4, 2)));

  GModulePtr triv = json_to_module(
      json::parse(R"({"kind":"trivial","group":{"kind":"cyclic","n":2},"invariant_factors":[2]})"));
  CHECK(triv->structurally_equal(*make_trivial_module(make_cyclic(2), FgAbelianGroup({Int(2)}))));

  for (const GModulePtr& m : {units, roots, triv}) {
    GModulePtr again = json_to_module(module_to_json(*m));
    CHECK(again->structurally_equal(*m));
  }

  // Identity action may be omitted; everything else must be present.
  json full = module_to_json(*units);
  CHECK(!full.at("action").contains("0"));
  full.at("action").erase("1");
  CHECK_THROWS_AS(json_to_module(full), InvalidInput);

  // A non-homomorphic action is refused by the module constructor: zero
  // does not square to the identity mod 3.
  json bad = module_to_json(*units);
  bad["action"]["1"] = json::parse("[[0]]");
  CHECK_THROWS_AS(json_to_module(bad), InvalidInput);
}

TEST_CASE("cochains: sparse tables with comma keys") {
  GModulePtr m = make_finite_field_units(2, 2);
  Cochain c(m, 2);
  c.set_value({1, 1}, {Int(2)});
  json j = cochain_to_json(c);
  CHECK(j.at("degree") == 2);
  CHECK(j.at("values") == json::parse(R"({"1,1":[2]})"));
  CHECK(json_to_cochain(j, m) == c);

  // Omitted keys read back as zero; the zero cochain serializes empty.
  CHECK(cochain_to_json(Cochain(m, 3)).at("values") == json::object());
  CHECK(json_to_cochain(json::parse(R"({"degree":1})"), m).is_zero());

  // Degree zero uses the empty key.
  Cochain c0(m, 0);
  c0.set_value({}, {Int(1)});
  json j0 = cochain_to_json(c0);
  CHECK(j0.at("values") == json::parse(R"({"":[1]})"));
  CHECK(json_to_cochain(j0, m) == c0);

  CHECK_THROWS_AS(json_to_cochain(json::parse(R"({"degree":2,"values":{"1":[2]}})"), m),
                  InvalidInput);
  CHECK_THROWS_AS(json_to_cochain(json::parse(R"({"degree":2,"values":{"1,5":[2]}})"), m),
                  InvalidInput);
  CHECK_THROWS_AS(json_to_cochain(json::parse(R"({"degree":2,"values":{"1,1":[2,0]}})"), m),
                  InvalidInput);
  CHECK_THROWS_AS(json_to_cochain(json::parse(R"({"degree":-1})"), m), InvalidInput);

  // Values reduce into the canonical range on the way in.
  Cochain r = json_to_cochain(json::parse(R"({"degree":1,"values":{"1":[-1]}})"), m);
  CHECK(r.value({1}) == std::vector<Int>{Int(2)});
}

TEST_CASE("fields and their elements") {
  Field f9 = Field::finite(3, 2);
  Field qi = Field::cyclotomic(4);
  CHECK(json_to_field(field_to_json(f9)).same(f9));
  CHECK(json_to_field(field_to_json(qi)).same(qi));
  CHECK_THROWS_AS(json_to_field(json::parse(R"({"kind":"padic","p":5})")), InvalidInput);

  FieldElement a = f9.element({mpq_class(2), mpq_class(1)});
  CHECK(json_to_element(element_to_json(a), f9) == a);
  // Short arrays pad with zeros, long ones are refused.
  CHECK(json_to_element(json::parse("[2]"), f9) == f9.from_integer(Int(2)));
  CHECK_THROWS_AS(json_to_element(json::parse("[0,0,1]"), f9), InvalidInput);

  FieldElement z = qi.element({mpq_class(1) / 2, mpq_class(-3)});
  json zj = element_to_json(z);
  CHECK(zj == json::parse(R"(["1/2",-3])"));
  CHECK(json_to_element(zj, qi) == z);
}

TEST_CASE("coefficient embeddings ride on the field kind") {
  Field f4 = Field::finite(2, 2);
  Field qi = Field::cyclotomic(4);
  CoefficientEmbedding u = CoefficientEmbedding::units(f4);
  CoefficientEmbedding r = CoefficientEmbedding::roots(qi, 2);
  CHECK(embedding_to_json(u) == json::parse(R"({"kind":"units"})"));
  CHECK(embedding_to_json(r) == json::parse(R"({"kind":"roots","m":2})"));
  CHECK(json_to_embedding(embedding_to_json(u), f4).module()->structurally_equal(*u.module()));
  CHECK(json_to_embedding(embedding_to_json(r), qi).module()->structurally_equal(*r.module()));
  CHECK_THROWS_AS(json_to_embedding(json::parse(R"({"kind":"units"})"), qi), InvalidInput);
  CHECK_THROWS_AS(json_to_embedding(json::parse(R"({"kind":"roots","m":2})"), f4), InvalidInput);
}

TEST_CASE("algebras: matrix algebra round trip and the crossed shorthand") {
  Field f4 = Field::finite(2, 2);
  LAlgebra m2 = matrix_algebra(f4, 2);
  json j = algebra_to_json(m2);
  LAlgebra back = json_to_algebra(j);
  CHECK(back.dim() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) CHECK(back.sc(i, k) == m2.sc(i, k));
  CHECK(back.unit() == m2.unit());

  json crossed = json::parse(R"({
    "kind": "crossed",
    "field": {"kind":"finite","p":2,"n":2},
    "coefficients": {"kind":"units"},
    "beta": {"degree":2,"values":{}}
  })");
  LAlgebra cp = json_to_algebra(crossed);
  CHECK(cp.dim() == 4);
  CHECK(is_simple(cp));

  // A corrupted table is rejected by the algebra constructor.
  json bad = algebra_to_json(m2);
  bad["sc"][1][2] = bad["sc"][3][3];
  CHECK_THROWS_AS(json_to_algebra(bad), InvalidInput);
}

TEST_CASE("lifts carry a matrix and an automorphism index") {
  Field f4 = Field::finite(2, 2);
  json j = json::parse(R"({"matrix":[[[1]]],"twist":1})");
  SemilinearMap t = json_to_lift(j, f4);
  CHECK(t.twist == f4.aut(1));
  CHECK(t.matrix.rows() == 1);
  json back = lift_to_json(t);
  CHECK(back.at("twist") == 1);
  SemilinearMap t2 = json_to_lift(back, f4);
  CHECK(t2.matrix.equal(t.matrix));
  CHECK_THROWS_AS(json_to_lift(json::parse(R"({"matrix":[[[1]]]})"), f4), InvalidInput);
}

TEST_CASE("towers validate on the way in") {
  json tower = json::parse(R"({
    "source": {"kind":"ff_units","p":2,"n":2},
    "target": {"kind":"ff_units","p":2,"n":4},
    "group_map": [0,1,0,1],
    "module_map": [[5]]
  })");
  TwModMorphism t = json_to_tower(tower);
  CHECK(t.source->structurally_equal(*make_finite_field_units(2, 2)));
  CHECK(t.target->structurally_equal(*make_finite_field_units(2, 4)));
  TwModMorphism back = json_to_tower(tower_to_json(t));
  CHECK(back.module_map.at(0, 0) == 5);

  json broken = tower;
  broken["module_map"] = json::parse("[[3]]");
  CHECK_THROWS_AS(json_to_tower(broken), InvalidInput);
}

TEST_CASE("categories parse, validate, and round trip byte for byte") {
  json cat = json::parse(R"({
    "extension": {
      "coefficients": {"kind":"roots","m":4},
      "field": {"kind":"cyclotomic","conductor":4}
    },
    "omega": {"degree":3,"values":{}}
  })");
  TwistedGradedCategory c = json_to_category(cat);
  CHECK(c.omega.is_zero());
  json out = category_to_json(c);
  CHECK(category_to_json(json_to_category(out)).dump() == out.dump());

  json bad = cat;
  bad["omega"]["values"]["0,0,0"] = json::parse("[1]");
  CHECK_THROWS_AS(json_to_category(bad), InvalidInput);
  // The raw reader hands the table through unvalidated.
  auto [ext, omega] = json_to_category_raw(bad);
  CHECK(!is_cocycle(omega));
  CHECK(ext.galois.group.size() == 2);
}

TEST_CASE("cohomology payloads list factors and generator tables") {
  GModulePtr m = make_roots_of_unity(4, 2);
  json h3 = cohomology_to_json(compute_cohomology(m, 3));
  CHECK(h3.at("invariant_factors") == json::parse("[2]"));
  REQUIRE(h3.at("generators").size() == 1);
  Cochain gen = json_to_cochain(h3.at("generators").at(0), m);
  CHECK(is_cocycle(gen));
  CHECK(!express_as_coboundary(gen));

  json h1 = cohomology_to_json(compute_cohomology(make_finite_field_units(3, 2), 1));
  CHECK(h1.at("invariant_factors") == json::parse("[]"));
  CHECK(h1.at("generators") == json::parse("[]"));
}
