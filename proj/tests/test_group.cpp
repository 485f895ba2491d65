#include <doctest.h>

#include <vector>

#include "galcoh/error.hpp"
#include "galcoh/group.hpp"

using namespace galcoh;

TEST_CASE("cyclic groups and the Klein table") {
  FiniteGroup z4 = make_cyclic(4);
  CHECK(z4.size() == 4);
  CHECK(z4.mul(3, 2) == 1);
  CHECK(z4.inv(1) == 3);
  CHECK(z4.element_order(1) == 4);
  CHECK(z4.element_order(2) == 2);

  FiniteGroup klein = direct_product(make_cyclic(2), make_cyclic(2));
  for (int g = 0; g < 4; ++g) CHECK(klein.mul(g, g) == 0);
}

TEST_CASE("direct product indexing is g * |H| + h") {
  FiniteGroup g = direct_product(make_cyclic(2), make_cyclic(3));
  /* (1, 1) sits at 1 * 3 + 1 = 4 and has order 6. */
  CHECK(g.element_order(4) == 6);
  /* (1,1) + (1,1) = (0, 2), index 0 * 3 + 2. */
  CHECK(g.mul(4, 4) == 2);
}

TEST_CASE("group table validation catches broken tables") {
  /* Identity not at index 0. */
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), InvalidInput);
  /* Non-associative magma with 0 as a two-sided identity. */
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}}), InvalidInput);
  /* Out of range entry. */
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 7}}), InvalidInput);
}

TEST_CASE("hom validation reports witness pairs") {
  FiniteGroup z4 = make_cyclic(4);
  FiniteGroup z2 = make_cyclic(2);

  CHECK(!validate_hom(GroupHom{z4, z2, {0, 1, 0, 1}}).has_value());

  /* Generator to generator^2 with junk elsewhere. */
  auto bad = validate_hom(GroupHom{z4, z4, {0, 2, 1, 3}});
  REQUIRE(bad.has_value());
  GroupHom f{z4, z4, {0, 2, 1, 3}};
  CHECK(f.images[f.source.mul(bad->a, bad->b)] !=
        f.target.mul(f.images[bad->a], f.images[bad->b]));

  CHECK_THROWS_AS(make_hom(z4, z4, {0, 2, 1, 3}), InvalidInput);
}

TEST_CASE("tuple enumeration is lexicographic and invertible") {
  FiniteGroup z3 = make_cyclic(3);
  auto tuples = enumerate_tuples(z3, 2);
  REQUIRE(tuples.size() == 9);
  CHECK(tuples[0] == std::vector<int>({0, 0}));
  CHECK(tuples[1] == std::vector<int>({0, 1}));
  CHECK(tuples[3] == std::vector<int>({1, 0}));
  CHECK(tuples[8] == std::vector<int>({2, 2}));

  TupleIndexer ix(3, 2);
  for (std::size_t i = 0; i < tuples.size(); ++i) CHECK(ix.index(tuples[i]) == i);

  TupleIndexer empty(5, 0);
  CHECK(empty.count() == 1);
  CHECK(empty.tuple(0).empty());
}

TEST_CASE("unit groups of small moduli") {
  UnitGroup u8 = make_unit_group(8);
  CHECK(u8.classes == std::vector<long>({1, 3, 5, 7}));
  for (int g = 0; g < 4; ++g) CHECK(u8.group.mul(g, g) == 0);  // Klein four

  UnitGroup u5 = make_unit_group(5);
  CHECK(u5.group.element_order(u5.index_of(2)) == 4);  // cyclic of order 4

  UnitGroup u4 = make_unit_group(4);
  CHECK(u4.group.size() == 2);
}
