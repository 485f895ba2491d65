#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace galcoh {

/* Finite group as a dense multiplication table over indices 0..n-1.
 * Index 0 is the identity; that is a representation invariant, checked on
 * construction along with associativity and the existence of inverses. */
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::vector<std::vector<int>> table);

  int size() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int element_order(int a) const;
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
};

FiniteGroup make_cyclic(int n);

/* Pair (g, h) lives at index g * |H| + h. */
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

struct GroupHom {
  FiniteGroup source, target;
  std::vector<int> images;  // images[x] = f(x)

  int apply(int x) const { return images[x]; }
  bool is_surjective() const;
};

struct HomViolation {
  int a, b;  // f(a*b) != f(a)*f(b)
};

/* nullopt when f is a homomorphism; otherwise a witness pair. */
std::optional<HomViolation> validate_hom(const GroupHom& f);

/* Checked constructor; throws InvalidInput quoting the witness pair. */
GroupHom make_hom(FiniteGroup source, FiniteGroup target, std::vector<int> images);

GroupHom compose_hom(const GroupHom& outer, const GroupHom& inner);

/* Tuples of group indices in lexicographic order, first coordinate most
 * significant; index <-> tuple in O(arity). */
class TupleIndexer {
 public:
  TupleIndexer(int group_size, int arity);
  std::size_t count() const { return count_; }
  int arity() const { return arity_; }
  std::vector<int> tuple(std::size_t index) const;
  std::size_t index(const std::vector<int>& tuple) const;

 private:
  int size_, arity_;
  std::size_t count_;
};

std::vector<std::vector<int>> enumerate_tuples(const FiniteGroup& g, int arity);

/* Multiplicative group (Z/n)^x with residues listed ascending, so the class
 * of 1 sits at index 0. */
struct UnitGroup {
  FiniteGroup group;
  std::vector<long> classes;  // classes[i] = residue represented by index i
  int index_of(long residue) const;
};

UnitGroup make_unit_group(long n);

}  // namespace galcoh
