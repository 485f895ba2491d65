#include "galcoh/group.hpp"

#include <numeric>
#include <string>

#include "galcoh/error.hpp"

namespace galcoh {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InvalidInput("group table is empty");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) throw InvalidInput("group table is not square");
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        throw InvalidInput("group table entry out of range at (" + std::to_string(i) + ", " +
                           std::to_string(j) + ")");
  }
  for (int g = 0; g < n; ++g)
    if (table[0][g] != g || table[g][0] != g)
      throw InvalidInput("index 0 is not an identity (element " + std::to_string(g) + ")");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw InvalidInput("associativity fails at (" + std::to_string(a) + ", " +
                             std::to_string(b) + ", " + std::to_string(c) + ")");

  FiniteGroup g;
  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == 0 && table[b][a] == 0) {
        g.inv_[a] = b;
        break;
      }
    if (g.inv_[a] < 0) throw InvalidInput("element " + std::to_string(a) + " has no inverse");
  }
  g.table_ = std::move(table);
  return g;
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

FiniteGroup make_cyclic(int n) {
  if (n <= 0) throw InvalidInput("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::from_table(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int ng = g.size(), nh = h.size();
  std::vector<std::vector<int>> t(ng * nh, std::vector<int>(ng * nh));
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nh; ++b)
      for (int c = 0; c < ng; ++c)
        for (int d = 0; d < nh; ++d)
          t[a * nh + b][c * nh + d] = g.mul(a, c) * nh + h.mul(b, d);
  return FiniteGroup::from_table(std::move(t));
}

bool GroupHom::is_surjective() const {
  std::vector<char> hit(target.size(), 0);
  for (int x : images) hit[x] = 1;
  for (char c : hit)
    if (!c) return false;
  return true;
}

std::optional<HomViolation> validate_hom(const GroupHom& f) {
  const int n = f.source.size();
  if (static_cast<int>(f.images.size()) != n) throw InvalidInput("image list length mismatch");
  for (int x : f.images)
    if (x < 0 || x >= f.target.size()) throw InvalidInput("image index out of range");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (f.images[f.source.mul(a, b)] != f.target.mul(f.images[a], f.images[b]))
        return HomViolation{a, b};
  return std::nullopt;
}

GroupHom make_hom(FiniteGroup source, FiniteGroup target, std::vector<int> images) {
  GroupHom f{std::move(source), std::move(target), std::move(images)};
  if (auto bad = validate_hom(f))
    throw InvalidInput("not a homomorphism: f(a*b) != f(a)*f(b) at (" + std::to_string(bad->a) +
                       ", " + std::to_string(bad->b) + ")");
  return f;
}

GroupHom compose_hom(const GroupHom& outer, const GroupHom& inner) {
  if (!(inner.target == outer.source)) throw InvalidInput("composition source/target mismatch");
  std::vector<int> images(inner.source.size());
  for (int x = 0; x < inner.source.size(); ++x) images[x] = outer.images[inner.images[x]];
  return GroupHom{inner.source, outer.target, std::move(images)};
}

TupleIndexer::TupleIndexer(int group_size, int arity) : size_(group_size), arity_(arity) {
  if (group_size <= 0 || arity < 0) throw InvalidInput("bad tuple indexer parameters");
  count_ = 1;
  for (int i = 0; i < arity; ++i) count_ *= static_cast<std::size_t>(size_);
}

std::vector<int> TupleIndexer::tuple(std::size_t index) const {
  std::vector<int> t(arity_);
  for (int i = arity_ - 1; i >= 0; --i) {
    t[i] = static_cast<int>(index % size_);
    index /= size_;
  }
  return t;
}

std::size_t TupleIndexer::index(const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != arity_) throw InvalidInput("tuple arity mismatch");
  std::size_t idx = 0;
  for (int i = 0; i < arity_; ++i) idx = idx * size_ + static_cast<std::size_t>(tuple[i]);
  return idx;
}

std::vector<std::vector<int>> enumerate_tuples(const FiniteGroup& g, int arity) {
  TupleIndexer ix(g.size(), arity);
  std::vector<std::vector<int>> out;
  out.reserve(ix.count());
  for (std::size_t i = 0; i < ix.count(); ++i) out.push_back(ix.tuple(i));
  return out;
}

int UnitGroup::index_of(long residue) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == residue) return static_cast<int>(i);
  throw InvalidInput("residue is not a unit");
}

UnitGroup make_unit_group(long n) {
  if (n <= 0) throw InvalidInput("modulus must be positive");
  UnitGroup u;
  if (n == 1) {
    u.classes = {0};  // the zero ring's unit group is trivial
    u.group = make_cyclic(1);
    return u;
  }
  for (long k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) u.classes.push_back(k);
  const int m = static_cast<int>(u.classes.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[i][j] = u.index_of(u.classes[i] * u.classes[j] % n);
  u.group = FiniteGroup::from_table(std::move(t));
  return u;
}

}  // namespace galcoh
