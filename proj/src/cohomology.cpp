#include "galcoh/cohomology.hpp"

#include <string>

#include "galcoh/error.hpp"

namespace galcoh {

namespace {

std::string tuple_str(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + std::to_string(t[i]);
  return s + ")";
}

/* d(c) evaluated at one (n+1)-tuple, unreduced. */
std::vector<Int> coboundary_value(const Cochain& c, const std::vector<int>& t) {
  const GModule& m = *c.module();
  const int n = c.degree();
  const std::size_t r = m.rank();

  std::vector<int> head(t.begin(), t.end() - 1);
  std::vector<int> tail(t.begin() + 1, t.end());

  std::vector<Int> acc = mat_vec(m.action(t[0]), c.value(tail));
  int sign = 1;
  std::vector<int> merged(n);
  for (int i = 1; i <= n; ++i) {
    sign = -sign;
    for (int k = 0; k < n; ++k) {
      if (k < i - 1)
        merged[k] = t[k];
      else if (k == i - 1)
        merged[k] = m.group().mul(t[i - 1], t[i]);
      else
        merged[k] = t[k + 1];
    }
    std::vector<Int> v = c.value(merged);
    for (std::size_t j = 0; j < r; ++j) acc[j] += sign * v[j];
  }
  sign = -sign;
  std::vector<Int> v = c.value(head);
  for (std::size_t j = 0; j < r; ++j) acc[j] += sign * v[j];
  return acc;
}

}  // namespace

Cochain coboundary(const Cochain& c) {
  const GModule& m = *c.module();
  const int n = c.degree();
  Cochain out(c.module(), n + 1);
  TupleIndexer ix(m.group().size(), n + 1);
  for (std::size_t i = 0; i < ix.count(); ++i)
    out.set_value_at(i, m.coefficients().reduce(coboundary_value(c, ix.tuple(i))));
  return out;
}

std::optional<CocycleViolation> cocycle_violation(const Cochain& c) {
  const GModule& m = *c.module();
  TupleIndexer ix(m.group().size(), c.degree() + 1);
  for (std::size_t i = 0; i < ix.count(); ++i) {
    std::vector<int> t = ix.tuple(i);
    std::vector<Int> v = m.coefficients().reduce(coboundary_value(c, t));
    for (const Int& x : v)
      if (x != 0) return CocycleViolation{std::move(t), std::move(v)};
  }
  return std::nullopt;
}

bool is_cocycle(const Cochain& c) { return !cocycle_violation(c).has_value(); }

IntMatrix coboundary_matrix(const GModule& m, int degree) {
  const int n = degree;
  const std::size_t r = m.rank();
  TupleIndexer src(m.group().size(), n);
  TupleIndexer dst(m.group().size(), n + 1);
  IntMatrix d(dst.count() * r, src.count() * r);

  std::vector<int> merged(n);
  for (std::size_t ti = 0; ti < dst.count(); ++ti) {
    std::vector<int> t = dst.tuple(ti);
    std::vector<int> head(t.begin(), t.end() - 1);
    std::vector<int> tail(t.begin() + 1, t.end());

    const IntMatrix& act = m.action(t[0]);
    std::size_t col0 = src.index(tail) * r;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) d.at(ti * r + i, col0 + j) += act.at(i, j);

    int sign = 1;
    for (int i = 1; i <= n; ++i) {
      sign = -sign;
      for (int k = 0; k < n; ++k) {
        if (k < i - 1)
          merged[k] = t[k];
        else if (k == i - 1)
          merged[k] = m.group().mul(t[i - 1], t[i]);
        else
          merged[k] = t[k + 1];
      }
      std::size_t col = src.index(merged) * r;
      for (std::size_t j = 0; j < r; ++j) d.at(ti * r + j, col + j) += sign;
    }
    sign = -sign;
    std::size_t col = src.index(head) * r;
    for (std::size_t j = 0; j < r; ++j) d.at(ti * r + j, col + j) += sign;
  }
  return d;
}

std::vector<Int> cochain_moduli(const GModule& m, int degree) {
  TupleIndexer ix(m.group().size(), degree);
  const auto& f = m.coefficients().invariant_factors();
  std::vector<Int> out;
  out.reserve(ix.count() * f.size());
  for (std::size_t t = 0; t < ix.count(); ++t) out.insert(out.end(), f.begin(), f.end());
  return out;
}

CohomologyGroup compute_cohomology(const GModulePtr& module, int degree,
                                   std::size_t max_table_entries) {
  if (degree < 0) throw InvalidInput("cohomology degree must be nonnegative");
  const GModule& m = *module;
  const std::size_t r = m.rank();

  Int budget = 1;
  for (int i = 0; i <= degree; ++i) budget *= m.group().size();
  budget *= static_cast<long>(r);
  if (budget > static_cast<long>(max_table_entries))
    throw ResourceLimit("degree " + std::to_string(degree + 1) + " table needs " +
                        budget.get_str() + " entries, budget is " +
                        std::to_string(max_table_entries));

  CohomologyGroup out;
  out.degree = degree;
  if (r == 0) {
    out.structure = FgAbelianGroup();
    return out;
  }

  IntMatrix dn = coboundary_matrix(m, degree);
  ModularSolver ker_solver(dn, cochain_moduli(m, degree + 1));
  IntMatrix kernel = ker_solver.kernel();

  std::size_t ambient = TupleIndexer(m.group().size(), degree).count() * r;
  IntMatrix image(ambient, 0);
  if (degree > 0) image = coboundary_matrix(m, degree - 1);

  SubquotientResult sub = subquotient_structure(kernel, image, cochain_moduli(m, degree));
  out.structure = sub.group;
  for (auto& lift : sub.generator_lifts) {
    Cochain g = Cochain::from_flat(module, degree, std::move(lift));
    if (auto bad = cocycle_violation(g))
      throw CheckFailed("internal: generator fails the cocycle test at " + tuple_str(bad->tuple));
    out.generators.push_back(std::move(g));
  }
  return out;
}

std::optional<Cochain> express_as_coboundary(const Cochain& z) {
  if (z.degree() < 1) throw InvalidInput("coboundary witnesses start at degree 1");
  if (auto bad = cocycle_violation(z))
    throw CheckFailed("not a cocycle: d(z) != 0 at " + tuple_str(bad->tuple));
  const GModule& m = *z.module();
  ModularSolver solver(coboundary_matrix(m, z.degree() - 1), cochain_moduli(m, z.degree()));
  auto tau = solver.solve(z.flat());
  if (!tau) return std::nullopt;
  return Cochain::from_flat(z.module(), z.degree() - 1, std::move(*tau));
}

CohomologousResult cohomologous(const Cochain& a, const Cochain& b) {
  if (!a.same_shape(b)) throw InvalidInput("cochain shapes differ");
  CohomologousResult res;
  res.witness = express_as_coboundary(a - b);
  res.equivalent = res.witness.has_value();
  return res;
}

Cochain inflate(const TwModMorphism& t, const Cochain& c) {
  validate_twmorphism(t);
  if (!c.module()->structurally_equal(*t.source))
    throw InvalidInput("cochain does not live over the morphism source");
  const GModule& tgt = *t.target;
  const int n = c.degree();
  Cochain out(t.target, n);
  TupleIndexer ix(tgt.group().size(), n);
  std::vector<int> pulled(n);
  for (std::size_t i = 0; i < ix.count(); ++i) {
    std::vector<int> h = ix.tuple(i);
    for (int k = 0; k < n; ++k) pulled[k] = t.group_map.apply(h[k]);
    out.set_value_at(i, mat_vec(t.module_map, c.value(pulled)));
  }
  return out;
}

bool is_normalized(const Cochain& c) {
  if (c.degree() == 0) return true;
  const GModule& m = *c.module();
  TupleIndexer ix(m.group().size(), c.degree());
  for (std::size_t i = 0; i < ix.count(); ++i) {
    std::vector<int> t = ix.tuple(i);
    bool degenerate = false;
    for (int g : t) degenerate |= (g == 0);
    if (!degenerate) continue;
    for (const Int& x : c.value_at(i))
      if (x != 0) return false;
  }
  return true;
}

Cochain normalize_cocycle(const Cochain& z) {
  if (auto bad = cocycle_violation(z))
    throw CheckFailed("not a cocycle: d(z) != 0 at " + tuple_str(bad->tuple));
  if (z.degree() == 0 || is_normalized(z)) return z;

  const GModule& m = *z.module();
  const std::size_t r = m.rank();
  const int n = z.degree();

  TupleIndexer ix(m.group().size(), n);
  std::vector<std::size_t> rows;
  std::vector<Int> target, moduli;
  const auto& f = m.coefficients().invariant_factors();
  for (std::size_t i = 0; i < ix.count(); ++i) {
    std::vector<int> t = ix.tuple(i);
    bool degenerate = false;
    for (int g : t) degenerate |= (g == 0);
    if (!degenerate) continue;
    std::vector<Int> v = z.value_at(i);
    for (std::size_t j = 0; j < r; ++j) {
      rows.push_back(i * r + j);
      target.push_back(v[j]);
      moduli.push_back(f[j]);
    }
  }

  IntMatrix d = coboundary_matrix(m, n - 1).row_select(rows);
  auto tau = solve_modular(d, target, moduli);
  if (!tau)
    throw CheckFailed("internal: no normalized representative found for a cocycle");
  Cochain adjusted = z - coboundary(Cochain::from_flat(z.module(), n - 1, std::move(*tau)));
  if (!is_normalized(adjusted))
    throw CheckFailed("internal: normalization produced a non-normalized cochain");
  return adjusted;
}

}  // namespace galcoh
