#include "galcoh/algebra.hpp"

#include <string>
#include <utility>

#include "galcoh/error.hpp"

namespace galcoh {

namespace {

std::string triple_str(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ", " +
         std::to_string(k) + ")";
}

using ScTable = std::vector<std::vector<AlgebraElem>>;

AlgebraElem raw_product(const Field& f, const ScTable& sc, const AlgebraElem& x,
                        const AlgebraElem& y) {
  AlgebraElem r(x.size(), f.zero());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (f.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (f.is_zero(y[j])) continue;
      FieldElement c = f.mul(x[i], y[j]);
      for (std::size_t k = 0; k < r.size(); ++k)
        r[k] = f.add(r[k], f.mul(c, sc[i][j][k]));
    }
  }
  return r;
}

struct TripleIdx {
  std::size_t i, j, k;
};

std::optional<TripleIdx> first_assoc_violation(const Field& f,
                                               const ScTable& sc) {
  std::size_t m = sc.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const AlgebraElem& ij = sc[i][j];
      for (std::size_t k = 0; k < m; ++k) {
        AlgebraElem lhs(m, f.zero());
        for (std::size_t t = 0; t < m; ++t) {
          if (f.is_zero(ij[t])) continue;
          for (std::size_t s = 0; s < m; ++s)
            lhs[s] = f.add(lhs[s], f.mul(ij[t], sc[t][k][s]));
        }
        AlgebraElem rhs(m, f.zero());
        const AlgebraElem& jk = sc[j][k];
        for (std::size_t t = 0; t < m; ++t) {
          if (f.is_zero(jk[t])) continue;
          for (std::size_t s = 0; s < m; ++s)
            rhs[s] = f.add(rhs[s], f.mul(sc[i][t][s], jk[t]));
        }
        for (std::size_t s = 0; s < m; ++s)
          if (!f.equal(lhs[s], rhs[s])) return TripleIdx{i, j, k};
      }
    }
  return std::nullopt;
}

}  // namespace

LAlgebra::LAlgebra(Field field, std::vector<std::vector<AlgebraElem>> sc,
                   AlgebraElem unit)
    : field_(std::move(field)),
      dim_(unit.size()),
      sc_(std::move(sc)),
      unit_(std::move(unit)) {
  validate();
}

void LAlgebra::validate() const {
  if (dim_ == 0) throw InvalidInput("algebra must have positive dimension");
  if (sc_.size() != dim_)
    throw InvalidInput("structure constant table has wrong outer size");
  for (const auto& row : sc_) {
    if (row.size() != dim_)
      throw InvalidInput("structure constant table has a ragged row");
    for (const auto& e : row)
      if (e.size() != dim_)
        throw InvalidInput("structure constant entry has wrong length");
  }
  for (const auto& row : sc_)
    for (const auto& e : row)
      for (const auto& c : e)
        if (!(c.spec == field_.spec()))
          throw InvalidInput("structure constant lives in the wrong field");
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!equal(product(unit_, basis(i)), basis(i)) ||
        !equal(product(basis(i), unit_), basis(i)))
      throw InvalidInput("unit law fails at basis index " + std::to_string(i));
  }
  if (auto v = first_assoc_violation(field_, sc_))
    throw InvalidInput("associativity fails at basis triple " +
                       triple_str(v->i, v->j, v->k));
}

const AlgebraElem& LAlgebra::sc(std::size_t i, std::size_t j) const {
  return sc_[i][j];
}

AlgebraElem LAlgebra::zero() const {
  return AlgebraElem(dim_, field_.zero());
}

AlgebraElem LAlgebra::basis(std::size_t i) const {
  AlgebraElem e = zero();
  e[i] = field_.one();
  return e;
}

AlgebraElem LAlgebra::add(const AlgebraElem& x, const AlgebraElem& y) const {
  AlgebraElem r = zero();
  for (std::size_t i = 0; i < dim_; ++i) r[i] = field_.add(x[i], y[i]);
  return r;
}

AlgebraElem LAlgebra::sub(const AlgebraElem& x, const AlgebraElem& y) const {
  AlgebraElem r = zero();
  for (std::size_t i = 0; i < dim_; ++i) r[i] = field_.sub(x[i], y[i]);
  return r;
}

AlgebraElem LAlgebra::scale(const FieldElement& c, const AlgebraElem& x) const {
  AlgebraElem r = zero();
  for (std::size_t i = 0; i < dim_; ++i) r[i] = field_.mul(c, x[i]);
  return r;
}

AlgebraElem LAlgebra::product(const AlgebraElem& x, const AlgebraElem& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw InvalidInput("algebra element has wrong length");
  return raw_product(field_, sc_, x, y);
}

bool LAlgebra::is_zero(const AlgebraElem& x) const {
  for (const auto& c : x)
    if (!field_.is_zero(c)) return false;
  return true;
}

bool LAlgebra::equal(const AlgebraElem& x, const AlgebraElem& y) const {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!field_.equal(x[i], y[i])) return false;
  return true;
}

FMatrix LAlgebra::left_mult(const AlgebraElem& x) const {
  FMatrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    AlgebraElem col = product(x, basis(j));
    for (std::size_t i = 0; i < dim_; ++i) m.set(i, j, col[i]);
  }
  return m;
}

FMatrix LAlgebra::right_mult(const AlgebraElem& x) const {
  FMatrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    AlgebraElem col = product(basis(j), x);
    for (std::size_t i = 0; i < dim_; ++i) m.set(i, j, col[i]);
  }
  return m;
}

std::optional<AlgebraElem> LAlgebra::invert(const AlgebraElem& x) const {
  auto y = solve(left_mult(x), unit_);
  if (!y) return std::nullopt;
  if (!equal(product(*y, x), unit_)) return std::nullopt;
  return y;
}

LAlgebra matrix_algebra(const Field& f, std::size_t n) {
  if (n == 0) throw InvalidInput("matrix algebra needs positive size");
  std::size_t m = n * n;
  ScTable sc(m, std::vector<AlgebraElem>(m, AlgebraElem(m, f.zero())));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          if (b == c) sc[a * n + b][c * n + d][a * n + d] = f.one();
  AlgebraElem unit(m, f.zero());
  for (std::size_t a = 0; a < n; ++a) unit[a * n + a] = f.one();
  return LAlgebra(f, std::move(sc), std::move(unit));
}

LAlgebra field_algebra(const Field& f) {
  ScTable sc(1, std::vector<AlgebraElem>(1, AlgebraElem(1, f.one())));
  return LAlgebra(f, std::move(sc), AlgebraElem(1, f.one()));
}

std::vector<AlgebraElem> center_basis(const LAlgebra& a) {
  const Field& f = a.field();
  std::size_t m = a.dim();
  FMatrix stacked(f, m * m, m);
  for (std::size_t t = 0; t < m; ++t) {
    FMatrix diff = a.right_mult(a.basis(t)).sub(a.left_mult(a.basis(t)));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        stacked.set(t * m + i, j, diff.at(i, j));
  }
  return nullspace(stacked);
}

bool is_simple(const LAlgebra& a) {
  const Field& f = a.field();
  std::size_t m = a.dim();
  for (std::size_t t = 0; t < m; ++t) {
    FMatrix span(f, m, m * m);
    for (std::size_t i = 0; i < m; ++i) {
      AlgebraElem bt_i = a.product(a.basis(i), a.basis(t));
      for (std::size_t j = 0; j < m; ++j) {
        AlgebraElem v = a.product(bt_i, a.basis(j));
        for (std::size_t r = 0; r < m; ++r) span.set(r, i * m + j, v[r]);
      }
    }
    if (rank(span) != m) return false;
  }
  return true;
}

void validate_semilinear(const LAlgebra& a, const SemilinearMap& t) {
  const Field& f = a.field();
  if (!(t.matrix.field().same(f)) || !(t.twist.spec == f.spec()))
    throw InvalidInput("semilinear map lives over the wrong field");
  if (t.matrix.rows() != a.dim() || t.matrix.cols() != a.dim())
    throw InvalidInput("semilinear map matrix has the wrong shape");
  if (!inverse(t.matrix))
    throw InvalidInput("semilinear map matrix is not invertible");
  if (!a.equal(apply_semilinear(a, t, a.unit()), a.unit()))
    throw InvalidInput("semilinear map does not fix the unit");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      AlgebraElem lhs = apply_semilinear(a, t, a.sc(i, j));
      AlgebraElem rhs = a.product(apply_semilinear(a, t, a.basis(i)),
                                  apply_semilinear(a, t, a.basis(j)));
      if (!a.equal(lhs, rhs))
        throw InvalidInput("semilinear map is not multiplicative at basis pair (" +
                           std::to_string(i) + ", " + std::to_string(j) + ")");
    }
}

AlgebraElem apply_semilinear(const LAlgebra& a, const SemilinearMap& t,
                             const AlgebraElem& x) {
  const Field& f = a.field();
  AlgebraElem tx(x.size(), f.zero());
  for (std::size_t i = 0; i < x.size(); ++i)
    tx[i] = f.apply_aut(t.twist, x[i]);
  return t.matrix.apply(tx);
}

SemilinearMap compose_semilinear(const LAlgebra& a, const SemilinearMap& s,
                                 const SemilinearMap& t) {
  const Field& f = a.field();
  return SemilinearMap{s.matrix.mul(t.matrix.mapped(s.twist)),
                       f.compose_auts(s.twist, t.twist)};
}

SemilinearMap invert_semilinear(const LAlgebra& a, const SemilinearMap& t) {
  const Field& f = a.field();
  auto minv = inverse(t.matrix);
  if (!minv) throw InvalidInput("semilinear map matrix is not invertible");
  FieldAut gi = f.invert_aut(t.twist);
  return SemilinearMap{minv->mapped(gi), gi};
}

AlgebraElem skolem_noether(const LAlgebra& a, const FMatrix& phi) {
  const Field& f = a.field();
  std::size_t m = a.dim();
  if (phi.rows() != m || phi.cols() != m || !phi.field().same(f))
    throw InvalidInput("automorphism matrix has the wrong shape or field");
  if (!inverse(phi))
    throw InvalidInput("map is not an algebra automorphism: not invertible");
  if (!a.equal(phi.apply(a.unit()), a.unit()))
    throw InvalidInput("map is not an algebra automorphism: moves the unit");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!a.equal(phi.apply(a.sc(i, j)),
                   a.product(phi.col(i), phi.col(j))))
        throw InvalidInput(
            "map is not an algebra automorphism: breaks the product at (" +
            std::to_string(i) + ", " + std::to_string(j) + ")");

  /* r b_j = phi(b_j) r for every j, one dim x dim block per j. */
  FMatrix stacked(f, m * m, m);
  for (std::size_t j = 0; j < m; ++j) {
    FMatrix block = a.right_mult(a.basis(j)).sub(a.left_mult(phi.col(j)));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t c = 0; c < m; ++c)
        stacked.set(j * m + i, c, block.at(i, c));
  }
  std::vector<FVector> sol = nullspace(stacked);
  if (sol.size() != 1)
    throw CheckFailed("conjugating element space has dimension " +
                      std::to_string(sol.size()) +
                      ", expected 1; the algebra is not central simple");
  AlgebraElem r = sol[0];

  std::size_t i0 = 0;
  while (i0 < m && f.is_zero(a.unit()[i0])) ++i0;
  std::size_t pivot = i0;
  if (pivot >= m || f.is_zero(r[pivot])) {
    pivot = 0;
    while (pivot < m && f.is_zero(r[pivot])) ++pivot;
  }
  return a.scale(f.inv(r[pivot]), r);
}

namespace {

/* Shared table builder for crossed products: basis b_i u_g at g*d + i. */
struct CrossedTable {
  ScTable sc;
  AlgebraElem unit;
};

CrossedTable build_crossed_table(const Field& k, const Field& lfield,
                                 const GaloisGroup& gal,
                                 const CoefficientEmbedding& emb,
                                 const Cochain& beta) {
  const FiniteGroup& grp = gal.group;
  std::size_t n = static_cast<std::size_t>(grp.size());
  std::size_t d = lfield.degree();
  std::size_t m = n * d;

  std::vector<FieldElement> powv;
  for (std::size_t i = 0; i < d; ++i)
    powv.push_back(lfield.pow(lfield.gen(), Int(static_cast<long>(i))));
  std::vector<std::vector<FieldElement>> sigma_pow(n, powv);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t i = 0; i < d; ++i)
      sigma_pow[g][i] = lfield.apply_aut(gal.elements[g], powv[i]);

  auto to_block = [&](std::size_t block, const FieldElement& l) {
    AlgebraElem out(m, k.zero());
    for (std::size_t c = 0; c < d; ++c)
      out[block * d + c] = k.element({l.coeffs[c]});
    return out;
  };

  CrossedTable t;
  t.sc.assign(m, std::vector<AlgebraElem>(m, AlgebraElem(m, k.zero())));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      FieldElement bval = emb.to_field(
          beta.value({static_cast<int>(g), static_cast<int>(h)}));
      std::size_t gh = static_cast<std::size_t>(
          grp.mul(static_cast<int>(g), static_cast<int>(h)));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          FieldElement l =
              lfield.mul(powv[i], lfield.mul(sigma_pow[g][j], bval));
          t.sc[g * d + i][h * d + j] = to_block(gh, l);
        }
    }
  FieldElement beta11 = emb.to_field(beta.value({0, 0}));
  t.unit = to_block(0, lfield.inv(beta11));
  return t;
}

}  // namespace

CrossedProduct crossed_product(const Field& lfield, const GaloisGroup& gal,
                               const CoefficientEmbedding& emb,
                               const Cochain& beta) {
  if (!emb.field().same(lfield))
    throw InvalidInput("coefficient embedding targets a different field");
  if (beta.degree() != 2)
    throw InvalidInput("crossed product needs a degree-2 cochain");
  if (!beta.module()->structurally_equal(*emb.module()))
    throw InvalidInput("beta lives over a different module than the embedding");
  if (!(beta.module()->group() == gal.group))
    throw InvalidInput("beta lives over a different group than Gal(L/K)");

  Field k = prime_subfield(lfield);

  if (auto v = cocycle_violation(beta)) {
    /* The raw table must fail associativity at exactly the violating group
     * triple (with the leading power-basis vectors); anything else would
     * mean the table builder is wrong. */
    CrossedTable t = build_crossed_table(k, lfield, gal, emb, beta);
    auto bad = first_assoc_violation(k, t.sc);
    std::size_t d = lfield.degree();
    if (!bad || static_cast<int>(bad->i / d) != v->tuple[0] ||
        static_cast<int>(bad->j / d) != v->tuple[1] ||
        static_cast<int>(bad->k / d) != v->tuple[2])
      throw CheckFailed(
          "internal: associativity defect does not sit at the cocycle defect");
    throw InvalidInput("beta is not a 2-cocycle: violation at " +
                       triple_str(v->tuple[0], v->tuple[1], v->tuple[2]) +
                       ", where the structure constants fail associativity");
  }

  CrossedTable t = build_crossed_table(k, lfield, gal, emb, beta);
  LAlgebra alg(k, std::move(t.sc), std::move(t.unit));
  return CrossedProduct{std::move(alg), gal.group, beta, lfield,
                        lfield.degree(), emb};
}

std::optional<std::pair<std::size_t, std::size_t>> diagonal_isomorphism_check(
    const CrossedProduct& a1, const CrossedProduct& a2, const Cochain& tau) {
  if (!a1.lfield.same(a2.lfield) || !(a1.group == a2.group))
    throw InvalidInput("crossed products are over different extensions");
  if (tau.degree() != 1)
    throw InvalidInput("diagonal map needs a degree-1 cochain");
  if (!tau.module()->structurally_equal(*a1.beta.module()))
    throw InvalidInput("tau lives over a different module than beta");

  const Field& l = a1.lfield;
  const Field& k = a1.algebra.field();
  std::size_t d = a1.ldim;
  std::size_t n = static_cast<std::size_t>(a1.group.size());
  std::size_t m = n * d;

  std::vector<AlgebraElem> fimg;
  fimg.reserve(m);
  for (std::size_t g = 0; g < n; ++g) {
    FieldElement tg = a1.embedding.to_field(tau.value({static_cast<int>(g)}));
    for (std::size_t i = 0; i < d; ++i) {
      FieldElement li =
          l.mul(l.pow(l.gen(), Int(static_cast<long>(i))), tg);
      AlgebraElem img(m, k.zero());
      for (std::size_t c = 0; c < d; ++c)
        img[g * d + c] = k.element({li.coeffs[c]});
      fimg.push_back(std::move(img));
    }
  }

  auto apply_f = [&](const AlgebraElem& x) {
    AlgebraElem out = a2.algebra.zero();
    for (std::size_t t = 0; t < m; ++t)
      if (!k.is_zero(x[t]))
        out = a2.algebra.add(out, a2.algebra.scale(x[t], fimg[t]));
    return out;
  };

  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      AlgebraElem lhs = apply_f(a1.algebra.sc(p, q));
      AlgebraElem rhs = a2.algebra.product(fimg[p], fimg[q]);
      if (!a2.algebra.equal(lhs, rhs)) return std::make_pair(p, q);
    }
  return std::nullopt;
}

LAlgebra brauer_twist(const FieldAut& g, const LAlgebra& a) {
  const Field& f = a.field();
  FieldAut gi = f.invert_aut(g);
  std::size_t m = a.dim();
  ScTable sc(m, std::vector<AlgebraElem>(m, AlgebraElem(m, f.zero())));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        sc[i][j][k] = f.apply_aut(gi, a.sc(i, j)[k]);
  AlgebraElem unit(m, f.zero());
  for (std::size_t k = 0; k < m; ++k)
    unit[k] = f.apply_aut(gi, a.unit()[k]);
  return LAlgebra(f, std::move(sc), std::move(unit));
}

Cochain teichmuller_cocycle(const LAlgebra& a, const GaloisGroup& gal,
                            const std::vector<SemilinearMap>& lifts,
                            const CoefficientEmbedding& emb) {
  const Field& f = a.field();
  if (!emb.field().same(f))
    throw InvalidInput("coefficient embedding targets a different field");
  std::size_t n = gal.elements.size();
  if (lifts.size() != n)
    throw InvalidInput("need exactly one lift per Galois group element");
  for (std::size_t g = 0; g < n; ++g) {
    if (!(lifts[g].twist == gal.elements[g]))
      throw InvalidInput("lift " + std::to_string(g) +
                         " twists by the wrong automorphism");
    validate_semilinear(a, lifts[g]);
  }

  const FiniteGroup& grp = gal.group;
  std::vector<std::vector<AlgebraElem>> r(n, std::vector<AlgebraElem>(n));
  std::vector<std::vector<AlgebraElem>> rinv(n, std::vector<AlgebraElem>(n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      int gh = grp.mul(static_cast<int>(g), static_cast<int>(h));
      SemilinearMap defect = compose_semilinear(
          a, compose_semilinear(a, lifts[g], lifts[h]),
          invert_semilinear(a, lifts[static_cast<std::size_t>(gh)]));
      if (!(defect.twist == f.identity_aut()))
        throw CheckFailed("lift composition defect is not linear at (" +
                          std::to_string(g) + ", " + std::to_string(h) + ")");
      r[g][h] = skolem_noether(a, defect.matrix);
      auto inv_r = a.invert(r[g][h]);
      if (!inv_r)
        throw CheckFailed("conjugating element is not invertible at (" +
                          std::to_string(g) + ", " + std::to_string(h) + ")");
      rinv[g][h] = *inv_r;
    }

  std::size_t i0 = 0;
  while (i0 < a.dim() && f.is_zero(a.unit()[i0])) ++i0;

  Cochain omega(emb.module(), 3);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t kk = 0; kk < n; ++kk) {
        int gh = grp.mul(static_cast<int>(g), static_cast<int>(h));
        int hk = grp.mul(static_cast<int>(h), static_cast<int>(kk));
        AlgebraElem w = a.product(rinv[static_cast<std::size_t>(gh)][kk],
                                  rinv[g][h]);
        w = a.product(w, apply_semilinear(a, lifts[g], r[h][kk]));
        w = a.product(w, r[g][static_cast<std::size_t>(hk)]);

        FieldElement lambda = f.div(w[i0], a.unit()[i0]);
        if (!a.equal(w, a.scale(lambda, a.unit())))
          throw CheckFailed("associator is not a central scalar at " +
                            triple_str(g, h, kk));
        omega.set_value({static_cast<int>(g), static_cast<int>(h),
                         static_cast<int>(kk)},
                        emb.to_module(lambda));
      }

  if (auto v = cocycle_violation(omega))
    throw CheckFailed("associator table is not a 3-cocycle at " +
                      triple_str(v->tuple[0], v->tuple[1], v->tuple[2]));
  return omega;
}

}  // namespace galcoh
