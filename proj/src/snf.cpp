#include "galcoh/snf.hpp"

#include <cstdlib>

#include "galcoh/error.hpp"

namespace galcoh {

namespace {

/* Elimination state: s = u * input * v is maintained by every operation,
 * together with the inverses of u and v. */
struct Work {
  IntMatrix s, u, v, u_inv, v_inv;

  void row_swap(std::size_t a, std::size_t b) {
    s.swap_rows(a, b);
    u.swap_rows(a, b);
    u_inv.swap_cols(a, b);
  }
  void row_add(std::size_t dst, std::size_t src, const Int& k) {
    s.add_row_multiple(dst, src, k);
    u.add_row_multiple(dst, src, k);
    u_inv.add_col_multiple(src, dst, -k);
  }
  void row_negate(std::size_t i) {
    s.negate_row(i);
    u.negate_row(i);
    u_inv.negate_col(i);
  }
  void col_swap(std::size_t a, std::size_t b) {
    s.swap_cols(a, b);
    v.swap_cols(a, b);
    v_inv.swap_rows(a, b);
  }
  void col_add(std::size_t dst, std::size_t src, const Int& k) {
    s.add_col_multiple(dst, src, k);
    v.add_col_multiple(dst, src, k);
    v_inv.add_row_multiple(src, dst, -k);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  Work w{m, IntMatrix::identity(nr), IntMatrix::identity(nc), IntMatrix::identity(nr),
         IntMatrix::identity(nc)};

  std::size_t t = 0;
  const std::size_t steps = std::min(nr, nc);
  while (t < steps) {
    /* Pivot: nonzero entry of least absolute value in the trailing block,
     * ties broken by lowest row then lowest column index. */
    bool found = false;
    std::size_t pi = 0, pj = 0;
    Int best;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j) {
        const Int& x = w.s.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    for (;;) {
      bool dirty = false;
      /* Clear column t below the pivot; a nonzero remainder is strictly
       * smaller than the pivot and becomes the new pivot. */
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (w.s.at(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w.s.at(i, t).get_mpz_t(), w.s.at(t, t).get_mpz_t());
        w.row_add(i, t, -q);
        if (w.s.at(i, t) != 0) {
          w.row_swap(t, i);
          dirty = true;
          break;
        }
      }
      if (dirty) continue;
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (w.s.at(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w.s.at(t, j).get_mpz_t(), w.s.at(t, t).get_mpz_t());
        w.col_add(j, t, -q);
        if (w.s.at(t, j) != 0) {
          w.col_swap(t, j);
          dirty = true;
          break;
        }
      }
      if (dirty) continue;
      /* Row and column are clear.  Fold in any trailing entry the pivot
       * does not divide, so the divisibility chain comes out right. */
      bool fixed = true;
      for (std::size_t i = t + 1; i < nr && fixed; ++i)
        for (std::size_t j = t + 1; j < nc && fixed; ++j) {
          if (w.s.at(i, j) == 0) continue;
          if (mpz_divisible_p(w.s.at(i, j).get_mpz_t(), w.s.at(t, t).get_mpz_t())) continue;
          w.row_add(t, i, 1);
          fixed = false;
        }
      if (fixed) break;
    }

    if (w.s.at(t, t) < 0) w.row_negate(t);
    ++t;
  }

  SmithResult res;
  res.s = std::move(w.s);
  res.u = std::move(w.u);
  res.v = std::move(w.v);
  res.u_inv = std::move(w.u_inv);
  res.v_inv = std::move(w.v_inv);
  res.rank = t;
  return res;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  SmithResult r = smith_normal_form(m);
  return r.v.col_slice(r.rank, m.cols());
}

ModularSolver::ModularSolver(IntMatrix m, std::vector<Int> moduli) : unknowns_(m.cols()) {
  if (moduli.size() != m.rows()) throw InvalidInput("moduli length must match row count");
  std::vector<std::size_t> aug;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] < 0) throw InvalidInput("moduli must be nonnegative");
    if (moduli[i] != 0) aug.push_back(i);
  }
  IntMatrix b(m.rows(), m.cols() + aug.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) b.at(i, j) = m.at(i, j);
  for (std::size_t k = 0; k < aug.size(); ++k) b.at(aug[k], m.cols() + k) = moduli[aug[k]];
  snf_ = smith_normal_form(b);

  IntMatrix full = snf_.v.col_slice(snf_.rank, b.cols());
  std::vector<std::size_t> top(unknowns_);
  for (std::size_t i = 0; i < unknowns_; ++i) top[i] = i;
  kernel_ = full.row_select(top);
}

std::optional<std::vector<Int>> ModularSolver::solve(const std::vector<Int>& target) const {
  if (target.size() != snf_.u.cols()) throw InvalidInput("target length must match row count");
  std::vector<Int> wv = mat_vec(snf_.u, target);
  std::vector<Int> y(snf_.v.rows());
  for (std::size_t i = 0; i < wv.size(); ++i) {
    if (i < snf_.rank) {
      const Int& d = snf_.s.at(i, i);
      if (!mpz_divisible_p(wv[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      y[i] = wv[i] / d;
    } else if (wv[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Int> full = mat_vec(snf_.v, y);
  full.resize(unknowns_);
  return full;
}

std::optional<std::vector<Int>> solve_modular(const IntMatrix& m, const std::vector<Int>& target,
                                              const std::vector<Int>& moduli) {
  return ModularSolver(m, moduli).solve(target);
}

}  // namespace galcoh
