#include "galcoh/abelian.hpp"

#include "galcoh/error.hpp"
#include "galcoh/snf.hpp"

namespace galcoh {

FgAbelianGroup::FgAbelianGroup(std::vector<Int> invariant_factors) {
  std::size_t zeros = 0;
  Int prev = 0;
  for (const Int& d : invariant_factors) {
    if (d < 0) throw InvalidInput("invariant factors must be nonnegative");
    if (d == 0) {
      ++zeros;
      continue;
    }
    if (zeros) throw InvalidInput("free factors must come after the finite ones");
    if (d == 1) continue;
    if (prev != 0 && !mpz_divisible_p(d.get_mpz_t(), prev.get_mpz_t()))
      throw InvalidInput("invariant factors must form a divisibility chain");
    prev = d;
    f_.push_back(d);
  }
  f_.insert(f_.end(), zeros, Int(0));
}

bool FgAbelianGroup::is_finite() const {
  return f_.empty() || f_.back() != 0;
}

Int FgAbelianGroup::order() const {
  if (!is_finite()) throw InvalidInput("order of an infinite group");
  Int n = 1;
  for (const Int& d : f_) n *= d;
  return n;
}

std::vector<Int> FgAbelianGroup::reduce(std::vector<Int> coords) const {
  if (coords.size() != f_.size()) throw InvalidInput("coordinate length mismatch");
  for (std::size_t i = 0; i < f_.size(); ++i)
    if (f_[i] != 0) mpz_fdiv_r(coords[i].get_mpz_t(), coords[i].get_mpz_t(), f_[i].get_mpz_t());
  return coords;
}

std::vector<Int> FgAbelianGroup::add(const std::vector<Int>& a, const std::vector<Int>& b) const {
  if (a.size() != f_.size() || b.size() != f_.size())
    throw InvalidInput("coordinate length mismatch");
  std::vector<Int> r(f_.size());
  for (std::size_t i = 0; i < f_.size(); ++i) r[i] = a[i] + b[i];
  return reduce(std::move(r));
}

std::vector<Int> FgAbelianGroup::neg(const std::vector<Int>& a) const {
  std::vector<Int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return reduce(std::move(r));
}

std::vector<Int> FgAbelianGroup::scale(const Int& k, const std::vector<Int>& a) const {
  std::vector<Int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return reduce(std::move(r));
}

bool FgAbelianGroup::is_zero(const std::vector<Int>& coords) const {
  std::vector<Int> r = reduce(coords);
  for (const Int& x : r)
    if (x != 0) return false;
  return true;
}

Int FgAbelianGroup::element_order(const std::vector<Int>& coords) const {
  std::vector<Int> r = reduce(coords);
  Int ord = 1;
  for (std::size_t i = 0; i < f_.size(); ++i) {
    if (r[i] == 0) continue;
    if (f_[i] == 0) throw InvalidInput("element has infinite order");
    Int g;
    mpz_gcd(g.get_mpz_t(), r[i].get_mpz_t(), f_[i].get_mpz_t());
    Int o = f_[i] / g;
    mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), o.get_mpz_t());
  }
  return ord;
}

std::vector<Int> CokernelResult::project(const std::vector<Int>& ambient) const {
  std::vector<Int> z = mat_vec(u, ambient);
  std::vector<Int> out(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) out[i] = z[kept[i]];
  return group.reduce(std::move(out));
}

CokernelResult cokernel_structure(const IntMatrix& m) {
  SmithResult r = smith_normal_form(m);
  CokernelResult out;
  out.u = r.u;

  std::vector<Int> factors;
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.s.at(i, i) == 1) continue;
    out.kept.push_back(i);
    out.kept_moduli.push_back(r.s.at(i, i));
    factors.push_back(r.s.at(i, i));
  }
  for (std::size_t i = r.rank; i < m.rows(); ++i) {
    out.kept.push_back(i);
    out.kept_moduli.push_back(0);
    factors.push_back(0);
  }
  out.group = FgAbelianGroup(std::move(factors));

  /* Generator of factor i is the class of column kept[i] of u^-1. */
  for (std::size_t i : out.kept) out.generator_lifts.push_back(r.u_inv.col(i));
  return out;
}

SubquotientResult subquotient_structure(const IntMatrix& kernel_basis,
                                        const IntMatrix& image_basis,
                                        const std::vector<Int>& ambient_moduli) {
  const std::size_t n = ambient_moduli.size();
  if (kernel_basis.rows() != n || image_basis.rows() != n)
    throw InvalidInput("basis rows must match ambient rank");
  const std::size_t s = kernel_basis.cols();

  ModularSolver solver(kernel_basis, ambient_moduli);

  /* Relations on the kernel generators: coefficient vectors that express the
   * image generators, plus the syzygies of the kernel generators themselves. */
  IntMatrix rel(s, image_basis.cols() + solver.kernel().cols());
  for (std::size_t j = 0; j < image_basis.cols(); ++j) {
    auto b = solver.solve(image_basis.col(j));
    if (!b) throw InvalidInput("image generator outside the kernel span");
    rel.set_col(j, *b);
  }
  for (std::size_t j = 0; j < solver.kernel().cols(); ++j)
    rel.set_col(image_basis.cols() + j, solver.kernel().col(j));

  CokernelResult ck = cokernel_structure(rel);

  SubquotientResult out;
  out.group = ck.group;
  for (const auto& lift : ck.generator_lifts) {
    std::vector<Int> amb = mat_vec(kernel_basis, lift);
    for (std::size_t i = 0; i < n; ++i)
      if (ambient_moduli[i] != 0)
        mpz_fdiv_r(amb[i].get_mpz_t(), amb[i].get_mpz_t(), ambient_moduli[i].get_mpz_t());
    out.generator_lifts.push_back(std::move(amb));
  }
  return out;
}

}  // namespace galcoh
