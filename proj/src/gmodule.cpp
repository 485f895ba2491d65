#include "galcoh/gmodule.hpp"

#include <string>

#include "galcoh/error.hpp"

namespace galcoh {

namespace {

/* Entrywise congruence with row-indexed moduli: row i is compared mod
 * factors[i], a zero factor meaning equality over Z. */
bool congruent_rows(const IntMatrix& a, const IntMatrix& b, const std::vector<Int>& factors) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Int d = a.at(i, j) - b.at(i, j);
      if (factors[i] == 0 ? d != 0 : !mpz_divisible_p(d.get_mpz_t(), factors[i].get_mpz_t()))
        return false;
    }
  return true;
}

IntMatrix reduce_rows(IntMatrix m, const std::vector<Int>& factors) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (factors[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_fdiv_r(m.at(i, j).get_mpz_t(), m.at(i, j).get_mpz_t(), factors[i].get_mpz_t());
  }
  return m;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

GModule::GModule(FiniteGroup group, FgAbelianGroup coefficients, std::vector<IntMatrix> action)
    : group_(std::move(group)), coeffs_(std::move(coefficients)), action_(std::move(action)) {
  const std::size_t r = coeffs_.rank();
  if (action_.size() != static_cast<std::size_t>(group_.size()))
    throw InvalidInput("need one action matrix per group element");
  for (auto& a : action_) {
    if (a.rows() != r || a.cols() != r) throw InvalidInput("action matrix has wrong shape");
    a = reduce_rows(std::move(a), coeffs_.invariant_factors());
  }
  const auto& f = coeffs_.invariant_factors();
  if (!congruent_rows(action_[0], IntMatrix::identity(r), f))
    throw InvalidInput("identity element must act as the identity");
  for (int g = 0; g < group_.size(); ++g)
    for (int h = 0; h < group_.size(); ++h)
      if (!congruent_rows(action_[g] * action_[h], action_[group_.mul(g, h)], f))
        throw InvalidInput("action is not a homomorphism at (" + std::to_string(g) + ", " +
                           std::to_string(h) + ")");
}

std::vector<Int> GModule::act(int g, const std::vector<Int>& m) const {
  return coeffs_.reduce(mat_vec(action_[g], m));
}

bool GModule::structurally_equal(const GModule& o) const {
  return group_ == o.group_ && coeffs_ == o.coeffs_ && action_ == o.action_;
}

GModulePtr make_trivial_module(FiniteGroup group, FgAbelianGroup coefficients) {
  std::vector<IntMatrix> action(group.size(), IntMatrix::identity(coefficients.rank()));
  return std::make_shared<GModule>(std::move(group), std::move(coefficients), std::move(action));
}

GModulePtr make_finite_field_units(long p, long n) {
  if (!is_prime(p)) throw InvalidInput("p must be prime");
  if (n < 1) throw InvalidInput("extension degree must be positive");
  Int q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
  Int order = q - 1;
  FgAbelianGroup coeffs({order});
  const std::size_t r = coeffs.rank();
  FiniteGroup galois = make_cyclic(static_cast<int>(n));
  std::vector<IntMatrix> action;
  Int mult = 1;
  for (long i = 0; i < n; ++i) {
    IntMatrix a(r, r);
    if (r) a.at(0, 0) = mult;
    action.push_back(std::move(a));
    mult = mult * p % order;
  }
  return std::make_shared<GModule>(std::move(galois), std::move(coeffs), std::move(action));
}

GModulePtr make_roots_of_unity(long conductor, long m) {
  if (conductor < 1 || m < 1) throw InvalidInput("conductor and order must be positive");
  if (conductor % m != 0) throw InvalidInput("mu_m lies in the n-th cyclotomic field only for m | n");
  UnitGroup ug = make_unit_group(conductor);
  FgAbelianGroup coeffs({Int(m)});
  const std::size_t r = coeffs.rank();
  std::vector<IntMatrix> action;
  for (long cls : ug.classes) {
    IntMatrix a(r, r);
    if (r) a.at(0, 0) = cls % m;
    action.push_back(std::move(a));
  }
  return std::make_shared<GModule>(std::move(ug.group), std::move(coeffs), std::move(action));
}

void validate_twmorphism(const TwModMorphism& m) {
  if (!m.source || !m.target) throw InvalidInput("morphism endpoints are missing");
  const GModule& a = *m.source;
  const GModule& b = *m.target;
  if (!(m.group_map.source == b.group()) || !(m.group_map.target == a.group()))
    throw InvalidInput("group map must run from the target's group to the source's group");
  if (auto bad = validate_hom(m.group_map))
    throw InvalidInput("group map is not a homomorphism at (" + std::to_string(bad->a) + ", " +
                       std::to_string(bad->b) + ")");
  if (m.module_map.rows() != b.rank() || m.module_map.cols() != a.rank())
    throw InvalidInput("module map has wrong shape");

  const auto& fa = a.coefficients().invariant_factors();
  const auto& fb = b.coefficients().invariant_factors();
  for (std::size_t j = 0; j < a.rank(); ++j)
    for (std::size_t i = 0; i < b.rank(); ++i) {
      Int v = fa[j] * m.module_map.at(i, j);
      if (fb[i] == 0 ? v != 0 : !mpz_divisible_p(v.get_mpz_t(), fb[i].get_mpz_t()))
        throw InvalidInput("module map does not respect the invariant factors (generator " +
                           std::to_string(j) + ")");
    }

  for (int h = 0; h < b.group().size(); ++h) {
    IntMatrix lhs = m.module_map * a.action(m.group_map.apply(h));
    IntMatrix rhs = b.action(h) * m.module_map;
    if (!congruent_rows(lhs, rhs, fb))
      throw InvalidInput("compatibility phi(f(h).a) = h.phi(a) fails at group element " +
                         std::to_string(h));
  }
}

TwModMorphism compose_twmorphism(const TwModMorphism& second, const TwModMorphism& first) {
  if (!first.target->structurally_equal(*second.source))
    throw InvalidInput("composition endpoints do not match");
  TwModMorphism out;
  out.source = first.source;
  out.target = second.target;
  out.group_map = compose_hom(first.group_map, second.group_map);
  out.module_map = second.module_map * first.module_map;
  return out;
}

}  // namespace galcoh
