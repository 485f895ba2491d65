#include "galcoh/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>
#include <utility>

#include "galcoh/error.hpp"

namespace galcoh {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/* Dense polynomials, low degree first.  The characteristic parameter picks
 * the scalar field: 0 means exact rationals, a prime p means F_p with
 * canonical residues in [0, p). */
using Poly = std::vector<mpq_class>;

mpq_class norm_scalar(const mpq_class& q, long p) {
  if (p == 0) return q;
  mpz_class pp(p), den, num, out;
  mpz_fdiv_r(den.get_mpz_t(), q.get_den().get_mpz_t(), pp.get_mpz_t());
  if (den == 0) throw InvalidInput("rational coefficient has denominator divisible by the characteristic");
  mpz_class dinv;
  mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
  mpz_fdiv_r(num.get_mpz_t(), q.get_num().get_mpz_t(), pp.get_mpz_t());
  num *= dinv;
  mpz_fdiv_r(out.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t());
  return mpq_class(out);
}

mpq_class inv_scalar(const mpq_class& q, long p) {
  if (q == 0) throw InvalidInput("inversion of zero");
  if (p == 0) return 1 / q;
  mpz_class r, pp(p);
  mpz_class num = norm_scalar(q, p).get_num();
  if (num == 0) throw InvalidInput("inversion of zero");
  mpz_invert(r.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t());
  return mpq_class(r);
}

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& c : r) c = norm_scalar(c, p);
  return poly_trim(std::move(r));
}

/* Quotient and remainder; the divisor need not be monic. */
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, long p) {
  Poly d = poly_trim(b);
  if (d.empty()) throw InvalidInput("polynomial division by zero");
  mpq_class lead_inv = inv_scalar(d.back(), p);
  a = poly_trim(std::move(a));
  Poly q(a.size() >= d.size() ? a.size() - d.size() + 1 : 0, mpq_class(0));
  while (a.size() >= d.size()) {
    mpq_class c = norm_scalar(a.back() * lead_inv, p);
    std::size_t shift = a.size() - d.size();
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) a[shift + i] = norm_scalar(a[shift + i] - c * d[i], p);
    a = poly_trim(std::move(a));
  }
  return {poly_trim(std::move(q)), std::move(a)};
}

/* Phi_n by peeling every proper cyclotomic factor off x^n - 1. */
Poly cyclotomic_poly(long n) {
  Poly f(static_cast<std::size_t>(n) + 1, mpq_class(0));
  f[0] = -1;
  f[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [quot, rem] = poly_divmod(f, cyclotomic_poly(d), 0);
    if (!rem.empty()) throw CheckFailed("cyclotomic polynomial division left a remainder");
    f = std::move(quot);
  }
  return f;
}

/* Coefficient tuples (c_0, ..., c_{len-1}) of integers mod p in
 * lexicographic order with the constant term compared first; rank unpacks
 * the tuple at that position. */
std::vector<long> lex_tuple(long rank, long p, std::size_t len) {
  std::vector<long> c(len, 0);
  for (std::size_t i = len; i-- > 0;) {
    c[i] = rank % p;
    rank /= p;
  }
  return c;
}

bool is_irreducible(const Poly& f, long p) {
  auto deg = static_cast<long>(f.size()) - 1;
  for (long d = 1; 2 * d <= deg; ++d) {
    long count = 1;
    for (long i = 0; i < d; ++i) count *= p;
    for (long r = 0; r < count; ++r) {
      Poly g(static_cast<std::size_t>(d) + 1, mpq_class(0));
      auto digits = lex_tuple(r, p, static_cast<std::size_t>(d));
      for (long i = 0; i < d; ++i) g[static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(i)];
      g[static_cast<std::size_t>(d)] = 1;
      if (poly_divmod(f, g, p).second.empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool FieldElement::operator<(const FieldElement& o) const {
  auto key = [](const FieldSpec& s) {
    return std::tuple<int, long, long, long>(static_cast<int>(s.kind), s.p, s.n, s.conductor);
  };
  if (key(spec) != key(o.spec)) return key(spec) < key(o.spec);
  return std::lexicographical_compare(coeffs.begin(), coeffs.end(), o.coeffs.begin(),
                                      o.coeffs.end());
}

Field::Field(FieldSpec spec, std::vector<mpq_class> modulus)
    : spec_(spec), modulus_(std::move(modulus)) {}

Field Field::finite(long p, long n) {
  if (!is_prime(p)) throw InvalidInput("finite field characteristic must be prime, got " + std::to_string(p));
  if (n < 1) throw InvalidInput("finite field degree must be positive, got " + std::to_string(n));
  long count = 1;
  for (long i = 0; i < n; ++i) {
    count *= p;
    if (count > 65536)
      throw ResourceLimit("finite field too large for the deterministic modulus search");
  }
  for (long r = 0; r < count; ++r) {
    Poly f(static_cast<std::size_t>(n) + 1, mpq_class(0));
    auto digits = lex_tuple(r, p, static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) f[static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(i)];
    f[static_cast<std::size_t>(n)] = 1;
    if (is_irreducible(f, p)) return Field({FieldKind::finite, p, n, 1}, std::move(f));
  }
  throw CheckFailed("no irreducible polynomial found");  // unreachable for prime p
}

Field Field::cyclotomic(long conductor) {
  if (conductor < 1) throw InvalidInput("conductor must be positive, got " + std::to_string(conductor));
  return Field({FieldKind::cyclotomic, 0, 1, conductor}, cyclotomic_poly(conductor));
}

std::string Field::name() const {
  if (spec_.kind == FieldKind::finite) {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(spec_.p),
                  static_cast<unsigned long>(spec_.n));
    return "GF(" + q.get_str() + ")";
  }
  return "Q(zeta_" + std::to_string(spec_.conductor) + ")";
}

mpq_class Field::snorm(const mpq_class& q) const {
  return norm_scalar(q, spec_.kind == FieldKind::finite ? spec_.p : 0);
}

mpq_class Field::sinv(const mpq_class& q) const {
  return inv_scalar(q, spec_.kind == FieldKind::finite ? spec_.p : 0);
}

std::vector<mpq_class> Field::poly_mod(std::vector<mpq_class> a) const {
  long p = spec_.kind == FieldKind::finite ? spec_.p : 0;
  for (auto& c : a) c = norm_scalar(c, p);
  Poly rem = poly_divmod(std::move(a), modulus_, p).second;
  rem.resize(degree(), mpq_class(0));
  return rem;
}

void Field::check(const FieldElement& a) const {
  if (a.spec != spec_) throw InvalidInput("element does not belong to " + name());
  if (a.coeffs.size() != degree()) throw InvalidInput("element has malformed coefficients");
}

FieldElement Field::zero() const { return {spec_, std::vector<mpq_class>(degree(), mpq_class(0))}; }

FieldElement Field::one() const { return from_integer(Int(1)); }

FieldElement Field::gen() const {
  std::vector<mpq_class> c(degree() + 1, mpq_class(0));
  c[1] = 1;
  return {spec_, poly_mod(std::move(c))};
}

FieldElement Field::element(std::vector<mpq_class> coeffs) const {
  return {spec_, poly_mod(std::move(coeffs))};
}

FieldElement Field::from_integer(const Int& k) const { return from_rational(mpq_class(k)); }

FieldElement Field::from_rational(const mpq_class& q) const { return element({q}); }

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  std::vector<mpq_class> c(degree());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = snorm(a.coeffs[i] + b.coeffs[i]);
  return {spec_, std::move(c)};
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  return add(a, neg(b));
}

FieldElement Field::neg(const FieldElement& a) const {
  check(a);
  std::vector<mpq_class> c(degree());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = snorm(-a.coeffs[i]);
  return {spec_, std::move(c)};
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  long p = spec_.kind == FieldKind::finite ? spec_.p : 0;
  return {spec_, poly_mod(poly_mul(a.coeffs, b.coeffs, p))};
}

FieldElement Field::inv(const FieldElement& a) const {
  check(a);
  if (is_zero(a)) throw InvalidInput("inversion of zero in " + name());
  long p = spec_.kind == FieldKind::finite ? spec_.p : 0;
  /* Extended Euclid on (modulus, a): the gcd is a nonzero constant because
   * the modulus is irreducible, and the Bezout coefficient of a is the
   * inverse up to that constant. */
  Poly r0 = modulus_, r1 = poly_trim(a.coeffs);
  Poly s0 = {}, s1 = {mpq_class(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1, p);
    Poly qs = poly_mul(q, s1, p);
    Poly s2(std::max(s0.size(), qs.size()), mpq_class(0));
    for (std::size_t i = 0; i < s2.size(); ++i) {
      mpq_class v = (i < s0.size() ? s0[i] : mpq_class(0)) - (i < qs.size() ? qs[i] : mpq_class(0));
      s2[i] = norm_scalar(v, p);
    }
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = poly_trim(std::move(s2));
  }
  if (r0.size() != 1) throw CheckFailed("modulus of " + name() + " is not irreducible");
  mpq_class scale = inv_scalar(r0[0], p);
  for (auto& c : s0) c = norm_scalar(c * scale, p);
  return {spec_, poly_mod(std::move(s0))};
}

FieldElement Field::div(const FieldElement& a, const FieldElement& b) const {
  return mul(a, inv(b));
}

FieldElement Field::pow(const FieldElement& a, const Int& e) const {
  check(a);
  FieldElement base = a;
  Int exp = e;
  if (exp < 0) {
    base = inv(a);
    exp = -exp;
  }
  FieldElement r = one();
  for (auto bit = static_cast<long>(mpz_sizeinbase(exp.get_mpz_t(), 2)); bit-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(exp.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) r = mul(r, base);
  }
  return r;
}

bool Field::is_zero(const FieldElement& a) const {
  check(a);
  for (const auto& c : a.coeffs)
    if (c != 0) return false;
  return true;
}

bool Field::equal(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  return a.coeffs == b.coeffs;
}

FieldAut Field::identity_aut() const {
  return aut(spec_.kind == FieldKind::finite ? 0 : 1);
}

FieldAut Field::aut(long k) const {
  if (spec_.kind == FieldKind::finite) {
    long kk = ((k % spec_.n) + spec_.n) % spec_.n;
    return {spec_, kk};
  }
  long c = spec_.conductor;
  long kk = ((k % c) + c) % c;
  if (std::gcd(kk == 0 ? c : kk, c) != 1)
    throw InvalidInput("no automorphism zeta -> zeta^" + std::to_string(k) + " of " + name());
  return {spec_, kk};
}

FieldElement Field::apply_aut(const FieldAut& g, const FieldElement& a) const {
  if (g.spec != spec_) throw InvalidInput("automorphism does not belong to " + name());
  check(a);
  if (spec_.kind == FieldKind::finite) {
    Int q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(spec_.p),
                  static_cast<unsigned long>(g.k));
    return pow(a, q);
  }
  /* Substitute x -> x^k, extending Q-linearly. */
  FieldElement img = pow(gen(), Int(g.k));
  FieldElement r = zero();
  for (std::size_t i = degree(); i-- > 0;) {
    r = mul(r, img);
    r = add(r, from_rational(a.coeffs[i]));
  }
  return r;
}

FieldAut Field::compose_auts(const FieldAut& outer, const FieldAut& inner) const {
  if (outer.spec != spec_ || inner.spec != spec_)
    throw InvalidInput("automorphism does not belong to " + name());
  if (spec_.kind == FieldKind::finite) return aut(outer.k + inner.k);
  return aut(outer.k * inner.k);
}

FieldAut Field::invert_aut(const FieldAut& g) const {
  if (g.spec != spec_) throw InvalidInput("automorphism does not belong to " + name());
  if (spec_.kind == FieldKind::finite) return aut(-g.k);
  if (spec_.conductor == 1) return identity_aut();
  mpz_class r, k(g.k), c(spec_.conductor);
  mpz_invert(r.get_mpz_t(), k.get_mpz_t(), c.get_mpz_t());
  return aut(r.get_si());
}

std::string Field::to_string(const FieldElement& a) const {
  check(a);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = degree(); i-- > 0;) {
    if (a.coeffs[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0 || a.coeffs[i] != 1) out << a.coeffs[i].get_str() << (i > 0 ? "*" : "");
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
  }
  return first ? "0" : out.str();
}

GaloisGroup galois_group(const Field& f) {
  GaloisGroup out{make_cyclic(1), {}};
  if (f.kind() == FieldKind::finite) {
    out.group = make_cyclic(static_cast<int>(f.spec().n));
    for (long k = 0; k < f.spec().n; ++k) out.elements.push_back(f.aut(k));
    return out;
  }
  UnitGroup ug = make_unit_group(f.spec().conductor);
  out.group = ug.group;
  for (long cls : ug.classes) out.elements.push_back(f.aut(cls == 0 ? 1 : cls));
  return out;
}

UnitsDictionary::UnitsDictionary(const Field& f) : field_(f) {
  if (f.kind() != FieldKind::finite)
    throw InvalidInput("units dictionary needs a finite field, got " + f.name());
  long p = f.spec().p, n = f.spec().n;
  module_ = make_finite_field_units(p, n);
  long q = 1;
  for (long i = 0; i < n; ++i) q *= p;

  /* Least primitive element in coefficient order: multiplicative order is
   * q - 1 exactly when no power (q-1)/l for a prime l | q - 1 is 1. */
  std::vector<long> prime_parts;
  long m = q - 1;
  for (long d = 2; d * d <= m; ++d)
    while (m % d == 0) {
      if (prime_parts.empty() || prime_parts.back() != d) prime_parts.push_back(d);
      m /= d;
    }
  if (m > 1) prime_parts.push_back(m);

  bool found = false;
  for (long r = 1; r < q && !found; ++r) {
    auto digits = lex_tuple(r, p, static_cast<std::size_t>(n));
    std::vector<mpq_class> coeffs(digits.begin(), digits.end());
    FieldElement cand = field_.element(std::move(coeffs));
    bool primitive = true;
    for (long l : prime_parts)
      if (field_.equal(field_.pow(cand, Int((q - 1) / l)), field_.one())) {
        primitive = false;
        break;
      }
    if (primitive) {
      generator_ = cand;
      found = true;
    }
  }
  if (!found) throw CheckFailed("no primitive element found in " + f.name());

  FieldElement cur = field_.one();
  for (long k = 0; k < q - 1; ++k) {
    powers_.push_back(cur);
    dlog_[cur] = k;
    cur = field_.mul(cur, generator_);
  }
  if (!field_.equal(cur, field_.one()))
    throw CheckFailed("primitive element order mismatch in " + f.name());
}

FieldElement UnitsDictionary::to_field(const Int& exponent) const {
  Int m(static_cast<long>(powers_.size())), r;
  mpz_fdiv_r(r.get_mpz_t(), exponent.get_mpz_t(), m.get_mpz_t());
  return powers_[r.get_ui()];
}

Int UnitsDictionary::to_exponent(const FieldElement& unit) const {
  auto it = dlog_.find(unit);
  if (it == dlog_.end())
    throw InvalidInput("element is not a unit of " + field_.name() + " (or wrong field)");
  return Int(it->second);
}

UnitsDictionary units_dictionary(const Field& f) { return UnitsDictionary(f); }

RootsDictionary::RootsDictionary(const Field& f, long m) : field_(f), m_(m) {
  if (f.kind() != FieldKind::cyclotomic)
    throw InvalidInput("roots dictionary needs a cyclotomic field, got " + f.name());
  long cond = f.spec().conductor;
  if (m < 1 || cond % m != 0)
    throw InvalidInput("mu_" + std::to_string(m) + " does not sit inside " + f.name());
  module_ = make_roots_of_unity(cond, m);
  FieldElement step = field_.pow(field_.gen(), Int(cond / m));
  FieldElement cur = field_.one();
  for (long k = 0; k < m; ++k) {
    powers_.push_back(cur);
    dlog_[cur] = k;
    cur = field_.mul(cur, step);
  }
  if (!field_.equal(cur, field_.one())) throw CheckFailed("root of unity order mismatch");
}

FieldElement RootsDictionary::to_field(const Int& exponent) const {
  Int m(m_), r;
  mpz_fdiv_r(r.get_mpz_t(), exponent.get_mpz_t(), m.get_mpz_t());
  return powers_[r.get_ui()];
}

Int RootsDictionary::to_exponent(const FieldElement& u) const {
  auto it = dlog_.find(u);
  if (it == dlog_.end())
    throw InvalidInput("element is not an order-" + std::to_string(m_) + " root of unity in " +
                       field_.name());
  return Int(it->second);
}

RootsDictionary roots_dictionary(const Field& f, long m) { return RootsDictionary(f, m); }

Field prime_subfield(const Field& f) {
  return f.kind() == FieldKind::finite ? Field::finite(f.spec().p, 1)
                                       : Field::cyclotomic(1);
}

CoefficientEmbedding CoefficientEmbedding::units(const Field& f) {
  CoefficientEmbedding e;
  e.units_.emplace(units_dictionary(f));
  return e;
}

CoefficientEmbedding CoefficientEmbedding::roots(const Field& f, long m) {
  CoefficientEmbedding e;
  e.roots_.emplace(roots_dictionary(f, m));
  return e;
}

const Field& CoefficientEmbedding::field() const {
  return units_ ? units_->field() : roots_->field();
}

const GModulePtr& CoefficientEmbedding::module() const {
  return units_ ? units_->module() : roots_->module();
}

FieldElement CoefficientEmbedding::to_field(const std::vector<Int>& value) const {
  const GModulePtr& m = module();
  if (value.size() != m->rank())
    throw InvalidInput("coefficient value has wrong rank for the embedded module");
  if (m->rank() == 0) return field().one();
  return units_ ? units_->to_field(value[0]) : roots_->to_field(value[0]);
}

std::vector<Int> CoefficientEmbedding::to_module(const FieldElement& u) const {
  if (module()->rank() == 0) {
    if (!field().equal(u, field().one()))
      throw InvalidInput("unit does not lie in the trivial coefficient module");
    return {};
  }
  Int e = units_ ? units_->to_exponent(u) : roots_->to_exponent(u);
  return {e};
}

}  // namespace galcoh
