#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "galcoh/gmodule.hpp"

namespace galcoh {

enum class FieldKind { finite, cyclotomic };

struct FieldSpec {
  FieldKind kind = FieldKind::finite;
  long p = 0, n = 1;   // finite: F_{p^n}
  long conductor = 1;  // cyclotomic: Q(zeta_conductor)

  bool operator==(const FieldSpec&) const = default;
};

/* Residue of a polynomial modulo the field's modulus; coefficients are
 * stored low degree first, always of length equal to the extension degree,
 * and canonically reduced (finite kind: integers in [0, p)). */
struct FieldElement {
  FieldSpec spec;
  std::vector<mpq_class> coeffs;

  bool operator==(const FieldElement& o) const = default;
  bool operator<(const FieldElement& o) const;  // coefficient order, for maps
};

/* Frobenius power (finite kind, 0 <= k < n) or the class of k in
 * (Z/conductor)^x (cyclotomic kind, gcd(k, conductor) = 1). */
struct FieldAut {
  FieldSpec spec;
  long k = 0;

  bool operator==(const FieldAut&) const = default;
};

/* F_{p^n} = F_p[x]/(f) for the lexicographically least monic irreducible f
 * (coefficients compared constant term first), or Q(zeta_n) = Q[x]/(Phi_n).
 * All operations are exact; elements carry their spec and are checked. */
class Field {
 public:
  static Field finite(long p, long n);
  static Field cyclotomic(long conductor);

  const FieldSpec& spec() const { return spec_; }
  FieldKind kind() const { return spec_.kind; }
  std::size_t degree() const { return modulus_.size() - 1; }
  /* Monic modulus, low degree first, length degree() + 1. */
  const std::vector<mpq_class>& modulus() const { return modulus_; }
  std::string name() const;
  bool same(const Field& o) const { return spec_ == o.spec_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement gen() const;  // the class of x
  /* Any coefficient vector, low degree first; reduced modulo the modulus. */
  FieldElement element(std::vector<mpq_class> coeffs) const;
  FieldElement from_integer(const Int& k) const;
  FieldElement from_rational(const mpq_class& q) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, const Int& e) const;
  bool is_zero(const FieldElement& a) const;
  bool equal(const FieldElement& a, const FieldElement& b) const;

  FieldAut identity_aut() const;
  FieldAut aut(long k) const;  // normalized; cyclotomic k must be a unit
  FieldElement apply_aut(const FieldAut& g, const FieldElement& a) const;
  FieldAut compose_auts(const FieldAut& outer, const FieldAut& inner) const;
  FieldAut invert_aut(const FieldAut& g) const;

  std::string to_string(const FieldElement& a) const;

 private:
  Field(FieldSpec spec, std::vector<mpq_class> modulus);

  mpq_class snorm(const mpq_class& q) const;  // canonical scalar
  mpq_class sinv(const mpq_class& q) const;
  std::vector<mpq_class> poly_mod(std::vector<mpq_class> a) const;
  void check(const FieldElement& a) const;

  FieldSpec spec_;
  std::vector<mpq_class> modulus_;
};

/* The prime field under f: F_p for the finite kind, Q for the cyclotomic
 * kind (as the degree-1 cyclotomic field). */
Field prime_subfield(const Field& f);

/* Gal(L/K) as a table with its dictionary to automorphisms; the identity
 * sits at index 0 and table multiplication is composition.  Finite fields
 * give Z/n generated by Frobenius at index 1; cyclotomic fields give
 * (Z/conductor)^x with classes listed ascending, matching make_unit_group
 * and the module constructors in gmodule.hpp index for index. */
struct GaloisGroup {
  FiniteGroup group;
  std::vector<FieldAut> elements;
};

GaloisGroup galois_group(const Field& f);

/* Realization of the abstract unit module Z/(q-1) by actual powers of the
 * least primitive element (coefficient order again): exponent k pairs with
 * generator^k, and multiplication by p on exponents matches Frobenius. */
class UnitsDictionary {
 public:
  explicit UnitsDictionary(const Field& f);

  const Field& field() const { return field_; }
  const GModulePtr& module() const { return module_; }
  const FieldElement& generator() const { return generator_; }
  FieldElement to_field(const Int& exponent) const;
  Int to_exponent(const FieldElement& unit) const;

 private:
  Field field_;
  GModulePtr module_;
  FieldElement generator_;
  std::vector<FieldElement> powers_;
  std::map<FieldElement, long> dlog_;
};

UnitsDictionary units_dictionary(const Field& f);

/* mu_m inside Q(zeta_n), m | n: exponent k mod m pairs with zeta_n^{kn/m},
 * and the (Z/n)^x action on exponents matches the Galois action. */
class RootsDictionary {
 public:
  RootsDictionary(const Field& f, long m);

  const Field& field() const { return field_; }
  long order() const { return m_; }
  const GModulePtr& module() const { return module_; }
  const FieldElement& root() const { return powers_[1 % m_]; }
  FieldElement to_field(const Int& exponent) const;
  Int to_exponent(const FieldElement& u) const;

 private:
  Field field_;
  long m_;
  GModulePtr module_;
  std::vector<FieldElement> powers_;
  std::map<FieldElement, long> dlog_;
};

RootsDictionary roots_dictionary(const Field& f, long m);

// Uniform facade over the two dictionaries.  Higher layers that translate
// between abstract cochain values and field units should not care whether the
// coefficients are the full unit group of a finite field or a mu_m inside a
// cyclotomic field; this class hides the split.
class CoefficientEmbedding {
 public:
  static CoefficientEmbedding units(const Field& f);
  static CoefficientEmbedding roots(const Field& f, long m);

  const Field& field() const;
  const GModulePtr& module() const;
  FieldElement to_field(const std::vector<Int>& value) const;
  std::vector<Int> to_module(const FieldElement& u) const;

 private:
  CoefficientEmbedding() = default;
  std::optional<UnitsDictionary> units_;
  std::optional<RootsDictionary> roots_;
};

}  // namespace galcoh
