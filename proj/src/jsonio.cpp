#include "galcoh/jsonio.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "galcoh/error.hpp"

namespace galcoh {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw InvalidInput(what); }

const json& need(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key))
    fail(std::string(where) + ": missing key \"" + key + "\"");
  return j.at(key);
}

long need_long(const json& j, const char* key, const char* where) {
  const json& v = need(j, key, where);
  if (!v.is_number_integer())
    fail(std::string(where) + ": \"" + key + "\" must be an integer");
  return v.get<long>();
}

std::string kind_of(const json& j, const char* where) {
  const json& k = need(j, "kind", where);
  if (!k.is_string()) fail(std::string(where) + ": \"kind\" must be a string");
  return k.get<std::string>();
}

std::string join_tuple(const std::vector<int>& tuple) {
  std::string s;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(tuple[i]);
  }
  return s;
}

std::vector<int> split_tuple(const std::string& key, int degree, int gsize) {
  std::vector<int> tuple;
  if (degree == 0) {
    if (!key.empty()) fail("cochain: degree 0 admits only the key \"\"");
    return tuple;
  }
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = key.find(',', pos);
    std::string part = key.substr(pos, comma - pos);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      fail("cochain: bad tuple key \"" + key + "\"");
    long v = std::stol(part);
    if (v >= gsize) fail("cochain: tuple key \"" + key + "\" indexes outside the group");
    tuple.push_back(static_cast<int>(v));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(tuple.size()) != degree)
    fail("cochain: tuple key \"" + key + "\" does not match the degree");
  return tuple;
}

}  // namespace

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

Int json_to_int(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      fail("not a decimal integer: \"" + j.get<std::string>() + "\"");
    }
  }
  fail("expected an integer, as a number or decimal string");
}

json rat_to_json(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return json(static_cast<std::int64_t>(q.get_num().get_si()));
  return json(q.get_str());
}

mpq_class json_to_rat(const json& j) {
  if (j.is_number_integer()) return mpq_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      mpq_class q(j.get<std::string>());
      if (q.get_den() == 0) fail("not a rational: zero denominator");
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      fail("not a rational: \"" + j.get<std::string>() + "\"");
    }
  }
  fail("expected a rational, as an integer or \"a/b\" string");
}

json intmatrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix json_to_intmatrix(const json& j) {
  if (!j.is_array()) fail("matrix: expected an array of rows");
  std::size_t rows = j.size(), cols = 0;
  if (rows > 0) {
    if (!j.at(0).is_array()) fail("matrix: rows must be arrays");
    cols = j.at(0).size();
  }
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j.at(i);
    if (!row.is_array() || row.size() != cols) fail("matrix: ragged rows");
    for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = json_to_int(row.at(k));
  }
  return m;
}

json group_to_json(const FiniteGroup& g) {
  json table = json::array();
  for (int a = 0; a < g.size(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.size(); ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  return json{{"kind", "table"}, {"table", std::move(table)}};
}

FiniteGroup json_to_group(const json& j) {
  std::string kind = kind_of(j, "group");
  if (kind == "cyclic") {
    long n = need_long(j, "n", "group");
    if (n < 1) fail("group: cyclic order must be positive");
    return make_cyclic(static_cast<int>(n));
  }
  if (kind == "table") {
    const json& t = need(j, "table", "group");
    if (!t.is_array()) fail("group: \"table\" must be an array of rows");
    std::vector<std::vector<int>> table;
    for (const json& row : t) {
      if (!row.is_array()) fail("group: table rows must be arrays");
      std::vector<int> r;
      for (const json& v : row) {
        if (!v.is_number_integer()) fail("group: table entries must be integers");
        r.push_back(v.get<int>());
      }
      table.push_back(std::move(r));
    }
    return FiniteGroup::from_table(std::move(table));
  }
  fail("group: unknown kind \"" + kind + "\"");
}

json module_to_json(const GModule& m) {
  json factors = json::array();
  for (const Int& f : m.coefficients().invariant_factors())
    factors.push_back(int_to_json(f));
  json action = json::object();
  for (int g = 1; g < m.group().size(); ++g)
    action[std::to_string(g)] = intmatrix_to_json(m.action(g));
  return json{{"group", group_to_json(m.group())},
              {"invariant_factors", std::move(factors)},
              {"action", std::move(action)}};
}

GModulePtr json_to_module(const json& j) {
  if (j.is_object() && j.contains("kind")) {
    std::string kind = kind_of(j, "module");
    if (kind == "ff_units")
      return make_finite_field_units(need_long(j, "p", "module"),
                                     need_long(j, "n", "module"));
    if (kind == "roots_of_unity")
      return make_roots_of_unity(need_long(j, "conductor", "module"),
                                 need_long(j, "m", "module"));
    if (kind == "trivial") {
      FiniteGroup g = json_to_group(need(j, "group", "module"));
      std::vector<Int> factors;
      for (const json& f : need(j, "invariant_factors", "module"))
        factors.push_back(json_to_int(f));
      return make_trivial_module(std::move(g), FgAbelianGroup(std::move(factors)));
    }
    fail("module: unknown kind \"" + kind + "\"");
  }
  FiniteGroup g = json_to_group(need(j, "group", "module"));
  std::vector<Int> factors;
  const json& fj = need(j, "invariant_factors", "module");
  if (!fj.is_array()) fail("module: \"invariant_factors\" must be an array");
  for (const json& f : fj) factors.push_back(json_to_int(f));
  FgAbelianGroup coeffs(std::move(factors));

  const json& aj = need(j, "action", "module");
  if (!aj.is_object()) fail("module: \"action\" must be an object");
  std::vector<IntMatrix> action(g.size(), IntMatrix::identity(coeffs.rank()));
  std::vector<bool> seen(g.size(), false);
  seen[0] = true;
  for (auto it = aj.begin(); it != aj.end(); ++it) {
    const std::string& key = it.key();
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
      fail("module: action key \"" + key + "\" is not an element index");
    long idx = std::stol(key);
    if (idx < 0 || idx >= g.size())
      fail("module: action key \"" + key + "\" indexes outside the group");
    action[idx] = json_to_intmatrix(it.value());
    seen[idx] = true;
  }
  for (int i = 1; i < g.size(); ++i)
    if (!seen[i]) fail("module: action missing element " + std::to_string(i));
  return std::make_shared<const GModule>(std::move(g), std::move(coeffs),
                                         std::move(action));
}

json cochain_to_json(const Cochain& c) {
  const FiniteGroup& g = c.module()->group();
  json values = json::object();
  std::vector<int> tuple(c.degree(), 0);
  for (std::size_t t = 0; t < c.tuple_count(); ++t) {
    std::vector<Int> v = c.value_at(t);
    bool zero = true;
    for (const Int& x : v)
      if (x != 0) {
        zero = false;
        break;
      }
    if (!zero) {
      json arr = json::array();
      for (const Int& x : v) arr.push_back(int_to_json(x));
      values[join_tuple(tuple)] = std::move(arr);
    }
    for (int pos = c.degree() - 1; pos >= 0; --pos) {
      if (++tuple[pos] < g.size()) break;
      tuple[pos] = 0;
    }
  }
  return json{{"degree", c.degree()}, {"values", std::move(values)}};
}

Cochain json_to_cochain(const json& j, const GModulePtr& module) {
  long degree = need_long(j, "degree", "cochain");
  if (degree < 0) fail("cochain: degree must be nonnegative");
  Cochain c(module, static_cast<int>(degree));
  if (!j.contains("values")) return c;
  const json& values = j.at("values");
  if (!values.is_object()) fail("cochain: \"values\" must be an object");
  for (auto it = values.begin(); it != values.end(); ++it) {
    std::vector<int> tuple =
        split_tuple(it.key(), static_cast<int>(degree), module->group().size());
    if (!it.value().is_array() || it.value().size() != module->rank())
      fail("cochain: value at \"" + it.key() + "\" must list " +
           std::to_string(module->rank()) + " coordinates");
    std::vector<Int> v;
    for (const json& x : it.value()) v.push_back(json_to_int(x));
    c.set_value(tuple, v);
  }
  return c;
}

json field_to_json(const Field& f) {
  if (f.kind() == FieldKind::finite)
    return json{{"kind", "finite"}, {"p", f.spec().p}, {"n", f.spec().n}};
  return json{{"kind", "cyclotomic"}, {"conductor", f.spec().conductor}};
}

Field json_to_field(const json& j) {
  std::string kind = kind_of(j, "field");
  if (kind == "finite")
    return Field::finite(need_long(j, "p", "field"), need_long(j, "n", "field"));
  if (kind == "cyclotomic")
    return Field::cyclotomic(need_long(j, "conductor", "field"));
  fail("field: unknown kind \"" + kind + "\"");
}

json element_to_json(const FieldElement& a) {
  json arr = json::array();
  for (const mpq_class& q : a.coeffs) arr.push_back(rat_to_json(q));
  return arr;
}

FieldElement json_to_element(const json& j, const Field& f) {
  if (!j.is_array()) fail("element: expected a coefficient array");
  if (j.size() > f.degree())
    fail("element: more coefficients than the field degree " +
         std::to_string(f.degree()));
  std::vector<mpq_class> coeffs;
  for (const json& q : j) coeffs.push_back(json_to_rat(q));
  return f.element(std::move(coeffs));
}

json embedding_to_json(const CoefficientEmbedding& e) {
  if (e.field().kind() == FieldKind::finite) return json{{"kind", "units"}};
  const FgAbelianGroup& m = e.module()->coefficients();
  long order = m.rank() == 0 ? 1 : m.invariant_factors()[0].get_si();
  return json{{"kind", "roots"}, {"m", order}};
}

CoefficientEmbedding json_to_embedding(const json& j, const Field& f) {
  std::string kind = kind_of(j, "coefficients");
  if (kind == "units") {
    if (f.kind() != FieldKind::finite)
      fail("coefficients: \"units\" requires a finite field");
    return CoefficientEmbedding::units(f);
  }
  if (kind == "roots") {
    if (f.kind() != FieldKind::cyclotomic)
      fail("coefficients: \"roots\" requires a cyclotomic field");
    return CoefficientEmbedding::roots(f, need_long(j, "m", "coefficients"));
  }
  fail("coefficients: unknown kind \"" + kind + "\"");
}

json fmatrix_to_json(const FMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

FMatrix json_to_fmatrix(const json& j, const Field& f) {
  if (!j.is_array() || j.empty()) fail("matrix: expected a nonempty array of rows");
  std::size_t rows = j.size();
  if (!j.at(0).is_array()) fail("matrix: rows must be arrays");
  std::size_t cols = j.at(0).size();
  FMatrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j.at(i);
    if (!row.is_array() || row.size() != cols) fail("matrix: ragged rows");
    for (std::size_t k = 0; k < cols; ++k) m.set(i, k, json_to_element(row.at(k), f));
  }
  return m;
}

json algebra_to_json(const LAlgebra& a) {
  json sc = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) {
      json coords = json::array();
      for (const FieldElement& c : a.sc(i, j)) coords.push_back(element_to_json(c));
      row.push_back(std::move(coords));
    }
    sc.push_back(std::move(row));
  }
  json unit = json::array();
  for (const FieldElement& c : a.unit()) unit.push_back(element_to_json(c));
  return json{{"field", field_to_json(a.field())},
              {"dim", a.dim()},
              {"sc", std::move(sc)},
              {"unit", std::move(unit)}};
}

LAlgebra json_to_algebra(const json& j) {
  if (j.is_object() && j.contains("kind")) {
    std::string kind = kind_of(j, "algebra");
    if (kind != "crossed") fail("algebra: unknown kind \"" + kind + "\"");
    Field lfield = json_to_field(need(j, "field", "algebra"));
    CoefficientEmbedding emb =
        json_to_embedding(need(j, "coefficients", "algebra"), lfield);
    GaloisGroup gal = galois_group(lfield);
    Cochain beta = json_to_cochain(need(j, "beta", "algebra"), emb.module());
    return crossed_product(lfield, gal, emb, beta).algebra;
  }
  Field f = json_to_field(need(j, "field", "algebra"));
  long dim = need_long(j, "dim", "algebra");
  if (dim < 1) fail("algebra: dim must be positive");
  auto elem = [&](const json& e) {
    if (!e.is_array() || e.size() != static_cast<std::size_t>(dim))
      fail("algebra: elements must list exactly dim coordinates");
    AlgebraElem x;
    for (const json& c : e) x.push_back(json_to_element(c, f));
    return x;
  };
  const json& scj = need(j, "sc", "algebra");
  if (!scj.is_array() || scj.size() != static_cast<std::size_t>(dim))
    fail("algebra: \"sc\" must be a dim by dim table");
  std::vector<std::vector<AlgebraElem>> sc;
  for (const json& row : scj) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim))
      fail("algebra: \"sc\" must be a dim by dim table");
    std::vector<AlgebraElem> r;
    for (const json& e : row) r.push_back(elem(e));
    sc.push_back(std::move(r));
  }
  return LAlgebra(f, std::move(sc), elem(need(j, "unit", "algebra")));
}

json lift_to_json(const SemilinearMap& t) {
  return json{{"matrix", fmatrix_to_json(t.matrix)}, {"twist", t.twist.k}};
}

SemilinearMap json_to_lift(const json& j, const Field& f) {
  FMatrix m = json_to_fmatrix(need(j, "matrix", "lift"), f);
  long k = need_long(j, "twist", "lift");
  return SemilinearMap{std::move(m), f.aut(k)};
}

json tower_to_json(const TwModMorphism& t) {
  json images = json::array();
  for (int h = 0; h < t.group_map.source.size(); ++h)
    images.push_back(t.group_map.apply(h));
  return json{{"source", module_to_json(*t.source)},
              {"target", module_to_json(*t.target)},
              {"group_map", std::move(images)},
              {"module_map", intmatrix_to_json(t.module_map)}};
}

TwModMorphism json_to_tower(const json& j) {
  GModulePtr source = json_to_module(need(j, "source", "tower"));
  GModulePtr target = json_to_module(need(j, "target", "tower"));
  const json& gj = need(j, "group_map", "tower");
  if (!gj.is_array()) fail("tower: \"group_map\" must be an array of images");
  std::vector<int> images;
  for (const json& v : gj) {
    if (!v.is_number_integer()) fail("tower: group_map entries must be integers");
    images.push_back(v.get<int>());
  }
  GroupHom f = make_hom(target->group(), source->group(), std::move(images));
  IntMatrix mm = json_to_intmatrix(need(j, "module_map", "tower"));
  TwModMorphism t{std::move(source), std::move(target), std::move(f), std::move(mm)};
  validate_twmorphism(t);
  return t;
}

json extension_to_json(const GaloisExtensionDatum& e) {
  return json{{"field", field_to_json(e.field)},
              {"coefficients", embedding_to_json(e.embedding)}};
}

GaloisExtensionDatum json_to_extension(const json& j) {
  Field f = json_to_field(need(j, "field", "extension"));
  CoefficientEmbedding emb =
      json_to_embedding(need(j, "coefficients", "extension"), f);
  return make_extension(std::move(f), std::move(emb));
}

json category_to_json(const TwistedGradedCategory& c) {
  return json{{"extension", extension_to_json(c.extension)},
              {"omega", cochain_to_json(c.omega)}};
}

TwistedGradedCategory json_to_category(const json& j) {
  GaloisExtensionDatum ext = json_to_extension(need(j, "extension", "category"));
  Cochain omega =
      json_to_cochain(need(j, "omega", "category"), ext.embedding.module());
  return make_category(std::move(ext), std::move(omega));
}

std::pair<GaloisExtensionDatum, Cochain> json_to_category_raw(const json& j) {
  GaloisExtensionDatum ext = json_to_extension(need(j, "extension", "category"));
  Cochain omega =
      json_to_cochain(need(j, "omega", "category"), ext.embedding.module());
  return {std::move(ext), std::move(omega)};
}

json cohomology_to_json(const CohomologyGroup& h) {
  json factors = json::array();
  for (const Int& f : h.structure.invariant_factors())
    factors.push_back(int_to_json(f));
  json gens = json::array();
  for (const Cochain& g : h.generators) gens.push_back(cochain_to_json(g));
  return json{{"invariant_factors", std::move(factors)},
              {"generators", std::move(gens)}};
}

}  // namespace galcoh
