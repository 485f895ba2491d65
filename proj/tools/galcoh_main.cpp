#include <cstddef>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "galcoh/error.hpp"
#include "galcoh/jsonio.hpp"
#include "galcoh/snf.hpp"

using namespace galcoh;
using nlohmann::json;

namespace {

/* Exit codes are part of the interface: 0 ok, 1 invalid input (including
 * unreadable files, malformed JSON, and blown resource limits), 2 for a
 * verification that ran and failed. */
constexpr int kOk = 0;
constexpr int kInvalidInput = 1;
constexpr int kVerificationFailed = 2;

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::vector<std::string> probes;
  std::size_t max_table_entries = 1000000;
};

std::string read_all(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open input file: " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

json parse_doc(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("input is not valid JSON: ") + e.what());
  }
}

json load(const std::string& path) { return parse_doc(read_all(path)); }

void emit(const std::string& path, const json& doc) {
  std::string text = doc.dump() + "\n";
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open output file: " + path);
  out << text;
}

int cmd_cohomology(const json& in, const Options& opt) {
  GModulePtr m = json_to_module(in.at("module"));
  long degree = in.at("degree").get<long>();
  if (degree < 0) throw InvalidInput("cohomology: degree must be nonnegative");
  CohomologyGroup h =
      compute_cohomology(m, static_cast<int>(degree), opt.max_table_entries);
  emit(opt.output, cohomology_to_json(h));
  return kOk;
}

int cmd_inflate(const json& in, const Options& opt) {
  TwModMorphism tower = json_to_tower(in.at("tower"));
  Cochain c = json_to_cochain(in.at("cochain"), tower.source);
  emit(opt.output, cochain_to_json(inflate(tower, c)));
  return kOk;
}

int cmd_cocycle_check(const json& in, const Options& opt) {
  GModulePtr m = json_to_module(in.at("module"));
  Cochain c = json_to_cochain(in.at("cochain"), m);
  auto v = cocycle_violation(c);
  if (!v) {
    emit(opt.output, json{{"cocycle", true}});
    return kOk;
  }
  json value = json::array();
  for (const Int& x : v->value) value.push_back(int_to_json(x));
  emit(opt.output, json{{"cocycle", false},
                        {"violation", json{{"tuple", v->tuple}, {"value", value}}}});
  return kVerificationFailed;
}

int cmd_pentagon(const json& in, const Options& opt) {
  // Deliberately skips category validation so corrupted tables reach the
  // pentagon evaluator and come back with the witness quadruple.
  auto [ext, omega] = json_to_category_raw(in);
  PentagonResult r = pentagon_check(ext, omega);
  if (r.ok) {
    emit(opt.output, json{{"ok", true}});
    return kOk;
  }
  emit(opt.output, json{{"ok", false}, {"quadruple", r.quadruple}});
  return kVerificationFailed;
}

int cmd_crossed_product(const json& in, const Options& opt) {
  Field lfield = json_to_field(in.at("field"));
  CoefficientEmbedding emb = json_to_embedding(in.at("coefficients"), lfield);
  GaloisGroup gal = galois_group(lfield);
  Cochain beta = json_to_cochain(in.at("beta"), emb.module());
  CrossedProduct cp = crossed_product(lfield, gal, emb, beta);
  emit(opt.output, json{{"algebra", algebra_to_json(cp.algebra)},
                        {"center_dimension", center_basis(cp.algebra).size()},
                        {"ldim", cp.ldim},
                        {"simple", is_simple(cp.algebra)}});
  return kOk;
}

int cmd_teichmuller(const json& in, const Options& opt) {
  LAlgebra a = json_to_algebra(in.at("algebra"));
  CoefficientEmbedding emb = json_to_embedding(in.at("coefficients"), a.field());
  GaloisGroup gal = galois_group(a.field());
  std::vector<SemilinearMap> lifts;
  for (const json& lj : in.at("lifts")) lifts.push_back(json_to_lift(lj, a.field()));
  Cochain omega = teichmuller_cocycle(a, gal, lifts, emb);
  auto cert = express_as_coboundary(omega);
  emit(opt.output,
       json{{"certificate", cert ? cochain_to_json(*cert) : json(nullptr)},
            {"omega", cochain_to_json(omega)}});
  return kOk;
}

int cmd_deligne(const json& in, const Options& opt) {
  TwistedGradedCategory first = json_to_category(in.at("first"));
  TwistedGradedCategory second = json_to_category(in.at("second"));
  emit(opt.output, category_to_json(deligne_diagonal(first, second)));
  return kOk;
}

int cmd_morita(const json& in, const Options& opt) {
  TwistedGradedCategory cat = json_to_category(in);
  std::vector<TwModMorphism> probes;
  for (const std::string& path : opt.probes) probes.push_back(json_to_tower(load(path)));
  MoritaTriviality r = morita_trivial(cat, probes);
  json out{{"trivial", r.trivial},
           {"probe_index", r.probe_index ? json(*r.probe_index) : json(nullptr)},
           {"witness", r.witness ? cochain_to_json(*r.witness) : json(nullptr)}};
  emit(opt.output, out);
  return kOk;
}

int cmd_snf(const json& in, const Options& opt) {
  IntMatrix m = json_to_intmatrix(in.at("matrix"));
  SmithResult r = smith_normal_form(m);
  std::size_t k = std::min(m.rows(), m.cols());
  json diagonal = json::array();
  for (std::size_t i = 0; i < k; ++i) diagonal.push_back(int_to_json(r.s.at(i, i)));
  emit(opt.output, json{{"diagonal", std::move(diagonal)}, {"rank", r.rank}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Galois cohomology, crossed products, and twisted categories"};
  app.require_subcommand(1);

  Options opt;
  using Handler = int (*)(const json&, const Options&);
  std::vector<std::pair<CLI::App*, Handler>> table;
  auto add = [&](const char* name, const char* help, Handler h, bool probes) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", opt.input, "input JSON file, - for stdin");
    sub->add_option("--output", opt.output, "output JSON file, - for stdout");
    sub->add_option("--max-table-entries", opt.max_table_entries,
                    "largest dense cochain table the computation may allocate");
    if (probes)
      sub->add_option("--probe", opt.probes, "tower JSON file, may repeat");
    table.emplace_back(sub, h);
  };
  add("cohomology", "invariant factors and generators of H^n", cmd_cohomology, false);
  add("inflate", "pull a cochain along a tower", cmd_inflate, false);
  add("cocycle-check", "test the cocycle condition, witness on failure",
      cmd_cocycle_check, false);
  add("pentagon", "pentagon identity for a category datum", cmd_pentagon, false);
  add("crossed-product", "build the crossed product of a 2-cocycle",
      cmd_crossed_product, false);
  add("teichmuller", "3-cocycle of an algebra with semilinear lifts",
      cmd_teichmuller, false);
  add("deligne", "diagonal of the product of two categories", cmd_deligne, false);
  add("morita", "probe-limited Morita triviality report", cmd_morita, true);
  add("snf", "Smith normal form diagonal of an integer matrix", cmd_snf, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    for (const auto& [sub, handler] : table)
      if (sub->parsed()) return handler(load(opt.input), opt);
    return kInvalidInput;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const CheckFailed& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  }
}
