#pragma once

#include <utility>

#include <json.hpp>

#include "galcoh/algebra.hpp"
#include "galcoh/category.hpp"

namespace galcoh {

/* JSON readers and writers for every type the command line traffics in.
 * Readers throw InvalidInput on any schema violation; writers emit only
 * documents the matching reader accepts.  Object keys come out sorted
 * (nlohmann stores objects in a std::map), so output bytes are stable.
 *
 * Conventions:
 *   integers      number when they fit in 64 bits, decimal string otherwise
 *   rationals     integer number, or "a/b" / "a" as a string
 *   groups        {"kind":"cyclic","n":4} | {"kind":"table","table":[[...]]}
 *   modules       {"group":...,"invariant_factors":[...],"action":{"1":[[...]],...}}
 *                 or shorthands {"kind":"ff_units","p":2,"n":2},
 *                 {"kind":"roots_of_unity","conductor":4,"m":2},
 *                 {"kind":"trivial","group":...,"invariant_factors":[...]}
 *   cochains      {"degree":3,"values":{"0,1,1":[2],...}}, missing keys zero
 *   fields        {"kind":"finite","p":2,"n":2} | {"kind":"cyclotomic","conductor":4}
 *   elements      coefficient arrays, low degree first
 *   coefficients  {"kind":"units"} | {"kind":"roots","m":2}
 *   algebras      {"field":...,"dim":m,"sc":[[[elem,...],...],...],"unit":[elem,...]}
 *                 or {"kind":"crossed","field":...,"coefficients":...,"beta":...}
 *   lifts         {"matrix":[[elem,...],...],"twist":k}
 *   towers        {"source":...,"target":...,"group_map":[...],"module_map":[[...]]}
 *                 (group_map lists images of the target group in the source group)
 *   categories    {"extension":{"field":...,"coefficients":...},"omega":{...}}
 */

nlohmann::json int_to_json(const Int& v);
Int json_to_int(const nlohmann::json& j);

nlohmann::json rat_to_json(const mpq_class& q);
mpq_class json_to_rat(const nlohmann::json& j);

nlohmann::json intmatrix_to_json(const IntMatrix& m);
IntMatrix json_to_intmatrix(const nlohmann::json& j);

nlohmann::json group_to_json(const FiniteGroup& g);
FiniteGroup json_to_group(const nlohmann::json& j);

nlohmann::json module_to_json(const GModule& m);
GModulePtr json_to_module(const nlohmann::json& j);

nlohmann::json cochain_to_json(const Cochain& c);
Cochain json_to_cochain(const nlohmann::json& j, const GModulePtr& module);

nlohmann::json field_to_json(const Field& f);
Field json_to_field(const nlohmann::json& j);

nlohmann::json element_to_json(const FieldElement& a);
FieldElement json_to_element(const nlohmann::json& j, const Field& f);

nlohmann::json embedding_to_json(const CoefficientEmbedding& e);
CoefficientEmbedding json_to_embedding(const nlohmann::json& j, const Field& f);

nlohmann::json fmatrix_to_json(const FMatrix& m);
FMatrix json_to_fmatrix(const nlohmann::json& j, const Field& f);

nlohmann::json algebra_to_json(const LAlgebra& a);
LAlgebra json_to_algebra(const nlohmann::json& j);

nlohmann::json lift_to_json(const SemilinearMap& t);
SemilinearMap json_to_lift(const nlohmann::json& j, const Field& f);

nlohmann::json tower_to_json(const TwModMorphism& t);
TwModMorphism json_to_tower(const nlohmann::json& j);

nlohmann::json extension_to_json(const GaloisExtensionDatum& e);
GaloisExtensionDatum json_to_extension(const nlohmann::json& j);

nlohmann::json category_to_json(const TwistedGradedCategory& c);
TwistedGradedCategory json_to_category(const nlohmann::json& j);
/* Extension plus omega without the cocycle check, for verification verbs
 * that want to probe raw tables. */
std::pair<GaloisExtensionDatum, Cochain> json_to_category_raw(const nlohmann::json& j);

nlohmann::json cohomology_to_json(const CohomologyGroup& h);

}  // namespace galcoh
