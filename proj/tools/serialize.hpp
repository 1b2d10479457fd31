#ifndef WEYLWIT_TOOLS_SERIALIZE_HPP
#define WEYLWIT_TOOLS_SERIALIZE_HPP

#include <string>

#include "json.hpp"
#include "weylwit/iso_witness.hpp"
#include "weylwit/twisted_witness.hpp"

namespace weylwit::tools {

using Json = nlohmann::ordered_json;

/* Scalars are exact: a plain "num" or "num/den" string when real, otherwise
 * an object {"re": ..., "im": ...} with the same string encoding. */
Json scalar_to_json(const GaussRational& v);
GaussRational scalar_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/* Witness files carry "schema": "v1" and "kind": "iso" | "twisted". */
Json iso_to_json(const IsoWitness& w);
IsoWitness iso_from_json(const Json& j);

Json twisted_to_json(const TwistedWitness& w);
TwistedWitness twisted_from_json(const Json& j);

/* "iso" or "twisted"; throws on anything else or a wrong schema tag. */
std::string witness_kind(const Json& j);

}  // namespace weylwit::tools

#endif
