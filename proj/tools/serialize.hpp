#pragma once

// JSON forms of the library's values. Every top-level document carries a
// versioned "schema" key.

#include <nlohmann/json.hpp>

#include "neuralpol/codes.hpp"
#include "neuralpol/neural_ideal.hpp"
#include "neuralpol/polarization.hpp"
#include "neuralpol/resolutions.hpp"
#include "neuralpol/simplicial.hpp"

namespace neuralpol::io {

using nlohmann::json;

json document(const std::string& kind);

json to_json(const Pseudomonomial& f);   // {"pos":[..],"neg":[..]}
json to_json(const PsmPrime& p);         // {"zero":[..],"one":[..]}
json to_json(const Monomial& m);         // {"x":[..],"y":[..]}
json to_json(const VariableSubset& w);   // {"vars":[..], "xW", "yW", "bW", "nW"}
json to_json(const SimplicialComplex& k);
json to_json(const FreeComplex& fc);     // {"ring", "ranks", "differentials"}
json to_json(const Code& c);

}  // namespace neuralpol::io
