#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "subdiv/fincat.hpp"
#include "subdiv/subdivision.hpp"

namespace subdiv {

using Json = nlohmann::ordered_json;

// Category document:
//   {"objects": N,
//    "morphisms": [{"id": i, "dom": a, "cod": b}, ...],
//    "identities": [0, ..., N-1],
//    "composition": [[g, f, gf], ...]}   // both g and f non-identity
// Identity compositions are implied. Builder shorthand is accepted on
// input, e.g. {"builder": "dihedral", "n": 3}; so is a document wrapped
// as {"category": ..., ...}.
Json category_to_json(const FinCategory& c);
FinCategory category_from_json(const Json& j);

Json functor_to_json(const Functor& f);
Functor functor_from_json(const Json& j);

// {"category": ..., "index": {"truncation": k | "full",
//                             "objects": [{"id": i, "base": b, "chain": [...]}]}}
Json sd_to_json(const SdCategory& sd);

std::string to_dot(const FinCategory& c);
std::string to_dot(const SdCategory& sd);

// Canonical text form used everywhere output must be byte-stable.
std::string dump_json(const Json& j);

FinCategory load_category_file(const std::string& path);
Functor load_functor_file(const std::string& path);

}  // namespace subdiv
