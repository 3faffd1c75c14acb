#pragma once

#include <nlohmann/json.hpp>

#include "griesmer/bounds.hpp"
#include "griesmer/search.hpp"
#include "griesmer/theorems.hpp"

namespace griesmer {

using Json = nlohmann::ordered_json;

/// {q, k, d, griesmer, singleton, terms}
Json to_json(const BoundReport& report);
BoundReport bound_report_from_json(const Json& j);

/// {feasible, exhausted, nodes_explored, witness?}; witness is an array of
/// word strings and is omitted when absent.
Json to_json(const SearchOutcome& outcome);
/// The alphabet is not part of the JSON, so the caller supplies it.
SearchOutcome search_outcome_from_json(const Json& j, int q);

/// {id, q, k, d, griesmer, critical_n, confirmed, nodes_explored}
Json to_json(const Verdict& verdict);

}  // namespace griesmer
