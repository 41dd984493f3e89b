#pragma once

#include <string>

#include "json.hpp"
#include "nlwidb/catalog.hpp"
#include "nlwidb/pipeline.hpp"

namespace nlwidb {

using ordered_json = nlohmann::ordered_json;

/// Wire form of an answer: the QueryResponse fields on success, an `error`
/// object naming the failing stage otherwise; `trace` in both cases.
ordered_json to_json(const Answer& answer);
ordered_json to_json(const Trace& trace);
ordered_json to_json(const ResultSet& rs);
ordered_json schema_json(const SchemaCatalog& schema);

/// Plain-text grid for terminals.
std::string render_table(const ResultSet& rs);

/// Stage-by-stage listing of a trace, ending with the error if there is one.
std::string render_trace(const Answer& answer);

} // namespace nlwidb
