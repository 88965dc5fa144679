#pragma once

#include <nlohmann/json.hpp>

#include "opmine/edb.hpp"

namespace opmine {

using Json = nlohmann::ordered_json;

/// Cell encoding shared by the database format and the pattern output:
/// [{"set": ["High"], "mass": 0.8}, ...] with element names in frame order.
Json bba_to_json(const MassFunction& m);

/// Decodes a cell. `path` is the JSON-path prefix used in SchemaError
/// messages. Structural problems (unknown or duplicate elements, empty sets,
/// non-numeric masses) throw SchemaError; value-level invariants are left to
/// validate().
MassFunction bba_from_json(const Json& cell, const FrameOfDiscernment& frame,
                           const std::string& path);

Json db_to_json(const EvidentialDatabase& db);
EvidentialDatabase db_from_json(const Json& root);

}  // namespace opmine
