#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "opmine/edb.hpp"

namespace opmine {

/// Persistent database format, lossless for double masses:
/// { "attributes": [ {"name": "Q1", "frame": ["VeryHigh", ...]}, ... ],
///   "rows": [ {"label": "expert1", "cells": [ [ {"set": ["High"], "mass": 0.8}, ... ], ... ]}, ... ] }
/// A nonempty source tag is stored as an optional top-level "source" string.
std::string to_json_string(const EvidentialDatabase& db, int indent = 2);
EvidentialDatabase from_json_string(std::string_view text);

/// Throws IoError when the file cannot be written/read and SchemaError (with
/// a JSON-path location) for malformed content.
void save_json(const EvidentialDatabase& db, const std::filesystem::path& path, int indent = 2);
EvidentialDatabase load_json(const std::filesystem::path& path);

}  // namespace opmine
