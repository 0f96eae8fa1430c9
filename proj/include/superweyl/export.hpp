#pragma once

#include "superweyl/generation.hpp"
#include "superweyl/json_io.hpp"
#include "superweyl/verify.hpp"

#include <string>

namespace superweyl {

enum class TableFormat { Json, Csv };

TableFormat parse_table_format(const std::string& name);

Json table_to_json(const BracketTable& table);
/// Throws nlohmann::json::exception or std::invalid_argument on malformed input.
BracketTable table_from_json(const Json& j);

/// Canonical serialization: families sorted by name, modes ascending. CSV
/// rows are a,n,b,k,target,mode,coefficient with target "central" for the
/// identity component and "unresolved" for a failed decomposition.
std::string export_table(const BracketTable& table, TableFormat format);

Json generation_to_json(const GenerationReport& report);

}  // namespace superweyl
