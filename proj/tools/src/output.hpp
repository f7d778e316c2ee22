#pragma once

#include "json.hpp"

#include <string>

namespace placirc::cli {

enum class Format { Json, Table };

// Parses a --format value; throws std::invalid_argument for unknown names.
Format parse_format(const std::string& name);

// Assembles the machine-readable output document:
//   {"meta": {"version", "command", "parameters"}, "<payload_key>": payload}
nlohmann::json make_document(const std::string& command,
                             nlohmann::json parameters,
                             const std::string& payload_key,
                             nlohmann::json payload);

// Renders the document to stdout: pretty-printed JSON, or a plain table for
// humans. Bold table headers are used only on a TTY without NO_COLOR set.
void emit(const nlohmann::json& doc, Format format);

}  // namespace placirc::cli
