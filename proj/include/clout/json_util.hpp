#pragma once

#include <string>

#include <json.hpp>

namespace clout {

// Deterministic serialisation: object keys sorted (nlohmann's default object
// map) and every float printed with %.17g so values round-trip bit-exactly
// and repeated runs produce byte-identical artifacts.
std::string canonical_dump(const nlohmann::json& j);

nlohmann::json parse_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace clout
