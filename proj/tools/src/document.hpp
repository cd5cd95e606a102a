#pragma once

// Text documents read and written by the command-line tool. A document is a
// sequence of `key = value` entries; values are JSON (a bare word is read as
// a string) and may continue over several lines. `#` starts a comment.

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "toric_dmod/dmod.hpp"
#include "toric_dmod/fan_cox.hpp"

namespace toric::cli {

using Document = std::map<std::string, nlohmann::json>;

// Throws ParseError.
Document parse_document(std::string_view text);
Document read_document(const std::string& path);

// n, rays, max_cones (1-based). Index errors surface as InvalidFan.
Fan parse_fan(const Document& doc);
Fan read_fan(const std::string& path);

// side, degrees, relations.
GradedPresentation parse_module(const Document& doc, std::size_t num_vars);
GradedPresentation read_module(const std::string& path, std::size_t num_vars);

void write_module(std::ostream& os, const GradedPresentation& f);

}  // namespace toric::cli
