#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "pdmatch/classify.hpp"
#include "pdmatch/instance.hpp"

namespace pdmatch {

// Instance text:  {"n": <int>, "m": <int>, "b": [[row 0], ..., [row n-1]]}
// Matching text:  {"size": <int>, "edges": [[job, machine], ...]}
// Indices are 0-based. Parse failures throw ParseError naming the offending
// position (byte offset for syntax, (row,col) for entries).

Instance parse_instance(std::string_view text);
Matching parse_matching(std::string_view text);

std::string serialize(const Instance& inst);
std::string serialize(const Matching& matching);

nlohmann::json to_json(const ValidityReport& report);
nlohmann::json to_json(const ClassReport& report);

/// Short class label such as "mono;udep;T=3;t=2" used in bench reports.
std::string class_label(const ClassReport& report);

}  // namespace pdmatch
