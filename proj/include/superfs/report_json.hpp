#pragma once

#include "superfs/gauge.hpp"
#include "superfs/superalg.hpp"

#include "json.hpp"

#include <string>

namespace superfs::io {

using nlohmann::json;

/// {"order", "table", "names"?} or {"degree", "generators"}.
Group parse_group(const json& j);
json group_to_json(const Group& g);

std::vector<int> parse_phi(const json& j, int order);
/// Entries are exact rationals "p/q".
std::vector<Phase> parse_alpha(const json& j, int order);
/// {"phi": [...], "alpha": [["p/q", ...], ...]}.
json twist_to_json(const Twist& t);

json read_file(const std::string& path);

json to_json(const ClassificationReport& r);
ClassificationReport classification_from_json(const json& j);

json to_json(const PartitionReport& r);
PartitionReport partition_from_json(const json& j);

} // namespace superfs::io
