#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "adfg/dfg.hpp"

namespace adfg {

/// Model serialization:
///   {nodes:[{id,label,display_label}], arcs:[[src,dst]], start, end}
/// with labelled nodes sorted by display_label (ids 0..n-1), start/end
/// ids following, and arcs sorted lexicographically. Serializing the
/// same model twice yields byte-identical text.
nlohmann::json model_to_json(const Dfg& model);
Dfg model_from_json(const nlohmann::json& j);

std::string model_to_string(const Dfg& model);
Dfg model_from_string(const std::string& text);

void save_model(const Dfg& model, const std::filesystem::path& path);
Dfg load_model(const std::filesystem::path& path);

}  // namespace adfg
