#pragma once

#include <string>

#include "adfg/dfg.hpp"

namespace adfg {

/// Renders a model as a DOT digraph. Output is deterministic: nodes
/// sorted by display label, arcs lexicographically; start and end use
/// distinct shapes; arc frequencies appear as edge labels when present.
std::string to_dot(const Dfg& model);

}  // namespace adfg
