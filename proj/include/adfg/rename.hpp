#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adfg/dfg.hpp"
#include "adfg/merge.hpp"

namespace adfg {

/// Output of the greedy rename search. `incoming` names the side whose
/// vertices were renamed (1 or 2): the model with fewer duplicate
/// families is renamed toward the other, ties going to the second
/// argument. `assignment` maps each renameable vertex of that side to
/// its chosen display label (possibly unchanged).
struct RenameDecision {
    int incoming = 2;
    std::map<Dfg::VertexId, std::string> assignment;
};

/// Vertices of the incoming model whose base label has a duplicate
/// family (>= 2 display labels) in the other model, in topological
/// order of the incoming model (ties by label).
std::vector<Dfg::VertexId> renameable_nodes(const Dfg& m1, const Dfg& m2);

/// Number of complete renaming assignments: the product over renameable
/// nodes of (family size + 1).
std::uint64_t option_count(const Dfg& m1, const Dfg& m2);

/// Walks the rename tree level by level, picking the option that
/// creates the most new common arcs given the choices made so far.
/// When a whole level scores zero the search looks ahead breadth-first
/// until some descendant scores, committing the path that leads there;
/// ties prefer the option whose index suffix matches the parent's
/// choice, then the lowest index, keeping labels unchanged last.
RenameDecision greedy_rename(const Dfg& m1, const Dfg& m2);

/// Applies a display-label assignment to a model (bases unchanged).
Dfg apply_rename(const Dfg& model, const std::map<Dfg::VertexId, std::string>& assignment);

/// Merges two acyclic models that may carry duplicated (indexed)
/// labels: aligns them with greedy_rename, then merges the relabelled
/// models treating display labels as atomic. The returned rename map
/// composes both steps.
MergedModel merge_with_duplicates(const Dfg& m1, const Dfg& m2,
                                  MergeMode mode = MergeMode::Accurate,
                                  std::uint64_t fvs_budget = 1'000'000);

/// Left fold of merge_with_duplicates over the given model order. The
/// rename map gains one entry per input model.
MergedModel merge_many(const std::vector<Dfg>& models,
                       MergeMode mode = MergeMode::Accurate,
                       std::uint64_t fvs_budget = 1'000'000);

}  // namespace adfg
