#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "adfg/dfg.hpp"
#include "adfg/fvs.hpp"

namespace adfg {

enum class MergeMode { Naive, Accurate };

/// Weakly connected component of the arc-intersection of two models:
/// the labels and arcs present in both. Components of a single vertex
/// are discarded before this type is ever produced.
struct CommonSubgraph {
    std::vector<std::string> labels;  // sorted display labels
    std::vector<std::pair<std::string, std::string>> arcs;  // sorted common arcs
    /// Vertex in model 1 / model 2 for each label, aligned with labels.
    std::vector<std::pair<Dfg::VertexId, Dfg::VertexId>> vertex_pairs;
};

/// One node of the connectivity graph: a whole subgraph (naive mode,
/// label empty) or a single shared label within a subgraph (accurate).
struct ConnectivityUnit {
    int subgraph = 0;
    std::string label;
};

struct ConnectivityGraph {
    MergeMode mode = MergeMode::Naive;
    std::vector<ConnectivityUnit> units;
    fvs::Digraph graph;  // node ids index into units
};

/// Per-source relabelling produced by a merge: original display label
/// -> display label in the merged model. One map per source model, in
/// merge order. case_ids, when filled, assigns log traces to sources.
struct RenameMap {
    std::vector<std::map<std::string, std::string>> per_source;
    std::vector<std::vector<std::string>> case_ids;
};

struct MergedModel {
    Dfg model;
    RenameMap rename_map;
    /// Labels fused into single vertices by the last merge step.
    std::set<std::string> merged_labels;
    /// Fused-label count accumulated over all folds of merge_many.
    std::size_t fused_label_total = 0;
};

/// Maximum common subgraphs of two acyclic models with unique event
/// labels, ordered by smallest member label. Throws DomainError when a
/// model carries duplicated event labels (merge those via
/// merge_with_duplicates).
std::vector<CommonSubgraph> common_subgraphs(const Dfg& m1, const Dfg& m2);

/// Naive mode: one node per subgraph, an arc S->T when any vertex of S
/// reaches any vertex of T in either model. Accurate mode: one node per
/// shared label, arcs only between labels of different subgraphs.
ConnectivityGraph build_connectivity_graph(const Dfg& m1, const Dfg& m2,
                                           const std::vector<CommonSubgraph>& subgraphs,
                                           MergeMode mode);

/// Merges two acyclic DFGs with unique event labels into one acyclic
/// DFG. Shared labels are fused into single vertices unless cycle
/// elimination un-fuses them; un-fused labels appear twice, suffixed
/// ".1" (from m1) and ".2" (from m2). Start and end are always fused.
MergedModel merge_pair(const Dfg& m1, const Dfg& m2,
                       MergeMode mode = MergeMode::Accurate,
                       std::uint64_t fvs_budget = 1'000'000);

}  // namespace adfg
