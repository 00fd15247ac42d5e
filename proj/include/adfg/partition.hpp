#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "adfg/event_log.hpp"

namespace adfg {

/// Distinct event sequence with the log positions of its traces.
struct TraceClass {
    std::vector<Activity> sequence;
    std::vector<std::size_t> trace_indices;  // into EventLog::traces
};

/// Undirected graph over trace classes; an edge joins two classes whose
/// traces are compatible (no activity pair ordered oppositely).
struct CompatibilityGraph {
    std::vector<TraceClass> nodes;  // first-occurrence order
    std::set<std::pair<std::size_t, std::size_t>> edges;  // i < j

    bool adjacent(std::size_t a, std::size_t b) const {
        if (a > b) std::swap(a, b);
        return edges.count({a, b}) > 0;
    }
};

struct Partition {
    std::vector<EventLog> sublogs;
    /// Case ids per sublog, in sublog trace order.
    std::vector<std::vector<std::string>> origin;
};

/// True iff no activity pair occurs in opposite orders in the two
/// traces. Both traces must have unique events.
bool compatible(const Trace& a, const Trace& b);

/// Requires an acyclic log; throws DomainError listing offending case
/// ids otherwise.
CompatibilityGraph build_compatibility_graph(const EventLog& log);

/// Greedy first-fit clique cover: nodes in descending degree order,
/// each placed into the first clique it is fully adjacent to, or a new
/// one. Every node lands in exactly one clique.
std::vector<std::vector<std::size_t>> clique_cover(const CompatibilityGraph& graph);

/// Splits an acyclic log into DFG-acyclic sublogs. Cliques of the
/// compatibility graph seed the sublogs; each candidate is then checked
/// with discover_dfg, and any that came out cyclic (pairwise
/// compatibility does not imply joint acyclicity) is re-split greedily
/// one trace at a time. The result always sums to the input and every
/// sublog has an acyclic DFG.
Partition partition_log(const EventLog& log);

}  // namespace adfg
