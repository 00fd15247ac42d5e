#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace adfg::fvs {

/// Small general-purpose digraph on integer node ids. Self-loops are
/// permitted. Iteration order over nodes and successors is always
/// ascending, which keeps every algorithm in this module deterministic.
class Digraph {
public:
    void add_node(int id);
    void add_arc(int from, int to);
    void remove_node(int id);

    bool has_node(int id) const { return out_.count(id) > 0; }
    bool has_arc(int from, int to) const;

    std::size_t node_count() const { return out_.size(); }
    std::size_t arc_count() const;
    std::vector<int> nodes() const;

    const std::set<int>& successors(int id) const { return out_.at(id); }
    const std::set<int>& predecessors(int id) const { return in_.at(id); }

    bool is_acyclic() const;

    /// A shortest elementary cycle (as a vertex sequence), or nullopt
    /// for acyclic graphs. Deterministic for a given graph.
    std::optional<std::vector<int>> shortest_cycle() const;

private:
    std::map<int, std::set<int>> out_;
    std::map<int, std::set<int>> in_;
};

struct FvsResult {
    std::set<int> removed;
    /// True when the search proved minimality; false when the budget
    /// ran out and a greedy completion was used (still a valid FVS).
    bool optimal = false;
    std::uint64_t explored_nodes = 0;
};

/// Exact minimum directed feedback vertex set via iterative deepening
/// on the solution size with standard reductions (self-loop forcing,
/// degree-zero deletion, degree-one bypass) and branching on a shortest
/// cycle. `budget` caps the number of search-tree nodes; when exceeded
/// the result degrades to a valid but possibly non-minimum set.
/// Deterministic: ties break on ascending node id.
FvsResult min_fvs(const Digraph& graph, std::uint64_t budget = 1'000'000);

}  // namespace adfg::fvs
