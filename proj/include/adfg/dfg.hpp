#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adfg/event_log.hpp"

namespace adfg {

/// Directly-follows graph: a labelled digraph with a unique source
/// (start) and a unique sink (end). Labels come in two layers:
///
///   base label    — the activity name from the source log; several
///                   vertices may share one (duplicated activities);
///   display label — the rendered name, unique per vertex; duplicated
///                   base labels carry index suffixes ("F.1", "F.2").
///
/// For a freshly discovered model the two coincide. Instances are
/// immutable once built and safe to share across threads.
class Dfg {
public:
    using VertexId = std::int32_t;

    static constexpr VertexId kStart = 0;
    static constexpr VertexId kEnd = 1;

    VertexId vertex_count() const { return static_cast<VertexId>(vertices_.size()); }
    std::size_t labelled_count() const { return vertices_.size() - 2; }
    std::vector<VertexId> labelled_vertices() const;

    static bool is_labelled(VertexId v) { return v >= 2; }

    const std::string& base_label(VertexId v) const { return vertices_[v].base; }
    const std::string& display_label(VertexId v) const { return vertices_[v].display; }

    std::span<const VertexId> successors(VertexId v) const { return out_[v]; }
    std::span<const VertexId> predecessors(VertexId v) const { return in_[v]; }

    /// All arcs, sorted ascending; includes start/end arcs.
    const std::vector<std::pair<VertexId, VertexId>>& arcs() const { return arcs_; }
    bool has_arc(VertexId from, VertexId to) const;
    /// Observation count carried by an arc (0 if the arc is absent).
    std::uint64_t arc_frequency(VertexId from, VertexId to) const;

    std::optional<VertexId> find_display(std::string_view display) const;

    /// Base labels occurring on two or more vertices, with their
    /// display labels (sorted). Empty for single-label models.
    std::map<std::string, std::vector<std::string>> duplicate_families() const;

private:
    friend class DfgBuilder;
    struct Vertex {
        std::string base;
        std::string display;
    };

    std::vector<Vertex> vertices_;
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_;
    std::vector<std::pair<VertexId, VertexId>> arcs_;
    std::vector<std::uint64_t> freqs_;  // parallel to arcs_
    std::map<std::string, VertexId, std::less<>> by_display_;
};

/// Assembles a Dfg and validates its structural invariants on build():
/// the start vertex is the only one without incoming arcs, the end
/// vertex the only one without outgoing arcs, display labels are unique,
/// and no arc enters start or leaves end.
class DfgBuilder {
public:
    DfgBuilder();

    /// Adds a labelled vertex. Display defaults to the base label.
    Dfg::VertexId add_vertex(std::string base, std::string display = "");
    /// Adds an arc, accumulating frequency if it already exists.
    void add_arc(Dfg::VertexId from, Dfg::VertexId to, std::uint64_t frequency = 1);

    Dfg build();

private:
    Dfg dfg_;
    std::map<std::pair<Dfg::VertexId, Dfg::VertexId>, std::uint64_t> arc_freq_;
};

/// Which label layer a replay should match against. Base reads the
/// model as a graph over activity names (duplicates behave as one
/// name); Display reads it over the unique rendered names, e.g. for
/// logs relabelled after a merge.
enum class LabelView { Base, Display };

/// Standard DFG discovery: one vertex per distinct activity, an arc per
/// directly-follows pair, start/end arcs for trace heads and tails.
/// The result always perfectly fits the input log.
Dfg discover_dfg(const EventLog& log);

/// True iff some start-to-end path spells `sequence` under the chosen
/// label view. Labels may repeat across vertices, so this is a
/// path-existence search, not a lookup.
bool is_run(const Dfg& model, std::span<const Activity> sequence,
            LabelView view = LabelView::Base);

/// True iff every trace of the log is a run of the model.
bool perfectly_fits(const Dfg& model, const EventLog& log,
                    LabelView view = LabelView::Base);

bool is_acyclic(const Dfg& model);

/// Topological order of all vertices, or nullopt if the model is
/// cyclic. Deterministic: among ready vertices the smallest display
/// label goes first (start always leads, end always trails).
std::optional<std::vector<Dfg::VertexId>> topological_order(const Dfg& model);

struct CycleCount {
    std::uint64_t count = 0;
    /// True when enumeration stopped at the cap; count then equals it.
    bool saturated = false;
    std::uint64_t cap = 0;

    bool operator==(const CycleCount&) const = default;
};

/// Counts elementary circuits, saturating at `cap`.
CycleCount count_simple_cycles(const Dfg& model, std::uint64_t cap = 2'000'000);

struct ModelStats {
    std::size_t node_count = 0;  // labelled vertices only
    std::size_t arc_count = 0;   // includes start/end arcs
    CycleCount simple_cycles;
    std::size_t duplicate_label_count = 0;  // base labels with >= 2 vertices
};

ModelStats model_stats(const Dfg& model, std::uint64_t cycle_cap = 2'000'000);

}  // namespace adfg
