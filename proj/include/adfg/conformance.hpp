#pragma once

#include <chrono>
#include <cstdint>

#include "adfg/dfg.hpp"
#include "adfg/event_log.hpp"
#include "adfg/merge.hpp"

namespace adfg {

struct MetricsReport {
    double fitness = 0.0;
    double precision = 0.0;
    ModelStats stats;
    /// Filled by the timing harness; zero when not measured.
    std::chrono::duration<double, std::milli> wall_time{};
};

/// Replaces each activity with its display label in the merged model,
/// per the trace's source model. Trace order, case ids, and lengths are
/// preserved. Throws DomainError when a label has no mapping or a trace
/// cannot be matched to a source.
EventLog rename_log(const EventLog& log, const RenameMap& map);

/// Event-level replay fitness: each trace is consumed greedily from the
/// start vertex along label-consistent arcs (path search, since labels
/// may repeat); fitness is (consumed moves + successful end reaches) /
/// (total moves + trace count). Equals 1 exactly when every trace is a
/// run.
double fitness(const Dfg& model, const EventLog& log, LabelView view = LabelView::Base);

/// Escaping-edges precision: for every log prefix, the continuations
/// the model enables at the reached state are compared with those the
/// log actually takes, weighted by how many traces pass through the
/// prefix; precision = 1 - escaping / enabled.
double precision(const Dfg& model, const EventLog& log, LabelView view = LabelView::Base);

/// Bundles fitness, precision, and model statistics. When a rename map
/// is given, the log is relabelled first and replay matches display
/// labels; otherwise it matches base labels.
MetricsReport evaluate(const Dfg& model, const EventLog& log,
                       const RenameMap* rename_map = nullptr,
                       std::uint64_t cycle_cap = 2'000'000);

}  // namespace adfg
