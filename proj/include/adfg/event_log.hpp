#pragma once

#include <chrono>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace adfg {

/// Opaque, case-sensitive activity label. Non-empty, no line breaks.
using Activity = std::string;

struct Event {
    Activity activity;
    std::chrono::sys_seconds timestamp{};
    /// Timestamp as it appeared in the source file; kept so a parsed log
    /// can be written back without reformatting.
    std::string raw_timestamp;
    /// Extra payload columns in header order. Carried along, never used
    /// by any algorithm.
    std::vector<std::pair<std::string, std::string>> attributes;

    bool operator==(const Event&) const = default;
};

struct Trace {
    std::string case_id;
    std::vector<Event> events;

    Trace() = default;
    Trace(std::string case_id, std::vector<Activity> activities);

    std::size_t size() const { return events.size(); }
    const Activity& activity(std::size_t i) const { return events[i].activity; }
    std::vector<Activity> activities() const;

    /// True when no activity occurs twice in this trace.
    bool has_unique_events() const;

    bool operator==(const Trace&) const = default;
};

/// Multiset of traces; duplicate event sequences are permitted and kept
/// apart by case id.
struct EventLog {
    std::vector<Trace> traces;

    bool empty() const { return traces.empty(); }
    std::size_t size() const { return traces.size(); }
    std::set<Activity> activities() const;

    bool operator==(const EventLog&) const = default;
};

enum class RelationKind { DirectlyFollows, Follows };

/// Binary order relation over the activities of a log.
struct OrderRelation {
    RelationKind kind;
    std::set<std::pair<Activity, Activity>> pairs;

    bool contains(const Activity& a, const Activity& b) const {
        return pairs.count({a, b}) > 0;
    }
};

/// True iff no trace repeats an activity.
bool is_acyclic_log(const EventLog& log);

/// Case ids of traces that do repeat an activity (for error reporting).
std::vector<std::string> repeating_case_ids(const EventLog& log);

/// (a,b) present iff some trace contains a immediately followed by b.
OrderRelation directly_follows(const EventLog& log);

/// (a,b) present iff some trace has a at an earlier position than b.
OrderRelation follows(const EventLog& log);

}  // namespace adfg
