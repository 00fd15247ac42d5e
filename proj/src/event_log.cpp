#include "adfg/event_log.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

namespace adfg {

Trace::Trace(std::string case_id, std::vector<Activity> activities)
    : case_id(std::move(case_id)) {
    events.reserve(activities.size());
    for (auto& a : activities) {
        Event e;
        e.activity = std::move(a);
        events.push_back(std::move(e));
    }
}

std::vector<Activity> Trace::activities() const {
    std::vector<Activity> out;
    out.reserve(events.size());
    for (const auto& e : events) out.push_back(e.activity);
    return out;
}

bool Trace::has_unique_events() const {
    std::unordered_set<std::string_view> seen;
    for (const auto& e : events) {
        if (!seen.insert(e.activity).second) return false;
    }
    return true;
}

std::set<Activity> EventLog::activities() const {
    std::set<Activity> out;
    for (const auto& t : traces)
        for (const auto& e : t.events) out.insert(e.activity);
    return out;
}

bool is_acyclic_log(const EventLog& log) {
    return std::all_of(log.traces.begin(), log.traces.end(),
                       [](const Trace& t) { return t.has_unique_events(); });
}

std::vector<std::string> repeating_case_ids(const EventLog& log) {
    std::vector<std::string> ids;
    for (const auto& t : log.traces)
        if (!t.has_unique_events()) ids.push_back(t.case_id);
    return ids;
}

OrderRelation directly_follows(const EventLog& log) {
    OrderRelation rel{RelationKind::DirectlyFollows, {}};
    for (const auto& t : log.traces)
        for (std::size_t i = 0; i + 1 < t.size(); ++i)
            rel.pairs.emplace(t.activity(i), t.activity(i + 1));
    return rel;
}

OrderRelation follows(const EventLog& log) {
    OrderRelation rel{RelationKind::Follows, {}};
    for (const auto& t : log.traces)
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j)
                rel.pairs.emplace(t.activity(i), t.activity(j));
    return rel;
}

}  // namespace adfg
