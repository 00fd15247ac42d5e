#include "adfg/dfg.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "adfg/errors.hpp"

namespace adfg {

std::vector<Dfg::VertexId> Dfg::labelled_vertices() const {
    std::vector<VertexId> out;
    out.reserve(vertices_.size() - 2);
    for (VertexId v = 2; v < vertex_count(); ++v) out.push_back(v);
    return out;
}

bool Dfg::has_arc(VertexId from, VertexId to) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(from, to));
}

std::uint64_t Dfg::arc_frequency(VertexId from, VertexId to) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), std::make_pair(from, to));
    if (it == arcs_.end() || *it != std::make_pair(from, to)) return 0;
    return freqs_[static_cast<std::size_t>(it - arcs_.begin())];
}

std::optional<Dfg::VertexId> Dfg::find_display(std::string_view display) const {
    auto it = by_display_.find(display);
    if (it == by_display_.end()) return std::nullopt;
    return it->second;
}

std::map<std::string, std::vector<std::string>> Dfg::duplicate_families() const {
    std::map<std::string, std::vector<std::string>> by_base;
    for (VertexId v = 2; v < vertex_count(); ++v)
        by_base[vertices_[v].base].push_back(vertices_[v].display);
    std::map<std::string, std::vector<std::string>> families;
    for (auto& [base, displays] : by_base) {
        if (displays.size() >= 2) {
            std::sort(displays.begin(), displays.end());
            families.emplace(base, std::move(displays));
        }
    }
    return families;
}

DfgBuilder::DfgBuilder() {
    dfg_.vertices_.push_back({"", ""});  // start
    dfg_.vertices_.push_back({"", ""});  // end
}

Dfg::VertexId DfgBuilder::add_vertex(std::string base, std::string display) {
    if (base.empty()) throw DomainError("activity label must be non-empty");
    if (display.empty()) display = base;
    auto id = static_cast<Dfg::VertexId>(dfg_.vertices_.size());
    dfg_.vertices_.push_back({std::move(base), std::move(display)});
    return id;
}

void DfgBuilder::add_arc(Dfg::VertexId from, Dfg::VertexId to, std::uint64_t frequency) {
    const auto n = static_cast<Dfg::VertexId>(dfg_.vertices_.size());
    if (from < 0 || from >= n || to < 0 || to >= n)
        throw DomainError("arc endpoint is not a vertex of this model");
    if (to == Dfg::kStart) throw DomainError("no arc may target the start vertex");
    if (from == Dfg::kEnd) throw DomainError("no arc may leave the end vertex");
    arc_freq_[{from, to}] += frequency;
}

Dfg DfgBuilder::build() {
    Dfg d = std::move(dfg_);
    const auto n = d.vertex_count();

    d.arcs_.reserve(arc_freq_.size());
    d.freqs_.reserve(arc_freq_.size());
    for (const auto& [arc, freq] : arc_freq_) {
        d.arcs_.push_back(arc);
        d.freqs_.push_back(freq);
    }

    d.out_.assign(n, {});
    d.in_.assign(n, {});
    for (const auto& [from, to] : d.arcs_) {
        d.out_[from].push_back(to);
        d.in_[to].push_back(from);
    }

    for (Dfg::VertexId v = 2; v < n; ++v) {
        if (d.in_[v].empty())
            throw DomainError("vertex '" + d.vertices_[v].display +
                              "' has no incoming arcs; only the start vertex may");
        if (d.out_[v].empty())
            throw DomainError("vertex '" + d.vertices_[v].display +
                              "' has no outgoing arcs; only the end vertex may");
        auto [it, inserted] = d.by_display_.emplace(d.vertices_[v].display, v);
        if (!inserted)
            throw DomainError("display label '" + d.vertices_[v].display +
                              "' is used by more than one vertex");
    }

    // Builder state is spent.
    dfg_ = Dfg{};
    arc_freq_.clear();
    return d;
}

Dfg discover_dfg(const EventLog& log) {
    if (log.empty()) throw DomainError("cannot discover a model from an empty log");

    DfgBuilder builder;
    std::unordered_map<std::string, Dfg::VertexId> vertex_of;
    auto vertex_for = [&](const Activity& a) {
        auto it = vertex_of.find(a);
        if (it != vertex_of.end()) return it->second;
        auto id = builder.add_vertex(a);
        vertex_of.emplace(a, id);
        return id;
    };

    for (const auto& trace : log.traces) {
        if (trace.events.empty()) throw DomainError("trace '" + trace.case_id + "' has no events");
        builder.add_arc(Dfg::kStart, vertex_for(trace.activity(0)));
        for (std::size_t i = 0; i + 1 < trace.size(); ++i)
            builder.add_arc(vertex_for(trace.activity(i)), vertex_for(trace.activity(i + 1)));
        builder.add_arc(vertex_for(trace.activity(trace.size() - 1)), Dfg::kEnd);
    }
    return builder.build();
}

namespace {

const std::string& label_of(const Dfg& m, Dfg::VertexId v, LabelView view) {
    return view == LabelView::Base ? m.base_label(v) : m.display_label(v);
}

}  // namespace

bool is_run(const Dfg& model, std::span<const Activity> sequence, LabelView view) {
    if (sequence.empty()) return model.has_arc(Dfg::kStart, Dfg::kEnd);

    // Subset simulation over label-consistent paths.
    std::set<Dfg::VertexId> current{Dfg::kStart};
    for (const auto& label : sequence) {
        std::set<Dfg::VertexId> next;
        for (auto v : current)
            for (auto w : model.successors(v))
                if (Dfg::is_labelled(w) && label_of(model, w, view) == label) next.insert(w);
        if (next.empty()) return false;
        current = std::move(next);
    }
    for (auto v : current)
        if (model.has_arc(v, Dfg::kEnd)) return true;
    return false;
}

bool perfectly_fits(const Dfg& model, const EventLog& log, LabelView view) {
    for (const auto& trace : log.traces) {
        auto seq = trace.activities();
        if (!is_run(model, seq, view)) return false;
    }
    return true;
}

std::optional<std::vector<Dfg::VertexId>> topological_order(const Dfg& model) {
    const auto n = model.vertex_count();
    std::vector<int> indegree(n, 0);
    for (const auto& [from, to] : model.arcs()) {
        (void)from;
        ++indegree[to];
    }

    // Ready vertices ordered by (display label, id); start has no label
    // and always comes first since nothing precedes it.
    auto cmp = [&](Dfg::VertexId a, Dfg::VertexId b) {
        return std::make_pair(model.display_label(a), a) > std::make_pair(model.display_label(b), b);
    };
    std::priority_queue<Dfg::VertexId, std::vector<Dfg::VertexId>, decltype(cmp)> ready(cmp);
    for (Dfg::VertexId v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push(v);

    std::vector<Dfg::VertexId> order;
    order.reserve(n);
    while (!ready.empty()) {
        auto v = ready.top();
        ready.pop();
        order.push_back(v);
        for (auto w : model.successors(v))
            if (--indegree[w] == 0) ready.push(w);
    }
    if (static_cast<Dfg::VertexId>(order.size()) != n) return std::nullopt;
    return order;
}

bool is_acyclic(const Dfg& model) { return topological_order(model).has_value(); }

namespace {

/// Elementary-circuit enumeration (Johnson-style: blocked sets with
/// unblock lists, one root per vertex, restricted to vertices >= root).
/// Self-loops are counted separately up front. Returns false from the
/// DFS once the cap is hit.
class CircuitCounter {
public:
    CircuitCounter(const Dfg& model, std::uint64_t cap) : model_(model), cap_(cap) {}

    CycleCount run() {
        const auto n = model_.vertex_count();
        for (const auto& [from, to] : model_.arcs())
            if (from == to && !bump()) return result();

        blocked_.assign(n, false);
        block_list_.assign(n, {});
        for (root_ = 0; root_ < n; ++root_) {
            for (Dfg::VertexId v = root_; v < n; ++v) {
                blocked_[v] = false;
                block_list_[v].clear();
            }
            bool found = false;
            if (!circuit(root_, found)) break;
        }
        return result();
    }

private:
    CycleCount result() const { return {count_, saturated_, cap_}; }

    bool bump() {
        if (++count_ >= cap_) {
            count_ = cap_;
            saturated_ = true;
            return false;
        }
        return true;
    }

    void unblock(Dfg::VertexId v) {
        blocked_[v] = false;
        for (auto w : block_list_[v])
            if (blocked_[w]) unblock(w);
        block_list_[v].clear();
    }

    // Sets `found` when a circuit closes through v; returns false on
    // saturation, which aborts the whole enumeration.
    bool circuit(Dfg::VertexId v, bool& found) {
        found = false;
        blocked_[v] = true;
        for (auto w : model_.successors(v)) {
            if (w < root_ || w == v) continue;  // stay in the >= root subgraph
            if (w == root_) {
                if (!bump()) return false;
                found = true;
            } else if (!blocked_[w]) {
                bool sub_found = false;
                if (!circuit(w, sub_found)) return false;
                found = found || sub_found;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (auto w : model_.successors(v)) {
                if (w < root_ || w == v) continue;
                auto& lst = block_list_[w];
                if (std::find(lst.begin(), lst.end(), v) == lst.end()) lst.push_back(v);
            }
        }
        return true;
    }

    const Dfg& model_;
    std::uint64_t cap_;
    std::uint64_t count_ = 0;
    bool saturated_ = false;
    Dfg::VertexId root_ = 0;
    std::vector<bool> blocked_;
    std::vector<std::vector<Dfg::VertexId>> block_list_;
};

}  // namespace

CycleCount count_simple_cycles(const Dfg& model, std::uint64_t cap) {
    if (cap < 1) throw DomainError("cycle cap must be at least 1");
    if (is_acyclic(model)) return {0, false, cap};
    return CircuitCounter(model, cap).run();
}

ModelStats model_stats(const Dfg& model, std::uint64_t cycle_cap) {
    ModelStats stats;
    stats.node_count = model.labelled_count();
    stats.arc_count = model.arcs().size();
    stats.simple_cycles = count_simple_cycles(model, cycle_cap);
    stats.duplicate_label_count = model.duplicate_families().size();
    return stats;
}

}  // namespace adfg
