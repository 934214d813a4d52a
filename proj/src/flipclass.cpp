#include "toric/flipclass.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <unordered_map>

namespace toric {

bool FlipClass::contains(const Orientation& o) const {
    return std::binary_search(members_.begin(), members_.end(), o);
}

Orientation flip_source(const Orientation& o, int v) {
    if (!o.is_source(v))
        fail(Errc::NotASource, "vertex '" + o.graph().label(v) + "' has an incoming edge");
    return o.reversed_at(v);
}

Orientation flip_sink(const Orientation& o, int v) {
    if (!o.is_sink(v))
        fail(Errc::NotASource, "vertex '" + o.graph().label(v) + "' has an outgoing edge");
    return o.reversed_at(v);
}

namespace {

class FlipCache {
public:
    FlipClassPtr find(const std::string& key) {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : it->second;
    }

    void insert_members(const std::string& graph_key, const FlipClassPtr& cls) {
        std::unique_lock lock(mutex_);
        for (const auto& m : cls->members()) map_.emplace(graph_key + '#' + m.code(), cls);
    }

private:
    std::shared_mutex mutex_;
    std::unordered_map<std::string, FlipClassPtr> map_;
};

FlipCache& cache() {
    static FlipCache c;
    return c;
}

} // namespace

FlipClassPtr flip_class(const Orientation& o, int cap) {
    const Graph& g = o.graph();
    if (g.order() > cap) fail(Errc::CapExceeded, "vertex count exceeds flip-class cap");
    if (!is_acyclic(o)) fail(Errc::NotAcyclic, "orientation is not acyclic");

    std::string gkey = g.canonical_key();
    if (auto hit = cache().find(gkey + '#' + o.code())) return hit;

    std::set<Orientation> seen{o};
    std::deque<Orientation> queue{o};
    while (!queue.empty()) {
        Orientation cur = std::move(queue.front());
        queue.pop_front();
        for (int v = 0; v < g.order(); ++v) {
            if (!cur.is_source(v) && !cur.is_sink(v)) continue;
            Orientation next = cur.reversed_at(v);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    std::vector<Orientation> members(seen.begin(), seen.end());
    auto cls = std::make_shared<const FlipClass>(o.graph_ptr(), std::move(members));
    cache().insert_members(gkey, cls);
    return cls;
}

bool torically_equivalent(const Orientation& a, const Orientation& b, int cap) {
    if (!(a.graph() == b.graph()))
        fail(Errc::GraphMismatch, "orientations live on different graphs");
    return flip_class(a, cap)->canonical() == flip_class(b, cap)->canonical();
}

std::vector<Orientation> preposet_flip_class(const Orientation& o, int cap) {
    const Graph& g = o.graph();
    if (g.order() > cap) fail(Errc::CapExceeded, "vertex count exceeds flip-class cap");
    std::set<Orientation> seen{o};
    std::deque<Orientation> queue{o};
    while (!queue.empty()) {
        Orientation cur = std::move(queue.front());
        queue.pop_front();
        SetPartition sccs = strongly_connected_components(cur);
        Orientation cond = quotient(cur, sccs);
        for (int b = 0; b < sccs.block_count(); ++b) {
            // the condensation relabels blocks; recover its index
            int cb = cond.graph().index_of("B" + g.label(sccs.blocks()[b].front()));
            if (!cond.is_source(cb) && !cond.is_sink(cb)) continue;
            // reverse every arc between block b and the rest
            VertexSet mask = sccs.block_mask(b);
            std::vector<EdgeDir> dirs = cur.dirs();
            for (int e = 0; e < g.size(); ++e) {
                auto [u, v] = g.edges()[e];
                bool iu = (mask >> u) & 1, iv = (mask >> v) & 1;
                if (iu == iv) continue;
                if (dirs[e] == EdgeDir::Forward) dirs[e] = EdgeDir::Backward;
                else if (dirs[e] == EdgeDir::Backward) dirs[e] = EdgeDir::Forward;
            }
            Orientation next(cur.graph_ptr(), std::move(dirs));
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<FlipClassPtr> all_flip_classes(const GraphPtr& g, int cap) {
    std::vector<Orientation> acyc = acyclic_orientations(g, cap);
    std::set<std::string> assigned;
    std::vector<FlipClassPtr> classes;
    for (const auto& o : acyc) {
        if (assigned.count(o.code())) continue;
        FlipClassPtr cls = flip_class(o, cap);
        for (const auto& m : cls->members()) assigned.insert(m.code());
        classes.push_back(cls);
    }
    std::sort(classes.begin(), classes.end(), [](const FlipClassPtr& a, const FlipClassPtr& b) {
        return a->canonical() < b->canonical();
    });
    return classes;
}

long long count_flip_classes(const Graph& g, int cap) {
    auto gp = std::make_shared<const Graph>(g);
    return static_cast<long long>(all_flip_classes(gp, cap).size());
}

} // namespace toric
