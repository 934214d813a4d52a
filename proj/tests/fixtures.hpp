#pragma once

#include <memory>
#include <string>
#include <vector>

#include "toric/flipclass.hpp"
#include "toric/graph.hpp"

// Shared worked examples: orientations are written as arc lists over a
// graph's labels so the tests read like the figures they pin down.

namespace fix {

using namespace toric;

inline GraphPtr shared(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

inline Orientation orient(const GraphPtr& g,
                          const std::vector<std::pair<std::string, std::string>>& arcs,
                          const std::vector<std::pair<std::string, std::string>>& ties = {}) {
    std::vector<EdgeDir> dirs(g->size(), EdgeDir::Both);
    std::vector<bool> seen(g->size(), false);
    for (const auto& [a, b] : arcs) {
        int u = g->index_of(a), v = g->index_of(b);
        int e = g->edge_index(u, v);
        dirs[e] = u < v ? EdgeDir::Forward : EdgeDir::Backward;
        seen[e] = true;
    }
    for (const auto& [a, b] : ties) {
        int e = g->edge_index(g->index_of(a), g->index_of(b));
        dirs[e] = EdgeDir::Both;
        seen[e] = true;
    }
    for (bool s : seen)
        if (!s) throw std::runtime_error("fixture orientation leaves an edge unset");
    return Orientation(g, std::move(dirs));
}

// C4 with its two reference orientations: omega is the total toric order
// 1->2->3->4 (+1->4); omegaP is the size-6 class member with 1<3 comparable;
// omegaP_alt is the same class's member with sources {1,3}.
struct C4 {
    GraphPtr g = shared(Graph::cycle(4));
    Orientation omega = orient(g, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}});
    Orientation omegaP = orient(g, {{"1", "2"}, {"2", "3"}, {"4", "3"}, {"1", "4"}});
    Orientation omegaP_alt = orient(g, {{"1", "2"}, {"3", "2"}, {"3", "4"}, {"1", "4"}});
};

struct K3 {
    GraphPtr g = shared(Graph::complete(3));
    Orientation w1 = orient(g, {{"1", "2"}, {"2", "3"}, {"1", "3"}});
    Orientation w2 = orient(g, {{"2", "3"}, {"3", "1"}, {"2", "1"}});
    Orientation w3 = orient(g, {{"3", "2"}, {"3", "1"}, {"1", "2"}});
};

// The diamond poset orientation 1->2, 1->3, 2->4, 3->4 over its 4-cycle graph.
struct Diamond {
    GraphPtr g = shared(Graph({"1", "2", "3", "4"},
                              {{"1", "2"}, {"1", "3"}, {"2", "4"}, {"3", "4"}}));
    Orientation omega = orient(g, {{"1", "2"}, {"1", "3"}, {"2", "4"}, {"3", "4"}});
};

// Two inequivalent C5 orientations with identical toric chain sets.
struct C5 {
    GraphPtr g = shared(Graph::cycle(5));
    Orientation omega = orient(g, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "5"}, {"5", "4"}});
    Orientation omegaP = orient(g, {{"1", "2"}, {"2", "3"}, {"4", "3"}, {"5", "4"}, {"1", "5"}});
};

inline VertexSet vs(const Graph& g, std::initializer_list<const char*> labels) {
    VertexSet s = 0;
    for (const char* l : labels) s |= VertexSet(1) << g.index_of(l);
    return s;
}

inline SetPartition part(const Graph& g, std::initializer_list<std::initializer_list<const char*>> blocks) {
    std::vector<std::vector<int>> bs;
    for (auto blk : blocks) {
        std::vector<int> b;
        for (const char* l : blk) b.push_back(g.index_of(l));
        bs.push_back(b);
    }
    return SetPartition(g.order(), std::move(bs));
}

} // namespace fix
