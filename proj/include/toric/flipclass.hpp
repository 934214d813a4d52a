#pragma once

#include <memory>
#include <vector>

#include "toric/graph.hpp"

namespace toric {

// A toric poset P(G,[w]) materialized: every acyclic orientation reachable
// from the seed by source->sink flips (and their inverses), in canonical
// order. canonical() is the lexicographic minimum under the per-edge code.
class FlipClass {
public:
    FlipClass(GraphPtr graph, std::vector<Orientation> members)
        : graph_(std::move(graph)), members_(std::move(members)) {}

    const Graph& graph() const { return *graph_; }
    const GraphPtr& graph_ptr() const { return graph_; }
    const std::vector<Orientation>& members() const { return members_; }
    const Orientation& canonical() const { return members_.front(); }
    int size() const { return static_cast<int>(members_.size()); }

    bool contains(const Orientation& o) const;

private:
    GraphPtr graph_;
    std::vector<Orientation> members_;
};

using FlipClassPtr = std::shared_ptr<const FlipClass>;

// All edges incident to the source v reversed. Errc::NotASource otherwise.
Orientation flip_source(const Orientation& o, int v);
// Inverse move: a sink turned back into a source.
Orientation flip_sink(const Orientation& o, int v);

// Breadth-first closure of {o} under source and sink flips, memoized per
// (graph, canonical orientation). Errc::NotAcyclic / Errc::CapExceeded.
FlipClassPtr flip_class(const Orientation& o, int cap = kDefaultVertexCap);

bool torically_equivalent(const Orientation& a, const Orientation& b,
                          int cap = kDefaultVertexCap); // Errc::GraphMismatch

// Closure of a preposet over G under flips of source/sink SCC-classes of
// the condensation: all arcs between such a component and the rest reversed.
std::vector<Orientation> preposet_flip_class(const Orientation& o, int cap = kDefaultVertexCap);

// Number of distinct flip classes over g; equals tutte_10(g) when g is
// connected.
long long count_flip_classes(const Graph& g, int cap = kDefaultVertexCap);

// Flip classes of all acyclic orientations, ordered by canonical member.
std::vector<FlipClassPtr> all_flip_classes(const GraphPtr& g, int cap = kDefaultVertexCap);

} // namespace toric
