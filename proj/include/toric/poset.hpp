#pragma once

#include <vector>

#include "toric/graph.hpp"

namespace toric {

// Finite poset on the vertex set of a graph; the strict relation is kept
// transitively closed so comparability queries are O(1) mask tests.
class Poset {
public:
    Poset() = default;
    // Reachability order of an acyclic orientation. Errc::NotAcyclic.
    static Poset from_orientation(const Orientation& o);

    const Graph& graph() const { return *graph_; }
    const GraphPtr& graph_ptr() const { return graph_; }
    int order() const { return static_cast<int>(above_.size()); }

    bool less(int i, int j) const { return (above_[i] >> j) & 1; }
    bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
    VertexSet above(int i) const { return above_[i]; }  // strictly greater elements
    VertexSet below(int i) const { return below_[i]; }

private:
    GraphPtr graph_;
    std::vector<VertexSet> above_, below_;
};

// Comparability graph (transitive closure) and transitive reduction (covers).
Graph transitive_closure_graph(const Poset& p);
Graph hasse_graph(const Poset& p);

bool is_chain(const Poset& p, VertexSet c);
bool is_antichain(const Poset& p, VertexSet a);
// Subsets listed in (size, value) order; both include the empty set.
std::vector<VertexSet> chains(const Poset& p);
std::vector<VertexSet> antichains(const Poset& p);

// {k : i <= k <= j}; empty when i !<= j, {i} when i == j.
VertexSet interval(const Poset& p, int i, int j);

// The elements of a chain sorted by the poset order.
std::vector<int> chain_order(const Poset& p, VertexSet c);

// All total orders refining p, lexicographic. Errc::CapExceeded.
std::vector<std::vector<int>> linear_extensions(const Poset& p, int cap = kDefaultVertexCap);

bool is_ideal(const Poset& p, VertexSet s);  // downward closed
bool is_filter(const Poset& p, VertexSet s); // upward closed
std::vector<VertexSet> order_ideals(const Poset& p);

// cl_P(pi): minimal coarsening of pi whose quotient by o is acyclic,
// reached by repeatedly merging blocks inside a common quotient SCC.
SetPartition closure_partition(const Orientation& o, const SetPartition& pi);

// Every block induces a connected subgraph of the Hasse diagram of p.
bool is_connected_partition(const Poset& p, const SetPartition& pi);

struct FacePartitionFlags {
    bool compatible = false; // quotient acyclic
    bool connected = false;  // blocks connected in the Hasse graph
    bool closed_face() const { return compatible && connected; }
};
FacePartitionFlags face_partition_flags(const Orientation& o, const SetPartition& pi);
bool is_closed_face_partition(const Orientation& o, const SetPartition& pi);

// All closed face partitions, in the canonical partition order.
// Errc::CapExceeded beyond the Bell-number enumeration cap.
std::vector<SetPartition> closed_face_partition_lattice(const Orientation& o, int cap = 9);

} // namespace toric
