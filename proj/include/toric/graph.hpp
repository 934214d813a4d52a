#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "toric/error.hpp"

namespace toric {

// Vertex subsets are bitmasks over canonical indices; caps keep |V| <= 20.
using VertexSet = std::uint32_t;

// Default cap for everything that walks a flip class or permutation space.
inline constexpr int kDefaultVertexCap = 10;

inline int popcount(VertexSet s) { return __builtin_popcount(s); }
inline int lowest_bit(VertexSet s) { return __builtin_ctz(s); }

// Finite simple undirected graph. Labels are opaque strings; the canonical
// vertex index follows sorted label order, and edges are stored as
// (min-index, max-index) pairs in lexicographic order. All algorithms run
// on indices; labels only matter at the I/O boundary.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> vertices,
          const std::vector<std::pair<std::string, std::string>>& edges);

    // Labels "1".."n".
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);

    int order() const { return static_cast<int>(labels_.size()); }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }
    int index_of(const std::string& label) const; // Errc::UnknownVertex

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    // Position of edge {u,v} in edges(), or -1.
    int edge_index(int u, int v) const;
    bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }
    VertexSet neighbors(int v) const { return adj_[v]; }

    VertexSet full_set() const { return order() >= 32 ? ~VertexSet(0) : (VertexSet(1) << order()) - 1; }

    bool connected() const;
    bool connected_within(VertexSet s) const; // s nonempty; induced subgraph connected

    // "labels|edge,edge,..." -- stable identity for memo keys.
    std::string canonical_key() const;

    bool operator==(const Graph& o) const { return labels_ == o.labels_ && edges_ == o.edges_; }

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<VertexSet> adj_;

    void build_adjacency();
};

using GraphPtr = std::shared_ptr<const Graph>;

// Direction of one edge relative to its canonical (min,max) writing.
// `Both` marks a bidirected edge, i.e. a tie of a preposet over G.
enum class EdgeDir : std::uint8_t { Forward = 0, Backward = 1, Both = 2 };

// An orientation of every edge of a graph. With no Both edges this is a
// plain (possibly cyclic) orientation; Both edges make it a preposet over G.
class Orientation {
public:
    Orientation() = default;
    Orientation(GraphPtr g, std::vector<EdgeDir> dirs);

    const Graph& graph() const { return *graph_; }
    const GraphPtr& graph_ptr() const { return graph_; }

    const std::vector<EdgeDir>& dirs() const { return dirs_; }
    EdgeDir dir(int edge) const { return dirs_[edge]; }

    bool has_ties() const;

    // Arc queries on edge e = (u,v), u < v.
    bool arc(int from, int to) const; // true iff from->to present (Both gives both)

    VertexSet out_neighbors(int v) const;
    VertexSet in_neighbors(int v) const;

    bool is_source(int v) const; // every incident edge leaves v (no ties at v)
    bool is_sink(int v) const;

    // All arcs as (tail,head); ties contribute both directions.
    std::vector<std::pair<int, int>> arcs() const;

    Orientation reversed_at(int v) const; // flip every edge incident to v
    Orientation reversed() const;

    // Lexicographic canonical comparison in sorted-edge order.
    auto operator<=>(const Orientation& o) const { return dirs_ <=> o.dirs_; }
    bool operator==(const Orientation& o) const { return dirs_ == o.dirs_; }

    std::string code() const; // compact per-edge digit string, for memo keys

private:
    GraphPtr graph_;
    std::vector<EdgeDir> dirs_;
};

// Partition of the vertex set into nonempty blocks. Canonical form: blocks
// sorted by minimal element, elements sorted within blocks.
class SetPartition {
public:
    SetPartition() = default;
    SetPartition(int ground_size, std::vector<std::vector<int>> blocks);

    static SetPartition singletons(int n);
    static SetPartition one_block(int n);
    // pi_S: one designated block S, all other vertices singletons.
    static SetPartition around_block(int n, VertexSet s);
    // From a block-id per vertex (ids arbitrary).
    static SetPartition from_assignment(const std::vector<int>& block_of);

    int ground_size() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block_of() const { return block_of_; }
    int block_of(int v) const { return block_of_[v]; }
    VertexSet block_mask(int b) const { return masks_[b]; }

    bool same(int u, int v) const { return block_of_[u] == block_of_[v]; }

    std::string to_string(const std::vector<std::string>& labels) const; // "1,2|3"

    bool operator==(const SetPartition& o) const = default;
    auto operator<=>(const SetPartition& o) const { return blocks_ <=> o.blocks_; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
    std::vector<VertexSet> masks_;
};

// Directed acyclic graph on named nodes; construction checks acyclicity.
struct Dag {
    std::vector<std::string> nodes;
    std::vector<std::pair<int, int>> arcs; // sorted
    Dag(std::vector<std::string> nodes, std::vector<std::pair<int, int>> arcs);
};

// ---- elementary algorithms ----

// Treats Both edges as 2-cycles.
bool is_acyclic(const Orientation& o);

// SCC partition of the directed graph (Both edges = 2-cycles).
SetPartition strongly_connected_components(const Orientation& o);

// Collapse each block to a node: result is an orientation of
// contract_graph(g, pi); arcs both ways become a Both edge.
Orientation quotient(const Orientation& o, const SetPartition& pi);

// Compatibility test without materializing the quotient graph.
bool quotient_is_acyclic(const Orientation& o, const SetPartition& pi);

// Merge blocks of pi lying in a common SCC of the quotient digraph. The
// result is the condensation partition, so its own quotient is acyclic;
// equals pi exactly when the quotient already was.
SetPartition merge_quotient_sccs(const Orientation& o, const SetPartition& pi);

// Condensation o/~ by SCCs, nodes named "B<min label>".
Dag condensation(const Orientation& o);

// Partition lattice on a common ground set.
bool partition_leq(const SetPartition& a, const SetPartition& b);
SetPartition partition_join(const SetPartition& a, const SetPartition& b);
SetPartition partition_meet(const SetPartition& a, const SetPartition& b);

// G'_pi: every block made a clique. G/~pi: blocks contracted to vertices
// (block labels "B<min member label>"), loops and multiedges dropped.
Graph make_cliques(const Graph& g, const SetPartition& pi);
Graph contract_graph(const Graph& g, const SetPartition& pi);

// Tutte polynomial evaluation T_G(1,0) by memoized deletion-contraction.
// Counts the source-to-sink flip classes of a connected graph.
long long tutte_10(const Graph& g);

// All acyclic orientations (via permutation precedence, deduplicated),
// sorted canonically. Errc::CapExceeded above the vertex cap.
std::vector<Orientation> acyclic_orientations(const GraphPtr& g, int cap = 10);

// All partitions of {0..n-1} via restricted growth strings, canonical order.
std::vector<SetPartition> all_partitions(int n, int cap = 12);

std::vector<std::string> set_to_labels(const Graph& g, VertexSet s);
VertexSet labels_to_set(const Graph& g, const std::vector<std::string>& labels);

} // namespace toric
