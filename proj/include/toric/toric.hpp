#pragma once

#include <mutex>
#include <optional>
#include <vector>

#include "toric/flipclass.hpp"
#include "toric/poset.hpp"

namespace toric {

// Cyclic equivalence class of a sequence of distinct vertices, stored
// rotated so the minimal entry comes first.
class CyclicWord {
public:
    CyclicWord() = default;
    explicit CyclicWord(std::vector<int> seq);

    const std::vector<int>& seq() const { return seq_; }
    int size() const { return static_cast<int>(seq_.size()); }
    VertexSet support() const;

    // Induced cyclic order on a subset of the entries.
    CyclicWord restrict(VertexSet s) const;

    bool operator==(const CyclicWord& o) const = default;
    auto operator<=>(const CyclicWord& o) const { return seq_ <=> o.seq_; }

private:
    std::vector<int> seq_;
};

// A toric poset P(G,[w]) wrapping its materialized flip class, with lazy
// caches for the derived graphs and the total toric extensions. Copies
// share the cache block; cached and fresh paths must agree (tested).
class ToricPoset {
public:
    explicit ToricPoset(FlipClassPtr cls);
    static ToricPoset of(const Orientation& o, int cap = kDefaultVertexCap);

    const Graph& graph() const { return cls_->graph(); }
    const FlipClass& flipclass() const { return *cls_; }
    const std::vector<Orientation>& members() const { return cls_->members(); }
    // Reachability posets of the members, same order (built once).
    const std::vector<Poset>& member_posets() const;

    const Graph& closure_graph() const;  // toric transitive closure cache
    const Graph& hasse() const;          // toric Hasse diagram cache
    const std::vector<CyclicWord>& extensions(int cap = kDefaultVertexCap) const;

private:
    struct Caches {
        std::mutex mutex;
        std::optional<std::vector<Poset>> posets;
        std::optional<Graph> closure, hasse;
        std::optional<std::vector<CyclicWord>> extensions;
    };

    FlipClassPtr cls_;
    std::shared_ptr<Caches> caches_;
};

// C carries `order` as a toric chain: in every member the set is a chain
// whose induced total order is a cyclic shift of `order`.
bool is_toric_chain(const ToricPoset& p, const CyclicWord& order);

struct ToricChain {
    VertexSet set = 0;
    CyclicWord order;
    auto operator<=>(const ToricChain&) const = default;
};

// All toric chains with their unique cyclic orders, by (size, set).
// Enumerates subsets in increasing size, pruning supersets of non-chains.
std::vector<ToricChain> toric_chains(const ToricPoset& p, int cap = kDefaultVertexCap);

// Edge set = intersection of the members' ordinary transitive closures
// (equivalently the size-2 toric chains).
Graph toric_transitive_closure(const ToricPoset& p);

// Minimal presentation: an edge e of the toric closure survives iff e is
// not implied by toric transitivity, i.e. e is absent from the toric
// closure of the class obtained by deleting e from the closure graph.
Graph toric_hasse(const ToricPoset& p);

// Flip class of the closure orientation over the toric transitive closure.
ToricPoset closure_class(const ToricPoset& p);

// [i,j]^tor per the triple-restriction rule; empty when i,j share no toric
// chain, {i} when i == j.
VertexSet toric_interval(const ToricPoset& p, int i, int j);

// A is an antichain of some member's poset.
bool is_geometric_toric_antichain(const ToricPoset& p, VertexSet a);

// Some member's quotient by pi is acyclic.
bool is_closed_toric_partition(const ToricPoset& p, const SetPartition& pi);
// Some single member is both connected and compatible with pi.
bool is_closed_toric_face_partition(const ToricPoset& p, const SetPartition& pi);

// cl^tor_P(pi): the lattice meet of the members' ordinary closures -- the
// coarsest partition whose flat contains the whole toric face of pi.
SetPartition toric_closure(const ToricPoset& p, const SetPartition& pi);

// L_tor(P): canonical rotations of the members' linear extensions.
std::vector<CyclicWord> total_toric_extensions(const ToricPoset& p, int cap = kDefaultVertexCap);

// The toric posets P and P' present the same chamber: equal toric closure
// graphs and torically equivalent closure orientations.
bool same_toric_poset(const ToricPoset& a, const ToricPoset& b);

} // namespace toric
