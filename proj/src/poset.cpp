#include "toric/poset.hpp"

#include <algorithm>
#include <functional>

namespace toric {

Poset Poset::from_orientation(const Orientation& o) {
    if (o.has_ties() || !is_acyclic(o)) fail(Errc::NotAcyclic, "orientation is not acyclic");
    int n = o.graph().order();
    Poset p;
    p.graph_ = o.graph_ptr();
    p.above_.assign(n, 0);
    p.below_.assign(n, 0);
    // reachability by repeated relaxation; n is tiny
    std::vector<VertexSet> out(n);
    for (int v = 0; v < n; ++v) out[v] = o.out_neighbors(v);
    for (int v = 0; v < n; ++v) p.above_[v] = out[v];
    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            VertexSet grow = p.above_[v];
            for (VertexSet t = p.above_[v]; t; t &= t - 1) grow |= p.above_[lowest_bit(t)];
            if (grow != p.above_[v]) { p.above_[v] = grow; changed = true; }
        }
    }
    for (int v = 0; v < n; ++v)
        for (VertexSet t = p.above_[v]; t; t &= t - 1) p.below_[lowest_bit(t)] |= VertexSet(1) << v;
    return p;
}

Graph transitive_closure_graph(const Poset& p) {
    std::vector<std::pair<std::string, std::string>> es;
    int n = p.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p.comparable(i, j)) es.emplace_back(p.graph().label(i), p.graph().label(j));
    return Graph(p.graph().labels(), es);
}

Graph hasse_graph(const Poset& p) {
    std::vector<std::pair<std::string, std::string>> es;
    int n = p.order();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!p.less(i, j)) continue;
            if (p.above(i) & p.below(j)) continue; // k with i < k < j
            es.emplace_back(p.graph().label(i), p.graph().label(j));
        }
    return Graph(p.graph().labels(), es);
}

bool is_chain(const Poset& p, VertexSet c) {
    for (VertexSet s = c; s; s &= s - 1) {
        int i = lowest_bit(s);
        for (VertexSet t = s & (s - 1); t; t &= t - 1)
            if (!p.comparable(i, lowest_bit(t))) return false;
    }
    return true;
}

bool is_antichain(const Poset& p, VertexSet a) {
    for (VertexSet s = a; s; s &= s - 1) {
        int i = lowest_bit(s);
        for (VertexSet t = s & (s - 1); t; t &= t - 1)
            if (p.comparable(i, lowest_bit(t))) return false;
    }
    return true;
}

static std::vector<VertexSet> filter_subsets(int n, const std::function<bool(VertexSet)>& keep) {
    std::vector<VertexSet> out;
    for (VertexSet s = 0; s < (VertexSet(1) << n); ++s)
        if (keep(s)) out.push_back(s);
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        return std::make_pair(popcount(a), a) < std::make_pair(popcount(b), b);
    });
    return out;
}

std::vector<VertexSet> chains(const Poset& p) {
    return filter_subsets(p.order(), [&](VertexSet s) { return is_chain(p, s); });
}

std::vector<VertexSet> antichains(const Poset& p) {
    return filter_subsets(p.order(), [&](VertexSet s) { return is_antichain(p, s); });
}

VertexSet interval(const Poset& p, int i, int j) {
    int n = p.order();
    if (i < 0 || i >= n || j < 0 || j >= n) fail(Errc::UnknownVertex, "interval endpoint out of range");
    if (i == j) return VertexSet(1) << i;
    if (!p.less(i, j)) return 0;
    return (VertexSet(1) << i) | (VertexSet(1) << j) | (p.above(i) & p.below(j));
}

std::vector<int> chain_order(const Poset& p, VertexSet c) {
    std::vector<int> vs;
    for (VertexSet t = c; t; t &= t - 1) vs.push_back(lowest_bit(t));
    std::sort(vs.begin(), vs.end(), [&](int a, int b) { return p.less(a, b); });
    return vs;
}

static void extend_rec(const Poset& p, VertexSet placed, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
    int n = p.order();
    if (static_cast<int>(prefix.size()) == n) {
        out.push_back(prefix);
        return;
    }
    for (int v = 0; v < n; ++v) {
        VertexSet bit = VertexSet(1) << v;
        if (placed & bit) continue;
        if (p.below(v) & ~placed) continue; // some smaller element not yet placed
        prefix.push_back(v);
        extend_rec(p, placed | bit, prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<int>> linear_extensions(const Poset& p, int cap) {
    if (p.order() > cap) fail(Errc::CapExceeded, "vertex count exceeds linear-extension cap");
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    extend_rec(p, 0, prefix, out);
    return out;
}

bool is_ideal(const Poset& p, VertexSet s) {
    for (VertexSet t = s; t; t &= t - 1)
        if (p.below(lowest_bit(t)) & ~s) return false;
    return true;
}

bool is_filter(const Poset& p, VertexSet s) {
    for (VertexSet t = s; t; t &= t - 1)
        if (p.above(lowest_bit(t)) & ~s) return false;
    return true;
}

std::vector<VertexSet> order_ideals(const Poset& p) {
    return filter_subsets(p.order(), [&](VertexSet s) { return is_ideal(p, s); });
}

SetPartition closure_partition(const Orientation& o, const SetPartition& pi) {
    if (!is_acyclic(o)) fail(Errc::NotAcyclic, "orientation is not acyclic");
    // one merge reaches the condensation partition, whose quotient is acyclic
    return merge_quotient_sccs(o, pi);
}

bool is_connected_partition(const Poset& p, const SetPartition& pi) {
    Graph h = hasse_graph(p);
    for (int b = 0; b < pi.block_count(); ++b)
        if (!h.connected_within(pi.block_mask(b))) return false;
    return true;
}

FacePartitionFlags face_partition_flags(const Orientation& o, const SetPartition& pi) {
    FacePartitionFlags f;
    f.compatible = quotient_is_acyclic(o, pi);
    f.connected = is_connected_partition(Poset::from_orientation(o), pi);
    return f;
}

bool is_closed_face_partition(const Orientation& o, const SetPartition& pi) {
    return face_partition_flags(o, pi).closed_face();
}

std::vector<SetPartition> closed_face_partition_lattice(const Orientation& o, int cap) {
    int n = o.graph().order();
    if (n > cap) fail(Errc::CapExceeded, "vertex count exceeds face-lattice enumeration cap");
    Poset p = Poset::from_orientation(o);
    Graph h = hasse_graph(p);
    std::vector<SetPartition> out;
    for (const auto& pi : all_partitions(n, cap)) {
        bool connected = true;
        for (int b = 0; connected && b < pi.block_count(); ++b)
            connected = h.connected_within(pi.block_mask(b));
        if (!connected) continue; // prune before the quotient check
        if (quotient_is_acyclic(o, pi)) out.push_back(pi);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace toric
