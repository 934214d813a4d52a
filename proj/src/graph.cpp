#include "toric/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace toric {

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges) {
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (vertices[i] == vertices[i + 1])
            fail(Errc::LabelCollision, "duplicate vertex label '" + vertices[i] + "'");
    if (vertices.size() > 20) fail(Errc::CapExceeded, "more than 20 vertices");
    labels_ = std::move(vertices);

    std::set<std::pair<int, int>> es;
    for (const auto& [a, b] : edges) {
        int u = index_of(a), v = index_of(b);
        if (u == v) fail(Errc::BadInput, "self-loop at '" + a + "'");
        es.emplace(std::min(u, v), std::max(u, v));
    }
    edges_.assign(es.begin(), es.end());
    build_adjacency();
}

void Graph::build_adjacency() {
    adj_.assign(labels_.size(), 0);
    for (auto [u, v] : edges_) {
        adj_[u] |= VertexSet(1) << v;
        adj_[v] |= VertexSet(1) << u;
    }
}

static std::vector<std::string> numeric_labels(int n) {
    std::vector<std::string> ls;
    for (int i = 1; i <= n; ++i) ls.push_back(std::to_string(i));
    return ls;
}

Graph Graph::complete(int n) {
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) es.emplace_back(std::to_string(i), std::to_string(j));
    return Graph(numeric_labels(n), es);
}

Graph Graph::cycle(int n) {
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 1; i < n; ++i) es.emplace_back(std::to_string(i), std::to_string(i + 1));
    if (n >= 3) es.emplace_back(std::to_string(1), std::to_string(n));
    return Graph(numeric_labels(n), es);
}

Graph Graph::path(int n) {
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 1; i < n; ++i) es.emplace_back(std::to_string(i), std::to_string(i + 1));
    return Graph(numeric_labels(n), es);
}

int Graph::index_of(const std::string& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        fail(Errc::UnknownVertex, "unknown vertex '" + label + "'");
    return static_cast<int>(it - labels_.begin());
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool Graph::connected() const {
    if (order() == 0) return true;
    return connected_within(full_set());
}

bool Graph::connected_within(VertexSet s) const {
    if (s == 0) return false;
    VertexSet seen = VertexSet(1) << lowest_bit(s);
    for (;;) {
        VertexSet grow = seen;
        for (VertexSet t = seen; t; t &= t - 1) grow |= adj_[lowest_bit(t)] & s;
        if (grow == seen) break;
        seen = grow;
    }
    return seen == s;
}

std::string Graph::canonical_key() const {
    std::string key;
    for (const auto& l : labels_) { key += l; key += ';'; }
    key += '|';
    for (auto [u, v] : edges_) {
        key += std::to_string(u); key += ','; key += std::to_string(v); key += ';';
    }
    return key;
}

Orientation::Orientation(GraphPtr g, std::vector<EdgeDir> dirs)
    : graph_(std::move(g)), dirs_(std::move(dirs)) {
    if (static_cast<int>(dirs_.size()) != graph_->size())
        fail(Errc::BadInput, "direction vector does not match edge set");
}

bool Orientation::has_ties() const {
    return std::find(dirs_.begin(), dirs_.end(), EdgeDir::Both) != dirs_.end();
}

bool Orientation::arc(int from, int to) const {
    int e = graph_->edge_index(from, to);
    if (e < 0) return false;
    EdgeDir d = dirs_[e];
    if (d == EdgeDir::Both) return true;
    bool forward = from < to;
    return forward == (d == EdgeDir::Forward);
}

VertexSet Orientation::out_neighbors(int v) const {
    VertexSet out = 0;
    for (VertexSet nb = graph_->neighbors(v); nb; nb &= nb - 1) {
        int w = lowest_bit(nb);
        if (arc(v, w)) out |= VertexSet(1) << w;
    }
    return out;
}

VertexSet Orientation::in_neighbors(int v) const {
    VertexSet in = 0;
    for (VertexSet nb = graph_->neighbors(v); nb; nb &= nb - 1) {
        int w = lowest_bit(nb);
        if (arc(w, v)) in |= VertexSet(1) << w;
    }
    return in;
}

bool Orientation::is_source(int v) const {
    return in_neighbors(v) == 0;
}

bool Orientation::is_sink(int v) const {
    return out_neighbors(v) == 0;
}

std::vector<std::pair<int, int>> Orientation::arcs() const {
    std::vector<std::pair<int, int>> out;
    const auto& es = graph_->edges();
    for (int e = 0; e < graph_->size(); ++e) {
        auto [u, v] = es[e];
        if (dirs_[e] != EdgeDir::Backward) out.emplace_back(u, v);
        if (dirs_[e] != EdgeDir::Forward) out.emplace_back(v, u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Orientation Orientation::reversed_at(int v) const {
    std::vector<EdgeDir> d = dirs_;
    const auto& es = graph_->edges();
    for (int e = 0; e < graph_->size(); ++e) {
        if (es[e].first != v && es[e].second != v) continue;
        if (d[e] == EdgeDir::Forward) d[e] = EdgeDir::Backward;
        else if (d[e] == EdgeDir::Backward) d[e] = EdgeDir::Forward;
    }
    return Orientation(graph_, std::move(d));
}

Orientation Orientation::reversed() const {
    std::vector<EdgeDir> d = dirs_;
    for (auto& x : d) {
        if (x == EdgeDir::Forward) x = EdgeDir::Backward;
        else if (x == EdgeDir::Backward) x = EdgeDir::Forward;
    }
    return Orientation(graph_, std::move(d));
}

std::string Orientation::code() const {
    std::string s(dirs_.size(), '0');
    for (std::size_t i = 0; i < dirs_.size(); ++i)
        s[i] = static_cast<char>('0' + static_cast<int>(dirs_[i]));
    return s;
}

SetPartition::SetPartition(int ground_size, std::vector<std::vector<int>> blocks) : n_(ground_size) {
    std::vector<int> owner(n_, -1);
    for (auto& b : blocks) {
        if (b.empty()) fail(Errc::BadInput, "empty partition block");
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        for (int v : b) {
            if (v < 0 || v >= n_) fail(Errc::UnknownVertex, "partition element out of range");
            if (owner[v] != -1) fail(Errc::BadInput, "partition blocks overlap");
            owner[v] = 1;
        }
    }
    for (int v = 0; v < n_; ++v)
        if (owner[v] == -1) fail(Errc::BadInput, "partition does not cover the vertex set");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    blocks_ = std::move(blocks);
    block_of_.assign(n_, -1);
    masks_.assign(blocks_.size(), 0);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        for (int v : blocks_[b]) {
            block_of_[v] = static_cast<int>(b);
            masks_[b] |= VertexSet(1) << v;
        }
}

SetPartition SetPartition::singletons(int n) {
    std::vector<std::vector<int>> bs;
    for (int v = 0; v < n; ++v) bs.push_back({v});
    return SetPartition(n, std::move(bs));
}

SetPartition SetPartition::one_block(int n) {
    std::vector<int> b(n);
    std::iota(b.begin(), b.end(), 0);
    return SetPartition(n, {b});
}

SetPartition SetPartition::around_block(int n, VertexSet s) {
    std::vector<std::vector<int>> bs;
    std::vector<int> block;
    for (VertexSet t = s; t; t &= t - 1) block.push_back(lowest_bit(t));
    if (!block.empty()) bs.push_back(block);
    for (int v = 0; v < n; ++v)
        if (!(s & (VertexSet(1) << v))) bs.push_back({v});
    return SetPartition(n, std::move(bs));
}

SetPartition SetPartition::from_assignment(const std::vector<int>& block_of) {
    std::map<int, std::vector<int>> groups;
    for (std::size_t v = 0; v < block_of.size(); ++v) groups[block_of[v]].push_back(static_cast<int>(v));
    std::vector<std::vector<int>> bs;
    for (auto& [id, vs] : groups) bs.push_back(std::move(vs));
    return SetPartition(static_cast<int>(block_of.size()), std::move(bs));
}

std::string SetPartition::to_string(const std::vector<std::string>& labels) const {
    std::string s;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) s += '|';
        for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i) s += ',';
            s += labels[blocks_[b][i]];
        }
    }
    return s;
}

Dag::Dag(std::vector<std::string> ns, std::vector<std::pair<int, int>> as)
    : nodes(std::move(ns)), arcs(std::move(as)) {
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    int n = static_cast<int>(nodes.size());
    std::vector<int> indeg(n, 0);
    for (auto [u, v] : arcs) indeg[v]++;
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (auto [a, b] : arcs)
            if (a == v && --indeg[b] == 0) stack.push_back(b);
    }
    if (seen != n) fail(Errc::NotAcyclic, "arc set has a directed cycle");
}

bool is_acyclic(const Orientation& o) {
    if (o.has_ties()) return false;
    int n = o.graph().order();
    std::vector<int> state(n, 0); // 0 new, 1 active, 2 done
    std::vector<std::pair<int, VertexSet>> stack;
    for (int r = 0; r < n; ++r) {
        if (state[r]) continue;
        stack.push_back({r, o.out_neighbors(r)});
        state[r] = 1;
        while (!stack.empty()) {
            auto& [v, rest] = stack.back();
            if (rest == 0) {
                state[v] = 2;
                stack.pop_back();
                continue;
            }
            int w = lowest_bit(rest);
            rest &= rest - 1;
            if (state[w] == 1) return false;
            if (state[w] == 0) {
                state[w] = 1;
                stack.push_back({w, o.out_neighbors(w)});
            }
        }
    }
    return true;
}

namespace {

// Tarjan, iterative. Components returned in a deterministic order.
struct SccState {
    const Orientation& o;
    std::vector<int> index, low, comp;
    std::vector<int> stack;
    std::vector<bool> on_stack;
    int counter = 0, ncomp = 0;

    explicit SccState(const Orientation& o_)
        : o(o_), index(o_.graph().order(), -1), low(o_.graph().order(), 0),
          comp(o_.graph().order(), -1), on_stack(o_.graph().order(), false) {}

    void run(int root) {
        struct Frame { int v; VertexSet rest; };
        std::vector<Frame> frames;
        frames.push_back({root, o.out_neighbors(root)});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& f = frames.back();
            if (f.rest) {
                int w = lowest_bit(f.rest);
                f.rest &= f.rest - 1;
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, o.out_neighbors(w)});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            int v = f.v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            if (low[v] == index[v]) {
                for (;;) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = ncomp;
                    if (w == v) break;
                }
                ++ncomp;
            }
        }
    }
};

} // namespace

SetPartition strongly_connected_components(const Orientation& o) {
    int n = o.graph().order();
    SccState s(o);
    for (int v = 0; v < n; ++v)
        if (s.index[v] == -1) s.run(v);
    return SetPartition::from_assignment(s.comp);
}

Orientation quotient(const Orientation& o, const SetPartition& pi) {
    const Graph& g = o.graph();
    if (pi.ground_size() != g.order())
        fail(Errc::VertexSetMismatch, "partition ground set does not match graph");
    Graph qg = contract_graph(g, pi);
    auto qgp = std::make_shared<const Graph>(qg);

    // Block b of pi (canonical order) carries label "B<min member label>";
    // map each block to its index in the contracted graph.
    std::vector<int> qindex(pi.block_count());
    for (int b = 0; b < pi.block_count(); ++b)
        qindex[b] = qg.index_of("B" + g.label(pi.blocks()[b].front()));

    std::vector<EdgeDir> dirs(qg.size(), EdgeDir::Forward);
    std::vector<bool> fwd(qg.size(), false), bwd(qg.size(), false);
    for (int e = 0; e < g.size(); ++e) {
        auto [u, v] = g.edges()[e];
        int bu = qindex[pi.block_of(u)], bv = qindex[pi.block_of(v)];
        if (bu == bv) continue;
        int qe = qg.edge_index(bu, bv);
        bool lo_hi = bu < bv; // arc direction relative to contracted edge writing
        EdgeDir d = o.dir(e);
        if (d == EdgeDir::Both) { fwd[qe] = bwd[qe] = true; continue; }
        bool u_to_v = (d == EdgeDir::Forward);
        bool arc_lo_to_hi = (u_to_v == lo_hi);
        (arc_lo_to_hi ? fwd : bwd)[qe] = true;
    }
    for (int qe = 0; qe < qg.size(); ++qe) {
        if (fwd[qe] && bwd[qe]) dirs[qe] = EdgeDir::Both;
        else if (bwd[qe]) dirs[qe] = EdgeDir::Backward;
        else dirs[qe] = EdgeDir::Forward;
    }
    return Orientation(qgp, std::move(dirs));
}

namespace {

// SCC ids of the block digraph of o under pi, without graph construction.
std::vector<int> quotient_scc(const Orientation& o, const SetPartition& pi, int& scc_count) {
    const Graph& g = o.graph();
    int r = pi.block_count();
    std::vector<std::vector<int>> adj(r);
    for (int e = 0; e < g.size(); ++e) {
        auto [u, v] = g.edges()[e];
        int bu = pi.block_of(u), bv = pi.block_of(v);
        if (bu == bv) continue;
        EdgeDir d = o.dir(e);
        if (d != EdgeDir::Backward) adj[bu].push_back(bv);
        if (d != EdgeDir::Forward) adj[bv].push_back(bu);
    }
    // iterative Tarjan on the block digraph
    std::vector<int> index(r, -1), low(r, 0), comp(r, -1), stack;
    std::vector<bool> on_stack(r, false);
    int counter = 0;
    scc_count = 0;
    struct Frame { int v; std::size_t next; };
    for (int root = 0; root < r; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next < adj[f.v].size()) {
                int w = adj[f.v][f.next++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            int v = f.v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            if (low[v] == index[v]) {
                for (;;) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = scc_count;
                    if (w == v) break;
                }
                ++scc_count;
            }
        }
    }
    return comp;
}

} // namespace

bool quotient_is_acyclic(const Orientation& o, const SetPartition& pi) {
    if (pi.ground_size() != o.graph().order())
        fail(Errc::VertexSetMismatch, "partition ground set does not match graph");
    int scc_count = 0;
    quotient_scc(o, pi, scc_count);
    return scc_count == pi.block_count();
}

SetPartition merge_quotient_sccs(const Orientation& o, const SetPartition& pi) {
    if (pi.ground_size() != o.graph().order())
        fail(Errc::VertexSetMismatch, "partition ground set does not match graph");
    int scc_count = 0;
    std::vector<int> comp = quotient_scc(o, pi, scc_count);
    if (scc_count == pi.block_count()) return pi;
    std::vector<int> assign(pi.ground_size());
    for (int v = 0; v < pi.ground_size(); ++v) assign[v] = comp[pi.block_of(v)];
    return SetPartition::from_assignment(assign);
}

Dag condensation(const Orientation& o) {
    SetPartition sccs = strongly_connected_components(o);
    Orientation q = quotient(o, sccs);
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : q.arcs()) arcs.emplace_back(u, v);
    return Dag(q.graph().labels(), std::move(arcs));
}

bool partition_leq(const SetPartition& a, const SetPartition& b) {
    if (a.ground_size() != b.ground_size())
        fail(Errc::VertexSetMismatch, "partition ground sets differ");
    for (const auto& blk : a.blocks()) {
        int home = b.block_of(blk.front());
        for (int v : blk)
            if (b.block_of(v) != home) return false;
    }
    return true;
}

SetPartition partition_join(const SetPartition& a, const SetPartition& b) {
    if (a.ground_size() != b.ground_size())
        fail(Errc::VertexSetMismatch, "partition ground sets differ");
    int n = a.ground_size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) { while (parent[v] != v) v = parent[v] = parent[parent[v]]; return v; };
    auto unite = [&](int u, int v) { parent[find(u)] = find(v); };
    for (const auto& blk : a.blocks())
        for (int v : blk) unite(blk.front(), v);
    for (const auto& blk : b.blocks())
        for (int v : blk) unite(blk.front(), v);
    std::vector<int> root(n);
    for (int v = 0; v < n; ++v) root[v] = find(v);
    return SetPartition::from_assignment(root);
}

SetPartition partition_meet(const SetPartition& a, const SetPartition& b) {
    if (a.ground_size() != b.ground_size())
        fail(Errc::VertexSetMismatch, "partition ground sets differ");
    int n = a.ground_size();
    std::vector<int> id(n);
    for (int v = 0; v < n; ++v) id[v] = a.block_of(v) * (n + 1) + b.block_of(v);
    return SetPartition::from_assignment(id);
}

Graph make_cliques(const Graph& g, const SetPartition& pi) {
    if (pi.ground_size() != g.order())
        fail(Errc::VertexSetMismatch, "partition ground set does not match graph");
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [u, v] : g.edges()) es.emplace_back(g.label(u), g.label(v));
    for (const auto& blk : pi.blocks())
        for (std::size_t i = 0; i < blk.size(); ++i)
            for (std::size_t j = i + 1; j < blk.size(); ++j)
                es.emplace_back(g.label(blk[i]), g.label(blk[j]));
    return Graph(g.labels(), es);
}

Graph contract_graph(const Graph& g, const SetPartition& pi) {
    if (pi.ground_size() != g.order())
        fail(Errc::VertexSetMismatch, "partition ground set does not match graph");
    std::vector<std::string> labels;
    for (const auto& blk : pi.blocks()) labels.push_back("B" + g.label(blk.front()));
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [u, v] : g.edges()) {
        int bu = pi.block_of(u), bv = pi.block_of(v);
        if (bu == bv) continue;
        es.emplace_back(labels[bu], labels[bv]);
    }
    return Graph(labels, es);
}

namespace {

// Compact edge-set graph on k<=20 vertices for the Tutte recursion.
struct SmallGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // sorted, simple

    std::string key() const {
        std::string k = std::to_string(n) + ":";
        for (auto [u, v] : edges) { k += std::to_string(u); k += ','; k += std::to_string(v); k += ';'; }
        return k;
    }
};

bool small_connected_between(const SmallGraph& g, int a, int b, int skip_edge) {
    std::vector<VertexSet> adj(g.n, 0);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        if (e == skip_edge) continue;
        auto [u, v] = g.edges[e];
        adj[u] |= VertexSet(1) << v;
        adj[v] |= VertexSet(1) << u;
    }
    VertexSet seen = VertexSet(1) << a;
    for (;;) {
        VertexSet grow = seen;
        for (VertexSet t = seen; t; t &= t - 1) grow |= adj[lowest_bit(t)];
        if (grow == seen) break;
        seen = grow;
    }
    return (seen >> b) & 1;
}

SmallGraph small_delete(const SmallGraph& g, int e) {
    SmallGraph h = g;
    h.edges.erase(h.edges.begin() + e);
    return h;
}

SmallGraph small_contract(const SmallGraph& g, int e) {
    auto [a, b] = g.edges[e]; // merge b into a, relabel > b down by one
    SmallGraph h;
    h.n = g.n - 1;
    std::set<std::pair<int, int>> es;
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        if (i == e) continue;
        auto [u, v] = g.edges[i];
        if (u == b) u = a;
        if (v == b) v = a;
        if (u == v) continue; // parallel copy of e would become a loop; cannot happen on simple input
        if (u > b) --u;
        if (v > b) --v;
        es.emplace(std::min(u, v), std::max(u, v));
    }
    h.edges.assign(es.begin(), es.end());
    return h;
}

long long tutte10_rec(const SmallGraph& g, std::unordered_map<std::string, long long>& memo) {
    if (g.edges.empty()) return 1;
    std::string k = g.key();
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    int e = 0; // deterministic pivot
    auto [u, v] = g.edges[e];
    long long r;
    if (!small_connected_between(g, u, v, e)) {
        // bridge: factor x evaluates to 1 at x=1
        r = tutte10_rec(small_contract(g, e), memo);
    } else {
        r = tutte10_rec(small_delete(g, e), memo) + tutte10_rec(small_contract(g, e), memo);
    }
    memo[k] = r;
    return r;
}

} // namespace

long long tutte_10(const Graph& g) {
    SmallGraph sg;
    sg.n = g.order();
    sg.edges = g.edges();
    std::unordered_map<std::string, long long> memo;
    return tutte10_rec(sg, memo);
}

namespace {

// Every directed-cycle-free partial orientation extends to an acyclic one,
// so backtracking over the edges with reachability pruning visits a tree
// whose leaves are exactly Acyc(G).
void acyclic_rec(const GraphPtr& g, std::size_t e, std::vector<EdgeDir>& dirs,
                 std::vector<VertexSet>& reach, std::vector<Orientation>& out) {
    if (e == static_cast<std::size_t>(g->size())) {
        out.emplace_back(g, dirs);
        return;
    }
    auto [u, v] = g->edges()[e];
    for (int sense = 0; sense < 2; ++sense) {
        int a = sense ? v : u, b = sense ? u : v; // arc a -> b
        if ((reach[b] >> a) & 1) continue;        // b already reaches a
        std::vector<VertexSet> saved = reach;
        for (int x = 0; x < g->order(); ++x)
            if ((reach[x] >> a) & 1) reach[x] |= reach[b];
        dirs[e] = sense ? EdgeDir::Backward : EdgeDir::Forward;
        acyclic_rec(g, e + 1, dirs, reach, out);
        reach = std::move(saved);
    }
}

} // namespace

std::vector<Orientation> acyclic_orientations(const GraphPtr& g, int cap) {
    int n = g->order();
    if (n > cap) fail(Errc::CapExceeded, "vertex count exceeds cap");
    std::vector<EdgeDir> dirs(g->size(), EdgeDir::Forward);
    std::vector<VertexSet> reach(n);
    for (int v = 0; v < n; ++v) reach[v] = VertexSet(1) << v;
    std::vector<Orientation> out;
    acyclic_rec(g, 0, dirs, reach, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SetPartition> all_partitions(int n, int cap) {
    if (n > cap) fail(Errc::CapExceeded, "vertex count exceeds partition enumeration cap");
    std::vector<SetPartition> out;
    if (n == 0) return out;
    // restricted growth strings: a[0]=0, a[i] <= 1+max(a[0..i-1])
    std::vector<int> a(n, 0);
    for (;;) {
        out.push_back(SetPartition::from_assignment(a));
        int i = n - 1;
        for (; i > 0; --i) {
            int mx = 0;
            for (int j = 0; j < i; ++j) mx = std::max(mx, a[j]);
            if (a[i] <= mx) break;
        }
        if (i == 0) break;
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
    }
    return out;
}

std::vector<std::string> set_to_labels(const Graph& g, VertexSet s) {
    std::vector<std::string> out;
    for (VertexSet t = s; t; t &= t - 1) out.push_back(g.label(lowest_bit(t)));
    return out;
}

VertexSet labels_to_set(const Graph& g, const std::vector<std::string>& labels) {
    VertexSet s = 0;
    for (const auto& l : labels) s |= VertexSet(1) << g.index_of(l);
    return s;
}

} // namespace toric
