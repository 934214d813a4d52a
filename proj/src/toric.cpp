#include "toric/toric.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

CyclicWord::CyclicWord(std::vector<int> seq) : seq_(std::move(seq)) {
    std::vector<int> sorted = seq_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(Errc::BadInput, "cyclic word entries must be distinct");
    if (seq_.empty()) return;
    auto min_it = std::min_element(seq_.begin(), seq_.end());
    std::rotate(seq_.begin(), min_it, seq_.end());
}

VertexSet CyclicWord::support() const {
    VertexSet s = 0;
    for (int v : seq_) s |= VertexSet(1) << v;
    return s;
}

CyclicWord CyclicWord::restrict(VertexSet s) const {
    std::vector<int> sub;
    for (int v : seq_)
        if ((s >> v) & 1) sub.push_back(v);
    return CyclicWord(std::move(sub));
}

ToricPoset::ToricPoset(FlipClassPtr cls)
    : cls_(std::move(cls)), caches_(std::make_shared<Caches>()) {}

ToricPoset ToricPoset::of(const Orientation& o, int cap) {
    return ToricPoset(flip_class(o, cap));
}

const std::vector<Poset>& ToricPoset::member_posets() const {
    std::lock_guard lock(caches_->mutex);
    if (!caches_->posets) {
        std::vector<Poset> ps;
        ps.reserve(members().size());
        for (const auto& m : members()) ps.push_back(Poset::from_orientation(m));
        caches_->posets = std::move(ps);
    }
    return *caches_->posets;
}

namespace {

Graph compute_toric_closure_graph(const ToricPoset& p) {
    const Graph& g = p.graph();
    int n = g.order();
    std::vector<VertexSet> common(n, ~VertexSet(0));
    for (const Poset& ps : p.member_posets())
        for (int v = 0; v < n; ++v) common[v] &= ps.above(v) | ps.below(v);
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((common[i] >> j) & 1) es.emplace_back(g.label(i), g.label(j));
    return Graph(g.labels(), es);
}

// Orientation of the toric closure graph induced by the first member.
Orientation closure_orientation(const ToricPoset& p, const Graph& closure_graph) {
    const Poset& ps = p.member_posets().front();
    auto cg = std::make_shared<const Graph>(closure_graph);
    std::vector<EdgeDir> dirs(cg->size());
    for (int e = 0; e < cg->size(); ++e) {
        auto [u, v] = cg->edges()[e];
        int pu = p.graph().index_of(cg->label(u)), pv = p.graph().index_of(cg->label(v));
        dirs[e] = ps.less(pu, pv) ? EdgeDir::Forward : EdgeDir::Backward;
    }
    return Orientation(cg, std::move(dirs));
}

Graph compute_toric_hasse(const ToricPoset& p, const Graph& closure) {
    Orientation omega_bar = closure_orientation(p, closure);
    std::vector<std::pair<std::string, std::string>> keep;
    for (int e = 0; e < closure.size(); ++e) {
        auto [u, v] = closure.edges()[e];
        // delete e, restrict the closure orientation, and ask whether the
        // smaller class still implies comparability of u,v everywhere
        std::vector<std::pair<std::string, std::string>> rest;
        for (int f = 0; f < closure.size(); ++f)
            if (f != e) rest.emplace_back(closure.label(closure.edges()[f].first),
                                          closure.label(closure.edges()[f].second));
        auto sub = std::make_shared<const Graph>(Graph(closure.labels(), rest));
        std::vector<EdgeDir> dirs(sub->size());
        for (int f = 0; f < sub->size(); ++f) {
            auto [a, b] = sub->edges()[f];
            dirs[f] = omega_bar.dir(closure.edge_index(a, b)); // labels coincide
        }
        ToricPoset dropped(flip_class(Orientation(sub, std::move(dirs))));
        bool implied = true;
        for (const Poset& ps : dropped.member_posets())
            if (!ps.comparable(u, v)) { implied = false; break; }
        if (!implied) keep.emplace_back(closure.label(u), closure.label(v));
    }
    return Graph(closure.labels(), keep);
}

} // namespace

const Graph& ToricPoset::closure_graph() const {
    {
        std::lock_guard lock(caches_->mutex);
        if (caches_->closure) return *caches_->closure;
    }
    Graph g = compute_toric_closure_graph(*this);
    std::lock_guard lock(caches_->mutex);
    if (!caches_->closure) caches_->closure = std::move(g);
    return *caches_->closure;
}

const Graph& ToricPoset::hasse() const {
    {
        std::lock_guard lock(caches_->mutex);
        if (caches_->hasse) return *caches_->hasse;
    }
    Graph g = compute_toric_hasse(*this, closure_graph());
    std::lock_guard lock(caches_->mutex);
    if (!caches_->hasse) caches_->hasse = std::move(g);
    return *caches_->hasse;
}

const std::vector<CyclicWord>& ToricPoset::extensions(int cap) const {
    {
        std::lock_guard lock(caches_->mutex);
        if (caches_->extensions) return *caches_->extensions;
    }
    std::vector<CyclicWord> ws = total_toric_extensions(*this, cap);
    std::lock_guard lock(caches_->mutex);
    if (!caches_->extensions) caches_->extensions = std::move(ws);
    return *caches_->extensions;
}

bool is_toric_chain(const ToricPoset& p, const CyclicWord& order) {
    int n = p.graph().order();
    for (int v : order.seq())
        if (v < 0 || v >= n) fail(Errc::UnknownVertex, "chain entry out of range");
    if (order.size() <= 1) return true;
    VertexSet c = order.support();
    for (const Poset& ps : p.member_posets()) {
        if (!is_chain(ps, c)) return false;
        if (CyclicWord(chain_order(ps, c)) != order) return false;
    }
    return true;
}

std::vector<ToricChain> toric_chains(const ToricPoset& p, int cap) {
    int n = p.graph().order();
    if (n > cap) fail(Errc::CapExceeded, "vertex count exceeds toric-chain cap");
    const auto& posets = p.member_posets();

    std::vector<ToricChain> out;
    out.push_back(ToricChain{0, CyclicWord(std::vector<int>{})});
    std::set<VertexSet> frontier; // chains of the current size
    for (int v = 0; v < n; ++v) {
        frontier.insert(VertexSet(1) << v);
        out.push_back(ToricChain{VertexSet(1) << v, CyclicWord(std::vector<int>{v})});
    }
    while (!frontier.empty()) {
        std::set<VertexSet> next;
        for (VertexSet c : frontier) {
            for (int v = 0; v < n; ++v) {
                VertexSet cand = c | (VertexSet(1) << v);
                if (cand == c || next.count(cand)) continue;
                // subset-closure pruning: all one-smaller subsets must be chains
                bool viable = true;
                for (VertexSet t = cand; viable && t; t &= t - 1)
                    viable = frontier.count(cand & ~(VertexSet(1) << lowest_bit(t))) > 0;
                if (!viable) continue;
                bool ok = true;
                CyclicWord word;
                for (std::size_t m = 0; ok && m < posets.size(); ++m) {
                    if (!is_chain(posets[m], cand)) { ok = false; break; }
                    CyclicWord w(chain_order(posets[m], cand));
                    if (m == 0) word = std::move(w);
                    else if (w != word) ok = false;
                }
                if (!ok) continue;
                next.insert(cand);
                out.push_back(ToricChain{cand, word});
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const ToricChain& a, const ToricChain& b) {
        return std::make_pair(popcount(a.set), a.set) < std::make_pair(popcount(b.set), b.set);
    });
    return out;
}

Graph toric_transitive_closure(const ToricPoset& p) {
    return p.closure_graph();
}

Graph toric_hasse(const ToricPoset& p) {
    return p.hasse();
}

ToricPoset closure_class(const ToricPoset& p) {
    Orientation omega_bar = closure_orientation(p, p.closure_graph());
    return ToricPoset(flip_class(omega_bar, p.graph().order()));
}

VertexSet toric_interval(const ToricPoset& p, int i, int j) {
    int n = p.graph().order();
    if (i < 0 || i >= n || j < 0 || j >= n) fail(Errc::UnknownVertex, "interval endpoint out of range");
    if (i == j) return VertexSet(1) << i;
    // i,j on a common toric chain iff {i,j} is a size-2 toric chain
    if (p.closure_graph().edge_index(i, j) < 0) return 0;
    VertexSet result = (VertexSet(1) << i) | (VertexSet(1) << j);
    for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        CyclicWord want(std::vector<int>{i, k, j});
        if (is_toric_chain(p, want)) result |= VertexSet(1) << k;
    }
    return result;
}

bool is_geometric_toric_antichain(const ToricPoset& p, VertexSet a) {
    if (a & ~p.graph().full_set()) fail(Errc::UnknownVertex, "antichain entry out of range");
    for (const Poset& ps : p.member_posets())
        if (is_antichain(ps, a)) return true;
    return false;
}

bool is_closed_toric_partition(const ToricPoset& p, const SetPartition& pi) {
    for (const Orientation& m : p.members())
        if (quotient_is_acyclic(m, pi)) return true;
    return false;
}

bool is_closed_toric_face_partition(const ToricPoset& p, const SetPartition& pi) {
    const auto& posets = p.member_posets();
    for (std::size_t m = 0; m < posets.size(); ++m) {
        if (!quotient_is_acyclic(p.members()[m], pi)) continue;
        if (is_connected_partition(posets[m], pi)) return true;
    }
    return false;
}

SetPartition toric_closure(const ToricPoset& p, const SetPartition& pi) {
    if (pi.ground_size() != p.graph().order())
        fail(Errc::VertexSetMismatch, "partition ground set does not match graph");
    // Lattice meet of the members' ordinary closures. A pair of vertices is
    // merged by the closure exactly when every member's order-polytope
    // section over the flat of pi forces their coordinates equal, and the
    // equalities forced by one member are the blocks of its ordinary
    // closure. This form is a genuine closure operator:
    // extensive, monotone, idempotent, and below every member's closure.
    SetPartition acc = closure_partition(p.members().front(), pi);
    for (std::size_t m = 1; m < p.members().size(); ++m) {
        if (acc == pi) break; // cannot get finer
        acc = partition_meet(acc, closure_partition(p.members()[m], pi));
    }
    return acc;
}

std::vector<CyclicWord> total_toric_extensions(const ToricPoset& p, int cap) {
    if (p.graph().order() > cap) fail(Errc::CapExceeded, "vertex count exceeds extension cap");
    std::set<CyclicWord> words;
    for (const Poset& ps : p.member_posets())
        for (const auto& ext : linear_extensions(ps, cap)) words.insert(CyclicWord(ext));
    return {words.begin(), words.end()};
}

bool same_toric_poset(const ToricPoset& a, const ToricPoset& b) {
    if (!(a.graph().labels() == b.graph().labels())) return false;
    if (!(a.closure_graph() == b.closure_graph())) return false;
    ToricPoset ca = closure_class(a), cb = closure_class(b);
    return ca.flipclass().canonical() == cb.flipclass().canonical();
}

} // namespace toric
