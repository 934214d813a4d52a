#include "toric/morph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace toric {

ToricPoset toric_quotient(const ToricPoset& p, const SetPartition& pi, int cap) {
    if (pi.ground_size() != p.graph().order())
        fail(Errc::VertexSetMismatch, "partition ground set does not match graph");
    std::optional<ToricPoset> result;
    for (const Orientation& m : p.members()) {
        if (!quotient_is_acyclic(m, pi)) continue;
        ToricPoset qp = ToricPoset::of(quotient(m, pi), cap);
        if (!result) result = std::move(qp);
        else if (!(result->flipclass().canonical() == qp.flipclass().canonical()))
            fail(Errc::IllDefinedQuotient,
                 "acyclic-quotient members yield inequivalent quotients for " +
                     pi.to_string(p.graph().labels()));
    }
    if (!result)
        fail(Errc::NotAQuotientPartition,
             "no member quotient by " + pi.to_string(p.graph().labels()) + " is acyclic");
    return *result;
}

bool is_toric_extension(const ToricPoset& p, const ToricPoset& ext, int cap) {
    if (p.graph().labels() != ext.graph().labels())
        fail(Errc::VertexSetMismatch, "toric posets live on different vertex sets");
    const auto& small = ext.extensions(cap);
    const auto& large = p.extensions(cap);
    return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

ToricPoset include(const ToricPoset& p, const std::vector<std::string>& extra, int cap) {
    const Graph& g = p.graph();
    for (const auto& l : extra)
        for (const auto& existing : g.labels())
            if (l == existing) fail(Errc::LabelCollision, "vertex '" + l + "' already present");
    std::vector<std::string> labels = g.labels();
    labels.insert(labels.end(), extra.begin(), extra.end());
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [u, v] : g.edges()) es.emplace_back(g.label(u), g.label(v));
    auto big = std::make_shared<const Graph>(Graph(labels, es));
    const Orientation& seed = p.flipclass().canonical();
    std::vector<EdgeDir> dirs(big->size());
    for (int e = 0; e < big->size(); ++e) {
        auto [u, v] = big->edges()[e];
        // both graphs write an edge as (lex-smaller label, larger), so the
        // per-edge sense carries over unchanged
        int gu = g.index_of(big->label(u)), gv = g.index_of(big->label(v));
        dirs[e] = seed.dir(g.edge_index(gu, gv));
    }
    return ToricPoset::of(Orientation(big, std::move(dirs)), cap);
}

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> deg(g.order(), 0);
    for (auto [u, v] : g.edges()) { deg[u]++; deg[v]++; }
    return deg;
}

} // namespace

std::optional<std::map<std::string, std::string>>
toric_isomorphic(const ToricPoset& a, const ToricPoset& b, int cap) {
    int n = a.graph().order();
    if (n > cap || b.graph().order() > cap)
        fail(Errc::CapExceeded, "vertex count exceeds isomorphism search cap");
    if (n != b.graph().order()) return std::nullopt;
    if (a.flipclass().size() != b.flipclass().size()) return std::nullopt;

    const Graph& ga = a.closure_graph();
    const Graph& gb = b.closure_graph();
    if (ga.size() != gb.size()) return std::nullopt;
    std::vector<int> da = degree_sequence(ga), db = degree_sequence(gb);
    {
        std::vector<int> sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    {
        // toric-chain size profile
        std::vector<int> ca, cb;
        for (const auto& c : toric_chains(a, cap)) ca.push_back(popcount(c.set));
        for (const auto& c : toric_chains(b, cap)) cb.push_back(popcount(c.set));
        if (ca != cb) return std::nullopt;
    }

    ToricPoset cb_class = closure_class(b);
    Orientation oa = closure_class(a).flipclass().canonical();
    const GraphPtr& gb_ptr = cb_class.flipclass().graph_ptr();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; ok && v < n; ++v) ok = da[v] == db[perm[v]];
        for (int e = 0; ok && e < ga.size(); ++e) {
            auto [u, v] = ga.edges()[e];
            ok = gb.adjacent(perm[u], perm[v]);
        }
        if (!ok) continue;
        // carry the closure orientation of a across the bijection
        std::vector<EdgeDir> dirs(gb.size());
        for (int e = 0; e < ga.size(); ++e) {
            auto [u, v] = ga.edges()[e];
            int pu = perm[u], pv = perm[v];
            EdgeDir d = oa.dir(e);
            dirs[gb_ptr->edge_index(pu, pv)] =
                d == EdgeDir::Both ? d
                : (pu < pv) == (d == EdgeDir::Forward) ? EdgeDir::Forward
                                                       : EdgeDir::Backward;
        }
        Orientation mapped(gb_ptr, std::move(dirs));
        if (cb_class.flipclass().contains(mapped)) {
            std::map<std::string, std::string> phi;
            for (int v = 0; v < n; ++v) phi[a.graph().label(v)] = b.graph().label(perm[v]);
            return phi;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

} // namespace toric
