#include "toric/coxeter.hpp"

#include <algorithm>

namespace toric {

CoxeterSystem::CoxeterSystem(std::vector<std::string> generators,
                             std::vector<std::tuple<std::string, std::string, int>> bonds) {
    std::vector<std::pair<std::string, std::string>> edges;
    Graph plain(generators, {}); // validates labels, fixes canonical order
    for (const auto& [a, b, m] : bonds) {
        int u = plain.index_of(a), v = plain.index_of(b);
        if (u == v) fail(Errc::BadInput, "bond between a generator and itself");
        if (m != kInfinity && m < 2) fail(Errc::BadInput, "bond label must be >= 2 (0 = infinity)");
        std::pair<int, int> key{std::min(u, v), std::max(u, v)};
        if (bonds_.count(key))
            fail(Errc::BadInput, "duplicate bond for {" + a + "," + b + "}");
        bonds_[key] = m;
        if (m == kInfinity || m >= 3) edges.emplace_back(a, b);
    }
    graph_ = Graph(plain.labels(), edges);
    graph_ptr_ = std::make_shared<const Graph>(graph_);
}

int CoxeterSystem::bond(const std::string& a, const std::string& b) const {
    int u = graph_.index_of(a), v = graph_.index_of(b);
    auto it = bonds_.find({std::min(u, v), std::max(u, v)});
    return it == bonds_.end() ? 2 : it->second;
}

CoxeterElementWord::CoxeterElementWord(const CoxeterSystem& cs, std::vector<std::string> word)
    : word_(std::move(word)) {
    const Graph& g = cs.coxeter_graph();
    if (static_cast<int>(word_.size()) != g.order())
        fail(Errc::BadInput, "word must use every generator exactly once");
    std::vector<bool> used(g.order(), false);
    for (const auto& s : word_) {
        int v = g.index_of(s);
        if (used[v]) fail(Errc::BadInput, "generator '" + s + "' repeated in word");
        used[v] = true;
        indices_.push_back(v);
    }
}

Orientation orientation_of(const CoxeterSystem& cs, const CoxeterElementWord& c) {
    const GraphPtr& g = cs.coxeter_graph_ptr();
    std::vector<int> pos(g->order());
    for (std::size_t i = 0; i < c.indices().size(); ++i) pos[c.indices()[i]] = static_cast<int>(i);
    std::vector<EdgeDir> dirs(g->size());
    for (int e = 0; e < g->size(); ++e) {
        auto [u, v] = g->edges()[e];
        dirs[e] = pos[u] < pos[v] ? EdgeDir::Forward : EdgeDir::Backward;
    }
    return Orientation(g, std::move(dirs));
}

bool coxeter_conjugate(const CoxeterSystem& cs, const CoxeterElementWord& a,
                       const CoxeterElementWord& b, int cap) {
    return torically_equivalent(orientation_of(cs, a), orientation_of(cs, b), cap);
}

std::vector<ConjugateElement> conjugacy_class_elements(const CoxeterSystem& cs,
                                                       const CoxeterElementWord& c,
                                                       int cap) {
    ToricPoset p = ToricPoset::of(orientation_of(cs, c), cap);
    std::vector<ConjugateElement> out;
    const auto& posets = p.member_posets();
    for (std::size_t m = 0; m < posets.size(); ++m) {
        ConjugateElement ce;
        ce.orientation = p.members()[m];
        for (const auto& ext : linear_extensions(posets[m], cap)) {
            std::vector<std::string> word;
            for (int v : ext) word.push_back(p.graph().label(v));
            ce.words.push_back(std::move(word));
        }
        out.push_back(std::move(ce));
    }
    return out;
}

FilterPoset initial_segments(const CoxeterSystem& cs, const CoxeterElementWord& c, int cap) {
    return toric_filters(ToricPoset::of(orientation_of(cs, c), cap), cap);
}

} // namespace toric
