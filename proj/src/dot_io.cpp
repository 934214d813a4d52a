#include "toric/dot_io.hpp"

#include <functional>
#include <map>

namespace toric {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string set_name(VertexSet s, const Graph& g) {
    if (s == 0) return "{}";
    std::string name;
    for (const auto& l : set_to_labels(g, s)) {
        if (!name.empty()) name += ',';
        name += l;
    }
    return name;
}

} // namespace

void write_graph_dot(std::ostream& os, const Graph& g, const std::string& name) {
    os << "graph " << name << " {\n";
    for (const auto& l : g.labels()) os << "  " << quote(l) << ";\n";
    for (auto [u, v] : g.edges())
        os << "  " << quote(g.label(u)) << " -- " << quote(g.label(v)) << ";\n";
    os << "}\n";
}

void write_orientation_dot(std::ostream& os, const Orientation& o, const std::string& name) {
    const Graph& g = o.graph();
    os << "digraph " << name << " {\n";
    for (const auto& l : g.labels()) os << "  " << quote(l) << ";\n";
    for (int e = 0; e < g.size(); ++e) {
        auto [u, v] = g.edges()[e];
        switch (o.dir(e)) {
        case EdgeDir::Forward:
            os << "  " << quote(g.label(u)) << " -> " << quote(g.label(v)) << ";\n";
            break;
        case EdgeDir::Backward:
            os << "  " << quote(g.label(v)) << " -> " << quote(g.label(u)) << ";\n";
            break;
        case EdgeDir::Both:
            os << "  " << quote(g.label(u)) << " -> " << quote(g.label(v))
               << " [dir=both];\n";
            break;
        }
    }
    os << "}\n";
}

void write_hasse_dot(std::ostream& os, const Poset& p, const std::string& name) {
    const Graph& g = p.graph();
    Graph h = hasse_graph(p);
    os << "digraph " << name << " {\n  rankdir=BT;\n";
    // layer = longest chain strictly below
    std::vector<int> memo(p.order(), -1);
    std::function<int(int)> depth = [&](int x) {
        if (memo[x] >= 0) return memo[x];
        int best = 0;
        for (VertexSet t = p.below(x); t; t &= t - 1)
            best = std::max(best, depth(lowest_bit(t)) + 1);
        return memo[x] = best;
    };
    std::map<int, std::vector<int>> levels;
    for (int v = 0; v < p.order(); ++v) levels[depth(v)].push_back(v);
    for (const auto& [depth, vs] : levels) {
        os << "  { rank=same;";
        for (int v : vs) os << " " << quote(g.label(v)) << ";";
        os << " }\n";
    }
    for (auto [u, v] : h.edges()) {
        int a = u, b = v;
        if (p.less(b, a)) std::swap(a, b);
        os << "  " << quote(g.label(a)) << " -> " << quote(g.label(b)) << ";\n";
    }
    os << "}\n";
}

void write_flip_graph_dot(std::ostream& os, const FlipClass& cls, const std::string& name) {
    const auto& members = cls.members();
    os << "graph " << name << " {\n";
    auto node_name = [&](const Orientation& o) {
        std::string s;
        for (auto [t, h] : o.arcs()) {
            if (!s.empty()) s += ' ';
            s += cls.graph().label(t) + ">" + cls.graph().label(h);
        }
        return s;
    };
    for (const auto& m : members) os << "  " << quote(node_name(m)) << ";\n";
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            // adjacent iff one flip apart
            bool adjacent = false;
            for (int v = 0; v < cls.graph().order() && !adjacent; ++v)
                if ((members[i].is_source(v) || members[i].is_sink(v)) &&
                    members[i].reversed_at(v) == members[j])
                    adjacent = true;
            if (adjacent)
                os << "  " << quote(node_name(members[i])) << " -- "
                   << quote(node_name(members[j])) << ";\n";
        }
    os << "}\n";
}

void write_filter_poset_dot(std::ostream& os, const FilterPoset& fp, const Graph& g,
                            const std::string& name) {
    os << "digraph " << name << " {\n  rankdir=BT;\n";
    std::map<int, std::vector<VertexSet>> ranks;
    for (VertexSet s : fp.elements) ranks[popcount(s)].push_back(s);
    for (const auto& [k, sets] : ranks) {
        os << "  { rank=same;";
        for (VertexSet s : sets) os << " " << quote(set_name(s, g)) << ";";
        os << " }\n";
    }
    for (auto [a, b] : fp.covers)
        os << "  " << quote(set_name(fp.elements[a], g)) << " -> "
           << quote(set_name(fp.elements[b], g)) << ";\n";
    os << "}\n";
}

} // namespace toric
