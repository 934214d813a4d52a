#include "toric/json_io.hpp"

#include <algorithm>

namespace toric {

namespace {

std::vector<std::string> string_list(const json& j, const char* what) {
    if (!j.is_array()) fail(Errc::BadInput, std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string()) fail(Errc::BadInput, std::string(what) + " entries must be strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(const json& j, const char* what) {
    if (!j.is_array()) fail(Errc::BadInput, std::string(what) + " must be an array");
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& x : j) {
        if (!x.is_array() || x.size() != 2 || !x[0].is_string() || !x[1].is_string())
            fail(Errc::BadInput, std::string(what) + " entries must be [string,string] pairs");
        out.emplace_back(x[0].get<std::string>(), x[1].get<std::string>());
    }
    return out;
}

} // namespace

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices"))
        fail(Errc::BadInput, "graph JSON needs a \"vertices\" array");
    auto vertices = string_list(j.at("vertices"), "vertices");
    std::vector<std::pair<std::string, std::string>> edges;
    if (j.contains("edges")) edges = pair_list(j.at("edges"), "edges");
    return Graph(vertices, edges);
}

json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.labels();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
    j["edges"] = edges;
    return j;
}

Orientation orientation_from_json(const json& j, const Graph* base) {
    if (!j.is_object() || !j.contains("arcs"))
        fail(Errc::BadInput, "orientation JSON needs an \"arcs\" array");
    auto arcs = pair_list(j.at("arcs"), "arcs");
    std::vector<std::pair<std::string, std::string>> ties;
    if (j.contains("ties")) ties = pair_list(j.at("ties"), "ties");

    Graph g;
    if (j.contains("vertices")) {
        json jg = j;
        if (!jg.contains("edges")) {
            json edges = json::array();
            for (const auto& [a, b] : arcs) edges.push_back({a, b});
            for (const auto& [a, b] : ties) edges.push_back({a, b});
            jg["edges"] = edges;
        }
        g = graph_from_json(jg);
    } else if (base) {
        g = *base;
    } else {
        fail(Errc::BadInput, "orientation JSON needs \"vertices\" (or pass --graph)");
    }
    auto gp = std::make_shared<const Graph>(g);

    std::vector<EdgeDir> dirs(g.size());
    std::vector<int> seen(g.size(), 0);
    auto mark = [&](const std::string& a, const std::string& b, bool tie) {
        int u = g.index_of(a), v = g.index_of(b);
        int e = g.edge_index(u, v);
        if (e < 0) fail(Errc::BadInput, "arc {" + a + "," + b + "} is not an edge of the graph");
        EdgeDir d = tie ? EdgeDir::Both : (u < v ? EdgeDir::Forward : EdgeDir::Backward);
        if (seen[e] && dirs[e] != d) {
            // opposite plain arcs combine into a tie
            if (!tie && dirs[e] != EdgeDir::Both) d = EdgeDir::Both;
            else fail(Errc::BadInput, "conflicting directions for edge {" + a + "," + b + "}");
        }
        seen[e] = 1;
        dirs[e] = d;
    };
    for (const auto& [a, b] : arcs) mark(a, b, false);
    for (const auto& [a, b] : ties) mark(a, b, true);
    for (int e = 0; e < g.size(); ++e)
        if (!seen[e])
            fail(Errc::BadInput, "edge {" + g.label(g.edges()[e].first) + "," +
                                     g.label(g.edges()[e].second) + "} has no direction");
    return Orientation(gp, std::move(dirs));
}

json orientation_to_json(const Orientation& o) {
    const Graph& g = o.graph();
    json j = graph_to_json(g);
    json arcs = json::array(), ties = json::array();
    for (int e = 0; e < g.size(); ++e) {
        auto [u, v] = g.edges()[e];
        switch (o.dir(e)) {
        case EdgeDir::Forward: arcs.push_back({g.label(u), g.label(v)}); break;
        case EdgeDir::Backward: arcs.push_back({g.label(v), g.label(u)}); break;
        case EdgeDir::Both: ties.push_back({g.label(u), g.label(v)}); break;
        }
    }
    j["arcs"] = arcs;
    if (!ties.empty()) j["ties"] = ties;
    return j;
}

SetPartition partition_from_string(const std::string& s, const Graph& g) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block;
    std::string cur;
    auto push_vertex = [&]() {
        if (cur.empty()) fail(Errc::BadInput, "empty vertex label in partition");
        block.push_back(g.index_of(cur));
        cur.clear();
    };
    for (char ch : s) {
        if (ch == ',') push_vertex();
        else if (ch == '|') {
            push_vertex();
            blocks.push_back(block);
            block.clear();
        } else cur += ch;
    }
    push_vertex();
    blocks.push_back(block);
    return SetPartition(g.order(), std::move(blocks));
}

json partition_to_json(const SetPartition& pi, const Graph& g) {
    json blocks = json::array();
    for (const auto& b : pi.blocks()) {
        json blk = json::array();
        for (int v : b) blk.push_back(g.label(v));
        blocks.push_back(blk);
    }
    return blocks;
}

TorusPoint point_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coords") || !j.at("coords").is_object())
        fail(Errc::BadInput, "point JSON needs a \"coords\" object");
    std::map<std::string, Rational> coords;
    for (const auto& [label, value] : j.at("coords").items()) {
        if (value.is_string()) coords[label] = Rational::parse(value.get<std::string>());
        else if (value.is_number_integer()) coords[label] = Rational(value.get<long long>());
        else fail(Errc::BadInput, "coordinate of '" + label + "' must be \"p/q\" or an integer");
    }
    return TorusPoint(std::move(coords));
}

json point_to_json(const TorusPoint& p) {
    json coords = json::object();
    for (const auto& [label, value] : p.coords()) coords[label] = value.to_string();
    return json{{"coords", coords}};
}

CoxeterSystem coxeter_from_json(const json& j) {
    if (!j.is_object() || !j.contains("generators"))
        fail(Errc::BadInput, "coxeter JSON needs a \"generators\" array");
    auto gens = string_list(j.at("generators"), "generators");
    std::vector<std::tuple<std::string, std::string, int>> bonds;
    if (j.contains("bonds")) {
        if (!j.at("bonds").is_array()) fail(Errc::BadInput, "bonds must be an array");
        for (const auto& b : j.at("bonds")) {
            if (!b.is_array() || b.size() != 3 || !b[0].is_string() || !b[1].is_string() ||
                !b[2].is_number_integer())
                fail(Errc::BadInput, "bond entries must be [gen,gen,m]");
            bonds.emplace_back(b[0].get<std::string>(), b[1].get<std::string>(),
                               b[2].get<int>());
        }
    }
    return CoxeterSystem(gens, bonds);
}

json cyclic_word_to_json(const CyclicWord& w, const Graph& g) {
    json j = json::array();
    for (int v : w.seq()) j.push_back(g.label(v));
    return j;
}

json set_to_json(VertexSet s, const Graph& g) {
    json j = json::array();
    for (const auto& l : set_to_labels(g, s)) j.push_back(l);
    return j;
}

json filter_poset_to_json(const FilterPoset& fp, const Graph& g) {
    json j;
    json elems = json::array();
    for (VertexSet s : fp.elements) elems.push_back(set_to_json(s, g));
    j["elements"] = elems;
    json covers = json::array();
    for (auto [a, b] : fp.covers)
        covers.push_back({set_to_json(fp.elements[a], g), set_to_json(fp.elements[b], g)});
    j["covers"] = covers;
    j["graded"] = fp.graded;
    j["is_lattice"] = fp.is_lattice;
    json fails = json::array();
    for (const auto& f : fp.failures) {
        json bounds = json::array();
        for (VertexSet b : f.bounds) bounds.push_back(set_to_json(b, g));
        fails.push_back({{"pair", {set_to_json(f.a, g), set_to_json(f.b, g)}},
                         {"kind", f.join ? "join" : "meet"},
                         {"bounds", bounds}});
    }
    j["lattice_failures"] = fails;
    return j;
}

json reconcile_report_to_json(const ReconcileReport& rep) {
    json cells = json::array();
    for (const auto& c : rep.cells) {
        cells.push_back({{"canonical", orientation_to_json(c.canonical)},
                         {"orientations", c.orientation_count},
                         {"permutations", c.permutation_count}});
    }
    return json{{"cells", cells},
                {"flip_classes", rep.flip_class_count},
                {"tutte_10", rep.tutte},
                {"rotation_closed", rep.rotation_closed},
                {"surjective", rep.surjective},
                {"ok", rep.ok}};
}

} // namespace toric
