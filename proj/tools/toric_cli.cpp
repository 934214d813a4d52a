// Command-line front door: JSON in, JSON (or DOT) out, deterministic
// ordering throughout. Exit codes: 0 ok, 1 verification failure, 2 invalid
// input, 64 usage, 65 cap exceeded.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toric/dot_io.hpp"
#include "toric/json_io.hpp"
#include "toric/morph.hpp"

using namespace toric;

namespace {

struct Caps {
    int flip = kDefaultVertexCap;
    int face = 9;
    int iso = 8;
    int reconcile = 8;

    void override_all(int n) { flip = face = iso = reconcile = n; }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::BadInput, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_file(const std::string& path) {
    try {
        return json::parse(slurp(path));
    } catch (const json::exception& e) {
        fail(Errc::BadInput, "invalid JSON in '" + path + "': " + e.what());
    }
}

// Inputs either carry the graph inline or lean on --graph.
Orientation load_orientation(const std::string& orientation_path, const std::string& graph_path) {
    std::optional<Graph> base;
    if (!graph_path.empty()) base = graph_from_json(parse_file(graph_path));
    return orientation_from_json(parse_file(orientation_path), base ? &*base : nullptr);
}

std::uint64_t fnv1a(const std::string& data, std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Content-addressed output cache: key covers the subcommand line and the
// bytes of every input file.
struct OutputCache {
    std::string dir;
    std::uint64_t key = 0;

    void mix(const std::string& s) { key = fnv1a(s, key ? key : 1469598103934665603ull); }
    void mix_file(const std::string& path) {
        if (!path.empty()) mix(slurp(path));
    }

    std::string path() const {
        std::ostringstream ss;
        ss << std::hex << key;
        return dir + "/" + ss.str() + ".out";
    }

    bool emit_hit() const {
        if (dir.empty()) return false;
        std::ifstream in(path(), std::ios::binary);
        if (!in) return false;
        std::cout << in.rdbuf();
        return true;
    }

    void store(const std::string& output) const {
        if (dir.empty()) return;
        std::filesystem::create_directories(dir);
        std::ofstream out(path(), std::ios::binary);
        out << output;
    }
};

int emit(const OutputCache& cache, const std::string& output) {
    cache.store(output);
    std::cout << output;
    return 0;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------
// verification fixtures: the bundled worked examples, one per anchor
// ---------------------------------------------------------------------

struct Fixture {
    std::string id;
    std::string description;
    std::function<std::optional<std::string>()> run; // failure message or nullopt
};

GraphPtr sp(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

Orientation make_orientation(const GraphPtr& g,
                             const std::vector<std::pair<std::string, std::string>>& arcs,
                             const std::vector<std::pair<std::string, std::string>>& ties = {}) {
    json j = graph_to_json(*g);
    json ja = json::array(), jt = json::array();
    for (const auto& [a, b] : arcs) ja.push_back({a, b});
    for (const auto& [a, b] : ties) jt.push_back({a, b});
    j["arcs"] = ja;
    if (!jt.empty()) j["ties"] = jt;
    return orientation_from_json(j);
}

template <typename T>
std::optional<std::string> expect_eq(const T& actual, const T& expected, const std::string& what) {
    if (actual == expected) return std::nullopt;
    std::ostringstream ss;
    ss << what << ": expected " << expected << ", got " << actual;
    return ss.str();
}

std::vector<Fixture> fixtures() {
    std::vector<Fixture> fs;
    auto add = [&](std::string id, std::string desc,
                   std::function<std::optional<std::string>()> run) {
        fs.push_back({std::move(id), std::move(desc), std::move(run)});
    };

    // shared objects
    auto c4 = sp(Graph::cycle(4));
    auto k3 = sp(Graph::complete(3));
    auto c5 = sp(Graph::cycle(5));
    Orientation c4_omega = make_orientation(c4, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}});
    Orientation c4_omegaP = make_orientation(c4, {{"1", "2"}, {"2", "3"}, {"4", "3"}, {"1", "4"}});
    Orientation k3_w1 = make_orientation(k3, {{"1", "2"}, {"2", "3"}, {"1", "3"}});
    Orientation k3_w3 = make_orientation(k3, {{"3", "2"}, {"3", "1"}, {"1", "2"}});
    auto diamond = sp(Graph({"1", "2", "3", "4"}, {{"1", "2"}, {"1", "3"}, {"2", "4"}, {"3", "4"}}));
    Orientation diamond_omega =
        make_orientation(diamond, {{"1", "2"}, {"1", "3"}, {"2", "4"}, {"3", "4"}});

    add("acyclic-c4", "the reference C4 orientation is acyclic", [=] {
        return is_acyclic(c4_omega) ? std::nullopt
                                    : std::optional<std::string>("expected acyclic");
    });
    add("scc-tied-pair", "K3 with a tied pair condenses to 1|23", [=] {
        Orientation pre = make_orientation(k3, {{"1", "2"}, {"1", "3"}}, {{"2", "3"}});
        SetPartition got = strongly_connected_components(pre);
        return expect_eq(got.to_string(k3->labels()), std::string("1|2,3"), "scc partition");
    });
    add("quotient-poset", "contracting K3's first orientation by 1|23 stays acyclic", [=] {
        SetPartition pi(3, {{0}, {1, 2}});
        return is_acyclic(quotient(k3_w1, pi))
                   ? std::nullopt
                   : std::optional<std::string>("quotient not acyclic");
    });
    add("quotient-preposet", "contracting the third K3 orientation by 1|23 creates a 2-cycle",
        [=] {
            SetPartition pi(3, {{0}, {1, 2}});
            return !is_acyclic(quotient(k3_w3, pi))
                       ? std::nullopt
                       : std::optional<std::string>("quotient unexpectedly acyclic");
        });
    add("tutte-forest", "T(1,0) of a forest is 1", [=] {
        return expect_eq(tutte_10(Graph::path(5)), 1ll, "tutte");
    });
    add("tutte-k3", "T(1,0) of K3 is 2", [=] { return expect_eq(tutte_10(*k3), 2ll, "tutte"); });
    add("flip-c4", "flipping source 1 of the C4 orientation reverses its two edges", [=] {
        Orientation expect =
            make_orientation(c4, {{"2", "1"}, {"2", "3"}, {"3", "4"}, {"4", "1"}});
        return flip_source(c4_omega, c4->index_of("1")) == expect
                   ? std::nullopt
                   : std::optional<std::string>("unexpected flip image");
    });
    add("class-sizes-k3", "the 6 orientations of K3 fall into two classes of size 3", [=] {
        auto classes = all_flip_classes(k3);
        if (classes.size() != 2) return std::optional<std::string>("class count mismatch");
        if (classes[0]->size() != 3 || classes[1]->size() != 3)
            return std::optional<std::string>("class size mismatch");
        return std::optional<std::string>();
    });
    add("class-sizes-c4", "the C4 classes have sizes 4, 6, 4", [=] {
        if (flip_class(c4_omega)->size() != 4)
            return std::optional<std::string>("size of [w] is not 4");
        if (flip_class(c4_omegaP)->size() != 6)
            return std::optional<std::string>("size of [w'] is not 6");
        return expect_eq(count_flip_classes(*c4), 3ll, "class count");
    });
    add("preposet-pair", "the tied K3 preposet flips to exactly one partner", [=] {
        Orientation pre = make_orientation(k3, {{"1", "2"}, {"1", "3"}}, {{"2", "3"}});
        return expect_eq(preposet_flip_class(pre).size(), std::size_t(2), "preposet class size");
    });
    add("hasse-c4", "the C4 chain orientation has Hasse L4 and closure K4", [=] {
        Poset p = Poset::from_orientation(c4_omega);
        if (!(transitive_closure_graph(p) == Graph::complete(4)))
            return std::optional<std::string>("closure is not K4");
        Graph l4({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}});
        if (!(hasse_graph(p) == l4)) return std::optional<std::string>("hasse is not L4");
        return std::optional<std::string>();
    });
    add("interval-point", "one-point intervals are singletons", [=] {
        Poset p = Poset::from_orientation(diamond_omega);
        return expect_eq(interval(p, 1, 1), VertexSet(1) << 1, "interval");
    });
    add("face-lattice-diamond", "the diamond has exactly 10 closed face partitions", [=] {
        return expect_eq(closed_face_partition_lattice(diamond_omega).size(), std::size_t(10),
                         "face partition count");
    });
    add("face-flags-diamond", "1|23|4 on the diamond is compatible but not connected", [=] {
        SetPartition sigma(4, {{0}, {1, 2}, {3}});
        FacePartitionFlags f = face_partition_flags(diamond_omega, sigma);
        if (!f.compatible) return std::optional<std::string>("expected compatible");
        if (f.connected) return std::optional<std::string>("expected not connected");
        return std::optional<std::string>();
    });
    add("closure-diamond", "124|3 and 14|23 on the diamond both close to 1234", [=] {
        SetPartition a(4, {{0, 1, 3}, {2}}), b(4, {{0, 3}, {1, 2}});
        SetPartition one = SetPartition::one_block(4);
        if (!(closure_partition(diamond_omega, a) == one))
            return std::optional<std::string>("closure of 124|3 wrong");
        if (!(closure_partition(diamond_omega, b) == one))
            return std::optional<std::string>("closure of 14|23 wrong");
        return std::optional<std::string>();
    });
    add("closure-k3-example", "ordinary closure merges 1|23 under the third K3 orientation",
        [=] {
            SetPartition pi(3, {{0}, {1, 2}});
            return expect_eq(closure_partition(k3_w3, pi).to_string(k3->labels()),
                             std::string("1,2,3"), "ordinary closure");
        });
    add("toric-closure-k3", "1|23 is already torically closed for the K3 class", [=] {
        SetPartition pi(3, {{0}, {1, 2}});
        ToricPoset p = ToricPoset::of(k3_w3);
        return expect_eq(toric_closure(p, pi).to_string(k3->labels()), std::string("1|2,3"),
                         "toric closure");
    });
    add("toric-chain-c4", "the vertex set of the C4 chain class is a size-4 toric chain", [=] {
        ToricPoset p = ToricPoset::of(c4_omega);
        CyclicWord order({0, 1, 2, 3});
        return is_toric_chain(p, order) ? std::nullopt
                                        : std::optional<std::string>("expected a toric chain");
    });
    add("toric-chains-mixed", "the six-member C4 class has only vertex and edge chains", [=] {
        ToricPoset p = ToricPoset::of(c4_omegaP);
        return expect_eq(toric_chains(p).size(), std::size_t(9), "chain count");
    });
    add("toric-closure-graph", "toric closures of the C4 classes are K4 and C4", [=] {
        if (!(toric_transitive_closure(ToricPoset::of(c4_omega)) == Graph::complete(4)))
            return std::optional<std::string>("closure of the chain class is not K4");
        if (!(toric_transitive_closure(ToricPoset::of(c4_omegaP)) == Graph::cycle(4)))
            return std::optional<std::string>("closure of the mixed class is not C4");
        return std::optional<std::string>();
    });
    add("toric-hasse", "both C4 classes have toric Hasse diagram C4", [=] {
        if (!(toric_hasse(ToricPoset::of(c4_omega)) == Graph::cycle(4)))
            return std::optional<std::string>("hasse of the chain class");
        if (!(toric_hasse(ToricPoset::of(c4_omegaP)) == Graph::cycle(4)))
            return std::optional<std::string>("hasse of the mixed class");
        return std::optional<std::string>();
    });
    add("ordinary-vs-toric-closure", "the mixed C4 member closes 1<3 ordinarily but not torically",
        [=] {
            Poset p = Poset::from_orientation(c4_omegaP);
            if (!p.comparable(0, 2))
                return std::optional<std::string>("expected 1,3 comparable in the member");
            if (toric_transitive_closure(ToricPoset::of(c4_omegaP)).adjacent(0, 2))
                return std::optional<std::string>("{1,3} wrongly in the toric closure");
            return std::optional<std::string>();
        });
    add("toric-interval-path", "1 and 3 of the oriented path share no toric chain", [=] {
        auto l3 = sp(Graph::path(3));
        Orientation chain = make_orientation(l3, {{"1", "2"}, {"2", "3"}});
        Poset p = Poset::from_orientation(chain);
        if (interval(p, 0, 2) != 7u)
            return std::optional<std::string>("ordinary interval is not {1,2,3}");
        return expect_eq(toric_interval(ToricPoset::of(chain), 0, 2), VertexSet(0),
                         "toric interval");
    });
    add("toric-interval-c4", "toric intervals of the chain class wrap around the circle", [=] {
        ToricPoset p = ToricPoset::of(c4_omega);
        if (toric_interval(p, 0, 2) != 0b0111u)
            return std::optional<std::string>("[1,3] mismatch");
        if (toric_interval(p, 2, 0) != 0b1101u)
            return std::optional<std::string>("[3,1] mismatch");
        return std::optional<std::string>();
    });
    add("toric-antichain", "the diagonal pair is an antichain of the mixed class only", [=] {
        if (!is_geometric_toric_antichain(ToricPoset::of(c4_omegaP), 0b0101u))
            return std::optional<std::string>("{1,3} should be a toric antichain of [w']");
        if (is_geometric_toric_antichain(ToricPoset::of(c4_omega), 0b1111u))
            return std::optional<std::string>("V should not be an antichain of [w]");
        return std::optional<std::string>();
    });
    add("extensions-c4", "the chain class has one total toric extension, the mixed class four",
        [=] {
            if (total_toric_extensions(ToricPoset::of(c4_omega)).size() != 1)
                return std::optional<std::string>("extension count of [w]");
            if (total_toric_extensions(ToricPoset::of(c4_omegaP)).size() != 4)
                return std::optional<std::string>("extension count of [w']");
            return std::optional<std::string>();
        });
    add("extensions-count-k3", "the K3 classes carry (3-1)! = 2 cyclic words in total", [=] {
        std::set<CyclicWord> all;
        for (const auto& cls : all_flip_classes(k3))
            for (const auto& w : total_toric_extensions(ToricPoset(cls))) all.insert(w);
        return expect_eq(all.size(), std::size_t(2), "total word count");
    });
    add("filters-14", "the chain class has 14 toric filters and no lattice", [=] {
        FilterPoset fp = toric_filters(ToricPoset::of(c4_omega));
        if (fp.elements.size() != 14) return std::optional<std::string>("element count");
        if (!fp.graded) return std::optional<std::string>("expected graded");
        if (fp.is_lattice) return std::optional<std::string>("expected not a lattice");
        if (fp.failures.empty()) return std::optional<std::string>("expected witnesses");
        return std::optional<std::string>();
    });
    add("filters-boolean", "the mixed class has the full Boolean lattice of filters", [=] {
        FilterPoset fp = toric_filters(ToricPoset::of(c4_omegaP));
        if (fp.elements.size() != 16) return std::optional<std::string>("element count");
        if (!fp.is_lattice) return std::optional<std::string>("expected a lattice");
        return std::optional<std::string>();
    });
    add("filters-diagonal", "the diagonal pair is not a filter of the chain class", [=] {
        return !is_toric_filter(ToricPoset::of(c4_omega), 0b0101u)
                   ? std::nullopt
                   : std::optional<std::string>("{1,3} wrongly a filter");
    });
    add("quotient-well-defined", "contracting K3 by 1|23 gives the full one-edge class", [=] {
        SetPartition pi(3, {{0}, {1, 2}});
        ToricPoset q = toric_quotient(ToricPoset::of(k3_w1), pi);
        return expect_eq(q.flipclass().size(), 2, "quotient class size");
    });
    add("c5-chain-coincidence",
        "the two C5 classes differ yet share every toric chain", [=] {
            Orientation a = make_orientation(
                c5, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "5"}, {"5", "4"}});
            Orientation b = make_orientation(
                c5, {{"1", "2"}, {"2", "3"}, {"4", "3"}, {"5", "4"}, {"1", "5"}});
            if (torically_equivalent(a, b))
                return std::optional<std::string>("classes should differ");
            auto ca = toric_chains(ToricPoset::of(a));
            auto cb = toric_chains(ToricPoset::of(b));
            return ca == cb ? std::nullopt
                            : std::optional<std::string>("chain sets differ");
        });
    add("coxeter-shift", "cyclic shifts of a Coxeter word stay conjugate", [=] {
        CoxeterSystem cs({"s1", "s2", "s3", "s4"}, {{"s1", "s2", 3},
                                                    {"s2", "s3", 3},
                                                    {"s3", "s4", 3},
                                                    {"s1", "s4", 3}});
        CoxeterElementWord a(cs, {"s1", "s2", "s3", "s4"});
        CoxeterElementWord b(cs, {"s2", "s3", "s4", "s1"});
        return coxeter_conjugate(cs, a, b)
                   ? std::nullopt
                   : std::optional<std::string>("expected conjugate");
    });
    add("coxeter-distinct", "the two reference Coxeter words are not conjugate", [=] {
        CoxeterSystem cs({"s1", "s2", "s3", "s4"}, {{"s1", "s2", 3},
                                                    {"s2", "s3", 3},
                                                    {"s3", "s4", 3},
                                                    {"s1", "s4", 3}});
        CoxeterElementWord a(cs, {"s1", "s2", "s3", "s4"});
        CoxeterElementWord b(cs, {"s1", "s3", "s2", "s4"});
        if (coxeter_conjugate(cs, a, b)) return std::optional<std::string>("expected distinct");
        if (conjugacy_class_elements(cs, a).size() != 4)
            return std::optional<std::string>("conjugate count of the shift class");
        if (conjugacy_class_elements(cs, b).size() != 6)
            return std::optional<std::string>("conjugate count of the mixed class");
        return std::optional<std::string>();
    });
    add("coxeter-segments", "initial segments reproduce the two filter posets", [=] {
        CoxeterSystem cs({"s1", "s2", "s3", "s4"}, {{"s1", "s2", 3},
                                                    {"s2", "s3", 3},
                                                    {"s3", "s4", 3},
                                                    {"s1", "s4", 3}});
        FilterPoset a = initial_segments(cs, CoxeterElementWord(cs, {"s1", "s2", "s3", "s4"}));
        FilterPoset b = initial_segments(cs, CoxeterElementWord(cs, {"s1", "s3", "s2", "s4"}));
        if (a.elements.size() != 14 || a.is_lattice)
            return std::optional<std::string>("segments of the shift class");
        if (b.elements.size() != 16 || !b.is_lattice)
            return std::optional<std::string>("segments of the mixed class");
        return std::optional<std::string>();
    });
    add("alpha-k3", "the canonical point of the identity order maps to the first orientation",
        [=] {
            TorusPoint x = point_of_extension({"1", "2", "3"}, k3->labels());
            return alpha(k3, x) == k3_w1
                       ? std::nullopt
                       : std::optional<std::string>("alpha image mismatch");
        });
    add("reconcile-k3", "K3 sample points split into two cells of size 3", [=] {
        ReconcileReport rep = reconcile_chamber_bijection(*k3);
        if (!rep.ok) return std::optional<std::string>("report not ok");
        if (rep.cells.size() != 2) return std::optional<std::string>("cell count");
        if (rep.cells[0].orientation_count != 3 || rep.cells[1].orientation_count != 3)
            return std::optional<std::string>("cell sizes");
        return std::optional<std::string>();
    });
    add("reconcile-c4", "C4 sample points split into cells of sizes 4, 6, 4", [=] {
        ReconcileReport rep = reconcile_chamber_bijection(*c4);
        if (!rep.ok) return std::optional<std::string>("report not ok");
        std::multiset<long long> sizes;
        for (const auto& c : rep.cells) sizes.insert(c.orientation_count);
        return sizes == std::multiset<long long>{4, 4, 6}
                   ? std::nullopt
                   : std::optional<std::string>("cell sizes");
    });
    add("reconcile-tree", "a tree has a single chamber", [=] {
        ReconcileReport rep = reconcile_chamber_bijection(Graph::path(4));
        if (!rep.ok) return std::optional<std::string>("report not ok");
        return expect_eq(rep.cells.size(), std::size_t(1), "cell count");
    });
    return fs;
}

int run_verify(const std::string& filter) {
    int failures = 0, ran = 0;
    for (const Fixture& f : fixtures()) {
        if (!filter.empty() && f.id.find(filter) == std::string::npos &&
            f.description.find(filter) == std::string::npos)
            continue;
        ++ran;
        std::optional<std::string> bad;
        try {
            bad = f.run();
        } catch (const std::exception& e) {
            bad = std::string("exception: ") + e.what();
        }
        if (bad) {
            ++failures;
            std::cout << "FAIL " << f.id << "  " << f.description << "  [" << *bad << "]\n";
        } else {
            std::cout << "PASS " << f.id << "  " << f.description << "\n";
        }
    }
    std::cout << ran - failures << "/" << ran << " fixtures passed\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric: acyclic orientations up to source-to-sink flips"};
    app.require_subcommand(1);

    std::string cache_dir;
    int max_vertices = 0;
    int jobs = 1;
    bool dot = false;
    app.add_option("--cache", cache_dir, "content-addressed output cache directory");
    app.add_option("--max-vertices", max_vertices, "override every enumeration cap");
    app.add_option("--jobs", jobs, "worker count (outputs are identical for any value)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--dot", dot, "emit DOT instead of JSON where supported");

    std::string graph_path, orientation_path, point_path, system_path, partition_str;
    std::vector<std::string> positionals;
    bool with_members = false, check_flag = false;
    std::string verify_filter;

    auto* cmd_classes = app.add_subcommand("classes", "flip classes of a graph");
    cmd_classes->add_option("--graph", graph_path, "graph JSON")->required();
    cmd_classes->add_flag("--members", with_members, "list the members of each class");
    cmd_classes->add_option("--orientation", orientation_path,
                            "orientation JSON selecting one class (for --dot)");

    auto* cmd_poset = app.add_subcommand("poset", "ordinary poset of one orientation");
    cmd_poset->require_subcommand(1);
    auto* poset_hasse = cmd_poset->add_subcommand("hasse", "transitive reduction and closure");
    auto* poset_ext = cmd_poset->add_subcommand("extensions", "all linear extensions");
    auto* poset_ideals = cmd_poset->add_subcommand("ideals", "all order ideals");
    auto* poset_face = cmd_poset->add_subcommand("facelattice", "closed face partitions");
    for (auto* c : {poset_hasse, poset_ext, poset_ideals, poset_face}) {
        c->add_option("--orientation", orientation_path, "orientation JSON")->required();
        c->add_option("--graph", graph_path, "graph JSON (when the orientation file has no vertices)");
    }

    auto* cmd_toric = app.add_subcommand("toric", "toric poset of a flip class");
    cmd_toric->require_subcommand(1);
    auto* toric_hasse_cmd = cmd_toric->add_subcommand("hasse", "toric Hasse diagram");
    auto* toric_closure_cmd =
        cmd_toric->add_subcommand("closure-graph", "toric transitive closure");
    auto* toric_chains_cmd = cmd_toric->add_subcommand("chains", "all toric chains");
    auto* toric_interval_cmd = cmd_toric->add_subcommand("interval", "toric interval [i,j]");
    toric_interval_cmd->add_option("endpoints", positionals, "vertices i j")
        ->expected(2)
        ->required();
    auto* toric_antichain_cmd =
        cmd_toric->add_subcommand("antichain", "geometric toric antichain test");
    toric_antichain_cmd->add_option("vertices", positionals, "antichain candidate")->required();
    auto* toric_ext_cmd = cmd_toric->add_subcommand("extensions", "total toric extensions");
    auto* toric_clp_cmd = cmd_toric->add_subcommand("clpartition", "toric closure of a partition");
    toric_clp_cmd->add_option("partition", partition_str, "partition like 1,2|3|4")->required();
    for (auto* c : {toric_hasse_cmd, toric_closure_cmd, toric_chains_cmd, toric_interval_cmd,
                    toric_antichain_cmd, toric_ext_cmd, toric_clp_cmd}) {
        c->add_option("--orientation", orientation_path, "orientation JSON")->required();
        c->add_option("--graph", graph_path, "graph JSON (when the orientation file has no vertices)");
    }

    auto* cmd_filters = app.add_subcommand("filters", "toric filter poset");
    cmd_filters->add_option("--orientation", orientation_path, "orientation JSON")->required();
    cmd_filters->add_option("--graph", graph_path, "graph JSON (optional)");

    auto* cmd_quotient = app.add_subcommand("quotient", "toric quotient by a partition");
    cmd_quotient->add_option("--orientation", orientation_path, "orientation JSON")->required();
    cmd_quotient->add_option("--graph", graph_path, "graph JSON (optional)");
    cmd_quotient->add_option("--partition", partition_str, "partition like 1,2|3|4")->required();

    auto* cmd_extend = app.add_subcommand("extend", "toric extension test");
    cmd_extend->add_flag("--check", check_flag, "report whether the second class extends the first");
    cmd_extend->add_option("files", positionals, "base orientation JSON, candidate orientation JSON")
        ->expected(2)
        ->required();

    auto* cmd_iso = app.add_subcommand("iso", "toric isomorphism search");
    cmd_iso->add_option("files", positionals, "two orientation JSON files")
        ->expected(2)
        ->required();

    auto* cmd_cox = app.add_subcommand("coxeter", "Coxeter elements via flip classes");
    cmd_cox->require_subcommand(1);
    auto* cox_conj = cmd_cox->add_subcommand("conjugate", "conjugacy of two Coxeter words");
    cox_conj->add_option("words", positionals, "two comma-separated generator words")
        ->expected(2)
        ->required();
    auto* cox_class = cmd_cox->add_subcommand("class", "conjugates with their reduced words");
    cox_class->add_option("words", positionals, "comma-separated generator word")
        ->expected(1)
        ->required();
    auto* cox_seg = cmd_cox->add_subcommand("segments", "initial segments as toric filters");
    cox_seg->add_option("words", positionals, "comma-separated generator word")
        ->expected(1)
        ->required();
    for (auto* c : {cox_conj, cox_class, cox_seg})
        c->add_option("--system", system_path, "Coxeter system JSON")->required();

    auto* cmd_geom = app.add_subcommand("geom", "exact-rational geometric oracle");
    cmd_geom->require_subcommand(1);
    auto* geom_alpha = cmd_geom->add_subcommand("alpha", "orientation of a torus point");
    geom_alpha->add_option("--graph", graph_path, "graph JSON")->required();
    geom_alpha->add_option("--point", point_path, "point JSON")->required();
    auto* geom_rec = cmd_geom->add_subcommand("reconcile", "sample-point chamber reconciliation");
    geom_rec->add_option("--graph", graph_path, "graph JSON")->required();

    auto* cmd_verify = app.add_subcommand("verify-paper", "run the bundled example fixtures");
    cmd_verify->add_option("--filter", verify_filter, "only fixtures whose id matches");

    // global options (--dot, --jobs, ...) remain usable after a subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (CLI::App* sub : a->get_subcommands([](CLI::App*) { return true; }))
            enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 64;
    }

    Caps caps;
    if (max_vertices > 0) caps.override_all(max_vertices);

    OutputCache cache;
    cache.dir = cache_dir;
    if (!cache_dir.empty()) {
        for (int i = 1; i < argc; ++i) {
            std::string arg = argv[i];
            if (arg == "--cache") { ++i; continue; }
            cache.mix(arg);
        }
        for (const std::string& p : {graph_path, orientation_path, point_path, system_path})
            cache.mix_file(p);
        for (const std::string& p : positionals)
            if (std::filesystem::exists(p)) cache.mix_file(p);
        if (cmd_verify->parsed()) cache.dir.clear(); // verification always runs fresh
        if (cache.emit_hit()) return 0;
    }

    try {
        if (cmd_classes->parsed()) {
            Graph g = graph_from_json(parse_file(graph_path));
            auto gp = std::make_shared<const Graph>(g);
            if (dot) {
                if (orientation_path.empty())
                    fail(Errc::BadInput, "--dot needs --orientation to select a class");
                Orientation o = load_orientation(orientation_path, graph_path);
                std::ostringstream ss;
                write_flip_graph_dot(ss, *flip_class(o, caps.flip));
                return emit(cache, ss.str());
            }
            json out = json::array();
            for (const auto& cls : all_flip_classes(gp, caps.flip)) {
                json jc;
                jc["canonical"] = orientation_to_json(cls->canonical());
                jc["size"] = cls->size();
                if (with_members) {
                    json ms = json::array();
                    for (const auto& m : cls->members()) ms.push_back(orientation_to_json(m));
                    jc["members"] = ms;
                }
                out.push_back(jc);
            }
            return emit(cache, dump(out));
        }

        if (cmd_poset->parsed()) {
            Orientation o = load_orientation(orientation_path, graph_path);
            Poset p = Poset::from_orientation(o);
            if (poset_hasse->parsed()) {
                if (dot) {
                    std::ostringstream ss;
                    write_hasse_dot(ss, p);
                    return emit(cache, ss.str());
                }
                json out;
                out["hasse"] = graph_to_json(hasse_graph(p));
                out["closure"] = graph_to_json(transitive_closure_graph(p));
                return emit(cache, dump(out));
            }
            if (poset_ext->parsed()) {
                json out = json::array();
                for (const auto& ext : linear_extensions(p, caps.flip)) {
                    json w = json::array();
                    for (int v : ext) w.push_back(o.graph().label(v));
                    out.push_back(w);
                }
                return emit(cache, dump(out));
            }
            if (poset_ideals->parsed()) {
                json out = json::array();
                for (VertexSet s : order_ideals(p)) out.push_back(set_to_json(s, o.graph()));
                return emit(cache, dump(out));
            }
            // facelattice
            auto lattice = closed_face_partition_lattice(o, caps.face);
            json parts = json::array();
            for (const auto& pi : lattice) parts.push_back(partition_to_json(pi, o.graph()));
            json covers = json::array();
            for (std::size_t a = 0; a < lattice.size(); ++a)
                for (std::size_t b = 0; b < lattice.size(); ++b) {
                    if (a == b || !partition_leq(lattice[a], lattice[b])) continue;
                    bool cover = true;
                    for (std::size_t c = 0; cover && c < lattice.size(); ++c)
                        if (c != a && c != b && partition_leq(lattice[a], lattice[c]) &&
                            partition_leq(lattice[c], lattice[b]))
                            cover = false;
                    if (cover) covers.push_back({parts[a], parts[b]});
                }
            json out;
            out["partitions"] = parts;
            out["covers"] = covers;
            return emit(cache, dump(out));
        }

        if (cmd_toric->parsed()) {
            Orientation o = load_orientation(orientation_path, graph_path);
            ToricPoset p = ToricPoset::of(o, caps.flip);
            const Graph& g = o.graph();
            if (toric_hasse_cmd->parsed() || toric_closure_cmd->parsed()) {
                Graph out = toric_hasse_cmd->parsed() ? toric_hasse(p)
                                                      : toric_transitive_closure(p);
                if (dot) {
                    std::ostringstream ss;
                    write_graph_dot(ss, out);
                    return emit(cache, ss.str());
                }
                return emit(cache, dump(graph_to_json(out)));
            }
            if (toric_chains_cmd->parsed()) {
                json out = json::array();
                for (const auto& c : toric_chains(p, caps.flip)) {
                    json jc;
                    jc["set"] = set_to_json(c.set, g);
                    jc["order"] = cyclic_word_to_json(c.order, g);
                    out.push_back(jc);
                }
                return emit(cache, dump(out));
            }
            if (toric_interval_cmd->parsed()) {
                VertexSet s = toric_interval(p, g.index_of(positionals[0]),
                                             g.index_of(positionals[1]));
                json out;
                out["interval"] = set_to_json(s, g);
                return emit(cache, dump(out));
            }
            if (toric_antichain_cmd->parsed()) {
                VertexSet a = labels_to_set(g, positionals);
                json out;
                out["antichain"] = is_geometric_toric_antichain(p, a);
                return emit(cache, dump(out));
            }
            if (toric_ext_cmd->parsed()) {
                json out = json::array();
                for (const auto& w : total_toric_extensions(p, caps.flip))
                    out.push_back(cyclic_word_to_json(w, g));
                return emit(cache, dump(out));
            }
            // clpartition
            SetPartition pi = partition_from_string(partition_str, g);
            json out;
            out["closure"] = partition_to_json(toric_closure(p, pi), g);
            return emit(cache, dump(out));
        }

        if (cmd_filters->parsed()) {
            Orientation o = load_orientation(orientation_path, graph_path);
            ToricPoset p = ToricPoset::of(o, caps.flip);
            FilterPoset fp = toric_filters(p, caps.flip);
            if (dot) {
                std::ostringstream ss;
                write_filter_poset_dot(ss, fp, o.graph());
                return emit(cache, ss.str());
            }
            return emit(cache, dump(filter_poset_to_json(fp, o.graph())));
        }

        if (cmd_quotient->parsed()) {
            Orientation o = load_orientation(orientation_path, graph_path);
            SetPartition pi = partition_from_string(partition_str, o.graph());
            ToricPoset q = toric_quotient(ToricPoset::of(o, caps.flip), pi, caps.flip);
            json out = orientation_to_json(q.flipclass().canonical());
            out["class_size"] = q.flipclass().size();
            return emit(cache, dump(out));
        }

        if (cmd_extend->parsed()) {
            Orientation base = load_orientation(positionals[0], graph_path);
            Orientation cand = load_orientation(positionals[1], graph_path);
            ToricPoset pb = ToricPoset::of(base, caps.flip);
            ToricPoset pc = ToricPoset::of(cand, caps.flip);
            json out;
            out["extension"] = is_toric_extension(pb, pc, caps.flip);
            return emit(cache, dump(out));
        }

        if (cmd_iso->parsed()) {
            Orientation a = load_orientation(positionals[0], graph_path);
            Orientation b = load_orientation(positionals[1], graph_path);
            auto phi = toric_isomorphic(ToricPoset::of(a, caps.flip),
                                        ToricPoset::of(b, caps.flip), caps.iso);
            json out;
            out["isomorphic"] = phi.has_value();
            if (phi) {
                json bij = json::object();
                for (const auto& [from, to] : *phi) bij[from] = to;
                out["bijection"] = bij;
            } else {
                out["bijection"] = nullptr;
            }
            return emit(cache, dump(out));
        }

        if (cmd_cox->parsed()) {
            CoxeterSystem cs = coxeter_from_json(parse_file(system_path));
            auto parse_word = [&](const std::string& s) {
                std::vector<std::string> w;
                std::string cur;
                for (char ch : s) {
                    if (ch == ',') { w.push_back(cur); cur.clear(); }
                    else cur += ch;
                }
                w.push_back(cur);
                return CoxeterElementWord(cs, w);
            };
            if (cox_conj->parsed()) {
                json out;
                out["conjugate"] = coxeter_conjugate(cs, parse_word(positionals[0]),
                                                     parse_word(positionals[1]), caps.flip);
                return emit(cache, dump(out));
            }
            if (cox_class->parsed()) {
                json out = json::array();
                for (const auto& ce :
                     conjugacy_class_elements(cs, parse_word(positionals[0]), caps.flip)) {
                    json jc;
                    jc["orientation"] = orientation_to_json(ce.orientation);
                    jc["words"] = ce.words;
                    out.push_back(jc);
                }
                return emit(cache, dump(out));
            }
            FilterPoset fp = initial_segments(cs, parse_word(positionals[0]), caps.flip);
            if (dot) {
                std::ostringstream ss;
                write_filter_poset_dot(ss, fp, cs.coxeter_graph());
                return emit(cache, ss.str());
            }
            return emit(cache, dump(filter_poset_to_json(fp, cs.coxeter_graph())));
        }

        if (cmd_geom->parsed()) {
            Graph g = graph_from_json(parse_file(graph_path));
            auto gp = std::make_shared<const Graph>(g);
            if (geom_alpha->parsed()) {
                TorusPoint x = point_from_json(parse_file(point_path));
                return emit(cache, dump(orientation_to_json(alpha(gp, x))));
            }
            ReconcileReport rep = reconcile_chamber_bijection(g, caps.reconcile);
            return emit(cache, dump(reconcile_report_to_json(rep)));
        }

        if (cmd_verify->parsed()) return run_verify(verify_filter);
    } catch (const Error& e) {
        if (e.code() == Errc::CapExceeded) {
            std::cerr << "cap exceeded: " << e.what() << "\n";
            return 65;
        }
        json err;
        err["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
        std::cout << dump(err);
        return 2;
    } catch (const std::exception& e) {
        json err;
        err["error"] = {{"code", "Internal"}, {"message", e.what()}};
        std::cout << dump(err);
        return 2;
    }
    return 64;
}
