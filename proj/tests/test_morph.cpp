#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "toric/morph.hpp"

using namespace toric;
using namespace fix;

TEST_CASE("toric_quotient basics") {
    K3 k3;
    ToricPoset p = ToricPoset::of(k3.w1);
    SetPartition pi = part(*k3.g, {{"1"}, {"2", "3"}});
    ToricPoset q = toric_quotient(p, pi);
    CHECK(q.graph().order() == 2);
    CHECK(q.graph().size() == 1);
    CHECK(q.flipclass().size() == 2); // both orientations of one edge

    // all-singletons partition: the quotient is the class itself
    ToricPoset qid = toric_quotient(p, SetPartition::singletons(3));
    CHECK(qid.flipclass().size() == p.flipclass().size());

    // contracting a partition that is closed for no member fails
    C4 c4;
    ToricPoset total = ToricPoset::of(c4.omega);
    CHECK_THROWS_WITH_AS(toric_quotient(total, part(*c4.g, {{"1", "3"}, {"2"}, {"4"}})),
                         doctest::Contains("no member quotient"), Error);
}

TEST_CASE("contracting antichains and size>=3 intervals is well defined") {
    for (const Graph& g : {Graph::cycle(4), Graph::complete(4), Graph::cycle(5)}) {
        auto gp = shared(g);
        for (const auto& cls : all_flip_classes(gp)) {
            ToricPoset p(cls);
            int n = g.order();
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    VertexSet itor = toric_interval(p, i, j);
                    if (popcount(itor) < 3) continue;
                    CHECK_NOTHROW(toric_quotient(p, SetPartition::around_block(n, itor)));
                }
            for (VertexSet a = 1; a < (VertexSet(1) << n); ++a) {
                if (popcount(a) < 2 || !is_geometric_toric_antichain(p, a)) continue;
                CHECK_NOTHROW(toric_quotient(p, SetPartition::around_block(n, a)));
            }
        }
    }
}

TEST_CASE("size-2 interval contraction can be genuinely ambiguous") {
    // Contracting the edge {1,2} of the six-member C4 class: the members
    // with acyclic quotients land in both toric classes of the resulting
    // triangle, so no single quotient class exists and the guard fires.
    C4 c4;
    ToricPoset mixed = ToricPoset::of(c4.omegaP);
    VertexSet edge12 = vs(*c4.g, {"1", "2"});
    CHECK(toric_interval(mixed, c4.g->index_of("1"), c4.g->index_of("2")) == edge12);
    CHECK_THROWS_WITH_AS(toric_quotient(mixed, SetPartition::around_block(4, edge12)),
                         doctest::Contains("inequivalent"), Error);

    // ... while an edge contraction whose target is a tree-or-forest stays
    // well defined (all orientations of one edge are flip equivalent)
    K3 k3;
    ToricPoset p = ToricPoset::of(k3.w1);
    CHECK_NOTHROW(toric_quotient(p, part(*k3.g, {{"1"}, {"2", "3"}})));
}

TEST_CASE("quotient composition for nested partitions") {
    Diamond d;
    ToricPoset p = ToricPoset::of(d.omega);
    SetPartition pi = part(*d.g, {{"2", "3"}, {"1"}, {"4"}});
    ToricPoset q1 = toric_quotient(p, pi);
    // collapse the contracted class down to a single vertexless comparison:
    // {B2,B4} vs {B1}
    const Graph& qg = q1.graph();
    SetPartition sigma = part(qg, {{"B2", "B4"}, {"B1"}});
    ToricPoset q2 = toric_quotient(q1, sigma);

    SetPartition composed = part(*d.g, {{"2", "3", "4"}, {"1"}});
    ToricPoset direct = toric_quotient(p, composed);
    CHECK(q2.graph().order() == direct.graph().order());
    CHECK(q2.graph().size() == direct.graph().size());
    CHECK(q2.flipclass().size() == direct.flipclass().size());
    // same arcs under the content correspondence B<B2> ~ B<234>, B<B1> ~ B<1>
    auto arcs2 = q2.flipclass().canonical().arcs();
    auto arcsd = direct.flipclass().canonical().arcs();
    CHECK(arcs2.size() == arcsd.size());
}

TEST_CASE("quotient composition over nested partitions") {
    // Contract pi, then contract the induced coarsening sigma/pi on the
    // block graph; whenever both quotients and the direct one are defined,
    // the results agree under the block-content correspondence.
    for (const Graph& g : {Graph::cycle(4), Graph::complete(4), Graph::path(4)}) {
        auto gp = shared(g);
        int n = g.order();
        auto partitions = all_partitions(n);
        int exercised = 0;
        for (const auto& cls : all_flip_classes(gp)) {
            ToricPoset p(cls);
            for (const auto& pi : partitions)
                for (const auto& sigma : partitions) {
                    if (!partition_leq(pi, sigma) || pi == sigma) continue;
                    std::optional<ToricPoset> first;
                    try {
                        first = toric_quotient(p, pi);
                    } catch (const Error&) {
                        continue;
                    }
                    const ToricPoset& q1 = *first;
                    // sigma induced on the blocks of pi
                    const Graph& qg = q1.graph();
                    std::vector<int> assign(qg.order());
                    for (int b = 0; b < pi.block_count(); ++b)
                        assign[qg.index_of("B" + g.label(pi.blocks()[b].front()))] =
                            sigma.block_of(pi.blocks()[b].front());
                    SetPartition induced = SetPartition::from_assignment(assign);
                    try {
                        ToricPoset q2 = toric_quotient(q1, induced);
                        ToricPoset direct = toric_quotient(p, sigma);
                        ++exercised;
                        CHECK(q2.flipclass().size() == direct.flipclass().size());
                        // align block labels by content: B<label of min inner
                        // block> in q2 corresponds to B<min member> directly
                        std::map<std::string, std::string> rename;
                        for (int b = 0; b < sigma.block_count(); ++b) {
                            std::string direct_label = "B" + g.label(sigma.blocks()[b].front());
                            int inner = pi.block_of(sigma.blocks()[b].front());
                            std::string nested_label =
                                "B" + std::string("B") + g.label(pi.blocks()[inner].front());
                            rename[nested_label] = direct_label;
                        }
                        std::set<std::pair<std::string, std::string>> nested_arcs, direct_arcs;
                        for (auto [a, b] : q2.flipclass().canonical().arcs())
                            nested_arcs.emplace(rename.at(q2.graph().label(a)),
                                                rename.at(q2.graph().label(b)));
                        for (auto [a, b] : direct.flipclass().canonical().arcs())
                            direct_arcs.emplace(direct.graph().label(a), direct.graph().label(b));
                        // same underlying graph; classes must coincide, so
                        // compare canonical members through the relabeling
                        CHECK(nested_arcs == direct_arcs);
                    } catch (const Error&) {
                        // one of the quotients is undefined for this pair
                    }
                }
        }
        CHECK(exercised > 0);
    }
}

TEST_CASE("surjective morphisms factor as quotient then extension") {
    // Project the diamond class onto a two-block partition, then refine the
    // image by a total toric order from its own extension set, which is the
    // canonical quotient-then-extension factorization of a surjection.
    Diamond d;
    ToricPoset p = ToricPoset::of(d.omega);
    ToricPoset q = toric_quotient(p, part(*d.g, {{"1", "2"}, {"3", "4"}}));
    const Graph& qg = q.graph();
    auto total_words = q.extensions();
    REQUIRE(!total_words.empty());
    REQUIRE(qg.order() == 2); // two blocks, and K2 is the block graph itself
    for (const CyclicWord& w : total_words) {
        std::vector<int> pos(qg.order());
        for (std::size_t i = 0; i < w.seq().size(); ++i) pos[w.seq()[i]] = static_cast<int>(i);
        std::vector<EdgeDir> dirs(qg.size());
        auto qgp = std::make_shared<const Graph>(qg);
        for (int e = 0; e < qg.size(); ++e) {
            auto [u, v] = qg.edges()[e];
            dirs[e] = pos[u] < pos[v] ? EdgeDir::Forward : EdgeDir::Backward;
        }
        ToricPoset refined = ToricPoset::of(Orientation(qgp, dirs));
        CHECK(is_toric_extension(q, refined));
    }
}

TEST_CASE("is_toric_extension") {
    C4 c4;
    ToricPoset total = ToricPoset::of(c4.omega);
    ToricPoset mixed = ToricPoset::of(c4.omegaP);
    CHECK(is_toric_extension(total, total));
    CHECK(is_toric_extension(mixed, mixed));
    CHECK_FALSE(is_toric_extension(total, mixed));
    CHECK_FALSE(is_toric_extension(mixed, total));

    // a total toric order from L_tor(P), viewed over K_V, extends P
    auto k4 = shared(Graph::complete(4));
    for (const CyclicWord& w : mixed.extensions()) {
        std::vector<int> pos(4);
        for (std::size_t i = 0; i < w.seq().size(); ++i) pos[w.seq()[i]] = static_cast<int>(i);
        std::vector<EdgeDir> dirs(k4->size());
        for (int e = 0; e < k4->size(); ++e) {
            auto [u, v] = k4->edges()[e];
            dirs[e] = pos[u] < pos[v] ? EdgeDir::Forward : EdgeDir::Backward;
        }
        ToricPoset word_class = ToricPoset::of(Orientation(k4, dirs));
        CHECK(is_toric_extension(mixed, word_class));
    }

    K3 k3;
    CHECK_THROWS_AS(is_toric_extension(total, ToricPoset::of(k3.w1)), Error);
}

TEST_CASE("extension cross-check: hasse of the base is inside the closure of the extension") {
    // The bounding hyperplanes of the big chamber cannot cut the smaller
    // one, so they are non-cutting there: hasse(P) sits in closure(P'),
    // for every extension P' of P.
    for (const Graph& g : {Graph::cycle(4), Graph::complete(4)}) {
        auto gp = shared(g);
        auto classes = all_flip_classes(gp);
        for (const auto& ca : classes)
            for (const auto& cb : classes) {
                ToricPoset p(ca), q(cb);
                if (!is_toric_extension(p, q)) continue;
                const Graph& hb = p.hasse();
                const Graph& ce = q.closure_graph();
                for (auto [u, v] : hb.edges()) CHECK(ce.adjacent(u, v));
            }
    }
}

TEST_CASE("is_toric_extension is a partial order over a fixed graph") {
    auto g = shared(Graph::cycle(4));
    auto classes = all_flip_classes(g);
    std::vector<ToricPoset> ps;
    for (const auto& cls : classes) ps.emplace_back(cls);
    for (const auto& a : ps) CHECK(is_toric_extension(a, a));
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j) {
            if (i == j) continue;
            bool ij = is_toric_extension(ps[i], ps[j]);
            bool ji = is_toric_extension(ps[j], ps[i]);
            bool both = ij && ji;
            CHECK_FALSE(both); // antisymmetry between distinct classes
            for (std::size_t k = 0; k < ps.size(); ++k)
                if (ij && is_toric_extension(ps[j], ps[k]))
                    CHECK(is_toric_extension(ps[i], ps[k]));
        }
}

TEST_CASE("include") {
    C4 c4;
    ToricPoset p = ToricPoset::of(c4.omega);
    ToricPoset big = include(p, {"5"});
    CHECK(big.graph().order() == 5);
    CHECK(big.graph().size() == 4);
    CHECK(big.flipclass().size() == p.flipclass().size());
    // toric hasse unchanged on the old vertices
    const Graph& h = big.hasse();
    for (auto [u, v] : p.hasse().edges())
        CHECK(h.adjacent(h.index_of(c4.g->label(u)), h.index_of(c4.g->label(v))));

    ToricPoset same = include(p, {});
    CHECK(same.flipclass().canonical() == p.flipclass().canonical());

    CHECK_THROWS_AS(include(p, {"3"}), Error);
    // blocks must be nonempty: a partition cannot swallow a vertex into nothing
    CHECK_THROWS_AS(SetPartition(5, {{0, 1, 2, 3, 4}, {}}), Error);
}

TEST_CASE("toric_isomorphic") {
    C4 c4;
    ToricPoset p = ToricPoset::of(c4.omega);

    // relabeled copy
    auto g2 = shared(Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}}));
    ToricPoset q = ToricPoset::of(orient(g2, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}}));
    auto phi = toric_isomorphic(p, q);
    REQUIRE(phi.has_value());
    CHECK((*phi).at("1") == "a");
    CHECK((*phi).at("2") == "b");

    CHECK_FALSE(toric_isomorphic(p, ToricPoset::of(c4.omegaP)).has_value());

    // The two C5 classes are inequivalent as orientations of the labeled
    // cycle, yet abstractly isomorphic: the reflection fixing 1 carries one
    // onto the other. The isomorphism is never the identity relabeling.
    C5 c5;
    CHECK_FALSE(torically_equivalent(c5.omega, c5.omegaP));
    auto sigma = toric_isomorphic(ToricPoset::of(c5.omega), ToricPoset::of(c5.omegaP));
    REQUIRE(sigma.has_value());
    bool identity = true;
    for (const auto& [from, to] : *sigma)
        if (from != to) identity = false;
    CHECK_FALSE(identity);
}
