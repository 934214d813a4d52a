#include <doctest.h>

#include <set>
#include <thread>

#include "fixtures.hpp"
#include "toric/flipclass.hpp"

using namespace toric;
using namespace fix;

TEST_CASE("flip_source") {
    C4 c4;
    Orientation flipped = flip_source(c4.omega, c4.g->index_of("1"));
    CHECK(flipped == orient(c4.g, {{"2", "1"}, {"2", "3"}, {"3", "4"}, {"4", "1"}}));
    CHECK(is_acyclic(flipped));
    CHECK_THROWS_AS(flip_source(c4.omega, c4.g->index_of("2")), Error);

    Graph lonely({"1", "2", "3"}, {{"2", "3"}});
    auto gp = shared(lonely);
    Orientation o = orient(gp, {{"2", "3"}});
    CHECK(flip_source(o, gp->index_of("1")) == o); // isolated vertex, identity

    auto l3 = shared(Graph::path(3));
    Orientation chain = orient(l3, {{"1", "2"}, {"2", "3"}});
    CHECK(flip_source(chain, 0) == orient(l3, {{"2", "1"}, {"2", "3"}}));
}

TEST_CASE("flip involution") {
    C4 c4;
    for (const auto& o : acyclic_orientations(c4.g))
        for (int v = 0; v < 4; ++v) {
            if (!o.is_source(v)) continue;
            CHECK(flip_sink(flip_source(o, v), v) == o);
        }
}

TEST_CASE("flip_class sizes") {
    C4 c4;
    CHECK(flip_class(c4.omega)->size() == 4);
    CHECK(flip_class(c4.omegaP)->size() == 6);
    CHECK(flip_class(c4.omegaP_alt)->size() == 6);

    K3 k3;
    CHECK(flip_class(k3.w1)->size() == 3);
    CHECK(flip_class(k3.w1)->contains(k3.w2));
    CHECK(flip_class(k3.w1)->contains(k3.w3));
}

TEST_CASE("flip classes are BFS-start independent") {
    C4 c4;
    FlipClassPtr cls = flip_class(c4.omegaP);
    for (const auto& m : cls->members()) {
        FlipClassPtr again = flip_class(m);
        CHECK(again->members() == cls->members());
    }
}

TEST_CASE("torically_equivalent") {
    C4 c4;
    FlipClassPtr cls = flip_class(c4.omega);
    for (const auto& a : cls->members())
        for (const auto& b : cls->members()) CHECK(torically_equivalent(a, b));
    CHECK(torically_equivalent(c4.omega, c4.omega));
    CHECK_FALSE(torically_equivalent(c4.omega, c4.omegaP));

    K3 k3;
    CHECK_THROWS_AS(torically_equivalent(c4.omega, k3.w1), Error);
}

TEST_CASE("preposet_flip_class") {
    K3 k3;
    Orientation pre = orient(k3.g, {{"1", "2"}, {"1", "3"}}, {{"2", "3"}});
    auto cls = preposet_flip_class(pre);
    CHECK(cls.size() == 2);
    CHECK(std::count(cls.begin(), cls.end(),
                     orient(k3.g, {{"2", "1"}, {"3", "1"}}, {{"2", "3"}})) == 1);

    Orientation all_ties = orient(k3.g, {}, {{"1", "2"}, {"2", "3"}, {"1", "3"}});
    CHECK(preposet_flip_class(all_ties).size() == 1);

    // no ties: coincides with the ordinary flip class
    C4 c4;
    auto plain = preposet_flip_class(c4.omega);
    CHECK(plain == flip_class(c4.omega)->members());
}

TEST_CASE("count_flip_classes") {
    CHECK(count_flip_classes(Graph::complete(3)) == 2);
    CHECK(count_flip_classes(Graph::cycle(4)) == 3);
    CHECK(count_flip_classes(Graph::path(4)) == 1);
    Graph star({"1", "2", "3", "4"}, {{"1", "2"}, {"1", "3"}, {"1", "4"}});
    CHECK(count_flip_classes(star) == 1);
}

TEST_CASE("class sizes partition Acyc(G)") {
    for (const Graph& g : {Graph::cycle(4), Graph::complete(4), Graph::cycle(5), Graph::path(5)}) {
        auto gp = shared(g);
        auto classes = all_flip_classes(gp);
        std::size_t total = 0;
        std::set<std::string> seen;
        for (const auto& cls : classes)
            for (const auto& m : cls->members()) {
                total++;
                CHECK(seen.insert(m.code()).second); // classes are disjoint
            }
        CHECK(total == acyclic_orientations(gp).size());
    }
}

TEST_CASE("count equals tutte_10 on connected graphs") {
    for (const Graph& g : {Graph::cycle(4), Graph::cycle(5), Graph::cycle(6), Graph::complete(3),
                           Graph::complete(4), Graph::complete(5), Graph::path(6)})
        CHECK(count_flip_classes(g) == tutte_10(g));
}

TEST_CASE("memo cache survives concurrent readers") {
    auto g = shared(Graph::complete(5));
    auto orientations = acyclic_orientations(g);
    std::vector<std::thread> workers;
    std::vector<std::string> canon(4);
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&, t] {
            std::string last;
            for (std::size_t i = t; i < orientations.size(); i += 2)
                last = flip_class(orientations[i])->canonical().code();
            canon[t] = last;
        });
    for (auto& w : workers) w.join();
    CHECK(canon[0] == canon[2]); // same stride, same final class
    CHECK(canon[1] == canon[3]);
}

TEST_CASE("flip class respects the vertex cap") {
    auto big = shared(Graph::path(11));
    Orientation o = orient(big, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"},
                                 {"6", "7"}, {"7", "8"}, {"8", "9"}, {"9", "10"}, {"10", "11"}});
    CHECK_THROWS_AS(flip_class(o), Error);
    CHECK_NOTHROW(flip_class(o, 11));
}
