#include "doctest.h"

#include <random>

#include "cvnet/types.hpp"

using namespace cvnet;

TEST_CASE("ClusterSet canonicalises member and cluster order") {
    ClusterSet cs({{7, 5}, {}, {3, 9, 1}});
    REQUIRE(cs.size() == 2);
    CHECK(cs.clusters()[0] == std::vector<NodeId>{1, 3, 9});
    CHECK(cs.clusters()[1] == std::vector<NodeId>{5, 7});
    CHECK(cs.nodes() == std::vector<NodeId>{1, 3, 5, 7, 9});
}

TEST_CASE("ClusterSet rejects overlapping or duplicated members") {
    CHECK_THROWS_AS(ClusterSet({{1, 2}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(ClusterSet({{4, 4}}), std::invalid_argument);
}

TEST_CASE("singleton counting") {
    ClusterSet cs({{1}, {2, 3}, {4}});
    CHECK(cs.singleton_count() == 2);
    CHECK(cs.non_singleton_count() == 1);
}

TEST_CASE("components keeps isolated nodes") {
    auto cs = components({0, 1, 2, 3, 4}, {{0, 1}, {1, 2}});
    CHECK(cs == ClusterSet({{0, 1, 2}, {3}, {4}}));
    CHECK(components({}, {}).empty());
}

TEST_CASE("cluster JSON survives a round trip for random partitions") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::vector<NodeId>> groups(1 + rng() % 6);
        for (NodeId n = 0; n < 30; ++n)
            if (rng() % 4) groups[rng() % groups.size()].push_back(n);
        ClusterSet cs(groups);
        CHECK(cluster_set_from_json(to_json(cs)) == cs);
    }
    CHECK(to_json(ClusterSet({{2, 1}, {0}})).dump() == "[[0],[1,2]]");
}

TEST_CASE("NodePair is unordered") {
    CHECK(NodePair(4, 2) == NodePair(2, 4));
    CHECK(NodePair(4, 2).first == 2);
    CHECK(NodePair(4, 2).other(4) == 2);
}
