#include "doctest.h"

#include <set>
#include <sstream>

#include "cvnet/io.hpp"
#include "cvnet/ontology.hpp"

using namespace cvnet;

namespace {

ExperimentConfig small(std::size_t patterns, std::size_t instances, std::size_t noise) {
    ExperimentConfig c;
    c.num_patterns = patterns;
    c.instances_per_pattern = instances;
    c.num_noise_links = noise;
    return c;
}

void check_ontology_invariants(const Ontology& o) {
    std::set<NodeId> covered;
    for (const auto& p : o.patterns())
        for (NodeId n : p) CHECK(covered.insert(n).second);
    CHECK(covered.size() == o.node_count());
    if (!covered.empty()) CHECK(*covered.rbegin() == o.node_count() - 1);
    std::set<NodePair> distinct(o.noise_links().begin(), o.noise_links().end());
    CHECK(distinct.size() == o.noise_links().size());
    for (const auto& l : o.noise_links()) CHECK(o.pattern_of(l.first) != o.pattern_of(l.second));
}

}  // namespace

TEST_CASE("default ontology: 40 nodes, 6 noise links") {
    ExperimentConfig c;
    Rng rng(7);
    auto o = generate_ontology(c, rng);
    CHECK(o.node_count() == 40);
    CHECK(o.patterns().size() == 4);
    for (const auto& p : o.patterns()) CHECK(p.size() == 10);
    CHECK(o.noise_links().size() == 6);
    check_ontology_invariants(o);
    // pattern-contiguous ids
    CHECK(o.pattern_of(0) == 0);
    CHECK(o.pattern_of(39) == 3);
}

TEST_CASE("single pattern has no cross pairs") {
    Rng rng(1);
    auto o = generate_ontology(small(1, 5, 0), rng);
    CHECK(o.node_count() == 5);
    CHECK(o.noise_links().empty());
    CHECK_THROWS_AS(generate_ontology(small(1, 5, 1), rng), std::invalid_argument);
}

TEST_CASE("sampling without replacement takes every cross pair when forced") {
    Rng rng(3);
    auto o = generate_ontology(small(2, 2, 4), rng);
    std::vector<NodePair> expected{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    CHECK(o.noise_links() == expected);
    CHECK_THROWS_AS(generate_ontology(small(2, 2, 5), rng), std::invalid_argument);
}

TEST_CASE("config validation") {
    ExperimentConfig c;
    c.max_presented = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = {};
    c.noise_prob = 1.5;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = {};
    CHECK(c.cross_pattern_pairs() == 600);
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("presentations respect size, purity and noise bookkeeping") {
    ExperimentConfig c;
    Rng rng(11);
    auto o = generate_ontology(c, rng);
    for (int i = 0; i < 5000; ++i) {
        auto p = sample_presentation(o, c, rng);
        REQUIRE(!p.nodes.empty());
        CHECK(p.nodes.size() <= c.max_presented + 1);
        std::set<NodeId> distinct(p.nodes.begin(), p.nodes.end());
        CHECK(distinct.size() == p.nodes.size());
        std::size_t foreign = 0;
        for (NodeId n : p.nodes) foreign += o.pattern_of(n) != p.source_pattern;
        if (p.used_noise_link) {
            CHECK(foreign == 1);
            CHECK(o.pattern_of(p.nodes.back()) != p.source_pattern);
            CHECK(p.used_noise_link->touches(p.nodes.back()));
            CHECK(p.nodes.size() >= 2);
        } else {
            CHECK(foreign == 0);
        }
    }
}

TEST_CASE("noise_prob = 0 keeps every presentation inside one pattern") {
    ExperimentConfig c;
    c.noise_prob = 0.0;
    Rng rng(5);
    auto o = generate_ontology(c, rng);
    for (int i = 0; i < 2000; ++i) {
        auto p = sample_presentation(o, c, rng);
        CHECK(!p.used_noise_link);
        for (NodeId n : p.nodes) CHECK(o.pattern_of(n) == p.source_pattern);
    }
}

TEST_CASE("noise usage stays below noise_prob + 0.05 over 10,000 presentations") {
    ExperimentConfig c;
    Rng rng(99);
    auto o = generate_ontology(c, rng);
    int used = 0;
    for (int i = 0; i < 10000; ++i) used += sample_presentation(o, c, rng).used_noise_link.has_value();
    CHECK(used / 10000.0 <= c.noise_prob + 0.05);
    CHECK(used > 0);
}

TEST_CASE("every node appears in 500 default presentations for >= 99% of 100 seeds") {
    ExperimentConfig c;
    int full = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        Rng rng(seed);
        auto o = generate_ontology(c, rng);
        std::set<NodeId> seen;
        for (std::size_t i = 0; i < c.iterations; ++i)
            for (NodeId n : sample_presentation(o, c, rng).nodes) seen.insert(n);
        full += seen.size() == o.node_count();
    }
    CHECK(full >= 99);
}

TEST_CASE("fixed seed replays the presentation stream byte for byte") {
    ExperimentConfig c;
    auto record = [&] {
        Rng rng(2024);
        auto o = generate_ontology(c, rng);
        std::vector<Presentation> log;
        for (std::size_t i = 0; i < c.iterations; ++i) log.push_back(sample_presentation(o, c, rng));
        std::ostringstream out;
        write_presentations_csv(out, log);
        return std::make_pair(out.str(), log);
    };
    auto [first_csv, first_log] = record();
    auto [second_csv, second_log] = record();
    CHECK(first_csv == second_csv);
    std::istringstream in(first_csv);
    CHECK(read_presentations_csv(in) == first_log);
}

TEST_CASE("presentation CSV layout") {
    std::vector<Presentation> log{{{3, 1}, 0, std::nullopt}, {{12, 14, 27}, 1, NodePair(27, 14)}};
    std::ostringstream out;
    write_presentations_csv(out, log);
    CHECK(out.str() ==
          "iteration,source_pattern,node_ids,noise_link\n"
          "0,0,3;1,\n"
          "1,1,12;14;27,14-27\n");
    std::istringstream bad("nope\n");
    CHECK_THROWS(read_presentations_csv(bad));
}

TEST_CASE("ground truth partition") {
    Rng rng(1);
    auto truth = ground_truth_partition(generate_ontology(ExperimentConfig{}, rng));
    CHECK(truth.size() == 4);
    for (const auto& c : truth.clusters()) CHECK(c.size() == 10);
    CHECK(ground_truth_partition(generate_ontology(small(1, 5, 0), rng)).size() == 1);
    CHECK(ground_truth_partition(Ontology{}).empty());
}

TEST_CASE("empty ontology cannot be sampled") {
    Rng rng(1);
    CHECK_THROWS_AS(sample_presentation(Ontology{}, ExperimentConfig{}, rng), std::invalid_argument);
}
