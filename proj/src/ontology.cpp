#include "cvnet/ontology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cvnet {

std::size_t ExperimentConfig::cross_pattern_pairs() const {
    auto pairs = [](std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; };
    return pairs(node_count()) - num_patterns * pairs(instances_per_pattern);
}

void ExperimentConfig::validate() const {
    if (max_presented < 1) throw std::invalid_argument("max_presented must be >= 1");
    if (!(noise_prob >= 0.0 && noise_prob <= 1.0))
        throw std::invalid_argument("noise_prob must lie in [0, 1]");
    if (num_noise_links > cross_pattern_pairs())
        throw std::invalid_argument("num_noise_links (" + std::to_string(num_noise_links) +
                                    ") exceeds available cross-pattern pairs (" +
                                    std::to_string(cross_pattern_pairs()) + ")");
}

Ontology::Ontology(std::vector<std::vector<NodeId>> patterns, std::vector<NodePair> noise_links)
    : patterns_(std::move(patterns)), noise_links_(std::move(noise_links)) {
    std::size_t total = 0;
    for (const auto& p : patterns_) total += p.size();
    constexpr auto unset = static_cast<std::size_t>(-1);
    pattern_of_.assign(total, unset);
    for (std::size_t p = 0; p < patterns_.size(); ++p) {
        for (NodeId n : patterns_[p]) {
            if (n >= total || pattern_of_[n] != unset)
                throw std::invalid_argument("pattern node ids must be dense and disjoint");
            pattern_of_[n] = p;
        }
    }
    std::sort(noise_links_.begin(), noise_links_.end());
    if (std::adjacent_find(noise_links_.begin(), noise_links_.end()) != noise_links_.end())
        throw std::invalid_argument("duplicate noise link");
    for (const auto& l : noise_links_) {
        if (l.second >= total || pattern_of_[l.first] == pattern_of_[l.second])
            throw std::invalid_argument("noise link must span two distinct patterns");
    }
}

Ontology generate_ontology(const ExperimentConfig& config, Rng& rng) {
    config.validate();
    const auto m = config.instances_per_pattern;
    std::vector<std::vector<NodeId>> patterns(config.num_patterns);
    for (std::size_t p = 0; p < config.num_patterns; ++p)
        for (std::size_t i = 0; i < m; ++i) patterns[p].push_back(static_cast<NodeId>(p * m + i));

    std::vector<NodePair> cross;
    cross.reserve(config.cross_pattern_pairs());
    const auto n = static_cast<NodeId>(config.node_count());
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b)
            if (a / m != b / m) cross.emplace_back(a, b);

    std::vector<NodePair> noise;
    noise.reserve(config.num_noise_links);
    std::sample(cross.begin(), cross.end(), std::back_inserter(noise), config.num_noise_links, rng);
    return Ontology(std::move(patterns), std::move(noise));
}

Presentation sample_presentation(const Ontology& ontology, const ExperimentConfig& config, Rng& rng) {
    const auto& patterns = ontology.patterns();
    if (patterns.empty()) throw std::invalid_argument("cannot sample from an empty ontology");

    Presentation out;
    out.source_pattern = std::uniform_int_distribution<std::size_t>(0, patterns.size() - 1)(rng);
    auto pool = patterns[out.source_pattern];
    const auto k_max = std::min(config.max_presented, pool.size());
    const auto k = std::uniform_int_distribution<std::size_t>(1, k_max)(rng);

    // Partial Fisher-Yates: the first k slots become the sample, in draw order.
    for (std::size_t i = 0; i < k; ++i) {
        auto j = std::uniform_int_distribution<std::size_t>(i, pool.size() - 1)(rng);
        std::swap(pool[i], pool[j]);
    }
    out.nodes.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));

    const auto& noise = ontology.noise_links();
    if (!noise.empty() && std::bernoulli_distribution(config.noise_prob)(rng)) {
        const auto& link = noise[std::uniform_int_distribution<std::size_t>(0, noise.size() - 1)(rng)];
        auto hit = std::find_if(out.nodes.begin(), out.nodes.end(),
                                [&](NodeId n) { return link.touches(n); });
        if (hit != out.nodes.end()) {
            out.nodes.push_back(link.other(*hit));
            out.used_noise_link = link;
        }
    }
    return out;
}

ClusterSet ground_truth_partition(const Ontology& ontology) {
    return ClusterSet(ontology.patterns());
}

}  // namespace cvnet
