#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cvnet/types.hpp"

namespace cvnet {

using Rng = std::mt19937_64;

struct ExperimentConfig {
    std::size_t num_patterns = 4;
    std::size_t instances_per_pattern = 10;
    std::size_t num_noise_links = 6;
    std::size_t max_presented = 5;
    double noise_prob = 0.5;
    std::size_t iterations = 500;
    std::uint64_t rng_seed = 1;

    /// Throws std::invalid_argument when an invariant is violated.
    void validate() const;
    std::size_t node_count() const { return num_patterns * instances_per_pattern; }
    /// Number of unordered node pairs whose endpoints lie in different patterns.
    std::size_t cross_pattern_pairs() const;
};

/// Flat ground-truth ontology. Pattern p owns ids [p*m, (p+1)*m).
class Ontology {
public:
    Ontology() = default;
    Ontology(std::vector<std::vector<NodeId>> patterns, std::vector<NodePair> noise_links);

    const std::vector<std::vector<NodeId>>& patterns() const { return patterns_; }
    const std::vector<NodePair>& noise_links() const { return noise_links_; }
    std::size_t node_count() const { return pattern_of_.size(); }
    std::size_t pattern_of(NodeId n) const { return pattern_of_.at(n); }

private:
    std::vector<std::vector<NodeId>> patterns_;
    std::vector<NodePair> noise_links_;
    std::vector<std::size_t> pattern_of_;
};

struct Presentation {
    std::vector<NodeId> nodes;  // sampling order
    std::size_t source_pattern = 0;
    std::optional<NodePair> used_noise_link;

    bool operator==(const Presentation&) const = default;
};

Ontology generate_ontology(const ExperimentConfig& config, Rng& rng);

/// One stimulus: k ~ U{1..max_presented} distinct nodes from a uniformly
/// chosen pattern. With probability noise_prob one noise link is drawn
/// uniformly; if it touches a picked node its cross-pattern endpoint is
/// appended.
Presentation sample_presentation(const Ontology& ontology, const ExperimentConfig& config, Rng& rng);

ClusterSet ground_truth_partition(const Ontology& ontology);

}  // namespace cvnet
