#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "cvnet/ontology.hpp"
#include "cvnet/types.hpp"

namespace cvnet {

struct GridOptions {
    /// Minimum raw co-occurrence for j to be considered an associate of i.
    std::uint32_t min_support = 2;
    /// Associations followed per node, best first; 0 follows all candidates.
    std::size_t associates = 1;
    /// Keep i -> j only when i ranks within j's first `reciprocal_rank`
    /// associates; 0 disables the check.
    std::size_t reciprocal_rank = 7;
};

/// Dense symmetric co-occurrence grid. Nodes are characterised by their
/// count columns and compared by cosine similarity.
class FrequencyGrid {
public:
    explicit FrequencyGrid(std::size_t node_count = 0);

    void record(const Presentation& presentation);

    std::uint32_t count(NodeId a, NodeId b) const { return counts_.at(index(a, b)); }
    std::size_t node_count() const { return n_; }
    const std::set<NodeId>& seen() const { return seen_; }

    /// Cosine similarity of the count columns of a and b (0 for an empty column).
    double similarity(NodeId a, NodeId b) const;

    /// Seen j != node with count >= min_support, ordered by similarity desc,
    /// then raw count desc, then id asc. Throws for an unseen node.
    std::vector<NodeId> ranked_associates(NodeId node, std::uint32_t min_support) const;
    std::optional<NodeId> best_associate(NodeId node, std::uint32_t min_support) const;

    ClusterSet clusters(const GridOptions& options = {}) const;

    bool operator==(const FrequencyGrid&) const = default;

private:
    std::size_t index(NodeId a, NodeId b) const;

    std::size_t n_ = 0;
    std::vector<std::uint32_t> counts_;
    std::set<NodeId> seen_;
};

}  // namespace cvnet
