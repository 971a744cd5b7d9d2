#pragma once

#include <cstddef>
#include <map>
#include <set>

#include "cvnet/ontology.hpp"
#include "cvnet/types.hpp"

namespace cvnet {

/// Value-based linking: unit co-occurrence increments per presented pair,
/// clustered by thresholded connected components.
class LinkStore {
public:
    void observe(const Presentation& presentation);

    /// Multiply every weight by `factor` in (0, 1]; entries below 0.5 are dropped.
    void decay(double factor);

    /// Components of the graph of pairs with weight >= threshold. Seen but
    /// unlinked nodes come back as singletons.
    ClusterSet clusters(double threshold) const;

    double weight(NodeId a, NodeId b) const;
    const std::map<NodePair, double>& weights() const { return weights_; }
    const std::set<NodeId>& seen() const { return seen_; }
    std::size_t observation_count() const { return observations_; }

    bool operator==(const LinkStore&) const = default;

private:
    std::map<NodePair, double> weights_;
    std::set<NodeId> seen_;
    std::size_t observations_ = 0;
};

/// max(2, ceil(0.025 * observations)).
std::size_t default_link_threshold(std::size_t observations);

}  // namespace cvnet
