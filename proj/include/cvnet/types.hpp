#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

#include "json.hpp"

namespace cvnet {

using NodeId = std::uint32_t;

/// Unordered node pair, stored with first < second.
struct NodePair {
    NodeId first = 0;
    NodeId second = 0;

    NodePair() = default;
    NodePair(NodeId a, NodeId b) : first(a < b ? a : b), second(a < b ? b : a) {}

    bool touches(NodeId n) const { return first == n || second == n; }
    NodeId other(NodeId n) const { return first == n ? second : first; }

    auto operator<=>(const NodePair&) const = default;
};

/// Disjoint node sets in canonical order: members ascending, clusters
/// ordered by smallest member, no empty clusters.
class ClusterSet {
public:
    ClusterSet() = default;
    explicit ClusterSet(std::vector<std::vector<NodeId>> clusters);

    const std::vector<std::vector<NodeId>>& clusters() const { return clusters_; }
    std::size_t size() const { return clusters_.size(); }
    bool empty() const { return clusters_.empty(); }

    std::size_t singleton_count() const;
    std::size_t non_singleton_count() const { return size() - singleton_count(); }
    std::vector<NodeId> nodes() const;

    bool operator==(const ClusterSet&) const = default;

private:
    std::vector<std::vector<NodeId>> clusters_;
};

nlohmann::json to_json(const ClusterSet& cs);
ClusterSet cluster_set_from_json(const nlohmann::json& j);

/// Connected components over `nodes` given undirected edges. Edges whose
/// endpoints are outside `nodes` pull them in.
ClusterSet components(const std::vector<NodeId>& nodes, const std::vector<NodePair>& edges);

}  // namespace cvnet
