#include "cvnet/types.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cvnet {

ClusterSet::ClusterSet(std::vector<std::vector<NodeId>> clusters) {
    std::erase_if(clusters, [](const auto& c) { return c.empty(); });
    for (auto& c : clusters) {
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(c.begin(), c.end()) != c.end())
            throw std::invalid_argument("cluster contains duplicate node");
    }
    std::sort(clusters.begin(), clusters.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<NodeId> all;
    for (const auto& c : clusters) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("clusters are not disjoint");
    clusters_ = std::move(clusters);
}

std::size_t ClusterSet::singleton_count() const {
    return static_cast<std::size_t>(
        std::count_if(clusters_.begin(), clusters_.end(), [](const auto& c) { return c.size() == 1; }));
}

std::vector<NodeId> ClusterSet::nodes() const {
    std::vector<NodeId> out;
    for (const auto& c : clusters_) out.insert(out.end(), c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

nlohmann::json to_json(const ClusterSet& cs) {
    auto j = nlohmann::json::array();
    for (const auto& c : cs.clusters()) j.push_back(c);
    return j;
}

ClusterSet cluster_set_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("cluster set JSON must be an array");
    std::vector<std::vector<NodeId>> clusters;
    for (const auto& c : j) clusters.push_back(c.get<std::vector<NodeId>>());
    return ClusterSet(std::move(clusters));
}

namespace {

struct DisjointSets {
    std::map<NodeId, NodeId> parent;

    NodeId find(NodeId x) {
        auto [it, inserted] = parent.try_emplace(x, x);
        if (it->second == x) return x;
        NodeId root = find(it->second);
        parent[x] = root;
        return root;
    }
    void unite(NodeId a, NodeId b) {
        NodeId ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
};

}  // namespace

ClusterSet components(const std::vector<NodeId>& nodes, const std::vector<NodePair>& edges) {
    DisjointSets ds;
    for (NodeId n : nodes) ds.find(n);
    for (const auto& e : edges) ds.unite(e.first, e.second);
    std::map<NodeId, std::vector<NodeId>> groups;
    for (const auto& [n, _] : ds.parent) groups[ds.find(n)].push_back(n);
    std::vector<std::vector<NodeId>> out;
    out.reserve(groups.size());
    for (auto& [_, members] : groups) out.push_back(std::move(members));
    return ClusterSet(std::move(out));
}

}  // namespace cvnet
