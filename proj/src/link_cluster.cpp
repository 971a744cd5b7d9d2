#include "cvnet/link_cluster.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cvnet {

void LinkStore::observe(const Presentation& presentation) {
    const auto& nodes = presentation.nodes;
    if (nodes.empty()) throw std::invalid_argument("presentation has no nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        seen_.insert(nodes[i]);
        for (std::size_t j = i + 1; j < nodes.size(); ++j) weights_[NodePair(nodes[i], nodes[j])] += 1.0;
    }
    ++observations_;
}

void LinkStore::decay(double factor) {
    if (!(factor > 0.0 && factor <= 1.0)) throw std::invalid_argument("decay factor must lie in (0, 1]");
    if (factor == 1.0) return;
    for (auto it = weights_.begin(); it != weights_.end();) {
        it->second *= factor;
        it = it->second < 0.5 ? weights_.erase(it) : std::next(it);
    }
}

ClusterSet LinkStore::clusters(double threshold) const {
    if (!(threshold >= 1.0)) throw std::invalid_argument("link threshold must be >= 1");
    std::vector<NodePair> edges;
    for (const auto& [pair, w] : weights_)
        if (w >= threshold) edges.push_back(pair);
    return components({seen_.begin(), seen_.end()}, edges);
}

double LinkStore::weight(NodeId a, NodeId b) const {
    if (a == b) return 0.0;
    auto it = weights_.find(NodePair(a, b));
    return it == weights_.end() ? 0.0 : it->second;
}

std::size_t default_link_threshold(std::size_t observations) {
    // ceil(obs / 40) in integers; 0.025 has no exact binary form
    return std::max<std::size_t>(2, (observations + 39) / 40);
}

}  // namespace cvnet
