#include "cvnet/freq_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cvnet {

FrequencyGrid::FrequencyGrid(std::size_t node_count) : n_(node_count), counts_(node_count * node_count, 0) {}

std::size_t FrequencyGrid::index(NodeId a, NodeId b) const {
    if (a >= n_ || b >= n_) throw std::out_of_range("node id outside frequency grid");
    return static_cast<std::size_t>(a) * n_ + b;
}

void FrequencyGrid::record(const Presentation& presentation) {
    const auto& nodes = presentation.nodes;
    if (nodes.empty()) throw std::invalid_argument("presentation has no nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        index(nodes[i], nodes[i]);
        seen_.insert(nodes[i]);
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            ++counts_[index(nodes[i], nodes[j])];
            ++counts_[index(nodes[j], nodes[i])];
        }
    }
}

double FrequencyGrid::similarity(NodeId a, NodeId b) const {
    index(a, b);
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t k = 0; k < n_; ++k) {
        const double x = counts_[k * n_ + a];
        const double y = counts_[k * n_ + b];
        dot += x * y;
        na += x * x;
        nb += y * y;
    }
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

std::vector<NodeId> FrequencyGrid::ranked_associates(NodeId node, std::uint32_t min_support) const {
    if (!seen_.contains(node))
        throw std::invalid_argument("node " + std::to_string(node) + " has not been seen by the grid");
    struct Candidate {
        NodeId id;
        double sim;
        std::uint32_t count;
    };
    std::vector<Candidate> cands;
    for (NodeId j : seen_) {
        if (j == node) continue;
        const auto c = count(node, j);
        if (c >= min_support && c > 0) cands.push_back({j, similarity(node, j), c});
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
        if (x.sim != y.sim) return x.sim > y.sim;
        if (x.count != y.count) return x.count > y.count;
        return x.id < y.id;
    });
    std::vector<NodeId> out;
    out.reserve(cands.size());
    for (const auto& c : cands) out.push_back(c.id);
    return out;
}

std::optional<NodeId> FrequencyGrid::best_associate(NodeId node, std::uint32_t min_support) const {
    auto ranked = ranked_associates(node, min_support);
    if (ranked.empty()) return std::nullopt;
    return ranked.front();
}

ClusterSet FrequencyGrid::clusters(const GridOptions& options) const {
    if (options.min_support < 1) throw std::invalid_argument("min_support must be >= 1");
    std::vector<std::vector<NodeId>> ranking(n_);
    for (NodeId i : seen_) ranking[i] = ranked_associates(i, options.min_support);

    auto within = [](const std::vector<NodeId>& r, std::size_t limit, NodeId x) {
        auto end = limit == 0 ? r.end() : r.begin() + static_cast<std::ptrdiff_t>(std::min(limit, r.size()));
        return std::find(r.begin(), end, x) != end;
    };

    std::vector<NodePair> edges;
    for (NodeId i : seen_) {
        const auto& r = ranking[i];
        const auto take = options.associates == 0 ? r.size() : std::min(options.associates, r.size());
        for (std::size_t k = 0; k < take; ++k) {
            const NodeId j = r[k];
            if (options.reciprocal_rank == 0 || within(ranking[j], options.reciprocal_rank, i))
                edges.emplace_back(i, j);
        }
    }
    return components({seen_.begin(), seen_.end()}, edges);
}

}  // namespace cvnet
