#include "cvnet/combiner.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>
#include <vector>

namespace cvnet {

namespace {

std::size_t overlap(const std::vector<NodeId>& x, const std::vector<NodeId>& y) {
    std::size_t n = 0;
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() && j != y.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else { ++n; ++i; ++j; }
    }
    return n;
}

std::vector<NodeId> set_union(const std::vector<NodeId>& x, const std::vector<NodeId>& y) {
    std::vector<NodeId> out;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

}  // namespace

ClusterSet combine(const ClusterSet& a, const ClusterSet& b, std::size_t overlap_min) {
    if (overlap_min < 1) throw std::invalid_argument("overlap_min must be >= 1");
    std::vector<std::vector<NodeId>> pool = a.clusters();
    pool.insert(pool.end(), b.clusters().begin(), b.clusters().end());

    for (bool merged = true; merged;) {
        merged = false;
        for (std::size_t i = 0; i < pool.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < pool.size(); ++j) {
                if (overlap(pool[i], pool[j]) >= overlap_min) {
                    pool[i] = set_union(pool[i], pool[j]);
                    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
                    merged = true;
                    break;
                }
            }
        }
    }

    // Residual sub-threshold overlaps: the largest holder keeps the node.
    std::map<NodeId, std::size_t> owner;
    for (std::size_t c = 0; c < pool.size(); ++c) {
        for (NodeId n : pool[c]) {
            auto [it, inserted] = owner.try_emplace(n, c);
            if (!inserted && pool[c].size() > pool[it->second].size()) it->second = c;
        }
    }
    std::vector<std::vector<NodeId>> out(pool.size());
    for (const auto& [n, c] : owner) out[c].push_back(n);
    return ClusterSet(std::move(out));
}

bool exact_match(const ClusterSet& result, const ClusterSet& truth) { return result == truth; }

double adjusted_rand_index(const ClusterSet& result, const ClusterSet& truth) {
    std::map<NodeId, std::pair<long, long>> labels;  // -1 = unassigned
    for (NodeId n : result.nodes()) labels[n] = {-1, -1};
    for (NodeId n : truth.nodes()) labels[n] = {-1, -1};
    const auto& rc = result.clusters();
    const auto& tc = truth.clusters();
    for (std::size_t c = 0; c < rc.size(); ++c)
        for (NodeId n : rc[c]) labels[n].first = static_cast<long>(c);
    for (std::size_t c = 0; c < tc.size(); ++c)
        for (NodeId n : tc[c]) labels[n].second = static_cast<long>(c);

    long fresh_r = static_cast<long>(rc.size());
    long fresh_t = static_cast<long>(tc.size());
    std::map<long, double> row, col;
    std::map<std::pair<long, long>, double> cell;
    for (auto& [n, lab] : labels) {
        if (lab.first < 0) lab.first = fresh_r++;
        if (lab.second < 0) lab.second = fresh_t++;
        row[lab.first] += 1;
        col[lab.second] += 1;
        cell[lab] += 1;
    }

    auto pairs = [](double k) { return k * (k - 1) / 2.0; };
    const double total = pairs(static_cast<double>(labels.size()));
    double index = 0, sum_r = 0, sum_t = 0;
    for (const auto& [_, k] : cell) index += pairs(k);
    for (const auto& [_, k] : row) sum_r += pairs(k);
    for (const auto& [_, k] : col) sum_t += pairs(k);
    if (total == 0) return 1.0;
    const double expected = sum_r * sum_t / total;
    const double max_index = 0.5 * (sum_r + sum_t);
    if (max_index == expected) return index == sum_r && index == sum_t ? 1.0 : 0.0;
    return (index - expected) / (max_index - expected);
}

}  // namespace cvnet
