#include "cvnet/hebb_sync.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

namespace cvnet {

double firing_rate(double length, double base) {
    if (!(length > 0.0)) throw std::invalid_argument("link length must be positive");
    if (!(base > 0.0)) throw std::invalid_argument("rate base must be positive");
    return std::min(1.0, base / length);
}

SpatialNetwork::SpatialNetwork(std::size_t n)
    : n_(n), lengths_(n * n, kNoLink), weights_(n * n, 0.0), timers_(n, 0), phase_(n, 0.0) {}

std::size_t SpatialNetwork::at(NodeId a, NodeId b) const {
    if (a >= n_ || b >= n_) throw std::out_of_range("neuron id " + std::to_string(std::max(a, b)) + " out of range");
    return static_cast<std::size_t>(a) * n_ + b;
}

void SpatialNetwork::set_link(NodeId a, NodeId b, double length) {
    if (a == b) throw std::invalid_argument("self links are not allowed");
    if (!(length > 0.0)) throw std::invalid_argument("link length must be positive");
    lengths_[at(a, b)] = lengths_[at(b, a)] = length;
}

std::vector<FiringEvent> SpatialNetwork::step(const std::map<NodeId, double>& stimulus, std::uint64_t t,
                                              const SyncParams& params, std::mt19937_64& rng) {
    if (params.alpha < 0.0 || params.beta < 0.0) throw std::invalid_argument("alpha and beta must be >= 0");

    std::vector<double> input(n_, 0.0);
    for (const auto& [id, x] : stimulus) {
        if (!(x >= 0.0)) throw std::invalid_argument("stimulus must be non-negative");
        input.at(id) = x;
    }

    std::vector<bool> fired(n_, false);
    std::vector<FiringEvent> events;
    for (const auto& [i, x] : stimulus) {
        if (x <= 0.0) continue;
        double threshold = params.fire_threshold;
        if (timers_[i] > 0) threshold *= params.depolarised_factor;

        double nearest = kNoLink;
        for (const auto& [j, y] : stimulus)
            if (j != i && y > 0.0) nearest = std::min(nearest, length(i, j));

        double p = 0.0;
        if (x >= threshold && nearest != kNoLink) p = std::min(1.0, firing_rate(nearest, params.base) * x);

        if (params.deterministic) {
            phase_[i] += p;
            if (phase_[i] >= 1.0 - 1e-9) {
                phase_[i] -= 1.0;
                fired[i] = true;
            }
        } else {
            fired[i] = std::bernoulli_distribution(p)(rng);
        }
        if (fired[i]) events.push_back({i, t});
    }

    for (auto& timer : timers_)
        if (timer > 0) --timer;

    for (NodeId i = 0; i < n_; ++i) {
        for (NodeId j = i + 1; j < n_; ++j) {
            if (!linked(i, j) || (!fired[i] && !fired[j])) continue;
            double w = weights_[at(i, j)];
            if (fired[i] && fired[j]) {
                w += params.alpha * input[i] * input[j];
                timers_[i] = timers_[j] = params.t_ltp;
            } else {
                w = std::max(0.0, w - params.beta * (fired[i] ? input[i] : input[j]));
            }
            weights_[at(i, j)] = weights_[at(j, i)] = w;
        }
    }
    return events;
}

void SpatialNetwork::attend(const std::set<NodeId>& group, double d_min) {
    if (group.empty()) throw std::invalid_argument("attention group must be non-empty");
    if (!(d_min > 0.0)) throw std::invalid_argument("d_min must be positive");
    for (NodeId a : group) {
        for (NodeId b : group) {
            if (a < b && linked(a, b)) {
                const double l = length(a, b);
                const double halved = l <= d_min ? l : std::max(d_min, l / 2.0);
                lengths_[at(a, b)] = lengths_[at(b, a)] = halved;
            }
        }
    }
}

std::vector<double> SpatialNetwork::graded_scene(const std::set<NodeId>& focus, double base, double d_min) const {
    if (!(base > 0.0) || !(d_min > 0.0)) throw std::invalid_argument("base and d_min must be positive");
    std::vector<double> dist(n_, kNoLink);
    using Item = std::pair<double, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (NodeId f : focus) {
        at(f, f);
        dist[f] = 0.0;
        queue.emplace(0.0, f);
    }
    while (!queue.empty()) {
        auto [d, u] = queue.top();
        queue.pop();
        if (d > dist[u]) continue;
        for (NodeId v = 0; v < n_; ++v) {
            const double len = lengths_[at(u, v)];
            if (len != kNoLink && d + len < dist[v]) {
                dist[v] = d + len;
                queue.emplace(dist[v], v);
            }
        }
    }
    std::vector<double> strength(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
        if (dist[i] != kNoLink) strength[i] = base / std::max(d_min, dist[i]);
    return strength;
}

nlohmann::json SpatialNetwork::snapshot() const {
    auto lengths = nlohmann::json::array();
    auto weights = nlohmann::json::array();
    for (std::size_t i = 0; i < n_; ++i) {
        auto lrow = nlohmann::json::array();
        auto wrow = nlohmann::json::array();
        for (std::size_t j = 0; j < n_; ++j) {
            const double len = lengths_[i * n_ + j];
            lrow.push_back(len == kNoLink ? nlohmann::json(nullptr) : nlohmann::json(len));
            wrow.push_back(weights_[i * n_ + j]);
        }
        lengths.push_back(std::move(lrow));
        weights.push_back(std::move(wrow));
    }
    return {{"n", n_}, {"lengths", lengths}, {"weights", weights}, {"ltp_timers", timers_}};
}

namespace {

std::map<NodeId, std::vector<std::uint64_t>> firing_times(const std::vector<FiringEvent>& events) {
    std::map<NodeId, std::vector<std::uint64_t>> times;
    for (const auto& e : events) times[e.neuron].push_back(e.time);
    for (auto& [_, ts] : times) {
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    }
    return times;
}

// Firings in `from` that have a partner in `to` at most `window` steps away.
std::size_t matched(const std::vector<std::uint64_t>& from, const std::vector<std::uint64_t>& to, std::size_t window) {
    std::size_t n = 0;
    for (auto t : from) {
        const auto lo = t >= window ? t - window : 0;
        auto it = std::lower_bound(to.begin(), to.end(), lo);
        if (it != to.end() && *it <= t + window) ++n;
    }
    return n;
}

}  // namespace

std::size_t co_fire_count(const std::vector<FiringEvent>& events, NodeId a, NodeId b, std::size_t window) {
    auto times = firing_times(events);
    if (!times.contains(a) || !times.contains(b)) return 0;
    return std::min(matched(times[a], times[b], window), matched(times[b], times[a], window));
}

ClusterSet bind_groups(const std::vector<FiringEvent>& events, const BindOptions& options) {
    const auto times = firing_times(events);
    std::vector<NodeId> neurons;
    for (const auto& [n, _] : times) neurons.push_back(n);

    std::vector<NodePair> edges;
    for (std::size_t x = 0; x < neurons.size(); ++x) {
        for (std::size_t y = x + 1; y < neurons.size(); ++y) {
            const auto& ta = times.at(neurons[x]);
            const auto& tb = times.at(neurons[y]);
            const auto co = std::min(matched(ta, tb, options.window), matched(tb, ta, options.window));
            const auto busier = std::max(ta.size(), tb.size());
            if (co >= options.bind_min &&
                static_cast<double>(co) >= options.min_sync_fraction * static_cast<double>(busier))
                edges.emplace_back(neurons[x], neurons[y]);
        }
    }
    return components(neurons, edges);
}

}  // namespace cvnet
