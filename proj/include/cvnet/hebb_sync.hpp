#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "json.hpp"
#include "cvnet/types.hpp"

namespace cvnet {

inline constexpr double kNoLink = std::numeric_limits<double>::infinity();

struct SyncParams {
    double base = 1.0;             // rate numerator: rate = base / length
    double alpha = 0.1;            // potentiation rate
    double beta = 0.05;            // depression rate
    int t_ltp = 50;                // steps a potentiated neuron stays depolarised
    double fire_threshold = 0.0;   // minimum input to be eligible to fire
    double depolarised_factor = 0.5;
    double d_min = 0.25;           // shortest allowed link length
    /// Regular firing from a phase accumulator instead of Bernoulli draws;
    /// equal rates then give identical spike times.
    bool deterministic = false;
};

struct FiringEvent {
    NodeId neuron = 0;
    std::uint64_t time = 0;

    auto operator<=>(const FiringEvent&) const = default;
};

/// Neurons in space: symmetric link lengths carry the stored features,
/// Hebbian weights record co-firing, LTP timers hold neurons depolarised.
class SpatialNetwork {
public:
    explicit SpatialNetwork(std::size_t n = 0);

    std::size_t size() const { return n_; }
    void set_link(NodeId a, NodeId b, double length);
    bool linked(NodeId a, NodeId b) const { return length(a, b) != kNoLink; }
    double length(NodeId a, NodeId b) const { return lengths_.at(at(a, b)); }
    double weight(NodeId a, NodeId b) const { return weights_.at(at(a, b)); }
    int ltp_timer(NodeId n) const { return timers_.at(n); }

    /// One discrete step. Stimulated neurons fire with probability
    /// min(1, rate(nearest stimulated neighbour) * input); co-firing linked
    /// pairs gain alpha*x_i*x_j and start LTP, one-sided firing loses
    /// beta*x_fired (floored at 0). Returns the events of step t.
    std::vector<FiringEvent> step(const std::map<NodeId, double>& stimulus, std::uint64_t t,
                                  const SyncParams& params, std::mt19937_64& rng);

    /// Halve every link inside `group`, never below d_min; links already
    /// at or under d_min are left alone.
    void attend(const std::set<NodeId>& group, double d_min);

    /// base / max(d_min, shortest path to the focus); 0 when unreachable.
    std::vector<double> graded_scene(const std::set<NodeId>& focus, double base, double d_min) const;

    nlohmann::json snapshot() const;

private:
    std::size_t at(NodeId a, NodeId b) const;

    std::size_t n_;
    std::vector<double> lengths_;
    std::vector<double> weights_;
    std::vector<int> timers_;
    std::vector<double> phase_;
};

/// min(1, base / length); rejects non-positive length or base.
double firing_rate(double length, double base);

struct BindOptions {
    std::size_t window = 0;        // max step distance counted as "together"
    std::size_t bind_min = 3;      // minimum co-fire count
    double min_sync_fraction = 0.5;  // co-fires / firings of the busier neuron
};

/// Co-fire count of a and b: firings of the less active side with a
/// partner firing within the window (symmetric).
std::size_t co_fire_count(const std::vector<FiringEvent>& events, NodeId a, NodeId b, std::size_t window);

/// Groups neurons that repeatedly fire together. Every neuron that fired
/// appears in the result; unbound ones as singletons.
ClusterSet bind_groups(const std::vector<FiringEvent>& events, const BindOptions& options = {});

}  // namespace cvnet
