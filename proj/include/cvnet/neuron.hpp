#pragma once

#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "cvnet/types.hpp"

namespace cvnet {

struct OutLink {
    NodeId target = 0;
    double strength = 0.0;
};

struct OutputSignal {
    double strength = 0.0;
    std::vector<NodeId> targets;  // ascending
    bool reinforcement = false;   // weak-band broadcast to every out-link
};

struct NeuronParams {
    double theta_min = 0.1;
    double theta_max = 1.0;
    std::vector<double> band_bounds{0.5, 1.0, 1.5};
    std::vector<double> band_gains{0.25, 0.5, 0.75, 1.0};
};

/// Summed input signal.
double aggregate(std::span<const double> inputs);

/// Number of bounds <= input, i.e. half-open bands with boundaries going up.
std::size_t band_index(double input, std::span<const double> bounds);

/// Targets reached from `band` of `bands`: max(1, ceil(links * (1 - band/bands))).
std::size_t fan_out(std::size_t links, std::size_t band, std::size_t bands);

/// Simplified neuron with discrete output bands and an action potential
/// that drops as the neuron gets busier.
class BandedNeuron {
public:
    explicit BandedNeuron(NeuronParams params = {}, std::vector<OutLink> out_links = {});

    /// None below threshold. Band 0 broadcasts a reinforcement signal to
    /// every out-link; higher bands send a stronger signal to fewer,
    /// strongest-linked targets.
    std::optional<OutputSignal> fire(double input) const;

    /// activity <- rho*activity + (1-rho)*fired, then threshold follows
    /// activity linearly from theta_max (idle) down to theta_min (saturated).
    void adapt(bool fired, double rho);
    /// Overwrite activity (in [0, 1]) and re-derive the threshold.
    void set_activity(double activity);

    double threshold() const { return threshold_; }
    double activity() const { return activity_; }
    std::size_t band_count() const { return params_.band_gains.size(); }
    const NeuronParams& params() const { return params_; }
    const std::vector<OutLink>& out_links() const { return out_links_; }

    nlohmann::json snapshot() const;

private:
    void update_threshold();

    NeuronParams params_;
    std::vector<OutLink> out_links_;
    double threshold_;
    double activity_ = 0.0;
};

}  // namespace cvnet
