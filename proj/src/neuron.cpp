#include "cvnet/neuron.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cvnet {

double aggregate(std::span<const double> inputs) {
    for (double x : inputs)
        if (!(x >= 0.0)) throw std::invalid_argument("neuron inputs must be non-negative");
    return std::accumulate(inputs.begin(), inputs.end(), 0.0);
}

std::size_t band_index(double input, std::span<const double> bounds) {
    if (!(input >= 0.0)) throw std::invalid_argument("band input must be non-negative");
    return static_cast<std::size_t>(std::upper_bound(bounds.begin(), bounds.end(), input) - bounds.begin());
}

std::size_t fan_out(std::size_t links, std::size_t band, std::size_t bands) {
    if (bands == 0 || band >= bands) throw std::invalid_argument("band out of range");
    // ceil(links * (bands - band) / bands) without floating point
    const std::size_t k = (links * (bands - band) + bands - 1) / bands;
    return std::max<std::size_t>(1, k);
}

BandedNeuron::BandedNeuron(NeuronParams params, std::vector<OutLink> out_links)
    : params_(std::move(params)), out_links_(std::move(out_links)), threshold_(params_.theta_max) {
    const auto& b = params_.band_bounds;
    const auto& g = params_.band_gains;
    if (!(params_.theta_min > 0.0 && params_.theta_min <= params_.theta_max))
        throw std::invalid_argument("need 0 < theta_min <= theta_max");
    if (g.size() != b.size() + 1) throw std::invalid_argument("band_gains must have one more entry than band_bounds");
    if (std::adjacent_find(b.begin(), b.end(), std::greater_equal<>()) != b.end())
        throw std::invalid_argument("band_bounds must be strictly increasing");
    if (!std::is_sorted(g.begin(), g.end())) throw std::invalid_argument("band_gains must be non-decreasing");
    if (g.front() < 0.0) throw std::invalid_argument("band_gains must be non-negative");
}

std::optional<OutputSignal> BandedNeuron::fire(double input) const {
    if (!(input >= 0.0)) throw std::invalid_argument("neuron input must be non-negative");
    if (input < threshold_) return std::nullopt;

    const auto band = band_index(input, params_.band_bounds);
    OutputSignal out;
    out.strength = params_.band_gains[band];
    out.reinforcement = band == 0;

    std::vector<OutLink> ranked = out_links_;
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const OutLink& x, const OutLink& y) { return x.strength > y.strength; });
    const auto k = out.reinforcement || ranked.empty() ? ranked.size()
                                                       : fan_out(ranked.size(), band, band_count());
    for (std::size_t i = 0; i < k; ++i) out.targets.push_back(ranked[i].target);
    std::sort(out.targets.begin(), out.targets.end());
    return out;
}

void BandedNeuron::adapt(bool fired, double rho) {
    if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("rho must lie in (0, 1)");
    activity_ = rho * activity_ + (1.0 - rho) * (fired ? 1.0 : 0.0);
    update_threshold();
}

void BandedNeuron::set_activity(double activity) {
    if (!(activity >= 0.0 && activity <= 1.0)) throw std::invalid_argument("activity must lie in [0, 1]");
    activity_ = activity;
    update_threshold();
}

void BandedNeuron::update_threshold() {
    const double span = params_.theta_max - params_.theta_min;
    threshold_ = std::clamp(params_.theta_max - span * activity_, params_.theta_min, params_.theta_max);
}

nlohmann::json BandedNeuron::snapshot() const {
    nlohmann::json links = nlohmann::json::array();
    for (const auto& l : out_links_) links.push_back({{"target", l.target}, {"strength", l.strength}});
    return {{"threshold", threshold_},
            {"activity", activity_},
            {"theta_min", params_.theta_min},
            {"theta_max", params_.theta_max},
            {"band_bounds", params_.band_bounds},
            {"band_gains", params_.band_gains},
            {"out_links", links}};
}

}  // namespace cvnet
