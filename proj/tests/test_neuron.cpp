#include "doctest.h"

#include <cmath>
#include <random>

#include "cvnet/neuron.hpp"
#include "oracles.hpp"

using namespace cvnet;

namespace {

std::vector<OutLink> eight_links() {
    std::vector<OutLink> links;
    for (NodeId t = 0; t < 8; ++t) links.push_back({t, 0.1 * (t + 1)});  // target 7 strongest
    return links;
}

BandedNeuron primed(std::vector<OutLink> links = eight_links()) {
    BandedNeuron n({}, std::move(links));
    n.set_activity(1.0);  // threshold at theta_min
    return n;
}

}  // namespace

TEST_CASE("aggregate") {
    CHECK(aggregate({}) == 0.0);
    const std::vector<double> two{0.3, 0.7};
    CHECK(aggregate(two) == doctest::Approx(1.0));
    const std::vector<double> negative{0.5, -0.1};
    CHECK_THROWS_AS(aggregate(negative), std::invalid_argument);
}

TEST_CASE("aggregate matches a compensated sum on 1000 random inputs") {
    std::mt19937_64 rng(8);
    std::lognormal_distribution<double> dist(0.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> xs(1000);
        for (auto& x : xs) x = dist(rng);
        const double reference = oracle::compensated_sum(xs);
        CHECK(std::abs(aggregate(xs) - reference) <= 1e-9 * std::abs(reference));
    }
}

TEST_CASE("band index uses half-open bands") {
    const std::vector<double> bounds{1.0, 2.0};
    CHECK(band_index(0.0, bounds) == 0);
    CHECK(band_index(1.0, bounds) == 1);
    CHECK(band_index(1.999, bounds) == 1);
    CHECK(band_index(5.0, bounds) == 2);
    CHECK_THROWS(band_index(-1.0, bounds));
}

TEST_CASE("band index is monotone over a 10,000-point sweep") {
    const std::vector<double> bounds{0.5, 1.0, 1.5};
    std::size_t previous = 0;
    for (int i = 0; i <= 10000; ++i) {
        const auto b = band_index(i * 2.0 / 10000.0, bounds);
        CHECK(b >= previous);
        previous = b;
    }
    CHECK(previous == 3);
}

TEST_CASE("below threshold nothing fires") {
    BandedNeuron n({}, eight_links());
    CHECK(n.threshold() == doctest::Approx(1.0));
    CHECK_FALSE(n.fire(0.99).has_value());
    CHECK(n.fire(1.0).has_value());
}

TEST_CASE("band 0 broadcasts a reinforcement signal") {
    auto n = primed();
    auto s = n.fire(0.2);
    REQUIRE(s.has_value());
    CHECK(s->reinforcement);
    CHECK(s->strength == doctest::Approx(0.25));
    CHECK(s->targets.size() == 8);
}

TEST_CASE("top band reaches the two strongest links") {
    auto n = primed();
    auto s = n.fire(3.0);
    REQUIRE(s.has_value());
    CHECK_FALSE(s->reinforcement);
    CHECK(s->strength == doctest::Approx(1.0));
    CHECK(s->targets == std::vector<NodeId>{6, 7});
}

TEST_CASE("fan-out shrinks with band for every band and fan-out up to 16") {
    for (std::size_t bands = 1; bands <= 8; ++bands) {
        for (std::size_t links = 0; links <= 16; ++links) {
            std::size_t previous = links + 1;
            for (std::size_t band = 0; band < bands; ++band) {
                const auto k = fan_out(links, band, bands);
                const auto expected = std::max<std::size_t>(
                    1, static_cast<std::size_t>(std::ceil(static_cast<double>(links) *
                                                          (1.0 - static_cast<double>(band) / bands) - 1e-12)));
                CHECK(k == expected);
                CHECK(k <= previous);
                CHECK(k >= 1);
                previous = k;
            }
        }
    }
    CHECK(fan_out(8, 3, 4) == 2);
    CHECK(fan_out(8, 0, 4) == 8);
}

TEST_CASE("fired target count is non-increasing in input, strength non-decreasing") {
    auto n = primed();
    std::size_t last_targets = 9;
    double last_strength = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double input = 0.1 + i * 0.005;
        auto s = n.fire(input);
        REQUIRE(s.has_value());
        CHECK(s->targets.size() <= last_targets);
        CHECK(s->strength >= last_strength);
        last_targets = s->targets.size();
        last_strength = s->strength;
    }
}

TEST_CASE("adapt endpoints") {
    BandedNeuron n;
    n.set_activity(0.0);
    CHECK(n.threshold() == doctest::Approx(1.0));
    n.set_activity(1.0);
    CHECK(n.threshold() == doctest::Approx(0.1));
    CHECK_THROWS(n.adapt(true, 1.0));
    CHECK_THROWS(n.set_activity(1.5));
}

TEST_CASE("activity follows the geometric series for an alternating stream") {
    const double rho = 0.9;
    BandedNeuron n;
    for (int k = 0; k < 1000; ++k) n.adapt(k % 2 == 0, rho);
    // fired at even steps: a = (1-rho) * sum over odd j < 1000 of rho^j
    const double closed = rho * (1.0 - std::pow(rho, 1000)) / (1.0 + rho);
    CHECK(std::abs(n.activity() - closed) < 1e-6);
}

TEST_CASE("threshold stays in range and falls as activity rises under random adapt calls") {
    std::mt19937_64 rng(3);
    std::bernoulli_distribution coin(0.5);
    std::uniform_real_distribution<double> rho_dist(0.01, 0.99);
    BandedNeuron n;
    for (int i = 0; i < 10000; ++i) {
        const double before_activity = n.activity();
        const double before_threshold = n.threshold();
        n.adapt(coin(rng), rho_dist(rng));
        CHECK(n.threshold() >= 0.1);
        CHECK(n.threshold() <= 1.0);
        if (n.activity() > before_activity) CHECK(n.threshold() <= before_threshold);
        if (n.activity() < before_activity) CHECK(n.threshold() >= before_threshold);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS(BandedNeuron(NeuronParams{.band_bounds = {1.0, 1.0}, .band_gains = {0, 1, 2}}));
    CHECK_THROWS(BandedNeuron(NeuronParams{.band_bounds = {1.0}, .band_gains = {1.0, 0.5}}));
    CHECK_THROWS(BandedNeuron(NeuronParams{.band_bounds = {1.0}, .band_gains = {1.0}}));
    CHECK_THROWS(BandedNeuron(NeuronParams{.theta_min = 2.0, .theta_max = 1.0}));
}

TEST_CASE("snapshot") {
    auto snap = primed().snapshot();
    CHECK(snap["threshold"].get<double>() == doctest::Approx(0.1));
    CHECK(snap["out_links"].size() == 8);
    CHECK(snap["band_gains"].size() == 4);
}
