// cvnet: concept-value network experiments from the command line.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "cvnet/hebb_sync.hpp"
#include "cvnet/io.hpp"
#include "cvnet/neuron.hpp"
#include "cvnet/runner.hpp"

namespace fs = std::filesystem;
using namespace cvnet;

namespace {

struct ExperimentFlags {
    ExperimentConfig config;
    ClustererOptions clusterers;
    std::size_t link_threshold = 0;  // 0 = automatic
    std::string out = "cvnet-out";
};

void add_experiment_flags(CLI::App* cmd, ExperimentFlags& f) {
    cmd->add_option("--patterns", f.config.num_patterns, "Number of ground-truth patterns")->capture_default_str();
    cmd->add_option("--instances", f.config.instances_per_pattern, "Nodes per pattern")->capture_default_str();
    cmd->add_option("--noise-links", f.config.num_noise_links, "Inter-pattern noise links")->capture_default_str();
    cmd->add_option("--max-presented", f.config.max_presented, "Largest presentation drawn from a pattern")
        ->capture_default_str();
    cmd->add_option("--noise-prob", f.config.noise_prob, "Chance per presentation of drawing a noise link")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--iterations", f.config.iterations, "Presentations per run")->capture_default_str();
    cmd->add_option("--link-threshold", f.link_threshold, "Link weight threshold (0 = max(2, ceil(iterations/40)))")
        ->capture_default_str();
    cmd->add_option("--min-support", f.clusterers.grid.min_support, "Grid: minimum raw co-occurrence")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--grid-associates", f.clusterers.grid.associates, "Grid: associations per node (0 = all)")
        ->capture_default_str();
    cmd->add_option("--reciprocal-rank", f.clusterers.grid.reciprocal_rank, "Grid: reciprocity rank (0 = off)")
        ->capture_default_str();
    cmd->add_option("--overlap-min", f.clusterers.overlap_min, "Shared nodes needed to merge clusters")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--out", f.out, "Output directory")->capture_default_str();
}

void finish_flags(ExperimentFlags& f) {
    if (f.link_threshold > 0) f.clusterers.link_threshold = f.link_threshold;
}

int cmd_run(ExperimentFlags f) {
    finish_flags(f);
    const auto run = run_experiment(f.config, f.clusterers);
    auto json = to_json(run.score);
    json["config"] = to_json(f.config);
    json["clusterers"] = to_json(f.clusterers);
    write_run_outputs(f.out, run, json);
    std::cout << json.dump(2) << '\n';
    return 0;
}

int cmd_sweep(ExperimentFlags f, std::size_t seed_count, std::uint64_t first_seed, unsigned threads) {
    finish_flags(f);
    std::vector<std::uint64_t> seeds(seed_count);
    std::iota(seeds.begin(), seeds.end(), first_seed);
    const auto report = sweep(f.config, seeds, f.clusterers, threads);
    const auto json = to_json(report);
    fs::create_directories(f.out);
    std::ofstream(fs::path(f.out) / "report.json") << json.dump(2) << '\n';
    std::cout << json["aggregate"].dump(2) << '\n';
    return 0;
}

int cmd_neuron_demo(std::size_t steps, std::uint64_t seed, double rho, const std::string& out) {
    std::vector<OutLink> links;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (NodeId t = 0; t < 8; ++t) links.push_back({t, unit(rng)});
    BandedNeuron neuron({}, links);

    fs::create_directories(out);
    std::ofstream trace(fs::path(out) / "neuron_trace.csv");
    trace << "step,input,threshold,activity,fired,band,strength,targets,reinforcement\n";
    // slow ramp with jitter so every band and both adaptation directions show up
    for (std::size_t s = 0; s < steps; ++s) {
        const double phase = static_cast<double>(s) / static_cast<double>(std::max<std::size_t>(1, steps));
        const std::vector<double> inputs{std::abs(std::sin(phase * 6.283)) * 1.2, 0.4 * unit(rng)};
        const double input = aggregate(inputs);
        const auto signal = neuron.fire(input);
        trace << s << ',' << input << ',' << neuron.threshold() << ',' << neuron.activity() << ','
              << (signal ? 1 : 0) << ',';
        if (signal) {
            trace << band_index(input, neuron.params().band_bounds) << ',' << signal->strength << ',';
            for (std::size_t k = 0; k < signal->targets.size(); ++k) trace << (k ? ";" : "") << signal->targets[k];
            trace << ',' << (signal->reinforcement ? 1 : 0) << '\n';
        } else {
            trace << ",,,\n";
        }
        neuron.adapt(signal.has_value(), rho);
    }
    std::ofstream(fs::path(out) / "neuron_snapshot.json") << neuron.snapshot().dump(2) << '\n';
    std::cout << neuron.snapshot().dump(2) << '\n';
    return 0;
}

int cmd_sync_demo(std::size_t steps, std::uint64_t seed, bool deterministic, std::size_t window, const std::string& out) {
    // source 0; neurons 1 and 2 equidistant from it; neuron 3 ten times further
    SpatialNetwork net(4);
    net.set_link(0, 1, 1.0);
    net.set_link(0, 2, 1.0);
    net.set_link(1, 2, 2.0);
    net.set_link(0, 3, 10.0);
    SyncParams params;
    params.deterministic = deterministic;
    const std::map<NodeId, double> stimulus{{0, 1.0}, {1, 1.0}, {2, 1.0}, {3, 1.0}};

    std::mt19937_64 rng(seed);
    std::vector<FiringEvent> events;
    for (std::size_t t = 0; t < steps; ++t) {
        auto fired = net.step(stimulus, t, params, rng);
        events.insert(events.end(), fired.begin(), fired.end());
    }
    net.attend({1, 2}, params.d_min);

    BindOptions bind_opts;
    bind_opts.window = window;
    const auto groups = bind_groups(events, bind_opts);

    fs::create_directories(out);
    {
        std::ofstream trace(fs::path(out) / "events.csv");
        write_events_csv(trace, events);
    }
    std::ofstream(fs::path(out) / "network.json") << net.snapshot().dump(2) << '\n';
    nlohmann::json summary{{"events", events.size()},
                           {"bound_groups", to_json(groups)},
                           {"graded_scene_from_1", net.graded_scene({1}, params.base, params.d_min)}};
    std::cout << summary.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cvnet - concept-value network simulations and the dual-clusterer ontology experiment"};
    app.require_subcommand(1);

    ExperimentFlags run_flags;
    app.set_config("--config", "", "INI/TOML file; [run] and [sweep] sections set subcommand flags, command line wins");
    auto* run = app.add_subcommand("run", "One seeded ontology-reconstruction run");
    add_experiment_flags(run, run_flags);
    run->add_option("--seed", run_flags.config.rng_seed, "RNG seed")->capture_default_str();

    ExperimentFlags sweep_flags;
    std::size_t seed_count = 20;
    std::uint64_t first_seed = 1;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    auto* sw = app.add_subcommand("sweep", "Many seeds, aggregated recovery statistics");
    add_experiment_flags(sw, sweep_flags);
    sw->add_option("--seeds", seed_count, "Number of seeds")->check(CLI::PositiveNumber)->capture_default_str();
    sw->add_option("--first-seed", first_seed, "Seeds run from here upwards")->capture_default_str();
    sw->add_option("--threads", threads, "Worker threads")->capture_default_str();

    std::size_t neuron_steps = 200;
    std::uint64_t neuron_seed = 1;
    double rho = 0.9;
    std::string neuron_out = "cvnet-neuron";
    auto* nd = app.add_subcommand("neuron-demo", "Banded neuron trace under a ramping input");
    nd->add_option("--steps", neuron_steps)->capture_default_str();
    nd->add_option("--seed", neuron_seed)->capture_default_str();
    nd->add_option("--rho", rho, "Activity decay")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    nd->add_option("--out", neuron_out)->capture_default_str();

    std::size_t sync_steps = 1000;
    std::uint64_t sync_seed = 1;
    bool deterministic = false;
    std::size_t window = 0;
    std::string sync_out = "cvnet-sync";
    auto* sd = app.add_subcommand("sync-demo", "Hebbian synchrony and binding on a small spatial network");
    sd->add_option("--steps", sync_steps)->capture_default_str();
    sd->add_option("--seed", sync_seed)->capture_default_str();
    sd->add_flag("--deterministic", deterministic, "Regular firing instead of Bernoulli draws");
    sd->add_option("--window", window, "Binding window in steps")->capture_default_str();
    sd->add_option("--out", sync_out)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return cmd_run(run_flags);
        if (*sw) return cmd_sweep(sweep_flags, seed_count, first_seed, threads);
        if (*nd) return cmd_neuron_demo(neuron_steps, neuron_seed, rho, neuron_out);
        if (*sd) return cmd_sync_demo(sync_steps, sync_seed, deterministic, window, sync_out);
    } catch (const std::exception& e) {
        std::cerr << "cvnet: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
