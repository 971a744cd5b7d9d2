#include "cvnet/runner.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "cvnet/combiner.hpp"
#include "cvnet/io.hpp"

namespace cvnet {

RunArtifacts run_experiment(const ExperimentConfig& config, const ClustererOptions& options) {
    config.validate();
    Rng rng(config.rng_seed);

    RunArtifacts run;
    run.ontology = generate_ontology(config, rng);
    run.truth = ground_truth_partition(run.ontology);
    run.grid = FrequencyGrid(run.ontology.node_count());
    run.presentations.reserve(config.iterations);
    for (std::size_t i = 0; i < config.iterations; ++i) {
        auto p = sample_presentation(run.ontology, config, rng);
        run.links.observe(p);
        run.grid.record(p);
        run.presentations.push_back(std::move(p));
    }

    const auto threshold = options.link_threshold.value_or(default_link_threshold(run.links.observation_count()));
    run.link_clusters = run.links.clusters(static_cast<double>(std::max<std::size_t>(1, threshold)));
    run.grid_clusters = run.grid.clusters(options.grid);
    run.combined = combine(run.link_clusters, run.grid_clusters, options.overlap_min);

    auto& s = run.score;
    s.seed = config.rng_seed;
    s.link_threshold = threshold;
    s.link_cluster_count = run.link_clusters.size();
    s.grid_cluster_count = run.grid_clusters.size();
    s.combined_count = run.combined.size();
    s.link_nonsingleton_count = run.link_clusters.non_singleton_count();
    s.grid_nonsingleton_count = run.grid_clusters.non_singleton_count();
    s.combined_nonsingleton_count = run.combined.non_singleton_count();
    s.grid_singleton_count = run.grid_clusters.singleton_count();
    // an empty run never counts as a recovery
    s.exact_match = !run.combined.empty() && exact_match(run.combined, run.truth);
    s.ari_link = adjusted_rand_index(run.link_clusters, run.truth);
    s.ari_grid = adjusted_rand_index(run.grid_clusters, run.truth);
    s.ari_combined = adjusted_rand_index(run.combined, run.truth);
    return run;
}

RunReport sweep(const ExperimentConfig& config, const std::vector<std::uint64_t>& seeds,
                const ClustererOptions& options, unsigned threads) {
    if (seeds.empty()) throw std::invalid_argument("sweep needs at least one seed");
    config.validate();

    RunReport report;
    report.config = config;
    report.options = options;
    report.records.resize(seeds.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < seeds.size(); i = next++) {
            auto c = config;
            c.rng_seed = seeds[i];
            report.records[i] = run_experiment(c, options).score;
        }
    };
    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(seeds.size()));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    const auto n = static_cast<double>(seeds.size());
    std::size_t matches = 0;
    for (const auto& r : report.records) {
        report.mean_link_count += static_cast<double>(r.link_cluster_count);
        report.mean_grid_count += static_cast<double>(r.grid_cluster_count);
        report.mean_combined_count += static_cast<double>(r.combined_count);
        report.mean_ari_link += r.ari_link;
        report.mean_ari_grid += r.ari_grid;
        report.mean_ari_combined += r.ari_combined;
        if (r.exact_match) ++matches;
        if (r.grid_singleton_count > 0) ++report.runs_with_grid_singletons;
    }
    for (double* m : {&report.mean_link_count, &report.mean_grid_count, &report.mean_combined_count,
                      &report.mean_ari_link, &report.mean_ari_grid, &report.mean_ari_combined})
        *m /= n;
    report.recovery_fraction = static_cast<double>(matches) / n;
    return report;
}

nlohmann::json to_json(const ScoreRecord& r) {
    return {{"seed", r.seed},
            {"link_threshold", r.link_threshold},
            {"link_cluster_count", r.link_cluster_count},
            {"grid_cluster_count", r.grid_cluster_count},
            {"combined_count", r.combined_count},
            {"link_nonsingleton_count", r.link_nonsingleton_count},
            {"grid_nonsingleton_count", r.grid_nonsingleton_count},
            {"combined_nonsingleton_count", r.combined_nonsingleton_count},
            {"grid_singleton_count", r.grid_singleton_count},
            {"exact_match", r.exact_match},
            {"ari_link", r.ari_link},
            {"ari_grid", r.ari_grid},
            {"ari_combined", r.ari_combined}};
}

nlohmann::json to_json(const ExperimentConfig& c) {
    return {{"num_patterns", c.num_patterns},
            {"instances_per_pattern", c.instances_per_pattern},
            {"num_noise_links", c.num_noise_links},
            {"max_presented", c.max_presented},
            {"noise_prob", c.noise_prob},
            {"iterations", c.iterations},
            {"rng_seed", c.rng_seed}};
}

nlohmann::json to_json(const ClustererOptions& o) {
    return {{"link_threshold", o.link_threshold ? nlohmann::json(*o.link_threshold) : nlohmann::json("auto")},
            {"min_support", o.grid.min_support},
            {"grid_associates", o.grid.associates},
            {"grid_reciprocal_rank", o.grid.reciprocal_rank},
            {"overlap_min", o.overlap_min}};
}

nlohmann::json to_json(const RunReport& report) {
    auto records = nlohmann::json::array();
    for (const auto& r : report.records) records.push_back(to_json(r));
    return {{"config", to_json(report.config)},
            {"clusterers", to_json(report.options)},
            {"records", records},
            {"aggregate",
             {{"runs", report.records.size()},
              {"mean_link_count", report.mean_link_count},
              {"mean_grid_count", report.mean_grid_count},
              {"mean_combined_count", report.mean_combined_count},
              {"mean_ari_link", report.mean_ari_link},
              {"mean_ari_grid", report.mean_ari_grid},
              {"mean_ari_combined", report.mean_ari_combined},
              {"recovery_fraction", report.recovery_fraction},
              {"runs_with_grid_singletons", report.runs_with_grid_singletons}}}};
}

void write_run_outputs(const std::filesystem::path& dir, const RunArtifacts& run, const nlohmann::json& report) {
    std::filesystem::create_directories(dir);
    auto open = [&](const char* name) {
        std::ofstream out(dir / name);
        if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
        return out;
    };
    open("report.json") << report.dump(2) << '\n';
    {
        auto out = open("presentations.csv");
        write_presentations_csv(out, run.presentations);
    }
    open("clusters_link.json") << to_json(run.link_clusters).dump() << '\n';
    open("clusters_grid.json") << to_json(run.grid_clusters).dump() << '\n';
    open("clusters_combined.json") << to_json(run.combined).dump() << '\n';
    {
        auto out = open("grid.csv");
        write_grid_csv(out, run.grid);
    }
}

}  // namespace cvnet
