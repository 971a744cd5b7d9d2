#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "json.hpp"
#include "cvnet/freq_grid.hpp"
#include "cvnet/link_cluster.hpp"
#include "cvnet/ontology.hpp"

namespace cvnet {

struct ClustererOptions {
    /// Unset: default_link_threshold(iterations).
    std::optional<std::size_t> link_threshold;
    GridOptions grid;
    std::size_t overlap_min = 1;
};

struct ScoreRecord {
    std::uint64_t seed = 0;
    std::size_t link_threshold = 0;
    std::size_t link_cluster_count = 0;
    std::size_t grid_cluster_count = 0;
    std::size_t combined_count = 0;
    std::size_t link_nonsingleton_count = 0;
    std::size_t grid_nonsingleton_count = 0;
    std::size_t combined_nonsingleton_count = 0;
    std::size_t grid_singleton_count = 0;
    bool exact_match = false;
    double ari_link = 0.0;
    double ari_grid = 0.0;
    double ari_combined = 0.0;
};

/// Everything one seeded run produces; `score` is what reports keep.
struct RunArtifacts {
    Ontology ontology;
    std::vector<Presentation> presentations;
    LinkStore links;
    FrequencyGrid grid;
    ClusterSet truth;
    ClusterSet link_clusters;
    ClusterSet grid_clusters;
    ClusterSet combined;
    ScoreRecord score;
};

struct RunReport {
    ExperimentConfig config;
    ClustererOptions options;
    std::vector<ScoreRecord> records;
    double mean_link_count = 0.0;
    double mean_grid_count = 0.0;
    double mean_combined_count = 0.0;
    double mean_ari_link = 0.0;
    double mean_ari_grid = 0.0;
    double mean_ari_combined = 0.0;
    double recovery_fraction = 0.0;
    std::size_t runs_with_grid_singletons = 0;
};

/// Ontology, one shared presentation stream into both clusterers, combine,
/// score. Deterministic in config.rng_seed.
RunArtifacts run_experiment(const ExperimentConfig& config, const ClustererOptions& options = {});

/// run_experiment per seed (config.rng_seed is replaced); records keep seed order.
RunReport sweep(const ExperimentConfig& config, const std::vector<std::uint64_t>& seeds,
                const ClustererOptions& options = {}, unsigned threads = 1);

nlohmann::json to_json(const ScoreRecord& record);
nlohmann::json to_json(const ExperimentConfig& config);
nlohmann::json to_json(const ClustererOptions& options);
nlohmann::json to_json(const RunReport& report);

/// report.json, presentations.csv, clusters_{link,grid,combined}.json, grid.csv
void write_run_outputs(const std::filesystem::path& dir, const RunArtifacts& run, const nlohmann::json& report);

}  // namespace cvnet
