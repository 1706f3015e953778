#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcgbench/core/params.hpp"
#include "pcgbench/generators/search.hpp"

namespace pcgb::harness {

/// A config file or summary CSV that cannot be used.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Everything that determines an experiment's output.
///
/// File format (INI):
///   [experiment] problem, generator (random|es|ga|constructive), fitness (q|qt|qtd), output
///   [search]     population_size, generations, mutation_rate, crossover_rate,
///                tournament_size, elitism, runs, seed, workers
///   [variant]    problem variant overrides, e.g. path_target = 30
struct ExperimentConfig {
    std::string problem = "binary-v0";
    std::string generator = "es";
    generators::FitnessKind fitness = generators::FitnessKind::q;
    generators::SearchConfig search;
    std::map<std::string, std::string> variant;  // coerced by the registry
    std::filesystem::path output = "out";

    [[nodiscard]] std::string to_ini() const;
    /// Throws ConfigError on unknown sections/keys or unparsable values.
    [[nodiscard]] static ExperimentConfig from_ini(const std::string& text);
    [[nodiscard]] static ExperimentConfig load(const std::filesystem::path& path);

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&);
};

struct RunSummary {
    std::size_t run = 0;
    std::uint64_t seed = 0;
    std::size_t feasible = 0;
    std::size_t controlled = 0;
    std::size_t unique = 0;
    double initial_max_fitness = 0.0;
    double final_max_fitness = 0.0;
    std::vector<double> max_fitness;   // one entry per generation after the initial population
    std::vector<double> mean_fitness;  // same length

    /// (final − initial) / initial; 0 when the initial max is 0.
    [[nodiscard]] double relative_increase() const;
};

/// Header of summary.csv.
inline constexpr const char* kSummaryHeader =
    "run,seed,feasible,controlled,unique,initial_max_fitness,final_max_fitness,relative_increase";

/// Runs every run of the experiment and writes under config.output:
///   config.ini, summary.csv,
///   run_NNN/generations.jsonl, run_NNN/population.json, run_NNN/controls.json
/// Throws std::runtime_error when the output directory cannot be written.
std::vector<RunSummary> run_experiment(const ExperimentConfig& config);

/// Same runs without touching the filesystem.
[[nodiscard]] std::vector<RunSummary> run_experiment_in_memory(const ExperimentConfig& config);

[[nodiscard]] std::string summary_csv(const std::vector<RunSummary>& runs);

/// Mean and normal-approximation 95% half-width (1.96·s/√n, sample s).
struct MeanCi {
    double mean = 0.0;
    double half_width = 0.0;
};
[[nodiscard]] MeanCi mean_ci(const std::vector<double>& values);

struct ComparisonRow {
    std::string label;
    std::size_t runs = 0;
    MeanCi feasible;
    MeanCi controlled;
    MeanCi unique;
};

/// One row per CSV. Throws ConfigError when a file is unreadable, empty, or
/// its header differs from the summary schema.
[[nodiscard]] std::vector<ComparisonRow> compare_summaries(const std::vector<std::filesystem::path>& csvs);
[[nodiscard]] std::string format_comparison(const std::vector<ComparisonRow>& rows);

}  // namespace pcgb::harness
