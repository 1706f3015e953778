#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pcgbench/core/evaluate.hpp"
#include "pcgbench/core/rng.hpp"
#include "pcgbench/generators/fitness.hpp"

namespace pcgb::generators {

/// A (content, control) individual. Variation touches content only; the
/// control is fixed when the individual is first sampled.
struct Chromosome {
    Value content;
    Value control;
    double fitness = 0.0;
    ArtifactReport report;
    std::uint64_t birth = 0;  // creation order; lower is older
    bool evaluated = false;   // report is current for content/control
};

struct SearchConfig {
    std::size_t population_size = 100;
    std::size_t generations = 200;
    double mutation_rate = 0.05;
    double crossover_rate = 0.5;
    std::size_t tournament_size = 7;
    std::size_t elitism = 10;
    std::size_t runs = 10;
    std::uint64_t seed = 0;
    unsigned workers = 1;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

enum class GeneratorKind { random, es, ga };

[[nodiscard]] std::string to_string(GeneratorKind kind);
/// Parses "random", "es" or "ga"; throws std::invalid_argument otherwise.
[[nodiscard]] GeneratorKind parse_generator_kind(const std::string& text);

/// Statistics of one population. Generation 0 is the initial population.
struct GenerationRecord {
    std::size_t generation = 0;
    double max_fitness = 0.0;
    double mean_fitness = 0.0;
    std::size_t feasible = 0;
    std::size_t controlled = 0;
    std::size_t unique = 0;
};

struct RunResult {
    std::vector<GenerationRecord> log;  // generations + 1 entries
    std::vector<Chromosome> population; // final population, best first
};

/// Called after every generation (including generation 0) with the
/// population that survives it.
using GenerationObserver = std::function<void(const GenerationRecord&, std::span<const Chromosome>)>;

/// Each generation samples a fresh population and keeps the best
/// population_size of survivors plus newcomers.
[[nodiscard]] RunResult run_random(const Problem& problem, FitnessKind kind, const SearchConfig& config, Rng& rng,
                                   const GenerationObserver& observer = {});

/// mu+lambda: population_size offspring, each a mutated copy of a parent
/// drawn uniformly with replacement; the best population_size of parents and
/// offspring survive.
[[nodiscard]] RunResult run_es(const Problem& problem, FitnessKind kind, const SearchConfig& config, Rng& rng,
                               const GenerationObserver& observer = {});

/// Generational GA with elitism, tournament selection, uniform crossover
/// applied per pair with probability crossover_rate, then mutation.
[[nodiscard]] RunResult run_ga(const Problem& problem, FitnessKind kind, const SearchConfig& config, Rng& rng,
                               const GenerationObserver& observer = {});

[[nodiscard]] RunResult run_search(GeneratorKind generator, const Problem& problem, FitnessKind kind,
                                   const SearchConfig& config, Rng& rng, const GenerationObserver& observer = {});

/// Content of a GA child before mutation: uniform crossover of the two
/// parents with probability `crossover_rate`, otherwise a copy of `a`.
[[nodiscard]] Value ga_crossover(const SpaceDescriptor& space, const Value& a, const Value& b, double crossover_rate,
                                 Rng& rng);

/// Index of the tournament winner among `size` uniformly drawn entrants
/// (with replacement); ties go to the older individual.
[[nodiscard]] std::size_t tournament_select(std::span<const Chromosome> population, std::size_t size, Rng& rng);

/// Scores chromosomes in place: reports for members not yet evaluated, then fitness. Under qtd the
/// diversity term is each member's diversity against the whole `pool`.
void score_pool(const Problem& problem, FitnessKind kind, std::vector<Chromosome>& pool, unsigned workers = 1);

/// Sorts best first (fitness descending, then newer first) and keeps `n`.
void truncate_best(std::vector<Chromosome>& pool, std::size_t n);

/// Population statistics; stores each member's diversity against the
/// population in its report.
GenerationRecord summarize(const Problem& problem, std::size_t generation,
                                         std::vector<Chromosome>& population, unsigned workers = 1);

}  // namespace pcgb::generators
