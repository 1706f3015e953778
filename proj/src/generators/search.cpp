#include "pcgbench/generators/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "pcgbench/core/parallel.hpp"

namespace pcgb::generators {

void SearchConfig::validate() const {
    if (population_size == 0) throw std::invalid_argument("population_size must be positive");
    if (mutation_rate < 0.0 || mutation_rate > 1.0) throw std::invalid_argument("mutation_rate must be in [0,1]");
    if (crossover_rate < 0.0 || crossover_rate > 1.0) throw std::invalid_argument("crossover_rate must be in [0,1]");
    if (tournament_size == 0) throw std::invalid_argument("tournament_size must be positive");
    if (elitism > population_size) throw std::invalid_argument("elitism exceeds population_size");
    if (runs == 0) throw std::invalid_argument("runs must be positive");
}

std::string to_string(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::random: return "random";
        case GeneratorKind::es: return "es";
        case GeneratorKind::ga: return "ga";
    }
    return "?";
}

GeneratorKind parse_generator_kind(const std::string& text) {
    if (text == "random") return GeneratorKind::random;
    if (text == "es") return GeneratorKind::es;
    if (text == "ga") return GeneratorKind::ga;
    throw std::invalid_argument("unknown generator '" + text + "' (expected random, es or ga)");
}

namespace {

// Tournament order: fitter first, older on ties.
bool better(const Chromosome& a, const Chromosome& b) {
    if (a.fitness != b.fitness) return a.fitness > b.fitness;
    return a.birth < b.birth;
}

// Survivor order: fitter first, newer on ties, so an offspring as good as
// its parent replaces it and the population can drift across plateaus.
bool survives_before(const Chromosome& a, const Chromosome& b) {
    if (a.fitness != b.fitness) return a.fitness > b.fitness;
    return a.birth > b.birth;
}

class Search {
public:
    Search(const Problem& problem, FitnessKind kind, const SearchConfig& config, Rng& rng,
           const GenerationObserver& observer)
        : problem_(problem), kind_(kind), config_(config), rng_(rng), observer_(observer) {
        config_.validate();
    }

    Chromosome fresh() {
        Chromosome c;
        c.content = space_sample(problem_.content_space(), rng_);
        c.control = space_sample(problem_.control_space(), rng_);
        c.birth = next_birth_++;
        return c;
    }

    Chromosome child(Value content, const Value& control) {
        Chromosome c;
        c.content = std::move(content);
        c.control = control;
        c.birth = next_birth_++;
        return c;
    }

    std::vector<Chromosome> initial() {
        std::vector<Chromosome> pop;
        pop.reserve(config_.population_size);
        for (std::size_t i = 0; i < config_.population_size; ++i) pop.push_back(fresh());
        score_pool(problem_, kind_, pop, config_.workers);
        truncate_best(pop, config_.population_size);
        return pop;
    }

    void log(std::size_t generation, std::vector<Chromosome>& pop) {
        result_.log.push_back(summarize(problem_, generation, pop, config_.workers));
        if (observer_) observer_(result_.log.back(), pop);
    }

    RunResult finish(std::vector<Chromosome> pop) {
        result_.population = std::move(pop);
        return std::move(result_);
    }

    const Problem& problem_;
    FitnessKind kind_;
    SearchConfig config_;
    Rng& rng_;
    const GenerationObserver& observer_;
    std::uint64_t next_birth_ = 0;
    RunResult result_;
};

}  // namespace

void score_pool(const Problem& problem, FitnessKind kind, std::vector<Chromosome>& pool, unsigned workers) {
    parallel_for(pool.size(), workers, [&](std::size_t i) {
        auto& c = pool[i];
        if (c.evaluated) return;
        c.report = assess(problem, c.content, &c.control);
        c.evaluated = true;
    });
    if (kind == FitnessKind::qtd) {
        std::vector<InfoRecord> infos;
        infos.reserve(pool.size());
        for (const auto& c : pool) infos.push_back(c.report.info);
        const auto d = batch_diversity(problem, infos, workers);
        for (std::size_t i = 0; i < pool.size(); ++i) {
            pool[i].report.diversity = d[i];
            pool[i].fitness = fitness_qtd(pool[i].report, d[i]);
        }
    } else {
        for (auto& c : pool) c.fitness = fitness(kind, c.report);
    }
}

void truncate_best(std::vector<Chromosome>& pool, std::size_t n) {
    std::sort(pool.begin(), pool.end(), survives_before);
    if (pool.size() > n) pool.resize(n);
}

GenerationRecord summarize(const Problem& problem, std::size_t generation, std::vector<Chromosome>& population,
                           unsigned workers) {
    GenerationRecord r;
    r.generation = generation;
    if (population.empty()) return r;
    std::vector<InfoRecord> infos;
    infos.reserve(population.size());
    for (const auto& c : population) infos.push_back(c.report.info);
    const auto d = batch_diversity(problem, infos, workers);
    r.max_fitness = population.front().fitness;
    double sum = 0.0;
    for (std::size_t i = 0; i < population.size(); ++i) {
        auto& c = population[i];
        c.report.diversity = d[i];
        r.max_fitness = std::max(r.max_fitness, c.fitness);
        sum += c.fitness;
        if (c.report.feasible()) ++r.feasible;
        if (c.report.controlled()) ++r.controlled;
        if (c.report.unique()) ++r.unique;
    }
    r.mean_fitness = sum / static_cast<double>(population.size());
    return r;
}

Value ga_crossover(const SpaceDescriptor& space, const Value& a, const Value& b, double crossover_rate, Rng& rng) {
    if (rng.bernoulli(crossover_rate)) return space_mix(space, a, b, rng);
    return a;
}

std::size_t tournament_select(std::span<const Chromosome> population, std::size_t size, Rng& rng) {
    std::size_t best = rng.index(population.size());
    for (std::size_t k = 1; k < size; ++k) {
        const std::size_t i = rng.index(population.size());
        if (better(population[i], population[best])) best = i;
    }
    return best;
}

RunResult run_random(const Problem& problem, FitnessKind kind, const SearchConfig& config, Rng& rng,
                     const GenerationObserver& observer) {
    Search s(problem, kind, config, rng, observer);
    auto pop = s.initial();
    s.log(0, pop);
    for (std::size_t g = 1; g <= config.generations; ++g) {
        for (std::size_t i = 0; i < config.population_size; ++i) pop.push_back(s.fresh());
        score_pool(problem, kind, pop, config.workers);
        truncate_best(pop, config.population_size);
        s.log(g, pop);
    }
    return s.finish(std::move(pop));
}

RunResult run_es(const Problem& problem, FitnessKind kind, const SearchConfig& config, Rng& rng,
                 const GenerationObserver& observer) {
    Search s(problem, kind, config, rng, observer);
    auto pop = s.initial();
    s.log(0, pop);
    for (std::size_t g = 1; g <= config.generations; ++g) {
        const std::size_t parents = pop.size();
        for (std::size_t i = 0; i < config.population_size; ++i) {
            const auto& parent = pop[rng.index(parents)];
            auto content = space_mutate(problem.content_space(), parent.content, config.mutation_rate, rng);
            Value control = parent.control;
            pop.push_back(s.child(std::move(content), control));
        }
        score_pool(problem, kind, pop, config.workers);
        truncate_best(pop, config.population_size);
        s.log(g, pop);
    }
    return s.finish(std::move(pop));
}

RunResult run_ga(const Problem& problem, FitnessKind kind, const SearchConfig& config, Rng& rng,
                 const GenerationObserver& observer) {
    Search s(problem, kind, config, rng, observer);
    auto pop = s.initial();
    s.log(0, pop);
    for (std::size_t g = 1; g <= config.generations; ++g) {
        std::vector<Chromosome> next(pop.begin(), pop.begin() + static_cast<std::ptrdiff_t>(config.elitism));
        while (next.size() < config.population_size) {
            const auto& a = pop[tournament_select(pop, config.tournament_size, rng)];
            const auto& b = pop[tournament_select(pop, config.tournament_size, rng)];
            auto content = ga_crossover(problem.content_space(), a.content, b.content, config.crossover_rate, rng);
            content = space_mutate(problem.content_space(), content, config.mutation_rate, rng);
            next.push_back(s.child(std::move(content), a.control));
        }
        score_pool(problem, kind, next, config.workers);
        truncate_best(next, config.population_size);
        pop = std::move(next);
        s.log(g, pop);
    }
    return s.finish(std::move(pop));
}

RunResult run_search(GeneratorKind generator, const Problem& problem, FitnessKind kind, const SearchConfig& config,
                     Rng& rng, const GenerationObserver& observer) {
    switch (generator) {
        case GeneratorKind::random: return run_random(problem, kind, config, rng, observer);
        case GeneratorKind::es: return run_es(problem, kind, config, rng, observer);
        case GeneratorKind::ga: return run_ga(problem, kind, config, rng, observer);
    }
    throw std::invalid_argument("unknown generator");
}

}  // namespace pcgb::generators
