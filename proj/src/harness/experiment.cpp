#include "pcgbench/harness/experiment.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "pcgbench/core/evaluate.hpp"
#include "pcgbench/core/registry.hpp"
#include "pcgbench/generators/constructive.hpp"

namespace pcgb::harness {

namespace pt = boost::property_tree;

namespace {

template <typename T>
T parse_number(const std::string& section, const std::string& key, const std::string& text) {
    std::istringstream in(text);
    T value{};
    in >> value;
    if (in.fail() || !in.eof()) throw ConfigError(fmt::format("[{}] {}: cannot parse '{}'", section, key, text));
    return value;
}

std::map<std::string, ParamValue> overrides_of(const ExperimentConfig& config) {
    std::map<std::string, ParamValue> out;
    for (const auto& [k, v] : config.variant) out[k] = v;
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

struct RunOutput {
    RunSummary summary;
    std::vector<generators::GenerationRecord> log;
    std::vector<generators::Chromosome> population;
};

RunOutput run_one(const Problem& problem, const ExperimentConfig& config, std::size_t run) {
    RunOutput out;
    out.summary.run = run;
    out.summary.seed = Rng::derive(config.search.seed, run);
    Rng rng(out.summary.seed);
    if (config.generator == "constructive") {
        out.population = generators::run_constructive(problem, config.search.population_size, config.fitness, rng);
        out.log.push_back(generators::summarize(problem, 0, out.population, config.search.workers));
    } else {
        auto result = generators::run_search(generators::parse_generator_kind(config.generator), problem,
                                             config.fitness, config.search, rng);
        out.log = std::move(result.log);
        out.population = std::move(result.population);
    }
    const auto& last = out.log.back();
    out.summary.feasible = last.feasible;
    out.summary.controlled = last.controlled;
    out.summary.unique = last.unique;
    out.summary.initial_max_fitness = out.log.front().max_fitness;
    out.summary.final_max_fitness = last.max_fitness;
    for (std::size_t g = 1; g < out.log.size(); ++g) {
        out.summary.max_fitness.push_back(out.log[g].max_fitness);
        out.summary.mean_fitness.push_back(out.log[g].mean_fitness);
    }
    return out;
}

void validate(const ExperimentConfig& config) {
    config.search.validate();
    if (config.generator != "constructive") {
        try {
            (void)generators::parse_generator_kind(config.generator);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
}

}  // namespace

std::string ExperimentConfig::to_ini() const {
    std::string s;
    s += "[experiment]\n";
    s += fmt::format("problem = {}\n", problem);
    s += fmt::format("generator = {}\n", generator);
    s += fmt::format("fitness = {}\n", generators::to_string(fitness));
    s += fmt::format("output = {}\n", output.string());
    s += "\n[search]\n";
    s += fmt::format("population_size = {}\n", search.population_size);
    s += fmt::format("generations = {}\n", search.generations);
    s += fmt::format("mutation_rate = {}\n", search.mutation_rate);
    s += fmt::format("crossover_rate = {}\n", search.crossover_rate);
    s += fmt::format("tournament_size = {}\n", search.tournament_size);
    s += fmt::format("elitism = {}\n", search.elitism);
    s += fmt::format("runs = {}\n", search.runs);
    s += fmt::format("seed = {}\n", search.seed);
    s += fmt::format("workers = {}\n", search.workers);
    s += "\n[variant]\n";
    for (const auto& [k, v] : variant) s += fmt::format("{} = {}\n", k, v);
    return s;
}

ExperimentConfig ExperimentConfig::from_ini(const std::string& text) {
    pt::ptree tree;
    std::istringstream in(text);
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    ExperimentConfig c;
    for (const auto& [section, body] : tree) {
        if (section == "experiment") {
            for (const auto& [key, node] : body) {
                const auto v = node.get_value<std::string>();
                if (key == "problem") c.problem = v;
                else if (key == "generator") c.generator = v;
                else if (key == "fitness") {
                    try {
                        c.fitness = generators::parse_fitness_kind(v);
                    } catch (const std::invalid_argument& e) {
                        throw ConfigError(e.what());
                    }
                } else if (key == "output") c.output = v;
                else throw ConfigError("unknown key [experiment] " + key);
            }
        } else if (section == "search") {
            for (const auto& [key, node] : body) {
                const auto v = node.get_value<std::string>();
                auto& s = c.search;
                if (key == "population_size") s.population_size = parse_number<std::size_t>(section, key, v);
                else if (key == "generations") s.generations = parse_number<std::size_t>(section, key, v);
                else if (key == "mutation_rate") s.mutation_rate = parse_number<double>(section, key, v);
                else if (key == "crossover_rate") s.crossover_rate = parse_number<double>(section, key, v);
                else if (key == "tournament_size") s.tournament_size = parse_number<std::size_t>(section, key, v);
                else if (key == "elitism") s.elitism = parse_number<std::size_t>(section, key, v);
                else if (key == "runs") s.runs = parse_number<std::size_t>(section, key, v);
                else if (key == "seed") s.seed = parse_number<std::uint64_t>(section, key, v);
                else if (key == "workers") s.workers = parse_number<unsigned>(section, key, v);
                else throw ConfigError("unknown key [search] " + key);
            }
        } else if (section == "variant") {
            for (const auto& [key, node] : body) c.variant[key] = node.get_value<std::string>();
        } else {
            throw ConfigError("unknown config section [" + section + "]");
        }
    }
    try {
        validate(c);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return c;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return from_ini(ss.str());
}

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
    return a.to_ini() == b.to_ini();
}

double RunSummary::relative_increase() const {
    if (initial_max_fitness == 0.0) return 0.0;
    return (final_max_fitness - initial_max_fitness) / initial_max_fitness;
}

std::vector<RunSummary> run_experiment_in_memory(const ExperimentConfig& config) {
    validate(config);
    const auto problem = registry_make(config.problem, overrides_of(config));
    std::vector<RunSummary> out;
    for (std::size_t r = 0; r < config.search.runs; ++r) out.push_back(run_one(*problem, config, r).summary);
    return out;
}

std::vector<RunSummary> run_experiment(const ExperimentConfig& config) {
    validate(config);
    const auto problem = registry_make(config.problem, overrides_of(config));
    std::error_code ec;
    std::filesystem::create_directories(config.output, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + config.output.string() + ": " + ec.message());
    write_file(config.output / "config.ini", config.to_ini());

    std::vector<RunSummary> summaries;
    for (std::size_t r = 0; r < config.search.runs; ++r) {
        auto out = run_one(*problem, config, r);
        const auto dir = config.output / fmt::format("run_{:03}", r);
        std::filesystem::create_directories(dir, ec);
        if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

        std::string jsonl;
        for (const auto& g : out.log) {
            const nlohmann::json rec = {{"run", r},
                                        {"generation", g.generation},
                                        {"max_fitness", g.max_fitness},
                                        {"mean_fitness", g.mean_fitness},
                                        {"feasible", g.feasible},
                                        {"controlled", g.controlled},
                                        {"unique", g.unique}};
            jsonl += rec.dump() + "\n";
        }
        write_file(dir / "generations.jsonl", jsonl);

        std::vector<Value> contents;
        std::vector<Value> controls;
        for (const auto& c : out.population) {
            contents.push_back(c.content);
            controls.push_back(c.control);
        }
        write_file(dir / "population.json", batch_to_json(problem->name(), contents).dump(1) + "\n");
        write_file(dir / "controls.json", batch_to_json(problem->name(), controls).dump(1) + "\n");
        summaries.push_back(std::move(out.summary));
    }
    write_file(config.output / "summary.csv", summary_csv(summaries));
    return summaries;
}

std::string summary_csv(const std::vector<RunSummary>& runs) {
    std::string s = std::string(kSummaryHeader) + "\n";
    for (const auto& r : runs) {
        s += fmt::format("{},{},{},{},{},{},{},{}\n", r.run, r.seed, r.feasible, r.controlled, r.unique,
                         r.initial_max_fitness, r.final_max_fitness, r.relative_increase());
    }
    return s;
}

MeanCi mean_ci(const std::vector<double>& values) {
    MeanCi m;
    if (values.empty()) return m;
    const double n = static_cast<double>(values.size());
    for (double v : values) m.mean += v;
    m.mean /= n;
    if (values.size() < 2) return m;
    double ss = 0.0;
    for (double v : values) ss += (v - m.mean) * (v - m.mean);
    m.half_width = 1.96 * std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    return m;
}

std::vector<ComparisonRow> compare_summaries(const std::vector<std::filesystem::path>& csvs) {
    std::vector<ComparisonRow> rows;
    for (const auto& path : csvs) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot read " + path.string());
        std::string header;
        if (!std::getline(in, header)) throw ConfigError(path.string() + ": empty file");
        if (!header.empty() && header.back() == '\r') header.pop_back();
        if (header != kSummaryHeader) {
            throw ConfigError(fmt::format("{}: header '{}' does not match '{}'", path.string(), header, kSummaryHeader));
        }
        std::vector<double> feasible, controlled, unique;
        std::size_t line_no = 1;
        for (std::string line; std::getline(in, line);) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            std::vector<std::string> cells;
            std::stringstream ls(line);
            for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
            if (cells.size() != 8) {
                throw ConfigError(fmt::format("{}:{}: expected 8 columns, got {}", path.string(), line_no, cells.size()));
            }
            feasible.push_back(parse_number<double>(path.string(), "feasible", cells[2]));
            controlled.push_back(parse_number<double>(path.string(), "controlled", cells[3]));
            unique.push_back(parse_number<double>(path.string(), "unique", cells[4]));
        }
        ComparisonRow row;
        row.label = path.string();
        row.runs = feasible.size();
        row.feasible = mean_ci(feasible);
        row.controlled = mean_ci(controlled);
        row.unique = mean_ci(unique);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_comparison(const std::vector<ComparisonRow>& rows) {
    std::string s = "config,runs,feasible_mean,feasible_ci95,controlled_mean,controlled_ci95,unique_mean,unique_ci95\n";
    for (const auto& r : rows) {
        s += fmt::format("{},{},{:.3f},{:.3f},{:.3f},{:.3f},{:.3f},{:.3f}\n", r.label, r.runs, r.feasible.mean,
                         r.feasible.half_width, r.controlled.mean, r.controlled.half_width, r.unique.mean,
                         r.unique.half_width);
    }
    return s;
}

}  // namespace pcgb::harness
