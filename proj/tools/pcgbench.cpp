// pcgbench command-line front end: list, eval, run, render, compare, llm.
//
// Exit codes: 0 success, 1 I/O or runtime failure, 2 invalid input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "pcgbench/core/evaluate.hpp"
#include "pcgbench/core/registry.hpp"
#include "pcgbench/harness/experiment.hpp"
#include "pcgbench/llm/bridge.hpp"

namespace fs = std::filesystem;
using namespace pcgb;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInvalid = 2;

/// Bad user input; reported with exit code 2.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json read_json(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
}

std::map<std::string, ParamValue> parse_variants(const std::vector<std::string>& items) {
    std::map<std::string, ParamValue> out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw InvalidInput("variant override must be key=value, got '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

std::unique_ptr<Problem> make_problem(const std::string& name, const std::vector<std::string>& variants) {
    try {
        return registry_make(name, parse_variants(variants));
    } catch (const RegistryError& e) {
        throw InvalidInput(e.what());
    }
}

/// Problem named on the command line, or else by the content document.
std::string problem_name(const std::string& flag, const nlohmann::json& doc) {
    if (!flag.empty()) return flag;
    if (doc.is_object() && doc.contains("problem") && doc["problem"].is_string()) return doc["problem"];
    throw InvalidInput("no problem given (use --problem or a \"problem\" field in the content file)");
}

std::vector<Value> read_batch(const nlohmann::json& doc, const SpaceDescriptor& space, const char* what) {
    try {
        return batch_from_json(doc, space);
    } catch (const EvaluationError& e) {
        throw InvalidInput(fmt::format("{} index {}: {}", what, e.index(), e.what()));
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(fmt::format("{}: {}", what, e.what()));
    }
}

void write_bytes(const fs::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    out << bytes;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

int cmd_list() {
    const auto& reg = builtin_registry();
    std::size_t width = 0;
    for (const auto& n : reg.names()) width = std::max(width, n.size());
    for (const auto& n : reg.reserved_names()) width = std::max(width, n.size() + 11);
    for (const auto& n : reg.names()) std::cout << fmt::format("{:<{}}  {}\n", n, width, reg.defaults(n).to_string());
    for (const auto& n : reg.reserved_names()) std::cout << fmt::format("{:<{}}  -\n", n + " (reserved)", width);
    return kOk;
}

struct EvalArgs {
    std::string problem;
    fs::path content;
    fs::path controls;
    std::vector<std::string> variants;
    unsigned workers = 1;
};

int cmd_eval(const EvalArgs& a) {
    const auto doc = read_json(a.content);
    const auto problem = make_problem(problem_name(a.problem, doc), a.variants);
    const auto contents = read_batch(doc, problem->content_space(), "content");
    if (contents.empty()) throw InvalidInput("empty batch");
    std::optional<std::vector<Value>> controls;
    if (!a.controls.empty()) controls = read_batch(read_json(a.controls), problem->control_space(), "control");
    EvaluateOptions opts;
    opts.workers = a.workers;
    BenchmarkReport report;
    try {
        report = controls ? evaluate(*problem, contents, std::span<const Value>(*controls), opts)
                          : evaluate(*problem, contents, std::nullopt, opts);
    } catch (const EvaluationError& e) {
        throw InvalidInput(fmt::format("index {}: {}", e.index(), e.what()));
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
    }
    nlohmann::json j = report;
    j["problem"] = problem->name();
    std::cout << j.dump(1) << "\n";
    return kOk;
}

struct RunArgs {
    fs::path config;
    std::string problem, generator, fitness;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> runs, gens, pop;
    std::optional<unsigned> workers;
    fs::path out;
    std::vector<std::string> variants;
};

int cmd_run(const RunArgs& a) {
    harness::ExperimentConfig c;
    if (!a.config.empty()) {
        try {
            c = harness::ExperimentConfig::load(a.config);
        } catch (const harness::ConfigError& e) {
            throw InvalidInput(e.what());
        }
    }
    if (!a.problem.empty()) c.problem = a.problem;
    if (!a.generator.empty()) c.generator = a.generator;
    if (!a.fitness.empty()) {
        try {
            c.fitness = generators::parse_fitness_kind(a.fitness);
        } catch (const std::invalid_argument& e) {
            throw InvalidInput(e.what());
        }
    }
    if (a.seed) c.search.seed = *a.seed;
    if (a.runs) c.search.runs = *a.runs;
    if (a.gens) c.search.generations = *a.gens;
    if (a.pop) c.search.population_size = *a.pop;
    if (a.workers) c.search.workers = *a.workers;
    if (!a.out.empty()) c.output = a.out;
    for (const auto& [k, v] : parse_variants(a.variants)) c.variant[k] = std::get<std::string>(v);
    // Validate everything that is the user's fault before touching the disk.
    std::map<std::string, ParamValue> overrides(c.variant.begin(), c.variant.end());
    try {
        (void)registry_make(c.problem, overrides);
        c.search.validate();
        if (c.generator != "constructive") (void)generators::parse_generator_kind(c.generator);
    } catch (const std::exception& e) {
        throw InvalidInput(e.what());
    }
    std::vector<harness::RunSummary> runs;
    try {
        runs = harness::run_experiment(c);
    } catch (const harness::ConfigError& e) {
        throw InvalidInput(e.what());
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
    }
    std::cout << harness::summary_csv(runs);
    return kOk;
}

struct RenderArgs {
    std::string problem;
    fs::path content;
    fs::path out;
    std::string run_id = "0";
    std::vector<std::string> variants;
};

int cmd_render(const RenderArgs& a) {
    const auto doc = read_json(a.content);
    const auto problem = make_problem(problem_name(a.problem, doc), a.variants);
    const auto contents = read_batch(doc, problem->content_space(), "content");
    std::error_code ec;
    fs::create_directories(a.out, ec);
    if (ec) throw std::runtime_error("cannot create " + a.out.string() + ": " + ec.message());
    const auto stem = problem->name();
    for (std::size_t i = 0; i < contents.size(); ++i) {
        for (const auto& file : problem->render(contents[i])) {
            const auto name = file.suffix.empty()
                                  ? fmt::format("{}_{}_{}.{}", stem, a.run_id, i, file.extension)
                                  : fmt::format("{}_{}_{}_{}.{}", stem, a.run_id, i, file.suffix, file.extension);
            write_bytes(a.out / name, file.bytes);
            std::cout << (a.out / name).string() << "\n";
        }
    }
    return kOk;
}

int cmd_compare(const std::vector<fs::path>& csvs) {
    try {
        std::cout << harness::format_comparison(harness::compare_summaries(csvs));
    } catch (const harness::ConfigError& e) {
        throw InvalidInput(e.what());
    }
    return kOk;
}

struct LlmArgs {
    std::string problem;
    std::size_t count = 10;
    std::string endpoint;
    std::string model;
    double timeout = 30.0;
    int retries = 2;
    unsigned in_flight = 1;
    std::uint64_t seed = 0;
    fs::path out;
};

int cmd_llm(const LlmArgs& a) {
    const auto problem = make_problem(a.problem, {});
    if (!llm::llm_supports(problem->name())) throw InvalidInput("no prompt template for " + problem->name());
    auto endpoint = llm::endpoint_from_env();
    if (!a.endpoint.empty()) endpoint.url = a.endpoint;
    if (!a.model.empty()) endpoint.model = a.model;
    endpoint.timeout_seconds = a.timeout;
    endpoint.max_retries = a.retries;
    endpoint.max_in_flight = a.in_flight;
    try {
        endpoint.validate();
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
    }
    Rng rng(a.seed);
    const auto batch = llm::run_llm_generator(*problem, endpoint, a.count, rng);
    for (const auto& d : batch.stats.diagnostics) std::cerr << d << "\n";
    nlohmann::json stats = {{"requests", batch.stats.requests}, {"attempts", batch.stats.attempts},
                            {"parsed", batch.stats.parsed},     {"failed", batch.stats.failed},
                            {"duplicates", batch.stats.duplicates}};
    if (!a.out.empty()) {
        std::error_code ec;
        fs::create_directories(a.out, ec);
        if (ec) throw std::runtime_error("cannot create " + a.out.string() + ": " + ec.message());
        write_bytes(a.out / "population.json", batch_to_json(problem->name(), batch.contents).dump(1) + "\n");
        write_bytes(a.out / "controls.json", batch_to_json(problem->name(), batch.controls).dump(1) + "\n");
    }
    if (!batch.contents.empty()) {
        const auto report = evaluate(*problem, batch.contents, std::span<const Value>(batch.controls));
        stats["r_quality"] = report.r_quality;
        stats["r_diversity"] = report.r_diversity;
        stats["r_controllability"] = report.r_controllability;
    }
    std::cout << stats.dump(1) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Benchmark engine for procedural content generators"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "List registered problems and their default parameters");

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate a batch of content and print the report");
    eval->add_option("--problem", eval_args.problem, "Problem name (default: the file's \"problem\" field)");
    eval->add_option("content", eval_args.content, "Content batch JSON")->required();
    eval->add_option("--controls", eval_args.controls, "Control batch JSON");
    eval->add_option("--variant", eval_args.variants, "Variant override key=value (repeatable)");
    eval->add_option("--workers", eval_args.workers, "Evaluation threads");

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Run a seeded multi-run experiment");
    run->add_option("--config", run_args.config, "Experiment config (INI)");
    run->add_option("--problem", run_args.problem);
    run->add_option("--generator", run_args.generator, "random, es, ga or constructive");
    run->add_option("--fitness", run_args.fitness, "q, qt or qtd");
    run->add_option("--seed", run_args.seed);
    run->add_option("--runs", run_args.runs);
    run->add_option("--gens", run_args.gens);
    run->add_option("--pop", run_args.pop);
    run->add_option("--workers", run_args.workers);
    run->add_option("--out", run_args.out, "Output directory");
    run->add_option("--variant", run_args.variants, "Variant override key=value (repeatable)");

    RenderArgs render_args;
    auto* render = app.add_subcommand("render", "Render every artifact of a content batch");
    render->add_option("--problem", render_args.problem);
    render->add_option("content", render_args.content, "Content batch JSON")->required();
    render->add_option("--out", render_args.out, "Output directory")->required();
    render->add_option("--run-id", render_args.run_id, "Run id used in file names");
    render->add_option("--variant", render_args.variants, "Variant override key=value (repeatable)");

    std::vector<fs::path> csvs;
    auto* compare = app.add_subcommand("compare", "Mean and 95% CI of summary CSVs");
    compare->add_option("summaries", csvs, "summary.csv files")->required();

    LlmArgs llm_args;
    auto* llm = app.add_subcommand("llm", "Generate levels with a few-shot completion endpoint");
    llm->add_option("--problem", llm_args.problem)->required();
    llm->add_option("--count", llm_args.count);
    llm->add_option("--endpoint", llm_args.endpoint, "Completion URL (default: $PCGBENCH_LLM_ENDPOINT)");
    llm->add_option("--model", llm_args.model);
    llm->add_option("--timeout", llm_args.timeout, "Request timeout in seconds");
    llm->add_option("--retries", llm_args.retries);
    llm->add_option("--in-flight", llm_args.in_flight);
    llm->add_option("--seed", llm_args.seed);
    llm->add_option("--out", llm_args.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (list->parsed()) return cmd_list();
        if (eval->parsed()) return cmd_eval(eval_args);
        if (run->parsed()) return cmd_run(run_args);
        if (render->parsed()) return cmd_render(render_args);
        if (compare->parsed()) return cmd_compare(csvs);
        if (llm->parsed()) return cmd_llm(llm_args);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kInvalid;
}
