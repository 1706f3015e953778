// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <unistd.h>

#include "mock_llm.hpp"
#include "oracles.hpp"
#include "pcgbench/core/evaluate.hpp"
#include "pcgbench/core/registry.hpp"
#include "pcgbench/generators/constructive.hpp"
#include "pcgbench/generators/fitness.hpp"
#include "pcgbench/generators/search.hpp"
#include "pcgbench/harness/experiment.hpp"
#include "pcgbench/llm/bridge.hpp"

using namespace pcgb;
using namespace pcgb::generators;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 2025;
constexpr std::size_t kRuns = 10;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
    bool pass = false;
    std::string detail;
};

// ---------------------------------------------------------------------------
// Shared experiment runs, computed once and reused by several criteria.

struct RunStats {
    std::vector<double> max_fitness;  // per logged generation
    std::size_t feasible = 0;
    std::size_t controlled = 0;
    std::size_t unique_feasible = 0;
    bool ever_feasible = false;
};

struct Batch {
    std::string label;
    std::vector<RunStats> runs;
    double seconds = 0.0;

    [[nodiscard]] double mean(std::size_t RunStats::*field) const {
        double s = 0;
        for (const auto& r : runs) s += static_cast<double>(r.*field);
        return s / static_cast<double>(runs.size());
    }
    [[nodiscard]] std::size_t count_if(const std::function<bool(const RunStats&)>& pred) const {
        std::size_t n = 0;
        for (const auto& r : runs) n += pred(r) ? 1 : 0;
        return n;
    }
};

std::size_t unique_feasible(std::span<const Chromosome> pop) {
    std::size_t n = 0;
    for (const auto& c : pop) n += c.report.feasible() && c.report.unique() ? 1 : 0;
    return n;
}

std::map<std::string, Batch>& cache() {
    static std::map<std::string, Batch> batches;
    return batches;
}

const Batch& search_batch(const std::string& problem, GeneratorKind gen, FitnessKind fit) {
    const auto key = fmt::format("{} {} {}", problem, to_string(gen), to_string(fit));
    auto& batches = cache();
    if (auto it = batches.find(key); it != batches.end()) return it->second;
    const auto t0 = Clock::now();
    auto p = registry_make(problem);
    Batch b;
    b.label = key;
    SearchConfig cfg;
    for (std::size_t r = 0; r < kRuns; ++r) {
        Rng rng(Rng::derive(kSeed, r));
        RunStats s;
        auto res = run_search(gen, *p, fit, cfg, rng, [&](const GenerationRecord& rec, std::span<const Chromosome>) {
            s.max_fitness.push_back(rec.max_fitness);
            s.ever_feasible = s.ever_feasible || rec.feasible > 0;
        });
        const auto& last = res.log.back();
        s.feasible = last.feasible;
        s.controlled = last.controlled;
        s.unique_feasible = unique_feasible(res.population);
        b.runs.push_back(std::move(s));
    }
    b.seconds = seconds_since(t0);
    std::fprintf(stderr, "  [run] %s: %.1f s\n", key.c_str(), b.seconds);
    return batches.emplace(key, std::move(b)).first->second;
}

const Batch& constructive_batch(const std::string& problem) {
    const auto key = problem + " constructive";
    auto& batches = cache();
    if (auto it = batches.find(key); it != batches.end()) return it->second;
    const auto t0 = Clock::now();
    auto p = registry_make(problem);
    Batch b;
    b.label = key;
    for (std::size_t r = 0; r < kRuns; ++r) {
        Rng rng(Rng::derive(kSeed, r));
        auto pop = run_constructive(*p, SearchConfig{}.population_size, FitnessKind::q, rng);
        RunStats s;
        for (const auto& c : pop) {
            s.feasible += c.report.feasible() ? 1 : 0;
            s.controlled += c.report.controlled() ? 1 : 0;
        }
        s.unique_feasible = unique_feasible(pop);
        b.runs.push_back(std::move(s));
    }
    b.seconds = seconds_since(t0);
    return batches.emplace(key, std::move(b)).first->second;
}

std::string counts(const Batch& b, std::size_t RunStats::*field) {
    std::string s;
    for (const auto& r : b.runs) s += (s.empty() ? "" : ",") + std::to_string(r.*field);
    return "[" + s + "]";
}

// ---------------------------------------------------------------------------
// 1. Solver oracle equivalence.

// Tile for a cell given wall/player/crate/target flags.
solvers::SokobanTile sokoban_tile(bool wall, bool player, bool crate, bool target) {
    using T = solvers::SokobanTile;
    if (wall) return T::wall;
    if (player) return target ? T::player_on_target : T::player;
    if (crate) return target ? T::crate_on_target : T::crate;
    return target ? T::target : T::floor;
}

bool check_sokoban(const solvers::SokobanLevel& level, std::string& why) {
    auto sol = solvers::solve_sokoban(level);
    auto ref = oracle::sokoban_bfs(level);
    if (sol.has_value() != ref.has_value()) {
        why = "solvability differs";
        return false;
    }
    if (!sol) return true;
    if (static_cast<int>(sol->size()) != *ref) {
        why = fmt::format("length {} vs oracle {}", sol->size(), *ref);
        return false;
    }
    auto end = solvers::replay_sokoban(level, *sol);
    if (!end || !solvers::sokoban_solved(*end)) {
        why = "solution does not replay";
        return false;
    }
    return true;
}

Verdict criterion_oracles() {
    const auto t0 = Clock::now();
    std::size_t sokoban_levels = 0;
    std::size_t platformer_levels = 0;
    std::size_t grid_maps = 0;
    std::string why;

    // Every 3x3 level: any wall set, one player, and one or two crates with
    // as many targets, overlaps included.
    for (int walls = 0; walls < (1 << 9); ++walls) {
        for (int player = 0; player < 9; ++player) {
            if (walls >> player & 1) continue;
            for (int crates = 1; crates < (1 << 9); ++crates) {
                const int k = __builtin_popcount(static_cast<unsigned>(crates));
                if (k > 2 || (crates & walls) || (crates >> player & 1)) continue;
                for (int targets = 1; targets < (1 << 9); ++targets) {
                    if (__builtin_popcount(static_cast<unsigned>(targets)) != k || (targets & walls)) continue;
                    solvers::SokobanLevel l{3, 3, std::vector<solvers::SokobanTile>(9)};
                    for (int i = 0; i < 9; ++i) {
                        l.tiles[static_cast<std::size_t>(i)] =
                            sokoban_tile(walls >> i & 1, i == player, crates >> i & 1, targets >> i & 1);
                    }
                    ++sokoban_levels;
                    if (!check_sokoban(l, why)) return {false, "sokoban 3x3: " + why};
                }
            }
        }
    }

    // Random 5x5 levels with at most two crates.
    Rng rng(kSeed);
    for (int i = 0; i < 5000; ++i) {
        std::vector<solvers::SokobanTile> tiles(25);
        for (auto& t : tiles) t = rng.bernoulli(0.3) ? solvers::SokobanTile::wall : solvers::SokobanTile::floor;
        std::vector<std::size_t> cells(25);
        for (std::size_t k = 0; k < 25; ++k) cells[k] = k;
        for (std::size_t k = 0; k < 25; ++k) std::swap(cells[k], cells[k + rng.index(25 - k)]);
        const int crates = 1 + static_cast<int>(rng.index(2));
        std::size_t next = 0;
        tiles[cells[next++]] = solvers::SokobanTile::player;
        for (int c = 0; c < crates; ++c) tiles[cells[next++]] = solvers::SokobanTile::crate;
        for (int c = 0; c < crates; ++c) tiles[cells[next++]] = solvers::SokobanTile::target;
        ++sokoban_levels;
        if (!check_sokoban({5, 5, tiles}, why)) return {false, "sokoban 5x5: " + why};
    }

    // Platformer levels with at most 12 free cells.
    while (platformer_levels < 3000) {
        const int w = 3 + static_cast<int>(rng.index(4));
        const int h = 3 + static_cast<int>(rng.index(3));
        solvers::PlatformerLevel l{w, h, std::vector<solvers::PlatformerTile>(static_cast<std::size_t>(w * h))};
        for (auto& t : l.tiles) {
            const double u = rng.uniform_real();
            t = u < 0.45 ? solvers::PlatformerTile::solid
                : u < 0.52 ? solvers::PlatformerTile::spike
                : u < 0.6  ? solvers::PlatformerTile::diamond
                           : solvers::PlatformerTile::empty;
        }
        const auto s = rng.index(l.tiles.size());
        const auto e = rng.index(l.tiles.size());
        if (s == e) continue;
        l.tiles[s] = solvers::PlatformerTile::start;
        l.tiles[e] = solvers::PlatformerTile::exit;
        int free_cells = 0;
        for (auto t : l.tiles) free_cells += t != solvers::PlatformerTile::solid ? 1 : 0;
        if (free_cells > 12) continue;
        ++platformer_levels;
        for (int jh = 1; jh <= 3; ++jh) {
            auto trace = solvers::solve_platformer(l, {jh});
            oracle::PlatformerOracle ref{l, jh};
            auto best = ref.shortest();
            if (trace.has_value() != best.has_value()) return {false, "platformer solvability differs"};
            if (!trace) continue;
            if (static_cast<int>(trace->actions.size()) != best->first || trace->jumps != best->second) {
                return {false, "platformer trace length or jumps differ"};
            }
            auto end = ref.replay(trace->actions);
            if (!end || !ref.done(*end)) return {false, "platformer trace fails oracle replay"};
        }
    }

    // 1000 random 8x8 grids: distances, components and diameter.
    for (; grid_maps < 1000; ++grid_maps) {
        std::vector<std::uint8_t> pass(64);
        for (auto& p : pass) p = rng.bernoulli(0.7) ? 1 : 0;
        solvers::GridMap map(8, 8, pass);
        for (int k = 0; k < 5; ++k) {
            const solvers::Cell a{static_cast<int>(rng.index(8)), static_cast<int>(rng.index(8))};
            const solvers::Cell b{static_cast<int>(rng.index(8)), static_cast<int>(rng.index(8))};
            const auto r = solvers::shortest_path(map, a, b);
            const int want = oracle::dijkstra_distance(map, a, b);
            if (r.reachable != (want >= 0) || (r.reachable && r.distance != want)) return {false, "grid distance differs"};
        }
        if (solvers::connected_components(map) != oracle::component_count(map)) return {false, "components differ"};
        if (map.passable_count() > 0 && solvers::graph_diameter(map) != oracle::all_pairs_diameter(map)) {
            return {false, "diameter differs"};
        }
    }

    const double secs = seconds_since(t0);
    return {secs < 120.0, fmt::format("{} sokoban levels, {} platformer levels x 3 jump heights, {} grids; {:.1f} s (limit 120 s)",
                                      sokoban_levels, platformer_levels, grid_maps, secs)};
}

// ---------------------------------------------------------------------------
// 2. Space laws and evaluator totality.

bool members(const std::vector<std::int64_t>& c, const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] != a[i] && c[i] != b[i]) return false;
    }
    return true;
}

Verdict criterion_space_laws() {
    const auto t0 = Clock::now();
    constexpr int kSamples = 10000;
    std::size_t checks = 0;
    for (const auto& name : builtin_registry().names()) {
        auto p = registry_make(name);
        Rng rng(Rng::derive(kSeed, std::hash<std::string>{}(name)));
        InfoRecord prev_info = p->info(space_sample(p->content_space(), rng));
        for (int i = 0; i < kSamples; ++i) {
            for (const auto* space : {&p->content_space(), &p->control_space()}) {
                const auto a = space_sample(*space, rng);
                const auto b = space_sample(*space, rng);
                if (!space_contains(*space, a)) return {false, name + ": sample outside space"};
                const auto fa = space_flatten(*space, a);
                if (space_unflatten(*space, fa) != a) return {false, name + ": flatten/unflatten not identity"};
                if (space_mutate(*space, a, 0.0, rng) != a) return {false, name + ": mutate(0) changed the value"};
                const auto m = space_mix(*space, a, b, rng);
                if (!space_contains(*space, m) || !members(space_flatten(*space, m), fa, space_flatten(*space, b))) {
                    return {false, name + ": mix leaf from neither parent"};
                }
                ++checks;
            }
            const auto content = space_sample(p->content_space(), rng);
            const auto control = space_sample(p->control_space(), rng);
            const auto info = p->info(content);
            for (double s : p->quality_subscores(info)) {
                if (!(s >= 0.0 && s <= 1.0)) return {false, name + ": subscore outside [0,1]"};
            }
            const double q = p->quality(info);
            const double t = p->controllability(info, control);
            const double d = p->diversity(info, prev_info);
            if (!(q >= 0.0 && q <= 1.0) || !(t >= 0.0 && t <= 1.0) || !(d >= 0.0 && d <= 1.0)) {
                return {false, name + ": evaluator outside [0,1]"};
            }
            prev_info = info;
        }
    }
    const double secs = seconds_since(t0);
    return {secs < 60.0, fmt::format("{} samples per problem, {} space checks over 8 problems; {:.1f} s (limit 60 s)",
                                     kSamples, checks, secs)};
}

// ---------------------------------------------------------------------------
// 3. Fitness branch algebra.

Verdict criterion_fitness_algebra() {
    std::size_t points = 0;
    const auto rep = [](double q, double t) {
        ArtifactReport r;
        r.quality = q;
        r.controllability = t;
        return r;
    };
    for (int qi = 0; qi <= 100; ++qi) {
        const double q = qi / 100.0;
        for (int ti = 0; ti <= 100; ++ti) {
            const double t = ti / 100.0;
            const auto r = rep(q, t);
            const double qt = fitness_qt(r);
            if ((qt < 0.5) != (q < 1.0) || qt < 0.0 || qt > 1.0) return {false, fmt::format("qt branch at q={} t={}", q, t)};
            if (fitness_q(r) != q) return {false, "q is not the identity"};
            if (q == 1.0 && ti > 0 && !(qt > fitness_qt(rep(q, (ti - 1) / 100.0)))) {
                return {false, fmt::format("qt not increasing in t at t={}", t)};
            }
            for (int di = 0; di <= 100; ++di) {
                const double d = di / 100.0;
                const double f = fitness_qtd(r, d);
                ++points;
                if (f < 0.0 || f > 1.0) return {false, "qtd outside [0,1]"};
                if ((f < 1.0 / 3.0) != (q < 1.0)) return {false, fmt::format("qtd 1/3 threshold at q={} t={} d={}", q, t, d)};
                if ((f < 2.0 / 3.0) != (q < 1.0 || t < 1.0)) {
                    return {false, fmt::format("qtd 2/3 threshold at q={} t={} d={}", q, t, d)};
                }
                if (q == 1.0 && ti > 0 && !(f > fitness_qtd(rep(q, (ti - 1) / 100.0), d))) {
                    return {false, "qtd not increasing in t on the feasible branch"};
                }
                if (q == 1.0 && t == 1.0 && di > 0 && !(f > fitness_qtd(r, (di - 1) / 100.0))) {
                    return {false, "qtd not increasing in d on the controlled branch"};
                }
            }
        }
    }
    return {true, fmt::format("{} (q,t,d) grid points", points)};
}

// ---------------------------------------------------------------------------
// 4-8. Search behavior.

Verdict criterion_es_saturation() {
    const auto& bin = search_batch("binary-v0", GeneratorKind::es, FitnessKind::q);
    const auto& md = search_batch("minidungeons-v0", GeneratorKind::es, FitnessKind::q);
    const auto full = [](const RunStats& r) { return r.feasible == 100; };
    const auto nb = bin.count_if(full);
    const auto nm = md.count_if(full);
    return {nb >= 9 && nm >= 9 && bin.seconds < 600 && md.seconds < 600,
            fmt::format("runs with 100/100 feasible: binary {}/10 ({:.0f} s), minidungeons {}/10 ({:.0f} s); need >= 9 each",
                        nb, bin.seconds, nm, md.seconds)};
}

Verdict criterion_random_stagnation() {
    const auto& b = search_batch("binary-v0", GeneratorKind::random, FitnessKind::q);
    const auto n = b.count_if([](const RunStats& r) { return r.feasible == 0; });
    return {n >= 9, fmt::format("runs with 0 feasible: {}/10 (need >= 9); feasible per run {}", n, counts(b, &RunStats::feasible))};
}

Verdict criterion_zelda_ga() {
    const auto& b = search_batch("zelda-v0", GeneratorKind::ga, FitnessKind::q);
    const auto n = b.count_if([](const RunStats& r) { return r.ever_feasible; });
    return {n >= 7, fmt::format("runs with a feasible chromosome: {}/10 (need >= 7)", n)};
}

Verdict criterion_controllability() {
    std::string detail;
    bool pass = true;
    for (const char* problem : {"binary-v0", "sokoban-v0"}) {
        for (auto gen : {GeneratorKind::ga, GeneratorKind::es}) {
            const auto& q = search_batch(problem, gen, FitnessKind::q);
            const auto& qt = search_batch(problem, gen, FitnessKind::qt);
            const double mq = q.mean(&RunStats::controlled);
            const double mqt = qt.mean(&RunStats::controlled);
            pass = pass && mqt > mq;
            detail += fmt::format("{}{} {}: QT {:.1f} vs Q {:.1f}", detail.empty() ? "" : "; ", problem, to_string(gen), mqt, mq);
        }
    }
    return {pass, "mean controlled " + detail};
}

Verdict criterion_constructive() {
    const auto& con = constructive_batch("sokoban-v0");
    const auto& ga = search_batch("sokoban-v0", GeneratorKind::ga, FitnessKind::q);
    const auto& es = search_batch("sokoban-v0", GeneratorKind::es, FitnessKind::q);
    const double con_f = con.mean(&RunStats::feasible);
    const double ga_f = ga.mean(&RunStats::feasible);
    const double con_u = con.mean(&RunStats::unique_feasible);
    const double search_u = ga.mean(&RunStats::unique_feasible) + es.mean(&RunStats::unique_feasible);
    const bool feasible_order = con_f > ga_f;
    const bool unique_order = search_u >= con_u;
    return {feasible_order && unique_order,
            fmt::format("feasible: constructive {:.1f} > GA {:.1f} [{}]; unique-feasible: GA+ES {:.1f} >= constructive {:.1f} [{}]",
                        con_f, ga_f, feasible_order ? "ok" : "violated", search_u, con_u, unique_order ? "ok" : "violated")};
}

// ---------------------------------------------------------------------------
// 9. Monotone elitism over every logged run of this suite, plus Q and QT
// runs of each generator on every grid problem.

Verdict criterion_monotone() {
    for (const char* problem : {"zelda-v0", "isaac-v0", "dave-v0", "elimination-v0", "building-v0"}) {
        for (auto gen : {GeneratorKind::random, GeneratorKind::es, GeneratorKind::ga}) {
            auto p = registry_make(problem);
            SearchConfig cfg;
            cfg.generations = 30;
            for (auto fit : {FitnessKind::q, FitnessKind::qt}) {
                Rng rng(Rng::derive(kSeed, 99));
                auto res = run_search(gen, *p, fit, cfg, rng);
                Batch b;
                b.label = fmt::format("{} {} {} short", problem, to_string(gen), to_string(fit));
                RunStats s;
                for (const auto& rec : res.log) s.max_fitness.push_back(rec.max_fitness);
                b.runs.push_back(std::move(s));
                cache().emplace(b.label, std::move(b));
            }
        }
    }
    std::size_t runs = 0;
    std::map<std::string, std::size_t> per_generator;
    for (const auto& [key, b] : cache()) {
        if (key.find("constructive") != std::string::npos) continue;
        for (const auto& r : b.runs) {
            ++runs;
            for (std::size_t g = 1; g < r.max_fitness.size(); ++g) {
                if (r.max_fitness[g] < r.max_fitness[g - 1]) {
                    return {false, fmt::format("{}: max fitness fell at generation {}", key, g)};
                }
            }
        }
        for (const char* gen : {"random", "es", "ga"}) {
            if (key.find(std::string(" ") + gen + " ") != std::string::npos) per_generator[gen] += b.runs.size();
        }
    }
    const bool all_generators = per_generator["random"] > 0 && per_generator["es"] > 0 && per_generator["ga"] > 0;
    return {all_generators, fmt::format("{} logged runs (random {}, es {}, ga {}), max fitness never decreased", runs,
                                        per_generator["random"], per_generator["es"], per_generator["ga"])};
}

// ---------------------------------------------------------------------------
// 10. CLI determinism.

std::map<std::string, std::string> tree_bytes(const fs::path& root) {
    std::map<std::string, std::string> out;
    for (const auto& e : fs::recursive_directory_iterator(root)) {
        if (!e.is_regular_file()) continue;
        std::ifstream in(e.path(), std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        out[fs::relative(e.path(), root).string()] = ss.str();
    }
    return out;
}

Verdict criterion_determinism() {
    const auto dir = fs::temp_directory_path() / fmt::format("pcgbench_acceptance_{}", ::getpid());
    fs::remove_all(dir);
    fs::create_directories(dir);
    harness::ExperimentConfig c;
    c.problem = "sokoban-v0";
    c.generator = "ga";
    c.fitness = FitnessKind::qtd;
    c.search.generations = 25;
    c.search.runs = 3;
    c.search.seed = kSeed;
    c.output = dir / "out";
    {
        std::ofstream(dir / "experiment.ini") << c.to_ini();
    }
    std::vector<std::map<std::string, std::string>> trees;
    for (int attempt = 0; attempt < 2; ++attempt) {
        fs::remove_all(c.output);
        const auto cmd = fmt::format("{} run --config {} > {} 2>&1", PCGBENCH_CLI_PATH, (dir / "experiment.ini").string(),
                                     (dir / "cli.log").string());
        if (std::system(cmd.c_str()) != 0) return {false, "cli run failed"};
        trees.push_back(tree_bytes(c.output));
    }
    fs::remove_all(dir);
    const bool same = trees[0] == trees[1];
    std::size_t populations = 0;
    for (const auto& [name, bytes] : trees[0]) populations += name.find("population.json") != std::string::npos ? 1 : 0;
    const bool complete = trees[0].count("summary.csv") == 1 && populations == 3;
    return {same && complete, fmt::format("{} files compared byte for byte (summary.csv and {} population files){}",
                                          trees[0].size(), populations, same ? "" : "; trees differ")};
}

// ---------------------------------------------------------------------------
// 11. LLM bridge robustness against the bundled mock endpoint.

Verdict criterion_llm() {
    std::size_t well_formed = 0;
    std::size_t parsed_ok = 0;
    std::size_t garbage = 0;
    std::size_t garbage_failed = 0;
    std::size_t echoes = 0;
    std::size_t echo_flags = 0;
    try {
        for (const char* name : {"binary-v0", "sokoban-v0", "zelda-v0"}) {
            auto p = registry_make(name);
            const auto tmpl = llm::default_template(*p);
            Rng rng(kSeed);

            // Well-formed grids: random contents rendered with the legend, wrapped in prose.
            std::vector<Value> sent;
            for (int i = 0; i < 40; ++i) sent.push_back(space_sample(p->content_space(), rng));
            fixtures::MockLlm good([&](const std::string&, std::size_t i) {
                return fmt::format("Level {} follows.\n```\n{}```\nThat is all.", i, llm::grid_to_text(*p, tmpl.legend, sent[i]));
            });
            llm::EndpointConfig e;
            e.url = good.url();
            e.timeout_seconds = 5;
            auto batch = llm::run_llm_generator(*p, tmpl, e, sent.size(), rng);
            well_formed += sent.size();
            for (std::size_t i = 0; i < batch.contents.size() && i < sent.size(); ++i) parsed_ok += batch.contents[i] == sent[i] ? 1 : 0;

            // Garbage replies and broken transports.
            const std::vector<std::string> junk = {
                "", "no grid here", "```", "```\n```", "```\n#\n```", std::string(5000, '#'), "```\n\x01\x02\x03\n```",
                "```json\n{\"level\": 1}\n```", "```\n" + std::string(14, '?') + "\n```",
            };
            fixtures::MockLlm bad([&](const std::string&, std::size_t i) {
                if (i < junk.size()) return junk[i];
                std::string s;
                for (int k = 0; k < 200; ++k) s.push_back(static_cast<char>(32 + (i * 131 + static_cast<std::size_t>(k) * 17) % 64));
                return s;
            });
            e.url = bad.url();
            auto g = llm::run_llm_generator(*p, tmpl, e, 30, rng);
            garbage += 30;
            garbage_failed += g.stats.failed;
            for (const char* path : {"/broken", "/error", "/missing"}) {
                e.url = bad.url(path);
                e.max_retries = 1;
                auto t = llm::run_llm_generator(*p, tmpl, e, 5, rng);
                garbage += 5;
                garbage_failed += t.stats.failed;
            }

            // Echoed prompt examples.
            fixtures::MockLlm echo(fixtures::MockLlm::echo_first_example);
            e.url = echo.url();
            auto c = llm::run_llm_generator(*p, tmpl, e, 10, rng);
            echoes += 10;
            for (std::size_t i = 0; i < c.contents.size(); ++i) {
                echo_flags += c.duplicate_of_example[i] && c.contents[i] == tmpl.examples[0] ? 1 : 0;
            }
        }
    } catch (const std::exception& ex) {
        return {false, std::string("exception escaped the bridge: ") + ex.what()};
    }
    const bool pass = parsed_ok == well_formed && garbage_failed == garbage && echo_flags == echoes;
    return {pass, fmt::format("parsed {}/{} well-formed; {}/{} garbage or failed replies counted without crashing; "
                              "{}/{} echoes flagged as copies",
                              parsed_ok, well_formed, garbage_failed, garbage, echo_flags, echoes)};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Verdict (*run)();
    };
    const Criterion criteria[] = {
        {1, "solver oracle equivalence", criterion_oracles},
        {2, "space laws", criterion_space_laws},
        {3, "fitness branch algebra", criterion_fitness_algebra},
        {4, "ES saturation on binary and minidungeons", criterion_es_saturation},
        {5, "random search stagnation on binary", criterion_random_stagnation},
        {6, "zelda GA reliability", criterion_zelda_ga},
        {7, "controllability pressure", criterion_controllability},
        {8, "constructive vs GA on sokoban", criterion_constructive},
        {9, "monotone elitism", criterion_monotone},
        {10, "CLI determinism", criterion_determinism},
        {11, "LLM bridge robustness", criterion_llm},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("error: ") + e.what()};
        }
        failed += v.pass ? 0 : 1;
        std::printf("%s criterion %d (%s): %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(),
                    seconds_since(t0));
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed;
}
