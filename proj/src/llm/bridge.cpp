#include "pcgbench/llm/bridge.hpp"

#include <cstdlib>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "pcgbench/core/parallel.hpp"
#include "pcgbench/problems/problems.hpp"
#include "templates.hpp"

namespace pcgb::llm {

namespace {

struct GridShape {
    int width;
    int height;
};

GridShape shape_of(const Problem& problem) {
    const auto& dims = problem.content_space().dims();
    return {static_cast<int>(dims[0]), static_cast<int>(dims[1])};
}

Value grid_from_rows(const Problem& problem, const Legend& legend, const std::vector<std::string>& rows) {
    const auto shape = shape_of(problem);
    std::vector<int> tiles;
    for (const auto& row : rows) {
        for (char ch : row) {
            int symbol = -1;
            for (std::size_t s = 0; s < legend.symbols.size(); ++s) {
                if (legend.symbols[s] == ch) symbol = static_cast<int>(s);
            }
            if (symbol < 0) throw std::logic_error(fmt::format("bundled example uses unknown character '{}'", ch));
            tiles.push_back(symbol);
        }
    }
    return problems::make_grid(tiles, shape.width, shape.height);
}

PromptTemplate make_template(const Problem& problem, std::string rules, std::string goal, Legend legend,
                             const std::vector<std::vector<std::string>>& rows) {
    PromptTemplate t{std::move(rules), std::move(goal), std::move(legend), {}};
    for (const auto& ex : rows) t.examples.push_back(grid_from_rows(problem, t.legend, ex));
    return t;
}

std::string rstrip(std::string s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
    return s;
}

}  // namespace

bool llm_supports(const std::string& problem_name) {
    return problem_name == "binary-v0" || problem_name == "sokoban-v0" || problem_name == "zelda-v0";
}

PromptTemplate default_template(const Problem& problem) {
    const auto& name = problem.name();
    const auto shape = shape_of(problem);
    if (name == "binary-v0") {
        return make_template(
            problem,
            fmt::format("A level is a {}x{} maze of empty and solid tiles. Movement is between orthogonally adjacent "
                        "empty tiles.",
                        shape.width, shape.height),
            fmt::format("Make every empty tile reachable from every other one, and make the longest shortest path "
                        "between two empty tiles at least {} steps.",
                        problem.params().get_int("path_target")),
            {{'.', '#'}, {"empty", "solid"}}, detail::binary_examples());
    }
    if (name == "sokoban-v0") {
        return make_template(
            problem,
            fmt::format("A Sokoban level is a {}x{} grid. The player walks between floor tiles and pushes crates; a "
                        "crate moves one tile when pushed and cannot be pulled. Tiles outside the grid are walls.",
                        shape.width, shape.height),
            fmt::format("Place exactly one player and as many targets as crates, so that every crate can be pushed "
                        "onto a target and the shortest solution takes at least {} moves.",
                        problem.params().get_int("min_solution")),
            {{'-', '#', '@', '$', '.'}, {"floor", "wall", "player", "crate", "target"}}, detail::sokoban_examples());
    }
    if (name == "zelda-v0") {
        return make_template(
            problem,
            fmt::format("A Zelda dungeon is a {}x{} grid. The player must walk to the key, then to the door, moving "
                        "between orthogonally adjacent non-solid tiles.",
                        shape.width, shape.height),
            fmt::format("Place exactly one player, one key and one door, between {} and {} enemies, keep all open "
                        "tiles connected, and make the walk player->key->door at least {} steps.",
                        problem.params().get_int("enemy_min"), problem.params().get_int("enemy_max"),
                        problem.params().get_int("solution_target")),
            {{'.', 'w', 'A', '+', 'g', 'e'}, {"empty", "solid", "player", "key", "door", "enemy"}},
            detail::zelda_examples());
    }
    throw std::invalid_argument("no prompt template for '" + name + "' (supported: binary-v0, sokoban-v0, zelda-v0)");
}

std::string grid_to_text(const Problem& problem, const Legend& legend, const Value& content) {
    const auto shape = shape_of(problem);
    const auto tiles = problems::grid_symbols(content, shape.width, shape.height);
    std::string out;
    for (int y = 0; y < shape.height; ++y) {
        for (int x = 0; x < shape.width; ++x) {
            out.push_back(legend.symbols.at(static_cast<std::size_t>(tiles[static_cast<std::size_t>(y * shape.width + x)])));
        }
        out.push_back('\n');
    }
    return out;
}

std::string build_prompt(const Problem& problem, const PromptTemplate& tmpl) {
    if (!llm_supports(problem.name())) throw std::invalid_argument("unsupported problem '" + problem.name() + "'");
    if (tmpl.examples.size() != 5) {
        throw std::invalid_argument(fmt::format("prompt needs exactly 5 examples, got {}", tmpl.examples.size()));
    }
    const auto shape = shape_of(problem);
    std::string p;
    p += "Rules: " + tmpl.rules + "\n\n";
    p += "Goal: " + tmpl.goal + "\n\n";
    p += "Legend:\n";
    for (std::size_t s = 0; s < tmpl.legend.symbols.size(); ++s) {
        p += fmt::format("  {} = {}\n", tmpl.legend.symbols[s], tmpl.legend.names[s]);
    }
    p += "\n";
    for (std::size_t i = 0; i < tmpl.examples.size(); ++i) {
        p += fmt::format("Example {}:\n```\n{}```\n\n", i + 1, grid_to_text(problem, tmpl.legend, tmpl.examples[i]));
    }
    p += fmt::format("Write one new level of exactly {} rows of {} characters using only the legend characters. "
                     "Put the level between ``` lines and write nothing else inside them.\n",
                     shape.height, shape.width);
    return p;
}

ParseResult parse_response(const Problem& problem, const Legend& legend, const std::string& text) {
    ParseResult r;
    const auto open = text.find("```");
    if (open == std::string::npos) {
        r.diagnostic = "no fenced grid in reply";
        return r;
    }
    auto body_start = text.find('\n', open);
    if (body_start == std::string::npos) {
        r.diagnostic = "unterminated fence";
        return r;
    }
    ++body_start;
    const auto close = text.find("```", body_start);
    if (close == std::string::npos) {
        r.diagnostic = "unterminated fence";
        return r;
    }
    std::vector<std::string> rows;
    std::istringstream body(text.substr(body_start, close - body_start));
    for (std::string line; std::getline(body, line);) {
        line = rstrip(line);
        if (!line.empty()) rows.push_back(line);
    }
    const auto shape = shape_of(problem);
    if (static_cast<int>(rows.size()) != shape.height) {
        r.diagnostic = fmt::format("expected {} rows, got {}", shape.height, rows.size());
        return r;
    }
    std::vector<int> tiles;
    tiles.reserve(static_cast<std::size_t>(shape.width * shape.height));
    for (int y = 0; y < shape.height; ++y) {
        const auto& row = rows[static_cast<std::size_t>(y)];
        if (static_cast<int>(row.size()) != shape.width) {
            r.diagnostic = fmt::format("row {} has {} characters, expected {}", y, row.size(), shape.width);
            return r;
        }
        for (int x = 0; x < shape.width; ++x) {
            const char ch = row[static_cast<std::size_t>(x)];
            int symbol = -1;
            for (std::size_t s = 0; s < legend.symbols.size(); ++s) {
                if (legend.symbols[s] == ch) symbol = static_cast<int>(s);
            }
            if (symbol < 0) {
                r.diagnostic = fmt::format("unknown character '{}' at row {}, column {}", ch, y, x);
                return r;
            }
            tiles.push_back(symbol);
        }
    }
    r.value = problems::make_grid(tiles, shape.width, shape.height);
    return r;
}

void EndpointConfig::validate() const {
    if (url.empty()) throw std::invalid_argument(fmt::format("no LLM endpoint URL (set {} or pass one)", kEndpointEnv));
    if (!(timeout_seconds > 0.0)) throw std::invalid_argument("endpoint timeout must be positive");
    if (max_retries < 0) throw std::invalid_argument("endpoint retries must be >= 0");
}

EndpointConfig endpoint_from_env() {
    EndpointConfig e;
    if (const char* url = std::getenv(kEndpointEnv)) e.url = url;
    return e;
}

std::string complete(const EndpointConfig& endpoint, const std::string& prompt) {
    // Split "scheme://host:port/path" into the client base and the request path.
    const auto scheme_end = endpoint.url.find("://");
    const auto path_start = endpoint.url.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
    const std::string base = path_start == std::string::npos ? endpoint.url : endpoint.url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : endpoint.url.substr(path_start);

    httplib::Client client(base);
    const auto secs = static_cast<time_t>(endpoint.timeout_seconds);
    const auto usecs = static_cast<time_t>((endpoint.timeout_seconds - static_cast<double>(secs)) * 1e6);
    client.set_connection_timeout(secs, usecs);
    client.set_read_timeout(secs, usecs);
    client.set_write_timeout(secs, usecs);

    const nlohmann::json body = {{"model", endpoint.model},
                                 {"prompt", prompt},
                                 {"temperature", endpoint.temperature},
                                 {"max_tokens", endpoint.max_tokens}};
    auto res = client.Post(path, body.dump(), "application/json");
    if (!res) throw std::runtime_error("request failed: " + httplib::to_string(res.error()));
    if (res->status != 200) throw std::runtime_error(fmt::format("endpoint returned HTTP {}", res->status));
    const auto reply = nlohmann::json::parse(res->body, nullptr, false);
    if (reply.is_discarded() || !reply.is_object() || !reply.contains("text") || !reply["text"].is_string()) {
        throw std::runtime_error("reply is not a JSON object with a string \"text\" field");
    }
    return reply["text"].get<std::string>();
}

LlmBatch run_llm_generator(const Problem& problem, const EndpointConfig& endpoint, std::size_t count, Rng& rng) {
    return run_llm_generator(problem, default_template(problem), endpoint, count, rng);
}

LlmBatch run_llm_generator(const Problem& problem, const PromptTemplate& tmpl, const EndpointConfig& endpoint,
                           std::size_t count, Rng& rng) {
    endpoint.validate();
    const std::string prompt = build_prompt(problem, tmpl);

    struct Reply {
        std::optional<std::string> text;
        std::size_t attempts = 0;
        std::string error;
    };
    std::vector<Reply> replies(count);
    parallel_for(count, std::max(1u, endpoint.max_in_flight), [&](std::size_t i) {
        auto& r = replies[i];
        for (int attempt = 0; attempt <= endpoint.max_retries; ++attempt) {
            ++r.attempts;
            try {
                r.text = complete(endpoint, prompt);
                return;
            } catch (const std::exception& e) {
                r.error = e.what();
            }
        }
    });

    LlmBatch batch;
    batch.stats.requests = count;
    for (std::size_t i = 0; i < count; ++i) {
        const auto& r = replies[i];
        batch.stats.attempts += r.attempts;
        if (!r.text) {
            ++batch.stats.failed;
            batch.stats.diagnostics.push_back(fmt::format("request {}: {}", i, r.error));
            continue;
        }
        auto parsed = parse_response(problem, tmpl.legend, *r.text);
        if (!parsed.value) {
            ++batch.stats.failed;
            batch.stats.diagnostics.push_back(fmt::format("request {}: {}", i, parsed.diagnostic));
            continue;
        }
        ++batch.stats.parsed;
        bool duplicate = false;
        for (const auto& ex : tmpl.examples) duplicate = duplicate || ex == *parsed.value;
        if (duplicate) {
            ++batch.stats.duplicates;
            batch.stats.diagnostics.push_back(fmt::format("request {}: copy of a prompt example", i));
        }
        batch.contents.push_back(std::move(*parsed.value));
        batch.controls.push_back(space_sample(problem.control_space(), rng));
        batch.duplicate_of_example.push_back(duplicate);
    }
    return batch;
}

}  // namespace pcgb::llm
