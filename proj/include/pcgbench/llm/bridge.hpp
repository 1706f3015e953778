#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcgbench/core/problem.hpp"
#include "pcgbench/core/rng.hpp"

namespace pcgb::llm {

/// Character per tile symbol (index = symbol).
struct Legend {
    std::vector<char> symbols;
    std::vector<std::string> names;
};

struct PromptTemplate {
    std::string rules;
    std::string goal;
    Legend legend;
    std::vector<Value> examples;  // exactly five
};

/// True for binary-v0, sokoban-v0 and zelda-v0.
[[nodiscard]] bool llm_supports(const std::string& problem_name);

/// Bundled rules, goal, legend and five feasible example levels for a
/// supported problem. Throws std::invalid_argument otherwise.
[[nodiscard]] PromptTemplate default_template(const Problem& problem);

/// Character grid of a content value, one row per line.
[[nodiscard]] std::string grid_to_text(const Problem& problem, const Legend& legend, const Value& content);

/// Rules, goal, legend, the five examples (each fenced with ```), and the
/// output-format instruction. Throws std::invalid_argument for an
/// unsupported problem or a template without exactly five examples.
[[nodiscard]] std::string build_prompt(const Problem& problem, const PromptTemplate& tmpl);

struct ParseResult {
    std::optional<Value> value;
    std::string diagnostic;  // empty on success
};

/// First ```-fenced block of the reply read as a character grid. Surrounding
/// prose and trailing whitespace on each row are ignored.
[[nodiscard]] ParseResult parse_response(const Problem& problem, const Legend& legend, const std::string& text);

struct EndpointConfig {
    std::string url;  // e.g. http://127.0.0.1:8080/complete
    std::string model = "default";
    double timeout_seconds = 30.0;
    int max_retries = 2;
    double temperature = 0.7;
    int max_tokens = 1024;
    unsigned max_in_flight = 1;

    /// Throws std::invalid_argument when timeout <= 0, retries < 0 or the URL is empty.
    void validate() const;
};

/// Environment variable holding the default endpoint URL.
inline constexpr const char* kEndpointEnv = "PCGBENCH_LLM_ENDPOINT";

/// EndpointConfig with the URL taken from PCGBENCH_LLM_ENDPOINT (empty if unset).
[[nodiscard]] EndpointConfig endpoint_from_env();

/// POSTs {model, prompt, temperature, max_tokens} and returns the reply's
/// "text" field. Throws std::runtime_error on transport errors, non-200
/// status or a malformed reply.
[[nodiscard]] std::string complete(const EndpointConfig& endpoint, const std::string& prompt);

struct LlmStats {
    std::size_t requests = 0;   // completions asked for
    std::size_t attempts = 0;   // HTTP calls including retries
    std::size_t parsed = 0;
    std::size_t failed = 0;     // transport failures after retries, plus unparseable replies
    std::size_t duplicates = 0; // parsed grids identical to a prompt example
    std::vector<std::string> diagnostics;
};

struct LlmBatch {
    std::vector<Value> contents;
    std::vector<Value> controls;            // sampled from the control space
    std::vector<bool> duplicate_of_example; // parallel to contents
    LlmStats stats;
};

/// Issues `count` completion requests with the template's prompt, parses the
/// replies in request order and pairs each parsed grid with a sampled
/// control. Never throws for endpoint or parse failures; those are counted.
[[nodiscard]] LlmBatch run_llm_generator(const Problem& problem, const EndpointConfig& endpoint, std::size_t count,
                                         Rng& rng);
[[nodiscard]] LlmBatch run_llm_generator(const Problem& problem, const PromptTemplate& tmpl,
                                         const EndpointConfig& endpoint, std::size_t count, Rng& rng);

}  // namespace pcgb::llm
