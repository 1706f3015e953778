#include "pcgbench/core/evaluate.hpp"

#include "pcgbench/core/parallel.hpp"

#include <algorithm>
#include <thread>

#include <fmt/format.h>

namespace pcgb {

namespace {

double percent(std::size_t hits, std::size_t n) { return 100.0 * static_cast<double>(hits) / static_cast<double>(n); }

}  // namespace

ArtifactReport assess(const Problem& problem, const Value& content, const Value* control) {
    ArtifactReport a;
    a.info = problem.info(content);
    a.quality = std::clamp(problem.quality(a.info), 0.0, 1.0);
    a.controllability = control ? std::clamp(problem.controllability(a.info, *control), 0.0, 1.0) : 0.0;
    return a;
}

std::vector<double> batch_diversity(const Problem& problem, std::span<const InfoRecord> infos, unsigned workers) {
    const std::size_t n = infos.size();
    std::vector<double> out(n, 1.0);
    if (n < 2) return out;
    parallel_for(n, workers, [&](std::size_t i) {
        double best = 1.0;
        for (std::size_t j = 0; j < n && best > 0.0; ++j) {
            if (j == i) continue;
            best = std::min(best, problem.diversity(infos[i], infos[j]));
        }
        out[i] = best;
    });
    return out;
}

BenchmarkReport evaluate(const Problem& problem, std::span<const Value> contents,
                         std::optional<std::span<const Value>> controls, const EvaluateOptions& options) {
    const std::size_t n = contents.size();
    if (n == 0) throw std::invalid_argument("empty batch");
    if (controls && controls->size() != n) {
        throw EvaluationError(
            fmt::format("control count {} does not match content count {}", controls->size(), n),
            std::min(controls->size(), n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!space_contains(problem.content_space(), contents[i])) {
            throw EvaluationError(fmt::format("content {} is not in {} content space {}", i, problem.name(),
                                              problem.content_space().to_string()),
                                  i);
        }
        if (controls && !space_contains(problem.control_space(), (*controls)[i])) {
            throw EvaluationError(fmt::format("control {} is not in {} control space {}", i, problem.name(),
                                              problem.control_space().to_string()),
                                  i);
        }
    }

    BenchmarkReport report;
    report.artifacts.resize(n);
    parallel_for(n, options.workers, [&](std::size_t i) {
        report.artifacts[i] = assess(problem, contents[i], controls ? &(*controls)[i] : nullptr);
    });

    std::vector<InfoRecord> infos;
    infos.reserve(n);
    for (const auto& a : report.artifacts) infos.push_back(a.info);
    const auto div = batch_diversity(problem, infos, options.workers);
    for (std::size_t i = 0; i < n; ++i) report.artifacts[i].diversity = std::clamp(div[i], 0.0, 1.0);

    report.r_quality = percent(count_feasible(report.artifacts), n);
    report.r_diversity = percent(count_unique(report.artifacts), n);
    report.r_controllability = controls ? percent(count_controlled(report.artifacts), n) : 0.0;
    return report;
}

std::size_t count_feasible(std::span<const ArtifactReport> reports) {
    return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.feasible(); }));
}

std::size_t count_unique(std::span<const ArtifactReport> reports) {
    return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.unique(); }));
}

std::size_t count_controlled(std::span<const ArtifactReport> reports) {
    return static_cast<std::size_t>(
        std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.controlled(); }));
}

void to_json(nlohmann::json& j, const ArtifactReport& r) {
    j = nlohmann::json{{"quality", r.quality},
                       {"diversity", r.diversity},
                       {"controllability", r.controllability},
                       {"info", r.info}};
}

void to_json(nlohmann::json& j, const BenchmarkReport& r) {
    j = nlohmann::json{{"r_quality", r.r_quality},
                       {"r_diversity", r.r_diversity},
                       {"r_controllability", r.r_controllability},
                       {"artifacts", r.artifacts}};
}

nlohmann::json value_to_json(const Value& v) {
    if (v.is_leaf()) return v.leaf();
    auto arr = nlohmann::json::array();
    for (const auto& child : v.items()) arr.push_back(value_to_json(child));
    return arr;
}

namespace {

Value from_json_rec(const nlohmann::json& j, const SpaceDescriptor& s);

Value nested_from_json(const nlohmann::json& j, const SpaceDescriptor& elem, const std::vector<std::size_t>& dims,
                       std::size_t level) {
    if (!j.is_array() || j.size() != dims[level]) {
        throw std::invalid_argument(fmt::format("expected an array of length {}", dims[level]));
    }
    std::vector<Value> items;
    items.reserve(j.size());
    for (const auto& child : j) {
        items.push_back(level == 0 ? from_json_rec(child, elem) : nested_from_json(child, elem, dims, level - 1));
    }
    return Value::list(std::move(items));
}

Value from_json_rec(const nlohmann::json& j, const SpaceDescriptor& s) {
    if (s.is_leaf()) {
        if (!j.is_number_integer()) throw std::invalid_argument("expected an integer leaf");
        const auto v = j.get<std::int64_t>();
        if (!s.bounds().contains(v)) {
            throw std::invalid_argument(fmt::format("leaf {} outside [{}, {}]", v, s.bounds().lo, s.bounds().hi));
        }
        return Value(v);
    }
    if (s.kind() == SpaceDescriptor::Kind::record) {
        const auto& fields = s.fields();
        std::vector<Value> items;
        items.reserve(fields.size());
        if (j.is_object()) {
            if (j.size() != fields.size()) throw std::invalid_argument("record has the wrong field count");
            for (const auto& f : fields) {
                if (!j.contains(f.name)) throw std::invalid_argument("record is missing field '" + f.name + "'");
                items.push_back(from_json_rec(j.at(f.name), f.space));
            }
        } else {
            if (!j.is_array() || j.size() != fields.size()) {
                throw std::invalid_argument(fmt::format("expected a record of {} fields", fields.size()));
            }
            for (std::size_t i = 0; i < fields.size(); ++i) items.push_back(from_json_rec(j[i], fields[i].space));
        }
        return Value::list(std::move(items));
    }
    return nested_from_json(j, s.element(), s.dims(), s.dims().size() - 1);
}

}  // namespace

Value value_from_json(const nlohmann::json& j, const SpaceDescriptor& space) { return from_json_rec(j, space); }

nlohmann::json batch_to_json(const std::string& problem, std::span<const Value> values) {
    auto arr = nlohmann::json::array();
    for (const auto& v : values) arr.push_back(value_to_json(v));
    return nlohmann::json{{"problem", problem}, {"values", std::move(arr)}};
}

std::vector<Value> batch_from_json(const nlohmann::json& doc, const SpaceDescriptor& space, std::string* problem_name) {
    if (!doc.is_object() || !doc.contains("values") || !doc.at("values").is_array()) {
        throw std::invalid_argument("batch document must be an object with a \"values\" array");
    }
    if (problem_name != nullptr) {
        *problem_name = doc.contains("problem") && doc.at("problem").is_string() ? doc.at("problem").get<std::string>()
                                                                               : std::string{};
    }
    std::vector<Value> out;
    const auto& values = doc.at("values");
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        try {
            out.push_back(value_from_json(values[i], space));
        } catch (const std::invalid_argument& e) {
            throw EvaluationError(fmt::format("entry {}: {}", i, e.what()), i);
        }
    }
    return out;
}

}  // namespace pcgb
