#include "pcgbench/core/registry.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace pcgb {

void ProblemRegistry::add(const std::string& name, VariantParams defaults, Factory factory) {
    entries_[name] = Entry{std::move(defaults), std::move(factory)};
}

void ProblemRegistry::reserve(const std::string& name, std::string reason) { reserved_[name] = std::move(reason); }

std::unique_ptr<Problem> ProblemRegistry::make(const std::string& name,
                                               const std::map<std::string, ParamValue>& overrides) const {
    if (auto r = reserved_.find(name); r != reserved_.end()) {
        throw RegistryError(fmt::format("problem '{}' is reserved and not implemented: {}", name, r->second));
    }
    auto it = entries_.find(name);
    if (it == entries_.end()) {
        throw RegistryError(fmt::format("unknown problem '{}'; registered problems: {}", name, fmt::join(names(), ", ")));
    }
    VariantParams params = it->second.defaults;
    try {
        params.override_with(overrides);
    } catch (const std::invalid_argument& e) {
        throw RegistryError(fmt::format("{}: {}", name, e.what()));
    }
    return it->second.factory(params);
}

std::vector<std::string> ProblemRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& [name, entry] : entries_) out.push_back(name);
    return out;
}

std::vector<std::string> ProblemRegistry::reserved_names() const {
    std::vector<std::string> out;
    for (const auto& [name, reason] : reserved_) out.push_back(name);
    return out;
}

const VariantParams& ProblemRegistry::defaults(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw RegistryError("unknown problem '" + name + "'");
    return it->second.defaults;
}

std::unique_ptr<Problem> registry_make(const std::string& name, const std::map<std::string, ParamValue>& overrides) {
    return builtin_registry().make(name, overrides);
}

}  // namespace pcgb
