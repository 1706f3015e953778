#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pcgbench/core/params.hpp"
#include "pcgbench/core/problem.hpp"

namespace pcgb {

/// Unknown or reserved problem name, or a bad variant override.
class RegistryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Name -> problem factory. Factories receive the default variant parameters
/// with any overrides applied.
class ProblemRegistry {
public:
    using Factory = std::function<std::unique_ptr<Problem>(const VariantParams&)>;

    void add(const std::string& name, VariantParams defaults, Factory factory);
    /// A name that is known but deliberately not implemented.
    void reserve(const std::string& name, std::string reason);

    [[nodiscard]] std::unique_ptr<Problem> make(const std::string& name,
                                                const std::map<std::string, ParamValue>& overrides = {}) const;

    [[nodiscard]] std::vector<std::string> names() const;
    [[nodiscard]] std::vector<std::string> reserved_names() const;
    [[nodiscard]] const VariantParams& defaults(const std::string& name) const;
    [[nodiscard]] bool contains(const std::string& name) const { return entries_.count(name) != 0; }

private:
    struct Entry {
        VariantParams defaults;
        Factory factory;
    };
    std::map<std::string, Entry> entries_;
    std::map<std::string, std::string> reserved_;
};

/// Registry holding every built-in problem and the reserved names.
[[nodiscard]] const ProblemRegistry& builtin_registry();

/// Shorthand for builtin_registry().make(name, overrides).
[[nodiscard]] std::unique_ptr<Problem> registry_make(const std::string& name,
                                                     const std::map<std::string, ParamValue>& overrides = {});

}  // namespace pcgb
