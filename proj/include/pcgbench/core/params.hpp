#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

namespace pcgb {

using ParamValue = std::variant<std::int64_t, double, std::string>;

std::string param_to_string(const ParamValue& v);

/// Named constructor parameters of a problem variant. The key set and the
/// type of each key are fixed by the defaults; overrides may only replace
/// values (string overrides are parsed into the default's type).
class VariantParams {
public:
    VariantParams() = default;
    explicit VariantParams(std::map<std::string, ParamValue> defaults) : values_(std::move(defaults)) {}

    /// Throws std::invalid_argument for an undeclared key or an unparsable value.
    void override_with(const std::map<std::string, ParamValue>& overrides);

    [[nodiscard]] std::int64_t get_int(const std::string& key) const;
    [[nodiscard]] double get_real(const std::string& key) const;
    [[nodiscard]] const std::string& get_string(const std::string& key) const;
    [[nodiscard]] const std::map<std::string, ParamValue>& values() const { return values_; }

    /// "key=value" pairs joined by spaces, in key order.
    [[nodiscard]] std::string to_string() const;

private:
    std::map<std::string, ParamValue> values_;
};

}  // namespace pcgb
