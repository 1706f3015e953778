#include "pcgbench/core/params.hpp"

#include <charconv>
#include <stdexcept>

#include <fmt/format.h>

namespace pcgb {

std::string param_to_string(const ParamValue& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&v)) return fmt::format("{}", *d);
    return std::get<std::string>(v);
}

namespace {

ParamValue coerce(const std::string& key, const ParamValue& like, const ParamValue& given) {
    if (given.index() == like.index()) return given;
    if (std::holds_alternative<double>(like) && std::holds_alternative<std::int64_t>(given)) {
        return static_cast<double>(std::get<std::int64_t>(given));
    }
    const auto* text = std::get_if<std::string>(&given);
    if (text == nullptr) throw std::invalid_argument("variant parameter '" + key + "' has the wrong type");
    if (std::holds_alternative<std::int64_t>(like)) {
        std::int64_t out = 0;
        auto [ptr, ec] = std::from_chars(text->data(), text->data() + text->size(), out);
        if (ec != std::errc() || ptr != text->data() + text->size()) {
            throw std::invalid_argument("variant parameter '" + key + "' expects an integer, got '" + *text + "'");
        }
        return out;
    }
    try {
        std::size_t used = 0;
        double out = std::stod(*text, &used);
        if (used != text->size()) throw std::invalid_argument("trailing characters");
        return out;
    } catch (const std::exception&) {
        throw std::invalid_argument("variant parameter '" + key + "' expects a number, got '" + *text + "'");
    }
}

}  // namespace

void VariantParams::override_with(const std::map<std::string, ParamValue>& overrides) {
    for (const auto& [key, value] : overrides) {
        auto it = values_.find(key);
        if (it == values_.end()) throw std::invalid_argument("unknown variant parameter '" + key + "'");
        it->second = coerce(key, it->second, value);
    }
}

std::int64_t VariantParams::get_int(const std::string& key) const { return std::get<std::int64_t>(values_.at(key)); }

double VariantParams::get_real(const std::string& key) const {
    const auto& v = values_.at(key);
    if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
    return std::get<double>(v);
}

const std::string& VariantParams::get_string(const std::string& key) const {
    return std::get<std::string>(values_.at(key));
}

std::string VariantParams::to_string() const {
    std::string out;
    for (const auto& [key, value] : values_) {
        if (!out.empty()) out += ' ';
        out += key + '=' + param_to_string(value);
    }
    return out;
}

}  // namespace pcgb
