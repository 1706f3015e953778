#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace pcgb {

/// Problem-defined facts about one artifact. Produced once by a problem's
/// info operation and consumed by its quality, diversity and controllability
/// evaluators.
class InfoRecord {
public:
    using Array = std::vector<std::int64_t>;
    using Entry = std::variant<std::int64_t, double, std::string, Array, std::shared_ptr<const InfoRecord>>;

    void set(const std::string& key, std::int64_t v) { entries_[key] = v; }
    void set(const std::string& key, int v) { entries_[key] = std::int64_t{v}; }
    void set(const std::string& key, double v) { entries_[key] = v; }
    void set(const std::string& key, std::string v) { entries_[key] = std::move(v); }
    void set(const std::string& key, const char* v) { entries_[key] = std::string(v); }
    void set(const std::string& key, Array v) { entries_[key] = std::move(v); }
    void set(const std::string& key, InfoRecord v) {
        entries_[key] = std::make_shared<const InfoRecord>(std::move(v));
    }

    [[nodiscard]] bool has(const std::string& key) const { return entries_.count(key) != 0; }

    // Typed accessors throw std::out_of_range on a missing key and
    // std::bad_variant_access on a type mismatch; both are programming errors
    // in a problem plugin.
    [[nodiscard]] std::int64_t get_int(const std::string& key) const { return std::get<std::int64_t>(at(key)); }
    [[nodiscard]] double get_real(const std::string& key) const;
    [[nodiscard]] const std::string& get_string(const std::string& key) const {
        return std::get<std::string>(at(key));
    }
    [[nodiscard]] const Array& get_array(const std::string& key) const { return std::get<Array>(at(key)); }
    [[nodiscard]] const InfoRecord& get_record(const std::string& key) const {
        return *std::get<std::shared_ptr<const InfoRecord>>(at(key));
    }

    [[nodiscard]] const std::map<std::string, Entry>& entries() const { return entries_; }

    friend bool operator==(const InfoRecord& a, const InfoRecord& b);

private:
    [[nodiscard]] const Entry& at(const std::string& key) const;

    std::map<std::string, Entry> entries_;
};

void to_json(nlohmann::json& j, const InfoRecord& info);

}  // namespace pcgb
