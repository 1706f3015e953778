#include "pcgbench/core/info.hpp"

#include <stdexcept>

namespace pcgb {

const InfoRecord::Entry& InfoRecord::at(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw std::out_of_range("info record has no key '" + key + "'");
    return it->second;
}

double InfoRecord::get_real(const std::string& key) const {
    const auto& e = at(key);
    if (const auto* i = std::get_if<std::int64_t>(&e)) return static_cast<double>(*i);
    return std::get<double>(e);
}

bool operator==(const InfoRecord& a, const InfoRecord& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    for (; ia != a.entries_.end(); ++ia, ++ib) {
        if (ia->first != ib->first || ia->second.index() != ib->second.index()) return false;
        if (const auto* ra = std::get_if<std::shared_ptr<const InfoRecord>>(&ia->second)) {
            if (!(**ra == *std::get<std::shared_ptr<const InfoRecord>>(ib->second))) return false;
        } else if (ia->second != ib->second) {
            return false;
        }
    }
    return true;
}

void to_json(nlohmann::json& j, const InfoRecord& info) {
    j = nlohmann::json::object();
    for (const auto& [key, entry] : info.entries()) {
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, std::shared_ptr<const InfoRecord>>) {
                    j[key] = *v;
                } else {
                    j[key] = v;
                }
            },
            entry);
    }
}

}  // namespace pcgb
