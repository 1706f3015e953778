#include "pcgbench/solvers/dictionary.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#ifndef PCGBENCH_DATA_DIR
#define PCGBENCH_DATA_DIR "data"
#endif

namespace pcgb::solvers {

LetterCounts count_letters(std::string_view letters) {
    LetterCounts c{};
    for (char ch : letters) {
        if (ch < 'a' || ch > 'z') throw std::invalid_argument("letters must be lowercase a-z");
        ++c[static_cast<std::size_t>(ch - 'a')];
    }
    return c;
}

Dictionary::Dictionary(std::vector<std::string> words_by_rank) : words_(std::move(words_by_rank)) {
    std::unordered_set<std::string> seen;
    counts_.reserve(words_.size());
    masks_.reserve(words_.size());
    for (const auto& w : words_) {
        if (w.empty()) throw std::invalid_argument("dictionary: empty word");
        if (!seen.insert(w).second) throw std::invalid_argument("dictionary: duplicate word '" + w + "'");
        counts_.push_back(count_letters(w));
        std::uint32_t mask = 0;
        for (char ch : w) mask |= 1U << (ch - 'a');
        masks_.push_back(mask);
    }
}

Dictionary Dictionary::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dictionary " + path.string());
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        words.push_back(line);
    }
    while (!words.empty() && words.back().empty()) words.pop_back();
    return Dictionary(std::move(words));
}

std::vector<FormableWord> formable_words(std::string_view letters, const Dictionary& dict) {
    const auto have = count_letters(letters);
    std::uint32_t have_mask = 0;
    for (std::size_t i = 0; i < have.size(); ++i) {
        if (have[i]) have_mask |= 1U << i;
    }
    std::vector<FormableWord> out;
    for (std::size_t r = 0; r < dict.size(); ++r) {
        if ((dict.letter_mask(r) & ~have_mask) != 0) continue;
        const auto& need = dict.counts(r);
        bool fits = true;
        for (std::size_t i = 0; i < 26 && fits; ++i) fits = need[i] <= have[i];
        if (!fits) continue;
        const auto& w = dict.word(r);
        out.push_back({w, static_cast<int>(w.size()), dict.percentile(r)});
    }
    return out;
}

std::filesystem::path default_dictionary_path() {
    if (const char* env = std::getenv("PCGBENCH_DATA_DIR"); env != nullptr && *env != '\0') {
        return std::filesystem::path(env) / "dictionary.txt";
    }
    return std::filesystem::path(PCGBENCH_DATA_DIR) / "dictionary.txt";
}

const Dictionary& cached_dictionary(const std::filesystem::path& path) {
    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<Dictionary>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[path.string()];
    if (!slot) slot = std::make_unique<Dictionary>(Dictionary::load(path));
    return *slot;
}

}  // namespace pcgb::solvers
