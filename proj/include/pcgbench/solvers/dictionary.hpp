#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace pcgb::solvers {

using LetterCounts = std::array<std::uint8_t, 26>;

[[nodiscard]] LetterCounts count_letters(std::string_view letters);

/// Frequency-ranked word list. Rank 1 is the most common word; the
/// percentile of a word is rank / size.
class Dictionary {
public:
    /// Words in rank order; throws std::invalid_argument unless every word is
    /// non-empty lowercase a-z and no word repeats.
    explicit Dictionary(std::vector<std::string> words_by_rank);

    /// One word per line, rank = line number. Blank trailing lines are ignored.
    static Dictionary load(const std::filesystem::path& path);

    [[nodiscard]] std::size_t size() const { return words_.size(); }
    [[nodiscard]] const std::string& word(std::size_t rank_index) const { return words_[rank_index]; }
    [[nodiscard]] std::size_t rank(std::size_t rank_index) const { return rank_index + 1; }
    [[nodiscard]] double percentile(std::size_t rank_index) const {
        return static_cast<double>(rank_index + 1) / static_cast<double>(words_.size());
    }
    [[nodiscard]] const LetterCounts& counts(std::size_t rank_index) const { return counts_[rank_index]; }
    [[nodiscard]] std::uint32_t letter_mask(std::size_t rank_index) const { return masks_[rank_index]; }

private:
    std::vector<std::string> words_;
    std::vector<LetterCounts> counts_;
    std::vector<std::uint32_t> masks_;
};

struct FormableWord {
    std::string word;
    int length = 0;
    double percentile = 0.0;
    friend bool operator==(const FormableWord&, const FormableWord&) = default;
};

/// Every dictionary word whose letter multiset fits inside `letters`, in
/// rank order. Letters must be a-z (std::invalid_argument otherwise).
[[nodiscard]] std::vector<FormableWord> formable_words(std::string_view letters, const Dictionary& dict);

/// Path of the bundled 10,000-word list: $PCGBENCH_DATA_DIR/dictionary.txt
/// if the variable is set, else the build-time data directory.
[[nodiscard]] std::filesystem::path default_dictionary_path();

/// Cached load of a dictionary file (process-wide, thread-safe).
[[nodiscard]] const Dictionary& cached_dictionary(const std::filesystem::path& path);

}  // namespace pcgb::solvers
