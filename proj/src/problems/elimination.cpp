#include <algorithm>
#include <string>

#include "common.hpp"
#include "pcgbench/problems/problems.hpp"
#include "pcgbench/solvers/dictionary.hpp"

namespace pcgb::problems {

namespace {

std::string letters_of(const Value& content) {
    std::string s;
    for (const auto& leaf : content.items()) s.push_back(static_cast<char>('a' + leaf.leaf()));
    return s;
}

/// Longest contiguous piece of `letters` that occurs inside some word.
std::int64_t longest_run(const std::string& letters, const std::vector<solvers::FormableWord>& words) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        for (std::size_t len = best + 1; i + len <= letters.size(); ++len) {
            const auto piece = std::string_view(letters).substr(i, len);
            const bool found = std::any_of(words.begin(), words.end(),
                                           [&](const auto& w) { return w.word.find(piece) != std::string::npos; });
            if (!found) break;
            best = len;
        }
    }
    return static_cast<std::int64_t>(best);
}

class EliminationProblem final : public Problem {
public:
    explicit EliminationProblem(const VariantParams& p)
        : Problem("elimination-v0", p,
                  SpaceDescriptor::array(SpaceDescriptor::discrete(26), static_cast<std::size_t>(p.get_int("length"))),
                  SpaceDescriptor::record({{"max_run", SpaceDescriptor::range(1, p.get_int("run_max"))}})),
          dict_(&solvers::cached_dictionary(p.get_string("dictionary").empty()
                                                ? solvers::default_dictionary_path()
                                                : std::filesystem::path(p.get_string("dictionary")))),
          short_lo_(p.get_real("short_lo")),
          short_hi_(p.get_real("short_hi")),
          long_lo_(p.get_real("long_lo")),
          long_hi_(p.get_real("long_hi")),
          short_min_(p.get_int("short_min_length")),
          short_max_(p.get_int("short_max_length")),
          long_min_(p.get_int("long_min_length")),
          long_max_(p.get_int("long_max_length")),
          run_max_(p.get_int("run_max")) {}

    InfoRecord info(const Value& content) const override {
        const auto letters = letters_of(content);
        const auto words = solvers::formable_words(letters, *dict_);
        InfoRecord info;
        info.set("letters", letters);
        const auto counts = solvers::count_letters(letters);
        info.set("letter_counts", InfoRecord::Array(counts.begin(), counts.end()));

        std::string listing;
        std::int64_t short_in = 0, long_in = 0, longer = 0, outside = 0;
        double short_best = 0.0, long_best = 0.0;
        for (const auto& w : words) {
            if (!listing.empty()) listing.push_back(' ');
            listing += w.word;
            if (w.length > long_max_) {
                ++longer;
            } else if (w.length >= short_min_ && w.length <= short_max_) {
                const double c = window_closeness(w.percentile, short_lo_, short_hi_, 0.0, 1.0);
                short_best = std::max(short_best, c);
                if (c == 1.0) ++short_in; else ++outside;
            } else if (w.length >= long_min_) {
                const double c = window_closeness(w.percentile, long_lo_, long_hi_, 0.0, 1.0);
                long_best = std::max(long_best, c);
                if (c == 1.0) ++long_in; else ++outside;
            }
        }
        info.set("words", listing);
        info.set("word_count", static_cast<std::int64_t>(words.size()));
        info.set("short_in_band", short_in);
        info.set("long_in_band", long_in);
        info.set("short_best", short_best);
        info.set("long_best", long_best);
        info.set("longer_words", longer);
        info.set("outside_band", outside);
        info.set("max_run", longest_run(letters, words));
        return info;
    }

    std::vector<double> quality_subscores(const InfoRecord& info) const override {
        return {1.0,
                info.get_int("short_in_band") > 0 ? 1.0 : info.get_real("short_best"),
                info.get_int("long_in_band") > 0 ? 1.0 : info.get_real("long_best"),
                1.0 / static_cast<double>(1 + info.get_int("longer_words")),
                1.0 / static_cast<double>(1 + info.get_int("outside_band"))};
    }

    double diversity(const InfoRecord& a, const InfoRecord& b) const override {
        const auto& ca = a.get_array("letter_counts");
        const auto& cb = b.get_array("letter_counts");
        std::int64_t shared = 0;
        std::int64_t total = 0;
        for (std::size_t i = 0; i < ca.size(); ++i) {
            shared += std::min(ca[i], cb[i]);
            total += std::max(ca[i], cb[i]);
        }
        return std::min(1.0, static_cast<double>(total - shared) / 2.0 / 3.0);
    }

    double controllability(const InfoRecord& info, const Value& control) const override {
        const auto target = detail::control_field(control, control_space(), "max_run");
        return window_closeness(static_cast<double>(info.get_int("max_run")), 0.0, static_cast<double>(target), 0.0,
                                static_cast<double>(run_max_));
    }

    std::vector<RenderedFile> render(const Value& content) const override {
        return {{"txt", letters_of(content) + "\n", ""}};
    }

private:
    const solvers::Dictionary* dict_;
    double short_lo_;
    double short_hi_;
    double long_lo_;
    double long_hi_;
    std::int64_t short_min_;
    std::int64_t short_max_;
    std::int64_t long_min_;
    std::int64_t long_max_;
    std::int64_t run_max_;
};

}  // namespace

VariantParams elimination_defaults() {
    return VariantParams({{"length", std::int64_t{8}},
                          {"short_lo", 0.40},
                          {"short_hi", 0.60},
                          {"long_lo", 0.60},
                          {"long_hi", 0.80},
                          {"short_min_length", std::int64_t{3}},
                          {"short_max_length", std::int64_t{4}},
                          {"long_min_length", std::int64_t{5}},
                          {"long_max_length", std::int64_t{6}},
                          {"run_max", std::int64_t{5}},
                          {"dictionary", std::string{}}});
}

std::unique_ptr<Problem> make_elimination(const VariantParams& params) {
    return std::make_unique<EliminationProblem>(params);
}

}  // namespace pcgb::problems
