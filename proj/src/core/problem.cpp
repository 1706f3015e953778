#include "pcgbench/core/problem.hpp"

#include <algorithm>
#include <cmath>

namespace pcgb {

double Problem::quality(const InfoRecord& info) const {
    const auto scores = quality_subscores(info);
    return combine_subscores(scores);
}

double combine_subscores(std::span<const double> subscores) {
    if (subscores.empty()) return 1.0;
    bool all_pass = true;
    double sum = 0.0;
    for (double s : subscores) {
        const double c = std::clamp(s, 0.0, 1.0);
        all_pass = all_pass && c == 1.0;
        sum += c;
    }
    if (all_pass) return 1.0;
    return std::min(sum / static_cast<double>(subscores.size()), std::nextafter(1.0, 0.0));
}

double window_closeness(double value, double window_lo, double window_hi, double lo_bound, double hi_bound) {
    if (value >= window_lo && value <= window_hi) return 1.0;
    double c = 0.0;
    if (value < window_lo) {
        if (window_lo > lo_bound) c = (value - lo_bound) / (window_lo - lo_bound);
    } else if (hi_bound > window_hi) {
        c = (hi_bound - value) / (hi_bound - window_hi);
    }
    return std::clamp(c, 0.0, std::nextafter(1.0, 0.0));
}

double count_closeness(std::int64_t count, std::int64_t target_lo, std::int64_t target_hi, std::int64_t max_count) {
    return window_closeness(static_cast<double>(count), static_cast<double>(target_lo),
                            static_cast<double>(target_hi), 0.0, static_cast<double>(std::max(max_count, target_hi)));
}

}  // namespace pcgb
