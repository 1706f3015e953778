#include "pcgbench/generators/fitness.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pcgb::generators {

double fitness_q(const ArtifactReport& report) { return report.quality; }

double fitness_qt(const ArtifactReport& report) {
    if (report.quality < 1.0) return report.quality / 2.0;
    return (report.quality + report.controllability) / 2.0;
}

double fitness_qtd(const ArtifactReport& report, double d) {
    if (report.quality < 1.0) return report.quality / 3.0;
    if (report.controllability < 1.0) return (report.quality + report.controllability) / 3.0;
    return (report.quality + report.controllability + d) / 3.0;
}

double fitness(FitnessKind kind, const ArtifactReport& report, double d) {
    switch (kind) {
        case FitnessKind::q: return fitness_q(report);
        case FitnessKind::qt: return fitness_qt(report);
        case FitnessKind::qtd: return fitness_qtd(report, d);
    }
    return 0.0;
}

std::string to_string(FitnessKind kind) {
    switch (kind) {
        case FitnessKind::q: return "q";
        case FitnessKind::qt: return "qt";
        case FitnessKind::qtd: return "qtd";
    }
    return "?";
}

FitnessKind parse_fitness_kind(const std::string& text) {
    std::string t = text;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "q") return FitnessKind::q;
    if (t == "qt") return FitnessKind::qt;
    if (t == "qtd") return FitnessKind::qtd;
    throw std::invalid_argument("unknown fitness kind '" + text + "' (expected q, qt or qtd)");
}

}  // namespace pcgb::generators
