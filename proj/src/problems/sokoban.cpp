#include <algorithm>
#include <numeric>

#include "common.hpp"
#include "pcgbench/problems/problems.hpp"
#include "pcgbench/solvers/sokoban.hpp"

namespace pcgb::problems {

namespace {

using detail::grid_tiles;

// Levels with more crates are reported unsolved rather than searched.
constexpr std::int64_t kSolverMaxCrates = 4;

std::int64_t levenshtein(const std::string& a, const std::string& b) {
    std::vector<std::int64_t> prev(b.size() + 1);
    std::vector<std::int64_t> cur(b.size() + 1);
    std::iota(prev.begin(), prev.end(), 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = static_cast<std::int64_t>(i);
        for (std::size_t j = 1; j <= b.size(); ++j) {
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

class SokobanProblem final : public Problem {
public:
    explicit SokobanProblem(const VariantParams& p)
        : Problem("sokoban-v0", p,
                  SpaceDescriptor::grid2d(SpaceDescriptor::discrete(5), static_cast<std::size_t>(p.get_int("width")),
                                          static_cast<std::size_t>(p.get_int("height"))),
                  SpaceDescriptor::record({{"crates", SpaceDescriptor::range(p.get_int("crate_min"), p.get_int("crate_max"))}})),
          width_(static_cast<int>(p.get_int("width"))),
          height_(static_cast<int>(p.get_int("height"))),
          min_solution_(p.get_int("min_solution")),
          diversity_actions_(p.get_int("diversity_actions")) {}

    InfoRecord info(const Value& content) const override {
        const auto tiles = grid_tiles(content, width_, height_);
        InfoRecord info;
        const auto players = detail::count_of(tiles, sokoban::player);
        const auto crates = detail::count_of(tiles, sokoban::crate);
        const auto targets = detail::count_of(tiles, sokoban::target);
        info.set("tiles", detail::to_array(tiles));
        info.set("players", players);
        info.set("crates", crates);
        info.set("targets", targets);
        std::int64_t solvable = 0;
        std::string solution;
        if (players == 1 && crates >= 1 && crates == targets && crates <= kSolverMaxCrates) {
            solvers::SokobanLevel level{width_, height_, {}};
            level.tiles.reserve(tiles.size());
            for (int t : tiles) level.tiles.push_back(to_solver_tile(t));
            if (auto moves = solvers::solve_sokoban(level)) {
                solvable = 1;
                solution = solvers::moves_to_string(*moves);
            }
        }
        info.set("solvable", solvable);
        info.set("solution_length", static_cast<std::int64_t>(solution.size()));
        info.set("solution", solution);
        return info;
    }

    std::vector<double> quality_subscores(const InfoRecord& info) const override {
        const std::int64_t cells = width_ * height_;
        const auto crates = info.get_int("crates");
        const auto targets = info.get_int("targets");
        const double balance =
            crates == targets ? 1.0
                              : std::min(std::nextafter(1.0, 0.0),
                                         1.0 - static_cast<double>(std::abs(crates - targets)) / static_cast<double>(cells));
        const bool solvable = info.get_int("solvable") == 1;
        return {count_closeness(info.get_int("players"), 1, 1, cells),
                crates >= 1 ? 1.0 : 0.0,
                balance,
                solvable ? 1.0 : 0.0,
                solvable ? std::min(1.0, static_cast<double>(info.get_int("solution_length")) /
                                             static_cast<double>(min_solution_))
                         : 0.0};
    }

    double diversity(const InfoRecord& a, const InfoRecord& b) const override {
        if (a.get_int("solvable") != b.get_int("solvable")) return 1.0;
        const auto d = levenshtein(a.get_string("solution"), b.get_string("solution"));
        return std::min(1.0, static_cast<double>(d) / static_cast<double>(diversity_actions_));
    }

    double controllability(const InfoRecord& info, const Value& control) const override {
        const auto target = detail::control_field(control, control_space(), "crates");
        return count_closeness(info.get_int("crates"), target, target, width_ * height_);
    }

    std::vector<RenderedFile> render(const Value& content) const override {
        static const std::vector<TileStyle> palette = {
            {{71, 45, 60}, {}, false},              // floor
            {{207, 198, 184}, {}, false},           // wall
            {{71, 45, 60}, {60, 172, 215}, true},   // player
            {{71, 45, 60}, {191, 121, 88}, true},   // crate
            {{112, 80, 90}, {}, false},             // target
        };
        return {{"png", encode_png(render_tile_grid(grid_tiles(content, width_, height_), width_, height_, palette)), ""}};
    }

private:
    static solvers::SokobanTile to_solver_tile(int t) {
        switch (t) {
            case sokoban::wall: return solvers::SokobanTile::wall;
            case sokoban::player: return solvers::SokobanTile::player;
            case sokoban::crate: return solvers::SokobanTile::crate;
            case sokoban::target: return solvers::SokobanTile::target;
            default: return solvers::SokobanTile::floor;
        }
    }

    int width_;
    int height_;
    std::int64_t min_solution_;
    std::int64_t diversity_actions_;
};

}  // namespace

VariantParams sokoban_defaults() {
    return VariantParams({{"width", std::int64_t{5}},
                          {"height", std::int64_t{5}},
                          {"min_solution", std::int64_t{10}},
                          {"crate_min", std::int64_t{1}},
                          {"crate_max", std::int64_t{3}},
                          {"diversity_actions", std::int64_t{5}}});
}

std::unique_ptr<Problem> make_sokoban(const VariantParams& params) { return std::make_unique<SokobanProblem>(params); }

}  // namespace pcgb::problems
