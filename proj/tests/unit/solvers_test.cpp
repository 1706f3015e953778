#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pcgbench/core/rng.hpp"
#include "pcgbench/solvers/building.hpp"
#include "pcgbench/solvers/dictionary.hpp"
#include "pcgbench/solvers/dungeon.hpp"
#include "pcgbench/solvers/grid.hpp"
#include "pcgbench/solvers/platformer.hpp"
#include "pcgbench/solvers/sokoban.hpp"

using namespace pcgb;
using namespace pcgb::solvers;

namespace {

GridMap random_map(Rng& rng, int w, int h, double open) {
    std::vector<std::uint8_t> pass(static_cast<std::size_t>(w * h));
    for (auto& p : pass) p = rng.bernoulli(open) ? 1 : 0;
    return GridMap(w, h, std::move(pass));
}

SokobanLevel sokoban_from(const std::vector<std::string>& rows) {
    SokobanLevel l{static_cast<int>(rows[0].size()), static_cast<int>(rows.size()), {}};
    for (const auto& r : rows) {
        for (char c : r) {
            switch (c) {
                case '#': l.tiles.push_back(SokobanTile::wall); break;
                case 'x': l.tiles.push_back(SokobanTile::target); break;
                case '$': l.tiles.push_back(SokobanTile::crate); break;
                case '*': l.tiles.push_back(SokobanTile::crate_on_target); break;
                case '@': l.tiles.push_back(SokobanTile::player); break;
                case '+': l.tiles.push_back(SokobanTile::player_on_target); break;
                default: l.tiles.push_back(SokobanTile::floor); break;
            }
        }
    }
    return l;
}

PlatformerLevel platformer_from(const std::vector<std::string>& rows) {
    PlatformerLevel l{static_cast<int>(rows[0].size()), static_cast<int>(rows.size()), {}};
    for (const auto& r : rows) {
        for (char c : r) {
            switch (c) {
                case '#': l.tiles.push_back(PlatformerTile::solid); break;
                case '^': l.tiles.push_back(PlatformerTile::spike); break;
                case '*': l.tiles.push_back(PlatformerTile::diamond); break;
                case 's': l.tiles.push_back(PlatformerTile::start); break;
                case 'e': l.tiles.push_back(PlatformerTile::exit); break;
                default: l.tiles.push_back(PlatformerTile::empty); break;
            }
        }
    }
    return l;
}

DungeonLevel dungeon_from(const std::vector<std::string>& rows) {
    DungeonLevel l{static_cast<int>(rows[0].size()), static_cast<int>(rows.size()), {}};
    for (const auto& r : rows) {
        for (char c : r) {
            switch (c) {
                case '#': l.tiles.push_back(DungeonTile::wall); break;
                case 's': l.tiles.push_back(DungeonTile::start); break;
                case 'e': l.tiles.push_back(DungeonTile::exit); break;
                case 'm': l.tiles.push_back(DungeonTile::monster); break;
                case 'p': l.tiles.push_back(DungeonTile::potion); break;
                case 't': l.tiles.push_back(DungeonTile::treasure); break;
                default: l.tiles.push_back(DungeonTile::floor); break;
            }
        }
    }
    return l;
}

}  // namespace

TEST(GridSolver, CorridorDistance) {
    GridMap map(6, 1);
    auto r = shortest_path(map, {0, 0}, {5, 0});
    EXPECT_TRUE(r.reachable);
    EXPECT_EQ(r.distance, 5);
    EXPECT_EQ(moves_to_string(r.actions), "RRRRR");
}

TEST(GridSolver, SameCell) {
    GridMap map(3, 3, false);
    auto r = shortest_path(map, {1, 1}, {1, 1});
    EXPECT_TRUE(r.reachable);
    EXPECT_EQ(r.distance, 0);
}

TEST(GridSolver, RandomMapsMatchDijkstra) {
    Rng rng(17);
    for (int i = 0; i < 1000; ++i) {
        auto map = random_map(rng, 8, 8, 0.7);
        const Cell a{static_cast<int>(rng.index(8)), static_cast<int>(rng.index(8))};
        const Cell b{static_cast<int>(rng.index(8)), static_cast<int>(rng.index(8))};
        auto r = shortest_path(map, a, b);
        const int expect = oracle::dijkstra_distance(map, a, b);
        ASSERT_EQ(r.reachable, expect >= 0);
        if (!r.reachable) continue;
        ASSERT_EQ(r.distance, expect);
        Cell c = a;
        for (auto m : r.actions) {
            c = step(c, m);
            ASSERT_TRUE(map.passable(c));
        }
        ASSERT_EQ(c, b);
    }
}

TEST(GridSolver, OpenDiameter) {
    EXPECT_EQ(graph_diameter(GridMap(14, 14)), 26);
    EXPECT_EQ(oracle::all_pairs_diameter(GridMap(6, 6)), graph_diameter(GridMap(6, 6)));
}

TEST(GridSolver, DegenerateMaps) {
    GridMap one(3, 3, false);
    one.set_passable({1, 1}, true);
    EXPECT_EQ(graph_diameter(one), 0);
    EXPECT_EQ(connected_components(one), 1);
    GridMap two(3, 1, false);
    two.set_passable({0, 0}, true);
    two.set_passable({2, 0}, true);
    EXPECT_EQ(connected_components(two), 2);
    EXPECT_THROW((void)graph_diameter(GridMap(2, 2, false)), std::invalid_argument);
}

TEST(GridSolver, RandomDiameterAndComponents) {
    Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        auto map = random_map(rng, 7, 6, 0.65);
        ASSERT_EQ(connected_components(map), oracle::component_count(map));
        if (map.passable_count() > 0) ASSERT_EQ(graph_diameter(map), oracle::all_pairs_diameter(map));
    }
}

TEST(SokobanSolver, SinglePush) {
    auto l = sokoban_from({"@$x"});
    auto sol = solve_sokoban(l);
    ASSERT_TRUE(sol);
    EXPECT_EQ(moves_to_string(*sol), "R");
}

TEST(SokobanSolver, CornerDeadlock) {
    auto l = sokoban_from({"$..", ".@.", "..x"});
    EXPECT_FALSE(solve_sokoban(l));
}

TEST(SokobanSolver, AlreadySolved) {
    auto l = sokoban_from({"@*."});
    auto sol = solve_sokoban(l);
    ASSERT_TRUE(sol);
    EXPECT_TRUE(sol->empty());
}

TEST(SokobanSolver, Preconditions) {
    EXPECT_THROW((void)solve_sokoban(sokoban_from({"$.x"})), SokobanError);
    EXPECT_THROW((void)solve_sokoban(sokoban_from({"@$$x"})), SokobanError);
    EXPECT_THROW((void)solve_sokoban(sokoban_from({"@@$x"})), SokobanError);
}

TEST(SokobanSolver, ReplayRejectsIllegalMoves) {
    auto l = sokoban_from({"#@$x"});
    EXPECT_FALSE(replay_sokoban(l, {Move::left}));
    auto l2 = sokoban_from({"@$#x"});
    EXPECT_FALSE(replay_sokoban(l2, {Move::right}));
}

TEST(SokobanSolver, RandomLevelsMatchExhaustiveSearch) {
    Rng rng(31);
    int solved = 0;
    for (int i = 0; i < 400; ++i) {
        const int w = 5;
        const int h = 5;
        std::vector<SokobanTile> tiles(25);
        for (auto& t : tiles) t = rng.bernoulli(0.25) ? SokobanTile::wall : SokobanTile::floor;
        std::vector<std::size_t> cells(25);
        for (std::size_t k = 0; k < 25; ++k) cells[k] = k;
        for (std::size_t k = 0; k < 25; ++k) std::swap(cells[k], cells[k + rng.index(25 - k)]);
        const int crates = 1 + static_cast<int>(rng.index(2));
        std::size_t next = 0;
        tiles[cells[next++]] = SokobanTile::player;
        for (int c = 0; c < crates; ++c) tiles[cells[next++]] = SokobanTile::crate;
        for (int c = 0; c < crates; ++c) tiles[cells[next++]] = SokobanTile::target;
        SokobanLevel l{w, h, tiles};
        auto sol = solve_sokoban(l);
        auto ref = oracle::sokoban_bfs(l);
        ASSERT_EQ(sol.has_value(), ref.has_value()) << i;
        if (!sol) continue;
        ++solved;
        ASSERT_EQ(static_cast<int>(sol->size()), *ref);
        auto end = replay_sokoban(l, *sol);
        ASSERT_TRUE(end);
        ASSERT_TRUE(sokoban_solved(*end));
    }
    EXPECT_GT(solved, 20);
}

TEST(PlatformerSolver, ExitBesideStart) {
    auto l = platformer_from({"se", "##"});
    auto t = solve_platformer(l);
    ASSERT_TRUE(t);
    EXPECT_EQ(t->jumps, 0);
    EXPECT_EQ(t->actions.size(), 1u);
}

TEST(PlatformerSolver, ExitTooHigh) {
    auto l = platformer_from({"e.", "..", "..", "s.", "##"});
    EXPECT_FALSE(solve_platformer(l, {2}));
    EXPECT_TRUE(solve_platformer(l, {3}));
}

TEST(PlatformerSolver, SpikesKill) {
    auto l = platformer_from({"...", "s^e", "###"});
    auto t = solve_platformer(l);
    ASSERT_TRUE(t);
    EXPECT_GE(t->jumps, 1);
    auto r = replay_platformer(l, {}, {PlatformerAction::right});
    EXPECT_FALSE(r.valid);
}

TEST(PlatformerSolver, Preconditions) {
    EXPECT_THROW((void)solve_platformer(platformer_from({"s.", "##"})), std::invalid_argument);
    EXPECT_THROW((void)solve_platformer(platformer_from({"sse", "###"})), std::invalid_argument);
}

TEST(PlatformerSolver, SmallLevelsMatchStateGraph) {
    Rng rng(41);
    int checked = 0;
    int solvable = 0;
    while (checked < 300) {
        const int w = 3 + static_cast<int>(rng.index(3));
        const int h = 3 + static_cast<int>(rng.index(2));
        PlatformerLevel l{w, h, std::vector<PlatformerTile>(static_cast<std::size_t>(w * h), PlatformerTile::empty)};
        for (auto& t : l.tiles) {
            const double u = rng.uniform_real();
            t = u < 0.4 ? PlatformerTile::solid : u < 0.47 ? PlatformerTile::spike : u < 0.55 ? PlatformerTile::diamond : PlatformerTile::empty;
        }
        const auto s = rng.index(l.tiles.size());
        auto e = rng.index(l.tiles.size());
        if (e == s) continue;
        l.tiles[s] = PlatformerTile::start;
        l.tiles[e] = PlatformerTile::exit;
        int free_cells = 0;
        for (auto t : l.tiles) free_cells += t != PlatformerTile::solid;
        if (free_cells > 12) continue;
        ++checked;
        for (int jh : {1, 2}) {
            auto trace = solve_platformer(l, {jh});
            oracle::PlatformerOracle ref{l, jh};
            auto best = ref.shortest();
            ASSERT_EQ(trace.has_value(), best.has_value());
            if (!trace) continue;
            ++solvable;
            ASSERT_EQ(static_cast<int>(trace->actions.size()), best->first);
            ASSERT_EQ(trace->jumps, best->second);
            auto end = ref.replay(trace->actions);
            ASSERT_TRUE(end);
            ASSERT_TRUE(ref.done(*end));
            auto replay = replay_platformer(l, {jh}, trace->actions);
            ASSERT_TRUE(replay.valid && replay.finished);
        }
    }
    EXPECT_GT(solvable, 20);
}

TEST(PlatformerSolver, ReachableIncludesStartAndLanding) {
    auto l = platformer_from({"....", "s..e", "####"});
    auto mask = reachable_cells(l);
    EXPECT_EQ(mask[4], 1);
    EXPECT_EQ(mask[7], 1);
}

TEST(DictionarySolver, NoWordsFromZs) {
    const auto& dict = cached_dictionary(default_dictionary_path());
    EXPECT_EQ(dict.size(), 10000u);
    EXPECT_TRUE(formable_words("zzzzzzzz", dict).empty());
}

TEST(DictionarySolver, RandomLettersMatchFullScan) {
    const auto& dict = cached_dictionary(default_dictionary_path());
    Rng rng(53);
    for (int i = 0; i < 1000; ++i) {
        std::string letters;
        for (int k = 0; k < 8; ++k) letters.push_back(static_cast<char>('a' + rng.index(26)));
        auto got = formable_words(letters, dict);
        auto want = oracle::naive_formable(letters, dict);
        ASSERT_EQ(got.size(), want.size()) << letters;
        for (std::size_t k = 0; k < got.size(); ++k) {
            ASSERT_EQ(got[k].word, want[k]);
            ASSERT_LE(got[k].length, 8);
            ASSERT_GT(got[k].percentile, 0.0);
            ASSERT_LE(got[k].percentile, 1.0);
        }
    }
}

TEST(DictionarySolver, Validation) {
    EXPECT_THROW(Dictionary({"ok", "Bad"}), std::invalid_argument);
    EXPECT_THROW(Dictionary({"dup", "dup"}), std::invalid_argument);
    Dictionary d({"the", "cat", "act"});
    auto words = formable_words("tac", d);
    ASSERT_EQ(words.size(), 2u);
    EXPECT_EQ(words[0].word, "cat");
    EXPECT_DOUBLE_EQ(words[0].percentile, 2.0 / 3.0);
    EXPECT_THROW((void)formable_words("AB", d), std::invalid_argument);
}

TEST(BuildingSolver, SingleBlock) {
    auto r = check_support({{BlockType::b1x1, 0, 0, 0}});
    EXPECT_TRUE(r.supported && r.connected && r.in_bounds && r.overlap_free);
    EXPECT_EQ(r.height, 1);
}

TEST(BuildingSolver, FloatingBlock) {
    auto r = check_support({{BlockType::b1x1, 2, 2, 3}});
    EXPECT_FALSE(r.supported);
    EXPECT_EQ(r.unsupported_blocks, 1);
}

TEST(BuildingSolver, TowerOfSeven) {
    std::vector<Block> blocks;
    for (int z = 0; z < 7; ++z) blocks.push_back({BlockType::b3x3, 2, 2, z});
    auto r = check_support(blocks);
    EXPECT_EQ(r.height, 7);
    EXPECT_GT(r.height, 6);
    EXPECT_TRUE(r.supported && r.connected);
}

TEST(BuildingSolver, OverlapAndBounds) {
    auto r = check_support({{BlockType::b3x1, 0, 0, 0}, {BlockType::b1x1, 1, 0, 0}});
    EXPECT_FALSE(r.overlap_free);
    EXPECT_EQ(r.overlapping_voxels, 1);
    auto o = check_support({{BlockType::b3x3, 5, 5, 0}});
    EXPECT_FALSE(o.in_bounds);
    EXPECT_EQ(o.out_of_bounds_blocks, 1);
    auto split = check_support({{BlockType::b1x1, 0, 0, 0}, {BlockType::b1x1, 4, 4, 0}});
    EXPECT_FALSE(split.connected);
    EXPECT_EQ(split.components, 2);
}

TEST(BuildingSolver, Footprints) {
    EXPECT_EQ(footprint_width(BlockType::b1x3), 1);
    EXPECT_EQ(footprint_depth(BlockType::b1x3), 3);
    EXPECT_EQ(footprint_width(BlockType::b3x1), 3);
    EXPECT_EQ(footprint_depth(BlockType::b3x1), 1);
}

TEST(DungeonSolver, HpLedgerCorridor) {
    // 12 monsters in a corridor: 40 - 60 + 10k > 0 needs k >= 3 potions.
    const std::string two = "spmmmmmmpmmmmmme";
    const std::string three = "spmmmmpmmmmpmmmme";
    auto a = solve_dungeon(dungeon_from({two}));
    EXPECT_FALSE(a.solvable);
    auto b = solve_dungeon(dungeon_from({three}));
    ASSERT_TRUE(b.solvable);
    EXPECT_EQ(b.kills, 12);
    EXPECT_EQ(b.hp_left, 40 - 60 + 30);
}

TEST(DungeonSolver, AvoidableMonsters) {
    auto r = solve_dungeon(dungeon_from({"smmme", "....."}));
    ASSERT_TRUE(r.solvable);
    EXPECT_EQ(r.steps, 4);
    EXPECT_EQ(r.kills, 3);
    auto detour = solve_dungeon(dungeon_from({"s#mmm", ".#...", "....e"}));
    ASSERT_TRUE(detour.solvable);
    EXPECT_EQ(detour.kills, 0);
}

TEST(DungeonSolver, RandomLevelsMatchStateSearch) {
    Rng rng(61);
    DungeonRules rules{12, 5, 4, 200000};
    for (int i = 0; i < 300; ++i) {
        DungeonLevel l{5, 4, std::vector<DungeonTile>(20, DungeonTile::floor)};
        for (auto& t : l.tiles) {
            const double u = rng.uniform_real();
            t = u < 0.25 ? DungeonTile::wall : u < 0.45 ? DungeonTile::monster : u < 0.52 ? DungeonTile::potion : DungeonTile::floor;
        }
        const auto s = rng.index(20);
        auto e = rng.index(20);
        if (e == s) e = (s + 7) % 20;
        l.tiles[s] = DungeonTile::start;
        l.tiles[e] = DungeonTile::exit;
        auto r = solve_dungeon(l, rules);
        auto ref = oracle::dungeon_bfs(l, rules);
        ASSERT_FALSE(r.exhausted);
        ASSERT_EQ(r.solvable, ref.has_value()) << i;
        if (!ref) continue;
        ASSERT_EQ(r.steps, ref->first) << i;
        ASSERT_EQ(r.kills, ref->second) << i;
        auto rep = replay_dungeon(l, rules, r.path);
        ASSERT_TRUE(rep.alive && rep.at_exit);
        ASSERT_EQ(rep.kills, r.kills);
    }
}

TEST(DungeonSolver, BudgetExhaustion) {
    std::vector<std::string> rows(6, std::string(8, 'm'));
    rows[0][0] = 's';
    rows[5][7] = 'e';
    for (auto& r : rows) r[3] = 'p';
    auto r = solve_dungeon(dungeon_from(rows), {400, 1, 1, 50});
    EXPECT_TRUE(r.exhausted);
    EXPECT_FALSE(r.solvable);
}
