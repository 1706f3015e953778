#include "templates.hpp"

namespace pcgb::llm::detail {

// Five feasible levels per problem, checked by the problem's own evaluator.

const std::vector<std::vector<std::string>>& binary_examples() {
    static const std::vector<std::vector<std::string>> examples = {
        {
            ".#......#...##",
            "...#....#...##",
            ".#..#...#.....",
            ".###..######..",
            "#.#.....#..#..",
            "..#.##.....#..",
            "......#####.#.",
            ".##...........",
            ".##...#..#...#",
            "..#.#.#..#...#",
            "#..#..#.##...#",
            "..#.#.##...#.#",
            ".##..#..#....#",
            ".#...........#",
        },
        {
            "..#..##.#.#.##",
            ".............#",
            ".#...........#",
            ".#.....#.##...",
            "...####.#.....",
            ".#...##.#....#",
            ".###..#.#....#",
            "....#...#.#...",
            "..#...####..##",
            "...###.....#..",
            "...#.#..###..#",
            "#.....#...##.#",
            ".............#",
            "#...##.....###",
        },
        {
            ".##.##..######",
            ".#.......#.##.",
            "...#####....#.",
            ".#....#..#....",
            ".#..#..#...##.",
            "...##.#..###..",
            "#.##..#...#..#",
            "#..#.##......#",
            "#.##.##...#...",
            "#...#.....##.#",
            "..#...#.##.#.#",
            "..#..####..#..",
            "......#.....##",
            ".##......#...#",
        },
        {
            "....###....#..",
            ".##..#...#.#..",
            "..#.....#..#..",
            "#..###...#.##.",
            "....####......",
            "##..###..#..#.",
            "#..####.###...",
            "#.............",
            "..#..#.#.#.#.#",
            "#.#.........##",
            "#.#..#...#.###",
            "#..#.#..#.#...",
            ".....#......#.",
            "#..#......#.#.",
        },
        {
            "..##.....####.",
            "........#.....",
            "....###..#.##.",
            "#...#.##......",
            "...#.....####.",
            "##..#.........",
            "#..#...#.#....",
            "#.##....#..#.#",
            "#...#.####...#",
            "...#......#.##",
            "..####....#..#",
            "###......#...#",
            "#.#.#....##..#",
            "#...#.##.#...#",
        },
    };
    return examples;
}

const std::vector<std::vector<std::string>>& sokoban_examples() {
    static const std::vector<std::vector<std::string>> examples = {
        {
            ".----",
            "---#@",
            "-$---",
            "-$##-",
            ".----",
        },
        {
            ".--#-",
            "-#.$-",
            "--$--",
            "---#@",
            "-----",
        },
        {
            "-.---",
            "-#--.",
            "--@$$",
            "-#---",
            "---#-",
        },
        {
            "---#-",
            "##-@.",
            "-----",
            "---$$",
            "-.---",
        },
        {
            ".-$--",
            "---#-",
            "----@",
            "#-$#-",
            "---.-",
        },
    };
    return examples;
}

const std::vector<std::vector<std::string>>& zelda_examples() {
    static const std::vector<std::vector<std::string>> examples = {
        {
            "g.ew.w.w...",
            "w......wwwA",
            "...........",
            ".....w...w.",
            "...........",
            ".www..ew.w.",
            ".......+...",
        },
        {
            ".w.......w.",
            "...w.w...w.",
            "...........",
            ".e.....gw.w",
            "+.e........",
            "..www...www",
            "..e..w.A...",
        },
        {
            ".....e.e...",
            ".ww+w...w..",
            ".w.w.....w.",
            ".w.....w..w",
            "........A..",
            ".ww..w...w.",
            ".......g...",
        },
        {
            "...w.w.....",
            "...w...+...",
            ".........w.",
            ".....www...",
            "Ae.g...w...",
            ".....w.w.ww",
            ".w.w.......",
        },
        {
            ".........wg",
            "......wAww.",
            ".w.......w.",
            "+w.w..e..w.",
            "...........",
            "ww.w.....w.",
            "......ew...",
        },
    };
    return examples;
}

}  // namespace pcgb::llm::detail
