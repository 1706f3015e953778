#include "pcgbench/core/registry.hpp"
#include "pcgbench/problems/problems.hpp"

namespace pcgb {

const ProblemRegistry& builtin_registry() {
    static const ProblemRegistry registry = [] {
        ProblemRegistry r;
        r.add("binary-v0", problems::binary_defaults(), problems::make_binary);
        r.add("building-v0", problems::building_defaults(), problems::make_building);
        r.add("dave-v0", problems::dave_defaults(), problems::make_dave);
        r.add("elimination-v0", problems::elimination_defaults(), problems::make_elimination);
        r.add("isaac-v0", problems::isaac_defaults(), problems::make_isaac);
        r.add("minidungeons-v0", problems::minidungeons_defaults(), problems::make_minidungeons);
        r.add("sokoban-v0", problems::sokoban_defaults(), problems::make_sokoban);
        r.add("zelda-v0", problems::zelda_defaults(), problems::make_zelda);
        r.reserve("arcade-v0", "needs an external game-rule simulator");
        r.reserve("loderunner-v0", "needs the original level corpus and a gameplay agent");
        r.reserve("mario-v0", "needs the original level slices and an A* gameplay agent");
        r.reserve("talakat-v0", "needs the bullet-pattern simulator");
        return r;
    }();
    return registry;
}

}  // namespace pcgb
