#include <cmath>
#include <map>

#include <gtest/gtest.h>

#include "pcgbench/core/registry.hpp"
#include "pcgbench/core/rng.hpp"
#include "pcgbench/core/space.hpp"

using namespace pcgb;

namespace {

Value grid_of(std::size_t w, std::size_t h, std::int64_t fill) {
    std::vector<Value> rows;
    for (std::size_t y = 0; y < h; ++y) rows.push_back(Value::list(std::vector<Value>(w, Value(fill))));
    return Value::list(std::move(rows));
}

std::size_t changed_leaves(const Value& a, const Value& b) {
    if (a.is_leaf()) return a.leaf() == b.leaf() ? 0 : 1;
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.size(); ++i) n += changed_leaves(a[i], b[i]);
    return n;
}

}  // namespace

TEST(Rng, SameSeedSameStream) {
    Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) EXPECT_EQ(a.uniform_int(-5, 1000), b.uniform_int(-5, 1000));
}

TEST(Rng, UniformIntStaysInBounds) {
    Rng rng(1);
    for (int i = 0; i < 10000; ++i) {
        auto v = rng.uniform_int(3, 9);
        ASSERT_GE(v, 3);
        ASSERT_LE(v, 9);
    }
    EXPECT_THROW((void)rng.uniform_int(2, 1), std::invalid_argument);
}

TEST(Rng, DerivedStreamsDiffer) {
    EXPECT_NE(Rng::derive(7, 0), Rng::derive(7, 1));
    EXPECT_NE(Rng::derive(7, 0), Rng::derive(8, 0));
    EXPECT_EQ(Rng::derive(7, 3), Rng::derive(7, 3));
}

TEST(Space, FairLeafIsUniform) {
    auto space = SpaceDescriptor::discrete(2);
    Rng rng(3);
    const int n = 10000;
    int ones = 0;
    for (int i = 0; i < n; ++i) ones += static_cast<int>(space_sample(space, rng).leaf());
    const double sigma = std::sqrt(n * 0.25);
    EXPECT_LT(std::abs(ones - n * 0.5), 5 * sigma);
}

TEST(Space, BinaryGridShape) {
    auto space = SpaceDescriptor::grid2d(SpaceDescriptor::discrete(2), 14, 14);
    Rng rng(5);
    auto v = space_sample(space, rng);
    ASSERT_EQ(v.size(), 14u);
    for (std::size_t y = 0; y < 14; ++y) {
        ASSERT_EQ(v[y].size(), 14u);
        for (std::size_t x = 0; x < 14; ++x) EXPECT_TRUE(v[y][x].leaf() == 0 || v[y][x].leaf() == 1);
    }
    EXPECT_EQ(space.leaf_count(), 196u);
}

TEST(Space, SampleIsDeterministicPerSeed) {
    auto space = SpaceDescriptor::grid2d(SpaceDescriptor::discrete(7), 8, 12);
    Rng a(42), b(42);
    EXPECT_EQ(space_sample(space, a), space_sample(space, b));
}

TEST(Space, Contains) {
    EXPECT_FALSE(space_contains(SpaceDescriptor::range(0, 5), Value(6)));
    EXPECT_TRUE(space_contains(SpaceDescriptor::range(0, 5), Value(5)));
    auto rec = SpaceDescriptor::record({{"x", SpaceDescriptor::range(0, 10)}});
    EXPECT_TRUE(space_contains(rec, Value::list({Value(3)})));
    EXPECT_FALSE(space_contains(rec, Value(3)));
    auto grid = SpaceDescriptor::grid2d(SpaceDescriptor::discrete(2), 14, 14);
    EXPECT_FALSE(space_contains(grid, grid_of(14, 13, 0)));
    EXPECT_FALSE(space_contains(grid, grid_of(13, 14, 0)));
    EXPECT_TRUE(space_contains(grid, grid_of(14, 14, 1)));
    EXPECT_FALSE(space_contains(grid, grid_of(14, 14, 2)));
}

TEST(Space, FlattenDepthFirst) {
    auto rec = SpaceDescriptor::record({{"a", SpaceDescriptor::discrete(3)}, {"b", SpaceDescriptor::range(2, 4)}});
    EXPECT_EQ(space_flatten(rec, Value::list({Value(1), Value(4)})), (std::vector<std::int64_t>{1, 4}));
    EXPECT_EQ(rec.field_index("b"), 1u);
    EXPECT_THROW((void)rec.field_index("c"), std::out_of_range);
}

TEST(Space, UnflattenReportsLeaf) {
    std::vector<std::int64_t> flat{5};
    try {
        (void)space_unflatten(SpaceDescriptor::discrete(3), flat);
        FAIL() << "expected SpaceError";
    } catch (const SpaceError& e) {
        EXPECT_EQ(e.leaf_index(), 0u);
    }
    auto rec = SpaceDescriptor::record({{"a", SpaceDescriptor::discrete(3)}, {"b", SpaceDescriptor::range(2, 4)}});
    std::vector<std::int64_t> bad{1, 9};
    try {
        (void)space_unflatten(rec, bad);
        FAIL() << "expected SpaceError";
    } catch (const SpaceError& e) {
        EXPECT_EQ(e.leaf_index(), 1u);
    }
    std::vector<std::int64_t> short_flat{1};
    EXPECT_THROW((void)space_unflatten(rec, short_flat), SpaceError);
}

TEST(Space, FlattenThrowsOutsideSpace) {
    EXPECT_THROW((void)space_flatten(SpaceDescriptor::range(0, 5), Value(6)), SpaceError);
}

TEST(Space, RoundTripEveryProblem) {
    Rng rng(11);
    for (const auto& name : builtin_registry().names()) {
        auto p = registry_make(name);
        for (const auto* space : {&p->content_space(), &p->control_space()}) {
            for (int i = 0; i < 1000; ++i) {
                auto v = space_sample(*space, rng);
                ASSERT_TRUE(space_contains(*space, v)) << name;
                auto flat = space_flatten(*space, v);
                ASSERT_EQ(flat.size(), space->leaf_count());
                ASSERT_EQ(space_unflatten(*space, flat), v) << name;
            }
        }
    }
}

TEST(Space, MutateRateZeroIsIdentity) {
    auto space = SpaceDescriptor::grid2d(SpaceDescriptor::discrete(5), 5, 5);
    Rng rng(2);
    auto v = space_sample(space, rng);
    EXPECT_EQ(space_mutate(space, v, 0.0, rng), v);
}

TEST(Space, MutateSingletonLeavesUnchanged) {
    auto space = SpaceDescriptor::array(SpaceDescriptor::discrete(1), 20);
    Rng rng(2);
    auto v = space_sample(space, rng);
    EXPECT_EQ(space_mutate(space, v, 1.0, rng), v);
}

TEST(Space, MutateChangeCountMatchesBinomial) {
    auto space = SpaceDescriptor::grid2d(SpaceDescriptor::discrete(2), 14, 14);
    Rng rng(9);
    const int trials = 10000;
    const double n = 196.0;
    const double p = 0.05 * (1.0 - 1.0 / 2.0);  // resample, then differ from the old symbol
    double total = 0;
    for (int t = 0; t < trials; ++t) {
        auto v = space_sample(space, rng);
        total += static_cast<double>(changed_leaves(v, space_mutate(space, v, 0.05, rng)));
    }
    const double mean = total / trials;
    const double sigma = std::sqrt(n * p * (1 - p) / trials);
    EXPECT_LT(std::abs(mean - n * p), 5 * sigma) << "mean " << mean;
}

TEST(Space, MixIdempotentAndMember) {
    auto space = SpaceDescriptor::grid2d(SpaceDescriptor::discrete(6), 11, 7);
    Rng rng(4);
    auto a = space_sample(space, rng);
    auto b = space_sample(space, rng);
    EXPECT_EQ(space_mix(space, a, a, rng), a);
    auto fa = space_flatten(space, a);
    auto fb = space_flatten(space, b);
    for (int t = 0; t < 100; ++t) {
        auto fc = space_flatten(space, space_mix(space, a, b, rng));
        for (std::size_t i = 0; i < fc.size(); ++i) ASSERT_TRUE(fc[i] == fa[i] || fc[i] == fb[i]);
    }
}

TEST(Space, MixCombinationsAreUniform) {
    auto space = SpaceDescriptor::array(SpaceDescriptor::discrete(2), 2);
    Value a = Value::list({Value(0), Value(0)});
    Value b = Value::list({Value(1), Value(1)});
    Rng rng(8);
    std::map<std::vector<std::int64_t>, int> freq;
    const int n = 10000;
    for (int i = 0; i < n; ++i) ++freq[space_flatten(space, space_mix(space, a, b, rng))];
    ASSERT_EQ(freq.size(), 4u);
    const double sigma = std::sqrt(n * 0.25 * 0.75);
    for (const auto& [k, c] : freq) EXPECT_LT(std::abs(c - n * 0.25), 5 * sigma);
}

TEST(Space, ToString) {
    EXPECT_EQ(SpaceDescriptor::grid2d(SpaceDescriptor::discrete(2), 14, 14).to_string(), "Grid2D(Discrete(2),14,14)");
}

TEST(Space, InvalidConstruction) {
    EXPECT_THROW((void)SpaceDescriptor::discrete(0), std::invalid_argument);
    EXPECT_THROW((void)SpaceDescriptor::range(3, 2), std::invalid_argument);
}
