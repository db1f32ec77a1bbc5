#include "test_support.hpp"
#include "wzc/error.hpp"
#include "wzc/zerotree.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace wzc;
using namespace wzc::testing;

TEST(InitialBitplane, Examples)
{
    EXPECT_EQ(initial_bitplane(std::vector<double>{10, 0, 0, 0}), 3);
    EXPECT_EQ(initial_bitplane(std::vector<double>{-1023.9, 1}), 9);
    EXPECT_EQ(initial_bitplane(std::vector<double>{1024}), 10);
    EXPECT_EQ(initial_bitplane(std::vector<double>{1.0}), 0);
    EXPECT_EQ(initial_bitplane(std::vector<double>{0.99, -0.5}), std::nullopt);
    EXPECT_EQ(initial_bitplane(std::vector<double>{}), std::nullopt);
}

TEST(InitialBitplane, BracketsThePeak)
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> d(1.0, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double v = d(rng);
        const int n = *initial_bitplane(std::vector<double>{v});
        ASSERT_LE(std::ldexp(1.0, n), v);
        ASSERT_LT(v, std::ldexp(1.0, n + 1));
    }
}

TEST(IsSignificant, Threshold)
{
    EXPECT_TRUE(is_significant(8.0, 3));
    EXPECT_TRUE(is_significant(-8.0, 3));
    EXPECT_FALSE(is_significant(7.999, 3));
    EXPECT_TRUE(is_significant(1.0, 0));
    EXPECT_FALSE(is_significant(0.0, 0));
}

TEST(BitplaneSchedule, PassCounts)
{
    EXPECT_EQ((BitplaneSchedule{3, 4}.pass_count()), 4);
    EXPECT_EQ((BitplaneSchedule{3, 10}.pass_count()), 4);
    EXPECT_EQ((BitplaneSchedule{3, 10}.final_plane()), 0);
    EXPECT_EQ((BitplaneSchedule{12, 10}.final_plane()), 3);
    EXPECT_EQ((BitplaneSchedule{12, 1}.pass_count()), 1);
}

TEST(Offspring, Examples)
{
    const SubbandLayout l8(8, 8, 3);
    const auto k = offspring({1, 1}, l8);
    EXPECT_EQ(k, (std::vector<NodeIndex>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}));
    EXPECT_TRUE(offspring({7, 7}, l8).empty());
    EXPECT_TRUE(offspring({4, 0}, l8).empty());
    EXPECT_EQ(offspring({2, 3}, l8), (std::vector<NodeIndex>{{4, 6}, {4, 7}, {5, 6}, {5, 7}}));
    EXPECT_THROW(offspring({8, 0}, l8), Error);

    // 4x4 at one level: LL is 2x2 and grouped; (0,0) is childless and
    // (1,1) parents the HH block.
    const SubbandLayout l4(4, 4, 1);
    EXPECT_TRUE(offspring({0, 0}, l4).empty());
    EXPECT_EQ(offspring({0, 1}, l4), (std::vector<NodeIndex>{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    EXPECT_EQ(offspring({1, 0}, l4), (std::vector<NodeIndex>{{2, 0}, {2, 1}, {3, 0}, {3, 1}}));
    EXPECT_EQ(offspring({1, 1}, l4), (std::vector<NodeIndex>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}));
}

TEST(Offspring, OddLLMakesDetailRoots)
{
    const SubbandLayout l2(2, 2, 1);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            EXPECT_TRUE(offspring({r, c}, l2).empty());

    const SpatialTree tree(SubbandLayout(4, 4, 2));
    EXPECT_FALSE(tree.grouped_ll());
    EXPECT_EQ(tree.roots(), (std::vector<std::uint32_t>{0, 1, 4, 5}));
    EXPECT_FALSE(tree.has_offspring(0));
    EXPECT_TRUE(tree.has_offspring(1));
}

TEST(SpatialTree, MatchesFreeFunction)
{
    for (const auto [w, h, levels] : {std::tuple{8u, 8u, 3}, std::tuple{16u, 8u, 2}, std::tuple{32u, 32u, 5},
                                      std::tuple{8u, 32u, 1}, std::tuple{4u, 4u, 2}}) {
        const SubbandLayout layout(w, h, levels);
        const SpatialTree tree(layout);
        for (std::size_t i = 0; i < tree.size(); ++i) {
            const auto expect = offspring(tree.node(i), layout);
            std::vector<NodeIndex> got;
            for (const auto k : tree.offspring(i))
                got.push_back(tree.node(k));
            ASSERT_EQ(got, expect);
        }
    }
}

TEST(SpatialTree, ForestPartitionsEveryCoefficient)
{
    for (const auto [w, h, levels] : {std::tuple{8u, 8u, 3}, std::tuple{64u, 32u, 4}, std::tuple{16u, 16u, 4},
                                      std::tuple{2u, 8u, 1}}) {
        const SpatialTree tree(SubbandLayout(w, h, levels));
        std::vector<int> hits(tree.size(), 0);
        std::vector<std::uint32_t> stack(tree.roots().begin(), tree.roots().end());
        while (!stack.empty()) {
            const auto i = stack.back();
            stack.pop_back();
            ++hits[i];
            for (const auto k : tree.offspring(i)) {
                ASSERT_GT(k, i);
                ASSERT_EQ(tree.parent(k), std::optional<std::size_t>(i));
                stack.push_back(k);
            }
        }
        for (int c : hits)
            ASSERT_EQ(c, 1);
        for (const auto r : tree.roots())
            EXPECT_FALSE(tree.parent(r).has_value());
    }
}

TEST(SpatialTree, ScanOrderIsPermutationWithParentsFirst)
{
    const SpatialTree tree(SubbandLayout(32, 16, 3));
    const auto& scan = tree.scan_order();
    ASSERT_EQ(scan.size(), tree.size());
    std::vector<std::size_t> pos(tree.size(), tree.size());
    for (std::size_t i = 0; i < scan.size(); ++i)
        pos[scan[i]] = i;
    for (std::size_t i = 0; i < tree.size(); ++i) {
        ASSERT_LT(pos[i], tree.size());
        if (const auto p = tree.parent(i))
            ASSERT_LT(pos[*p], pos[i]);
    }
    // LL raster first.
    EXPECT_EQ(scan[0], 0u);
    EXPECT_EQ(scan[1], 1u);
    EXPECT_EQ(scan[4], 32u);
}

TEST(DescendantTable, MatchesBruteForce)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = random_integer_pyramid(rng, 32);
        const SpatialTree tree(p.layout);
        const DescendantTable table(tree, p.coeffs.data());
        for (std::size_t i = 0; i < tree.size(); ++i) {
            const double brute = brute_descendant_max(p, tree.node(i));
            ASSERT_EQ(table.descendant_max(i), brute);
            ASSERT_EQ(brute_descendant_max(tree, p.coeffs.data(), i), brute);
            double grand = 0.0;
            for (const auto k : tree.offspring(i))
                grand = std::max(grand, brute_descendant_max(p, tree.node(k)));
            ASSERT_EQ(table.grand_descendant_max(i), grand);
            for (int n = 0; n <= 8; ++n) {
                ASSERT_EQ(table.descendants_significant(i, n), descendants_significant(p, tree.node(i), n));
                ASSERT_EQ(table.grand_descendants_significant(i, n), is_significant(grand, n));
            }
        }
    }
}

TEST(DescendantTable, SignificanceIsMonotoneInThePlane)
{
    std::mt19937_64 rng(23);
    const auto p = random_integer_pyramid(rng, 32, 32, 4);
    const SpatialTree tree(p.layout);
    const DescendantTable table(tree, p.coeffs.data());
    for (std::size_t i = 0; i < tree.size(); ++i)
        for (int n = 1; n < 12; ++n)
            if (table.descendants_significant(i, n))
                ASSERT_TRUE(table.descendants_significant(i, n - 1));
}

TEST(DescendantsSignificant, Example)
{
    auto p = pyramid_from(4, 4, 1, {});
    p.coeffs(2, 3) = 40.0;
    EXPECT_TRUE(descendants_significant(p, {1, 1}, 5));
    EXPECT_FALSE(descendants_significant(p, {1, 1}, 6));
    EXPECT_FALSE(descendants_significant(p, {0, 1}, 0));
}
