#include "coder_oracles.hpp"
#include "wzc/error.hpp"
#include "wzc/spiht.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace wzc;
using namespace wzc::testing;

TEST(SpihtGolden, TwoByTwoSingleCoefficient)
{
    const auto p = pyramid_from(2, 2, 1, {10, 0, 0, 0});
    const auto enc = spiht_encode(p, 4);
    ASSERT_EQ(enc.n0, 3);
    // n=3: 1 (sig) 0 (sign) 0 0 0; n=2..0: three zeros then refinement
    // bits 0, 1, 0 of |10|.
    EXPECT_EQ(bit_string(enc.bits), "10000000000010000");
    EXPECT_EQ(enc.pass_ends, (std::vector<std::size_t>{5, 9, 13, 17}));

    const auto dec = spiht_decode(enc.bits, enc.n0, 4, p.layout, Wavelet::Haar);
    EXPECT_FALSE(dec.truncated);
    EXPECT_EQ(dec.passes_completed, 4);
    EXPECT_EQ(dec.pyramid.coeffs(0, 0), 10.0);
    EXPECT_EQ(dec.pyramid.coeffs(1, 1), 0.0);

    const auto first = spiht_decode(enc.bits.prefix(5), enc.n0, 1, p.layout, Wavelet::Haar);
    EXPECT_EQ(first.pyramid.coeffs(0, 0), 12.0);
}

TEST(SpihtGolden, NegativeSign)
{
    const auto p = pyramid_from(2, 2, 1, {0, -5, 0, 0});
    const auto enc = spiht_encode(p, 1);
    EXPECT_EQ(enc.n0, 2);
    EXPECT_EQ(bit_string(enc.bits), "01100");
}

TEST(SpihtGolden, FourByFourFinestCoefficient)
{
    auto p = pyramid_from(4, 4, 1, {});
    p.coeffs(2, 3) = 40.0;
    const auto enc = spiht_encode(p, 1);
    ASSERT_EQ(enc.n0, 5);
    // LIP: four zeros. LIS: (0,1)A 0, (1,0)A 0, (1,1)A 1, then its offspring
    // (2,2) 0, (2,3) 1 + sign 0, (3,2) 0, (3,3) 0.
    EXPECT_EQ(bit_string(enc.bits), "000000101000");
}

TEST(Spiht, EmptyPyramid)
{
    const auto p = pyramid_from(4, 4, 2, {0.4, -0.49});
    const auto enc = spiht_encode(p, 10);
    EXPECT_FALSE(enc.n0.has_value());
    EXPECT_EQ(enc.bits.bit_count, 0u);
    const auto dec = spiht_decode(enc.bits, enc.n0, 10, p.layout);
    EXPECT_FALSE(dec.truncated);
    for (double c : dec.pyramid.coeffs.data())
        EXPECT_EQ(c, 0.0);
}

TEST(Spiht, RejectsZeroLoops)
{
    const auto p = pyramid_from(2, 2, 1, {10, 0, 0, 0});
    EXPECT_THROW(spiht_encode(p, 0), Error);
    EXPECT_THROW(spiht_decode({}, 3, 0, p.layout), Error);
}

TEST(Spiht, RoundsHalfAwayFromZero)
{
    const auto p = pyramid_from(2, 2, 1, {2.5, -2.5, 0.5, -0.5});
    const auto enc = spiht_encode(p, 10);
    const auto dec = spiht_decode(enc.bits, enc.n0, 10, p.layout);
    EXPECT_EQ(dec.pyramid.coeffs(0, 0), 3.0);
    EXPECT_EQ(dec.pyramid.coeffs(0, 1), -3.0);
    EXPECT_EQ(dec.pyramid.coeffs(1, 0), 1.0);
    EXPECT_EQ(dec.pyramid.coeffs(1, 1), -1.0);
}

TEST(Spiht, ExactFullDecode)
{
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = random_integer_pyramid(rng);
        const auto failure = check_exact(spiht_fns(), p);
        ASSERT_TRUE(failure.empty()) << failure;
    }
}

TEST(Spiht, ExactOnRealValuedTransform)
{
    std::mt19937_64 rng(5);
    const auto x = random_matrix(rng, 32, 32, 0, 255);
    const auto p = forward_dwt_2d(x, 3, Wavelet::Cdf97);
    const auto failure = check_exact(spiht_fns(), p);
    EXPECT_TRUE(failure.empty()) << failure;
}

TEST(Spiht, PassPrefixesMirrorBoundAndEmbeddedness)
{
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = random_integer_pyramid(rng, 32);
        const auto failure = check_passes(spiht_fns(), p);
        ASSERT_TRUE(failure.empty()) << failure;
    }
}

TEST(Spiht, Deterministic)
{
    std::mt19937_64 rng(7);
    const auto p = random_integer_pyramid(rng, 64, 64, 4);
    const auto a = spiht_encode(p, 12);
    const auto b = spiht_encode(p, 12);
    EXPECT_EQ(a.bits, b.bits);
    EXPECT_EQ(a.pass_ends, b.pass_ends);
}

TEST(Spiht, ListDiscipline)
{
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_integer_pyramid(rng, 32);
        const SpatialTree tree(p.layout);
        std::vector<SpihtCoderState> enc_states, dec_states;
        const auto enc = spiht_encode(p, kFullLoops, [&](const SpihtCoderState& s) { enc_states.push_back(s); });
        for (const auto& s : enc_states) {
            std::set<std::uint32_t> lip(s.lip.begin(), s.lip.end());
            ASSERT_EQ(lip.size(), s.lip.size());
            std::set<std::uint32_t> lsp;
            for (const auto& e : s.lsp) {
                ASSERT_TRUE(lsp.insert(e.node).second);
                ASSERT_FALSE(lip.count(e.node));
                ASSERT_GT(e.plane, s.n);
            }
            // Every coefficient is in exactly one of LIP, LSP, or below an LIS set.
            ASSERT_LE(lip.size() + lsp.size(), tree.size());
            std::set<std::pair<std::uint32_t, SetKind>> lis;
            for (const auto& e : s.lis) {
                ASSERT_TRUE(lis.insert({e.node, e.kind}).second);
                if (e.kind == SetKind::A)
                    ASSERT_TRUE(tree.has_offspring(e.node));
                else
                    ASSERT_TRUE(tree.has_grand_descendants(e.node));
            }
        }
        const auto dec = spiht_decode(enc.bits, enc.n0, kFullLoops, p.layout, Wavelet::Haar,
                                      [&](const SpihtCoderState& s) { dec_states.push_back(s); });
        ASSERT_EQ(enc_states.size(), dec_states.size());
        for (std::size_t k = 0; k < enc_states.size(); ++k) {
            ASSERT_EQ(enc_states[k].n, dec_states[k].n);
            ASSERT_EQ(enc_states[k].lip, dec_states[k].lip);
            ASSERT_EQ(enc_states[k].lis, dec_states[k].lis);
            ASSERT_EQ(enc_states[k].lsp, dec_states[k].lsp);
        }
    }
}

TEST(Spiht, TruncatedStreamDecodesBestEffort)
{
    std::mt19937_64 rng(404);
    const auto p = random_integer_pyramid(rng, 32, 32, 3);
    const auto enc = spiht_encode(p, kFullLoops);
    ASSERT_GT(enc.pass_ends.size(), 2u);
    const std::size_t cut = enc.pass_ends[1] + 3;
    const auto dec = spiht_decode(enc.bits.prefix(cut), enc.n0, kFullLoops, p.layout);
    EXPECT_TRUE(dec.truncated);
    EXPECT_EQ(dec.bits_consumed, cut);
    EXPECT_EQ(dec.passes_completed, 2);

    // The partial result is at least as good as the last complete pass.
    const auto want = rounded(p);
    const auto two = spiht_decode(enc.bits.prefix(enc.pass_ends[1]), enc.n0, 2, p.layout);
    EXPECT_FALSE(two.truncated);
    EXPECT_LE(mean_squared_diff(want, dec.pyramid.coeffs.data()),
              mean_squared_diff(want, two.pyramid.coeffs.data()));
}

TEST(Spiht, LoopsLimitPasses)
{
    std::mt19937_64 rng(505);
    const auto p = random_integer_pyramid(rng, 16, 16, 2);
    for (int loops = 1; loops <= 6; ++loops) {
        const auto enc = spiht_encode(p, loops);
        EXPECT_EQ(enc.pass_ends.size(), static_cast<std::size_t>((BitplaneSchedule{*enc.n0, loops}.pass_count())));
    }
}
