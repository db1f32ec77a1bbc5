#include "wzc/bitstream.hpp"
#include "wzc/error.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wzc;

namespace {

Errc parse_error(std::span<const std::uint8_t> bytes)
{
    try {
        parse_container(bytes);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected a container error";
    return Errc::InvalidArgument;
}

ContainerHeader one_channel(std::optional<int> n0, std::uint32_t bits)
{
    ContainerHeader h;
    h.codec = Codec::Stw;
    h.wavelet = Wavelet::Haar;
    h.flags = 0;
    h.levels = 3;
    h.loops = 10;
    h.width = 0x0102;
    h.height = 0x0304;
    h.channels = {{n0, bits}};
    return h;
}

} // namespace

TEST(BitWriter, MsbFirst)
{
    BitWriter w;
    w.put(true);
    w.put(false);
    w.put(true);
    const auto b = w.finish();
    EXPECT_EQ(b.bytes, std::vector<std::uint8_t>{0xA0});
    EXPECT_EQ(b.bit_count, 3u);
}

TEST(BitWriter, WholeByte)
{
    BitWriter w;
    w.put_bits(0x5A, 8);
    EXPECT_EQ(w.finish().bytes, std::vector<std::uint8_t>{0x5A});
}

TEST(BitWriter, TwelveBitsPadToTwoBytes)
{
    BitWriter w;
    w.put_bits(0xFFF, 12);
    const auto b = w.finish();
    EXPECT_EQ(b.bytes, (std::vector<std::uint8_t>{0xFF, 0xF0}));
    EXPECT_EQ(b.bit_count, 12u);
}

TEST(BitWriter, FinishResets)
{
    BitWriter w;
    w.put(true);
    (void)w.finish();
    EXPECT_EQ(w.bit_count(), 0u);
    EXPECT_TRUE(w.finish().bytes.empty());
}

TEST(BitBuffer, PrefixRepads)
{
    BitWriter w;
    w.put_bits(0xFFFF, 16);
    const auto p = w.finish().prefix(5);
    EXPECT_EQ(p.bytes, std::vector<std::uint8_t>{0xF8});
    EXPECT_EQ(p.bit_count, 5u);
}

TEST(BitReader, RoundTripRandomUpToAMillionBits)
{
    std::mt19937_64 rng(99);
    for (const std::size_t n : {0u, 1u, 7u, 8u, 9u, 1000u, 1000000u}) {
        std::vector<bool> bits(n);
        BitWriter w;
        for (std::size_t i = 0; i < n; ++i) {
            bits[i] = rng() & 1;
            w.put(bits[i]);
        }
        const auto buf = w.finish();
        ASSERT_EQ(buf.bytes.size(), (n + 7) / 8);
        BitReader r(buf);
        for (std::size_t i = 0; i < n; ++i)
            ASSERT_EQ(r.get(), bits[i]) << "bit " << i;
        EXPECT_EQ(r.remaining(), 0u);
        EXPECT_THROW(r.get(), Error);
    }
}

TEST(BitReader, MultiBitFields)
{
    BitWriter w;
    w.put_bits(0x3, 2);
    w.put_bits(0x1234567, 28);
    w.put_bits(0, 0);
    const auto buf = w.finish();
    BitReader r(buf);
    EXPECT_EQ(r.get_bits(2), 0x3u);
    EXPECT_EQ(r.get_bits(0), 0u);
    EXPECT_EQ(r.get_bits(28), 0x1234567u);
    EXPECT_EQ(r.position(), 30u);
}

TEST(BitReader, StopsAtDeclaredLength)
{
    const std::vector<std::uint8_t> bytes{0xFF};
    BitReader r(bytes, 3);
    EXPECT_EQ(r.get_bits(3), 7u);
    try {
        r.get();
        FAIL() << "read past the declared length";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::Truncated);
    }
    EXPECT_THROW(BitReader(bytes, 9), Error);
}

TEST(Container, MinimalEmptyChannel)
{
    const auto h = one_channel(std::nullopt, 0);
    const auto bytes = serialize_container(h, {{}});
    // 4 magic + 6 one-byte fields + 2 + 2, then 5 per channel.
    ASSERT_EQ(bytes.size(), 19u);
    const std::vector<std::uint8_t> expect{'W', 'Z', 'C', '1', 1, 0, 0, 1, 3, 10,
                                           0x01, 0x02, 0x03, 0x04, 0xFF, 0, 0, 0, 0};
    EXPECT_EQ(bytes, expect);
    const auto parsed = parse_container(bytes);
    EXPECT_EQ(parsed.header, h);
    EXPECT_FALSE(parsed.truncated);
    ASSERT_EQ(parsed.payloads.size(), 1u);
    EXPECT_TRUE(parsed.payloads[0].empty());
}

TEST(Container, RoundTripBigEndianLengths)
{
    auto h = one_channel(5, 0x010203);
    h.flags = ContainerHeader::kFlagColorTransform;
    h.channels.push_back({12, 9});
    h.channels.push_back({std::nullopt, 0});
    std::vector<std::vector<std::uint8_t>> payloads{std::vector<std::uint8_t>((0x010203 + 7) / 8, 0xAB),
                                                    {0x12, 0x80},
                                                    {}};
    const auto bytes = serialize_container(h, payloads);
    EXPECT_EQ(bytes.size(), h.byte_size() + payloads[0].size() + 2);
    // First channel entry: n0 then the bit length, big-endian.
    EXPECT_EQ(bytes[14], 5);
    EXPECT_EQ(bytes[15], 0x00);
    EXPECT_EQ(bytes[16], 0x01);
    EXPECT_EQ(bytes[17], 0x02);
    EXPECT_EQ(bytes[18], 0x03);
    const auto parsed = parse_container(bytes);
    EXPECT_EQ(parsed.header, h);
    EXPECT_EQ(parsed.payloads, payloads);
    EXPECT_TRUE(parsed.header.color_transform());
    EXPECT_EQ(serialize_container(parsed.header, parsed.payloads), bytes);
}

TEST(Container, DistinctErrors)
{
    const auto good = serialize_container(one_channel(2, 12), {{0xAB, 0xC0}});
    ASSERT_NO_THROW(parse_container(good));

    auto bad_magic = good;
    bad_magic[0] ^= 0x01;
    EXPECT_EQ(parse_error(bad_magic), Errc::BadMagic);

    auto bad_codec = good;
    bad_codec[4] = 7;
    EXPECT_EQ(parse_error(bad_codec), Errc::UnknownCodec);

    auto bad_wavelet = good;
    bad_wavelet[5] = 2;
    EXPECT_EQ(parse_error(bad_wavelet), Errc::UnknownWavelet);

    auto trailing = good;
    trailing.push_back(0);
    EXPECT_EQ(parse_error(trailing), Errc::LengthMismatch);

    auto empty_with_bits = serialize_container(one_channel(std::nullopt, 0), {{}});
    empty_with_bits[18] = 8;
    empty_with_bits.push_back(0);
    EXPECT_EQ(parse_error(empty_with_bits), Errc::LengthMismatch);

    auto short_payload = good;
    short_payload.pop_back();
    EXPECT_EQ(parse_error(short_payload), Errc::Truncated);

    const std::span<const std::uint8_t> short_header(good.data(), 10);
    EXPECT_EQ(parse_error(short_header), Errc::Truncated);
}

TEST(Container, PartialParseKeepsWhatIsThere)
{
    const auto good = serialize_container(one_channel(2, 24), {{0x01, 0x02, 0x03}});
    const std::span<const std::uint8_t> cut(good.data(), good.size() - 1);
    const auto parsed = parse_container(cut, true);
    EXPECT_TRUE(parsed.truncated);
    EXPECT_EQ(parsed.payloads[0], (std::vector<std::uint8_t>{0x01, 0x02}));
    EXPECT_THROW(parse_container(std::span<const std::uint8_t>(good.data(), 12), true), Error);
}

TEST(Container, SerializeRejectsInconsistentPayloads)
{
    EXPECT_THROW(serialize_container(one_channel(2, 12), {{0xAB}}), Error);
    EXPECT_THROW(serialize_container(one_channel(2, 12), {}), Error);
}
