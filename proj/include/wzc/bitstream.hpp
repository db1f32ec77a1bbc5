#pragma once

#include "wzc/dwt.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace wzc {

// A packed MSB-first bit sequence. Bits past bit_count in the last byte are 0.
struct BitBuffer {
    std::vector<std::uint8_t> bytes;
    std::size_t bit_count = 0;

    bool bit(std::size_t i) const noexcept { return (bytes[i >> 3] >> (7 - (i & 7))) & 1u; }

    // The first `bits` bits, re-padded with zeros.
    BitBuffer prefix(std::size_t bits) const;

    friend bool operator==(const BitBuffer&, const BitBuffer&) = default;
};

class BitWriter {
public:
    void put(bool bit)
    {
        if ((m_count & 7) == 0)
            m_bytes.push_back(0);
        if (bit)
            m_bytes.back() |= static_cast<std::uint8_t>(0x80u >> (m_count & 7));
        ++m_count;
    }

    // Appends the low `count` bits of `value`, most significant first.
    void put_bits(std::uint64_t value, unsigned count);

    std::size_t bit_count() const noexcept { return m_count; }

    // Returns the zero-padded buffer and leaves the writer empty.
    BitBuffer finish();

private:
    std::vector<std::uint8_t> m_bytes;
    std::size_t m_count = 0;
};

class BitReader {
public:
    // Reads at most `bit_length` bits; bit_length may not exceed 8 * bytes.size().
    BitReader(std::span<const std::uint8_t> bytes, std::size_t bit_length);
    explicit BitReader(const BitBuffer& buffer) : BitReader(buffer.bytes, buffer.bit_count) {}

    // Throws Error(Errc::Truncated) past the declared length.
    bool get();
    std::uint64_t get_bits(unsigned count);

    std::size_t position() const noexcept { return m_pos; }
    std::size_t remaining() const noexcept { return m_length - m_pos; }

private:
    std::span<const std::uint8_t> m_bytes;
    std::size_t m_length;
    std::size_t m_pos = 0;
};

enum class Codec : std::uint8_t { Spiht = 0, Stw = 1 };

const char* codec_name(Codec c) noexcept;

// "WZC1" container.
//
//   offset  size  field
//   0       4     magic "WZC1"
//   4       1     codec id (0 SPIHT, 1 STW)
//   5       1     wavelet id (0 HAAR, 1 CDF97)
//   6       1     flags (bit0: YCbCr transform applied)
//   7       1     channel count
//   8       1     decomposition levels
//   9       1     loops
//   10      2     width, big-endian
//   12      2     height, big-endian
//   14      5*C   per channel: n0 (0xFF = empty), payload bit length (u32 BE)
//   ...           per channel payloads, ceil(bits / 8) bytes each
struct ChannelHeader {
    std::optional<int> n0;
    std::uint32_t bit_length = 0;
    friend bool operator==(const ChannelHeader&, const ChannelHeader&) = default;
};

struct ContainerHeader {
    static constexpr std::uint8_t kFlagColorTransform = 0x01;
    static constexpr std::size_t kFixedBytes = 14;
    static constexpr std::size_t kPerChannelBytes = 5;

    Codec codec = Codec::Spiht;
    Wavelet wavelet = Wavelet::Cdf97;
    std::uint8_t flags = 0;
    std::uint8_t levels = 1;
    std::uint8_t loops = 1;
    std::uint16_t width = 0;
    std::uint16_t height = 0;
    std::vector<ChannelHeader> channels;

    bool color_transform() const noexcept { return (flags & kFlagColorTransform) != 0; }
    std::size_t byte_size() const noexcept { return kFixedBytes + kPerChannelBytes * channels.size(); }

    friend bool operator==(const ContainerHeader&, const ContainerHeader&) = default;
};

struct ParsedContainer {
    ContainerHeader header;
    std::vector<std::vector<std::uint8_t>> payloads;
    // Payload data ended early; payloads hold what was present.
    bool truncated = false;
};

std::vector<std::uint8_t> serialize_container(const ContainerHeader& header,
                                              const std::vector<std::vector<std::uint8_t>>& payloads);

/// Parses and validates a container. Errors: BadMagic, UnknownCodec,
/// UnknownWavelet, LengthMismatch (trailing bytes or inconsistent header),
/// Truncated. With allow_partial, a payload cut short is returned with
/// `truncated` set instead of throwing; a cut header always throws.
ParsedContainer parse_container(std::span<const std::uint8_t> bytes, bool allow_partial = false);

} // namespace wzc
