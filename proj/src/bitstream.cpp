#include "wzc/bitstream.hpp"

#include "wzc/error.hpp"

#include <algorithm>
#include <string>

namespace wzc {

BitBuffer BitBuffer::prefix(std::size_t bits) const
{
    if (bits > bit_count)
        throw Error(Errc::InvalidArgument, "prefix longer than the buffer");
    BitBuffer out;
    out.bit_count = bits;
    out.bytes.assign(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>((bits + 7) / 8));
    if (bits % 8 != 0)
        out.bytes.back() &= static_cast<std::uint8_t>(0xFFu << (8 - bits % 8));
    return out;
}

void BitWriter::put_bits(std::uint64_t value, unsigned count)
{
    if (count > 64)
        throw Error(Errc::InvalidArgument, "at most 64 bits per put_bits call");
    for (unsigned i = count; i-- > 0;)
        put((value >> i) & 1u);
}

BitBuffer BitWriter::finish()
{
    BitBuffer out{std::move(m_bytes), m_count};
    m_bytes.clear();
    m_count = 0;
    return out;
}

BitReader::BitReader(std::span<const std::uint8_t> bytes, std::size_t bit_length)
    : m_bytes(bytes), m_length(bit_length)
{
    if (bit_length > bytes.size() * 8)
        throw Error(Errc::InvalidArgument, "declared bit length exceeds the buffer");
}

bool BitReader::get()
{
    if (m_pos >= m_length)
        throw Error(Errc::Truncated, "bit stream exhausted after " + std::to_string(m_length) + " bits");
    const bool bit = (m_bytes[m_pos >> 3] >> (7 - (m_pos & 7))) & 1u;
    ++m_pos;
    return bit;
}

std::uint64_t BitReader::get_bits(unsigned count)
{
    if (count > 64)
        throw Error(Errc::InvalidArgument, "at most 64 bits per get_bits call");
    if (count > remaining())
        throw Error(Errc::Truncated, "requested " + std::to_string(count) + " bits, " +
                                         std::to_string(remaining()) + " remain");
    std::uint64_t v = 0;
    for (unsigned i = 0; i < count; ++i)
        v = (v << 1) | static_cast<std::uint64_t>(get());
    return v;
}

const char* codec_name(Codec c) noexcept
{
    switch (c) {
    case Codec::Spiht: return "spiht";
    case Codec::Stw:   return "stw";
    }
    return "?";
}

namespace {

    constexpr std::uint8_t kMagic[4] = {'W', 'Z', 'C', '1'};
    constexpr std::uint8_t kEmptyPlane = 0xFF;

    std::size_t payload_bytes(std::uint32_t bits) { return (static_cast<std::size_t>(bits) + 7) / 8; }

    void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v)
    {
        out.push_back(static_cast<std::uint8_t>(v >> 8));
        out.push_back(static_cast<std::uint8_t>(v));
    }

    void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v)
    {
        for (int shift = 24; shift >= 0; shift -= 8)
            out.push_back(static_cast<std::uint8_t>(v >> shift));
    }

    std::uint32_t get_be(std::span<const std::uint8_t> b, std::size_t at, int len)
    {
        std::uint32_t v = 0;
        for (int i = 0; i < len; ++i)
            v = (v << 8) | b[at + static_cast<std::size_t>(i)];
        return v;
    }

} // namespace

std::vector<std::uint8_t> serialize_container(const ContainerHeader& header,
                                              const std::vector<std::vector<std::uint8_t>>& payloads)
{
    if (header.channels.empty() || header.channels.size() > 255)
        throw Error(Errc::InvalidArgument, "container needs 1..255 channels");
    if (payloads.size() != header.channels.size())
        throw Error(Errc::LengthMismatch, "payload count does not match channel count");

    std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
    out.push_back(static_cast<std::uint8_t>(header.codec));
    out.push_back(static_cast<std::uint8_t>(header.wavelet));
    out.push_back(header.flags);
    out.push_back(static_cast<std::uint8_t>(header.channels.size()));
    out.push_back(header.levels);
    out.push_back(header.loops);
    put_u16(out, header.width);
    put_u16(out, header.height);
    for (std::size_t i = 0; i < header.channels.size(); ++i) {
        const auto& ch = header.channels[i];
        if (ch.n0 && (*ch.n0 < 0 || *ch.n0 >= kEmptyPlane))
            throw Error(Errc::InvalidArgument, "n0 out of range for the container");
        if (payloads[i].size() != payload_bytes(ch.bit_length))
            throw Error(Errc::LengthMismatch, "channel " + std::to_string(i) +
                                                  " payload size does not match its bit length");
        out.push_back(ch.n0 ? static_cast<std::uint8_t>(*ch.n0) : kEmptyPlane);
        put_u32(out, ch.bit_length);
    }
    for (const auto& p : payloads)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

ParsedContainer parse_container(std::span<const std::uint8_t> bytes, bool allow_partial)
{
    if (bytes.size() < 4)
        throw Error(Errc::Truncated, "file shorter than the magic", bytes.size());
    if (!std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin()))
        throw Error(Errc::BadMagic, "not a WZC1 container", 0);
    if (bytes.size() < ContainerHeader::kFixedBytes)
        throw Error(Errc::Truncated, "fixed header cut short", bytes.size());

    ParsedContainer out;
    auto& h = out.header;
    if (bytes[4] > 1)
        throw Error(Errc::UnknownCodec, "codec id " + std::to_string(bytes[4]), 4);
    if (bytes[5] > 1)
        throw Error(Errc::UnknownWavelet, "wavelet id " + std::to_string(bytes[5]), 5);
    h.codec = static_cast<Codec>(bytes[4]);
    h.wavelet = static_cast<Wavelet>(bytes[5]);
    h.flags = bytes[6];
    const std::size_t channels = bytes[7];
    h.levels = bytes[8];
    h.loops = bytes[9];
    h.width = static_cast<std::uint16_t>(get_be(bytes, 10, 2));
    h.height = static_cast<std::uint16_t>(get_be(bytes, 12, 2));
    if (channels == 0)
        throw Error(Errc::LengthMismatch, "zero channels", 7);

    const std::size_t header_bytes = ContainerHeader::kFixedBytes + ContainerHeader::kPerChannelBytes * channels;
    if (bytes.size() < header_bytes)
        throw Error(Errc::Truncated, "channel table cut short", bytes.size());

    std::size_t at = ContainerHeader::kFixedBytes;
    std::size_t total = 0;
    for (std::size_t i = 0; i < channels; ++i) {
        ChannelHeader ch;
        if (bytes[at] != kEmptyPlane)
            ch.n0 = bytes[at];
        ch.bit_length = get_be(bytes, at + 1, 4);
        if (!ch.n0 && ch.bit_length != 0)
            throw Error(Errc::LengthMismatch, "empty channel with a non-empty payload", at);
        h.channels.push_back(ch);
        total += payload_bytes(ch.bit_length);
        at += ContainerHeader::kPerChannelBytes;
    }

    const std::size_t available = bytes.size() - header_bytes;
    if (available > total)
        throw Error(Errc::LengthMismatch,
                    std::to_string(available - total) + " trailing bytes after the payloads", header_bytes + total);
    if (available < total && !allow_partial)
        throw Error(Errc::Truncated,
                    "payloads hold " + std::to_string(available) + " of " + std::to_string(total) + " bytes",
                    bytes.size());
    out.truncated = available < total;

    for (const auto& ch : h.channels) {
        const std::size_t want = payload_bytes(ch.bit_length);
        const std::size_t take = std::min(want, bytes.size() - at);
        out.payloads.emplace_back(bytes.begin() + static_cast<std::ptrdiff_t>(at),
                                  bytes.begin() + static_cast<std::ptrdiff_t>(at + take));
        at += take;
    }
    return out;
}

} // namespace wzc
