#include "wzc/pipeline.hpp"

#include "wzc/error.hpp"
#include "wzc/spiht.hpp"
#include "wzc/stw.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wzc {

namespace {

    Matrix extract_channel(const Pixmap& p, std::size_t channel)
    {
        Matrix m(p.height(), p.width());
        for (std::size_t r = 0; r < p.height(); ++r)
            for (std::size_t c = 0; c < p.width(); ++c)
                m(r, c) = p.at(r, c, channel);
        return m;
    }

    std::uint8_t to_sample(double v)
    {
        return static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0));
    }

} // namespace

std::vector<std::uint8_t> compress_image(const Pixmap& image, const CompressOptions& options)
{
    if (options.loops < 1 || options.loops > 255)
        throw Error(Errc::InvalidArgument, "loops must be in [1, 255]");
    if (options.levels < 1 || options.levels > 15)
        throw Error(Errc::InvalidArgument, "levels must be in [1, 15]");
    if (image.width() > 0xFFFF || image.height() > 0xFFFF)
        throw Error(Errc::InvalidArgument, "image dimensions exceed 65535");
    // Fails early with NotDivisible.
    const SubbandLayout layout(image.width(), image.height(), options.levels);

    const bool ycc = options.color_transform && image.colorspace() == Colorspace::Rgb;
    const Pixmap source = ycc ? rgb_to_ycbcr(image) : image;

    ContainerHeader header;
    header.codec = options.codec;
    header.wavelet = options.wavelet;
    header.flags = ycc ? ContainerHeader::kFlagColorTransform : 0;
    header.levels = static_cast<std::uint8_t>(options.levels);
    header.loops = static_cast<std::uint8_t>(options.loops);
    header.width = static_cast<std::uint16_t>(image.width());
    header.height = static_cast<std::uint16_t>(image.height());

    std::vector<std::vector<std::uint8_t>> payloads;
    for (std::size_t ch = 0; ch < source.channels(); ++ch) {
        const auto pyramid = forward_dwt_2d(extract_channel(source, ch), options.levels, options.wavelet);
        auto stream = options.codec == Codec::Spiht ? spiht_encode(pyramid, options.loops)
                                                    : stw_encode(pyramid, options.loops);
        if (stream.bits.bit_count > 0xFFFFFFFFu)
            throw Error(Errc::InvalidArgument, "channel payload exceeds 2^32 bits");
        header.channels.push_back({stream.n0, static_cast<std::uint32_t>(stream.bits.bit_count)});
        payloads.push_back(std::move(stream.bits.bytes));
    }
    return serialize_container(header, payloads);
}

DecompressResult decompress_image(std::span<const std::uint8_t> container)
{
    auto parsed = parse_container(container, /*allow_partial=*/true);
    const auto& h = parsed.header;
    const std::size_t channels = h.channels.size();
    if (channels != 1 && channels != 3)
        throw Error(Errc::InvalidArgument, "only 1- or 3-channel containers decode to images");
    if (h.color_transform() && channels != 3)
        throw Error(Errc::InvalidArgument, "color transform flag on a single-channel container");
    if (h.loops < 1)
        throw Error(Errc::InvalidArgument, "container declares zero loops");
    const SubbandLayout layout(h.width, h.height, h.levels);

    bool truncated = parsed.truncated;
    std::vector<std::uint8_t> samples(static_cast<std::size_t>(h.width) * h.height * channels);
    for (std::size_t ch = 0; ch < channels; ++ch) {
        BitBuffer bits;
        bits.bytes = std::move(parsed.payloads[ch]);
        bits.bit_count = std::min<std::size_t>(h.channels[ch].bit_length, bits.bytes.size() * 8);
        const auto decoded = h.codec == Codec::Spiht
                                 ? spiht_decode(bits, h.channels[ch].n0, h.loops, layout, h.wavelet)
                                 : stw_decode(bits, h.channels[ch].n0, h.loops, layout, h.wavelet);
        truncated = truncated || decoded.truncated;
        const Matrix pixels = inverse_dwt_2d(decoded.pyramid);
        for (std::size_t r = 0; r < h.height; ++r)
            for (std::size_t c = 0; c < h.width; ++c)
                samples[(r * h.width + c) * channels + ch] = to_sample(pixels(r, c));
    }

    const Colorspace cs = channels == 1 ? Colorspace::Gray
                                        : (h.color_transform() ? Colorspace::YCbCr : Colorspace::Rgb);
    Pixmap image(h.width, h.height, cs, std::move(samples));
    if (cs == Colorspace::YCbCr)
        image = ycbcr_to_rgb(image);
    return {std::move(image), h, truncated};
}

} // namespace wzc
