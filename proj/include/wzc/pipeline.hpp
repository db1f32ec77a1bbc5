#pragma once

#include "wzc/bitstream.hpp"
#include "wzc/dwt.hpp"
#include "wzc/pixmap.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace wzc {

struct CompressOptions {
    Codec codec = Codec::Spiht;
    int levels = 4;
    int loops = 10;
    Wavelet wavelet = Wavelet::Cdf97;
    bool color_transform = true;   // ignored for gray input
};

/// Image -> WZC1 container bytes. Each channel is transformed and coded
/// independently.
std::vector<std::uint8_t> compress_image(const Pixmap& image, const CompressOptions& options = {});

struct DecompressResult {
    Pixmap image;
    ContainerHeader header;
    bool truncated = false;
};

/// WZC1 container bytes -> image (gray or RGB). A file cut short inside the
/// payloads decodes best-effort with `truncated` set; other damage throws.
DecompressResult decompress_image(std::span<const std::uint8_t> container);

} // namespace wzc
