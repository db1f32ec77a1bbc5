#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wzc {

enum class Colorspace : std::uint8_t { Gray, Rgb, YCbCr };

const char* colorspace_name(Colorspace cs) noexcept;

// An 8-bit image with 1 or 3 interleaved channels in row-major order.
// Immutable once constructed; copies are cheap enough for our image sizes.
class Pixmap {
public:
    // Validates the invariants (non-zero dims, channel count agrees with the
    // colorspace, sample count) and throws wzc::Error on violation.
    Pixmap(std::size_t width, std::size_t height, Colorspace cs,
           std::vector<std::uint8_t> samples);

    std::size_t width() const noexcept { return m_width; }
    std::size_t height() const noexcept { return m_height; }
    std::size_t channels() const noexcept { return m_colorspace == Colorspace::Gray ? 1 : 3; }
    Colorspace colorspace() const noexcept { return m_colorspace; }
    std::span<const std::uint8_t> samples() const noexcept { return m_samples; }

    std::uint8_t at(std::size_t row, std::size_t col, std::size_t channel = 0) const
    {
        return m_samples[(row * m_width + col) * channels() + channel];
    }

    friend bool operator==(const Pixmap&, const Pixmap&) = default;

private:
    std::size_t m_width;
    std::size_t m_height;
    Colorspace m_colorspace;
    std::vector<std::uint8_t> m_samples;
};

/// Parse a PGM (P2/P5) or PPM (P3/P6) image with maxval 255.
/// Errors carry the byte offset where parsing failed.
Pixmap read_pixmap(std::span<const std::uint8_t> bytes);

/// Serialize as P5/P6 (binary) or P2/P3 (ASCII). YCbCr images are rejected.
std::vector<std::uint8_t> write_pixmap(const Pixmap& p, bool binary = true);

// Full-range BT.601 (JFIF) conversions; results rounded half-up, then clamped.
Pixmap rgb_to_ycbcr(const Pixmap& p);
Pixmap ycbcr_to_rgb(const Pixmap& p);

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

} // namespace wzc
