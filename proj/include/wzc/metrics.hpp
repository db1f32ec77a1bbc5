#pragma once

#include "wzc/pixmap.hpp"

#include <cstddef>
#include <limits>
#include <optional>

namespace wzc {

struct QualityReport {
    double mse = 0.0;
    double psnr = std::numeric_limits<double>::infinity();   // +inf when mse == 0
    double cr_percent = 100.0;
    double bpp = 0.0;
    std::size_t original_bytes = 0;
    std::size_t compressed_bytes = 0;
};

/// Mean squared error over all W*H*C samples. Throws DimensionMismatch.
double mse(const Pixmap& a, const Pixmap& b);

/// 10 log10(255^2 / mse); +inf for mse == 0. Negative mse is rejected.
double psnr(double mse);

struct PixelGeometry {
    std::size_t width;
    std::size_t height;
    std::size_t channels;
};

struct CompressionRatio {
    double cr_percent;          // 100 * compressed / original
    std::optional<double> bpp;  // 8 * compressed / C / (W * H), when geometry is known
};

CompressionRatio compression_ratio(std::size_t original_bytes, std::size_t compressed_bytes,
                                   std::optional<PixelGeometry> geometry = std::nullopt);

QualityReport quality_report(const Pixmap& original, const Pixmap& decoded, std::size_t original_bytes,
                             std::size_t compressed_bytes);

} // namespace wzc
