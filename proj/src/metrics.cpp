#include "wzc/metrics.hpp"

#include "wzc/error.hpp"

#include <cmath>

namespace wzc {

double mse(const Pixmap& a, const Pixmap& b)
{
    if (a.width() != b.width() || a.height() != b.height() || a.channels() != b.channels())
        throw Error(Errc::DimensionMismatch, "images differ in size or channel count");
    const auto x = a.samples();
    const auto y = b.samples();
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = static_cast<double>(x[i]) - static_cast<double>(y[i]);
        sum += d * d;
    }
    return sum / static_cast<double>(x.size());
}

double psnr(double mse)
{
    if (!(mse >= 0.0))
        throw Error(Errc::InvalidArgument, "mse must be non-negative");
    if (mse == 0.0)
        return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

CompressionRatio compression_ratio(std::size_t original_bytes, std::size_t compressed_bytes,
                                   std::optional<PixelGeometry> geometry)
{
    if (original_bytes == 0 || compressed_bytes == 0)
        throw Error(Errc::InvalidArgument, "byte counts must be positive");
    CompressionRatio out{100.0 * static_cast<double>(compressed_bytes) / static_cast<double>(original_bytes),
                         std::nullopt};
    if (geometry) {
        const double pixels = static_cast<double>(geometry->width * geometry->height);
        if (pixels == 0.0 || geometry->channels == 0)
            throw Error(Errc::InvalidArgument, "empty pixel geometry");
        out.bpp = 8.0 * static_cast<double>(compressed_bytes) / static_cast<double>(geometry->channels) / pixels;
    }
    return out;
}

QualityReport quality_report(const Pixmap& original, const Pixmap& decoded, std::size_t original_bytes,
                             std::size_t compressed_bytes)
{
    QualityReport r;
    r.mse = mse(original, decoded);
    r.psnr = psnr(r.mse);
    const auto cr = compression_ratio(original_bytes, compressed_bytes,
                                      PixelGeometry{original.width(), original.height(), original.channels()});
    r.cr_percent = cr.cr_percent;
    r.bpp = *cr.bpp;
    r.original_bytes = original_bytes;
    r.compressed_bytes = compressed_bytes;
    return r;
}

} // namespace wzc
