#include "wzc/dwt.hpp"

#include "wzc/error.hpp"

#include <cmath>
#include <string>

namespace wzc {

const char* wavelet_name(Wavelet w) noexcept
{
    switch (w) {
    case Wavelet::Haar:  return "haar";
    case Wavelet::Cdf97: return "cdf97";
    }
    return "?";
}

SubbandLayout::SubbandLayout(std::size_t width, std::size_t height, int levels)
    : m_width(width), m_height(height), m_levels(levels)
{
    if (levels < 1 || levels > 30)
        throw Error(Errc::InvalidArgument, "decomposition levels must be in [1, 30]");
    if (width == 0 || height == 0)
        throw Error(Errc::ZeroDimension, "layout dimensions must be non-zero");
    const std::size_t step = std::size_t{1} << levels;
    if (width % step != 0 || height % step != 0)
        throw Error(Errc::NotDivisible, std::to_string(width) + "x" + std::to_string(height) +
                                            " is not divisible by 2^" + std::to_string(levels));
}

Rect SubbandLayout::subband_rect(Band band, int level) const
{
    if (level < 1 || level > m_levels)
        throw Error(Errc::InvalidArgument, "subband level out of range");
    const std::size_t h = m_height >> level;
    const std::size_t w = m_width >> level;
    switch (band) {
    case Band::LL:
        if (level != m_levels)
            throw Error(Errc::InvalidArgument, "LL band exists only at the coarsest level");
        return {0, 0, h, w};
    case Band::LH: return {0, w, h, w};
    case Band::HL: return {h, 0, h, w};
    case Band::HH: return {h, w, h, w};
    }
    throw Error(Errc::InvalidArgument, "unknown band");
}

namespace {

    // CDF 9/7 lifting constants.
    constexpr double kAlpha = -1.586134342;
    constexpr double kBeta = -0.05298011854;
    constexpr double kGamma = 0.8829110762;
    constexpr double kDelta = 0.4435068522;
    constexpr double kScale = 1.149604398;

    const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

    // Lifting step over interleaved samples with whole-sample symmetric
    // extension: x[-1] = x[1] and x[n] = x[n-2].
    void lift(std::vector<double>& x, std::size_t first, double coeff)
    {
        const std::size_t n = x.size();
        for (std::size_t i = first; i < n; i += 2) {
            const double left = i == 0 ? x[1] : x[i - 1];
            const double right = i + 1 < n ? x[i + 1] : x[n - 2];
            x[i] += coeff * (left + right);
        }
    }

    void check_length(std::size_t n)
    {
        if (n < 2 || n % 2 != 0)
            throw Error(Errc::InvalidArgument,
                        "signal length " + std::to_string(n) + " must be even and at least 2");
    }

} // namespace

std::pair<std::vector<double>, std::vector<double>>
forward_1d(std::span<const double> signal, Wavelet wavelet)
{
    check_length(signal.size());
    const std::size_t half = signal.size() / 2;
    std::vector<double> approx(half), detail(half);

    if (wavelet == Wavelet::Haar) {
        for (std::size_t k = 0; k < half; ++k) {
            approx[k] = (signal[2 * k] + signal[2 * k + 1]) * kInvSqrt2;
            detail[k] = (signal[2 * k] - signal[2 * k + 1]) * kInvSqrt2;
        }
        return {std::move(approx), std::move(detail)};
    }

    std::vector<double> x(signal.begin(), signal.end());
    lift(x, 1, kAlpha);
    lift(x, 0, kBeta);
    lift(x, 1, kGamma);
    lift(x, 0, kDelta);
    for (std::size_t k = 0; k < half; ++k) {
        approx[k] = x[2 * k] * kScale;
        detail[k] = x[2 * k + 1] / kScale;
    }
    return {std::move(approx), std::move(detail)};
}

std::vector<double> inverse_1d(std::span<const double> approx, std::span<const double> detail,
                               Wavelet wavelet)
{
    if (approx.size() != detail.size() || approx.empty())
        throw Error(Errc::InvalidArgument, "approx/detail lengths must match and be non-zero");
    const std::size_t half = approx.size();
    std::vector<double> x(2 * half);

    if (wavelet == Wavelet::Haar) {
        for (std::size_t k = 0; k < half; ++k) {
            x[2 * k] = (approx[k] + detail[k]) * kInvSqrt2;
            x[2 * k + 1] = (approx[k] - detail[k]) * kInvSqrt2;
        }
        return x;
    }

    for (std::size_t k = 0; k < half; ++k) {
        x[2 * k] = approx[k] / kScale;
        x[2 * k + 1] = detail[k] * kScale;
    }
    lift(x, 0, -kDelta);
    lift(x, 1, -kGamma);
    lift(x, 0, -kBeta);
    lift(x, 1, -kAlpha);
    return x;
}

CoefficientPyramid forward_dwt_2d(const Matrix& channel, int levels, Wavelet wavelet)
{
    CoefficientPyramid out{SubbandLayout(channel.cols(), channel.rows(), levels), wavelet, channel};
    Matrix& m = out.coeffs;
    std::vector<double> line;

    for (int level = 1; level <= levels; ++level) {
        const std::size_t h = channel.rows() >> (level - 1);
        const std::size_t w = channel.cols() >> (level - 1);
        for (std::size_t r = 0; r < h; ++r) {
            line.assign(&m(r, 0), &m(r, 0) + w);
            const auto [lo, hi] = forward_1d(line, wavelet);
            for (std::size_t k = 0; k < w / 2; ++k) {
                m(r, k) = lo[k];
                m(r, w / 2 + k) = hi[k];
            }
        }
        line.resize(h);
        for (std::size_t c = 0; c < w; ++c) {
            for (std::size_t r = 0; r < h; ++r)
                line[r] = m(r, c);
            const auto [lo, hi] = forward_1d(line, wavelet);
            for (std::size_t k = 0; k < h / 2; ++k) {
                m(k, c) = lo[k];
                m(h / 2 + k, c) = hi[k];
            }
        }
    }
    return out;
}

Matrix inverse_dwt_2d(const CoefficientPyramid& pyramid)
{
    const auto& layout = pyramid.layout;
    if (pyramid.coeffs.rows() != layout.height() || pyramid.coeffs.cols() != layout.width())
        throw Error(Errc::DimensionMismatch, "pyramid coefficients do not match layout");
    Matrix m = pyramid.coeffs;
    std::vector<double> lo, hi;

    for (int level = layout.levels(); level >= 1; --level) {
        const std::size_t h = layout.height() >> (level - 1);
        const std::size_t w = layout.width() >> (level - 1);
        lo.resize(h / 2);
        hi.resize(h / 2);
        for (std::size_t c = 0; c < w; ++c) {
            for (std::size_t k = 0; k < h / 2; ++k) {
                lo[k] = m(k, c);
                hi[k] = m(h / 2 + k, c);
            }
            const auto x = inverse_1d(lo, hi, pyramid.wavelet);
            for (std::size_t r = 0; r < h; ++r)
                m(r, c) = x[r];
        }
        lo.resize(w / 2);
        hi.resize(w / 2);
        for (std::size_t r = 0; r < h; ++r) {
            for (std::size_t k = 0; k < w / 2; ++k) {
                lo[k] = m(r, k);
                hi[k] = m(r, w / 2 + k);
            }
            const auto x = inverse_1d(lo, hi, pyramid.wavelet);
            for (std::size_t c = 0; c < w; ++c)
                m(r, c) = x[c];
        }
    }
    return m;
}

} // namespace wzc
