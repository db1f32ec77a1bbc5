#include "wzc/embedded.hpp"

#include <cmath>

namespace wzc {

std::vector<std::int64_t> round_coefficients(std::span<const double> coeffs)
{
    std::vector<std::int64_t> out(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out[i] = static_cast<std::int64_t>(std::round(coeffs[i]));
    return out;
}

double ReconstructionCell::value() const noexcept
{
    if (plane < 0)
        return 0.0;
    double magnitude = static_cast<double>(low);
    if (plane > 0)
        magnitude += std::ldexp(1.0, plane - 1);
    return negative ? -magnitude : magnitude;
}

CoefficientPyramid reconstruct(std::span<const ReconstructionCell> cells, const SubbandLayout& layout,
                               Wavelet wavelet)
{
    CoefficientPyramid out{layout, wavelet, Matrix(layout.height(), layout.width())};
    auto data = out.coeffs.data();
    for (std::size_t i = 0; i < cells.size() && i < data.size(); ++i)
        data[i] = cells[i].value();
    return out;
}

} // namespace wzc
