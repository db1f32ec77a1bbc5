#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace wzc {

enum class Wavelet : std::uint8_t { Haar = 0, Cdf97 = 1 };

const char* wavelet_name(Wavelet w) noexcept;

// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : m_rows(rows), m_cols(cols), m_data(rows * cols, fill)
    {
    }

    std::size_t rows() const noexcept { return m_rows; }
    std::size_t cols() const noexcept { return m_cols; }
    std::size_t size() const noexcept { return m_data.size(); }

    double& operator()(std::size_t r, std::size_t c) { return m_data[r * m_cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return m_data[r * m_cols + c]; }

    std::span<double> data() noexcept { return m_data; }
    std::span<const double> data() const noexcept { return m_data; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<double> m_data;
};

enum class Band : std::uint8_t { LL, LH, HL, HH };

struct Rect {
    std::size_t row = 0;
    std::size_t col = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;

    bool contains(std::size_t r, std::size_t c) const noexcept
    {
        return r >= row && r < row + rows && c >= col && c < col + cols;
    }
    friend bool operator==(const Rect&, const Rect&) = default;
};

// Mallat (in-place quadrant) geometry of an L-level decomposition.
// Level 1 is the finest. At level l the detail bands are (H/2^l) x (W/2^l):
// LH top-right, HL bottom-left, HH bottom-right; LL exists only at level L.
class SubbandLayout {
public:
    // Throws NotDivisible unless 2^levels divides both dimensions.
    SubbandLayout(std::size_t width, std::size_t height, int levels);

    std::size_t width() const noexcept { return m_width; }
    std::size_t height() const noexcept { return m_height; }
    int levels() const noexcept { return m_levels; }

    Rect subband_rect(Band band, int level) const;

    friend bool operator==(const SubbandLayout&, const SubbandLayout&) = default;

private:
    std::size_t m_width;
    std::size_t m_height;
    int m_levels;
};

struct CoefficientPyramid {
    SubbandLayout layout;
    Wavelet wavelet;
    Matrix coeffs;
};

/// One analysis step. Signal length must be even and at least 2.
std::pair<std::vector<double>, std::vector<double>>
forward_1d(std::span<const double> signal, Wavelet wavelet);

/// Exact inverse of forward_1d.
std::vector<double> inverse_1d(std::span<const double> approx, std::span<const double> detail,
                               Wavelet wavelet);

CoefficientPyramid forward_dwt_2d(const Matrix& channel, int levels, Wavelet wavelet);
Matrix inverse_dwt_2d(const CoefficientPyramid& pyramid);

} // namespace wzc
