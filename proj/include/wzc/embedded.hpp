#pragma once

#include "wzc/bitstream.hpp"
#include "wzc/dwt.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace wzc {

// Output of a bit-plane encoder.
struct EmbeddedStream {
    std::optional<int> n0;                // nullopt: every coefficient rounds to 0
    BitBuffer bits;
    std::vector<std::size_t> pass_ends;   // bit offset at the end of each pass
};

struct DecodedPyramid {
    CoefficientPyramid pyramid;
    bool truncated = false;
    std::size_t bits_consumed = 0;
    int passes_completed = 0;
};

/// Rounds each coefficient half away from zero; the coders work on integers.
std::vector<std::int64_t> round_coefficients(std::span<const double> coeffs);

// Decoder-side estimate of one coefficient: the magnitude lies in
// [low, low + 2^plane). The estimate is the interval midpoint, except that a
// unit-width interval holds exactly one integer and decodes to `low`.
struct ReconstructionCell {
    bool negative = false;
    std::int64_t low = 0;
    int plane = -1;   // -1 while the coefficient is insignificant

    bool significant() const noexcept { return plane >= 0; }
    double value() const noexcept;

    void mark_significant(int n, bool is_negative) noexcept
    {
        negative = is_negative;
        low = std::int64_t{1} << n;
        plane = n;
    }

    // Applies the magnitude bit for plane plane-1.
    void refine(bool bit) noexcept
    {
        --plane;
        if (bit)
            low += std::int64_t{1} << plane;
    }
};

CoefficientPyramid reconstruct(std::span<const ReconstructionCell> cells, const SubbandLayout& layout,
                               Wavelet wavelet);

} // namespace wzc
