#pragma once

#include "wzc/embedded.hpp"
#include "wzc/zerotree.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace wzc {

enum class SetKind : std::uint8_t { A, B };   // A: all descendants, B: grand-descendants

struct LisEntry {
    std::uint32_t node;
    SetKind kind;
    friend bool operator==(const LisEntry&, const LisEntry&) = default;
};

struct LspEntry {
    std::uint32_t node;
    int plane;   // plane at which the node became significant
    friend bool operator==(const LspEntry&, const LspEntry&) = default;
};

// List state of the set-partitioning coder. Node ids are flat row-major
// indices into the pyramid.
struct SpihtCoderState {
    int n = 0;
    std::vector<std::uint32_t> lip;
    std::vector<LisEntry> lis;
    std::vector<LspEntry> lsp;
};

// Invoked after every completed pass with the state going into the next one
// (n already decremented).
using SpihtObserver = std::function<void(const SpihtCoderState&)>;

/// Encodes `loops` bit planes starting from n0 (or until plane 0 is done).
/// Coefficients are rounded half away from zero first.
EmbeddedStream spiht_encode(const CoefficientPyramid& p, int loops, const SpihtObserver& observer = {});

/// Mirror of spiht_encode. A short stream yields the partial reconstruction
/// with `truncated` set.
DecodedPyramid spiht_decode(const BitBuffer& bits, std::optional<int> n0, int loops,
                            const SubbandLayout& layout, Wavelet wavelet = Wavelet::Cdf97,
                            const SpihtObserver& observer = {});

} // namespace wzc
