#pragma once

#include "wzc/embedded.hpp"
#include "wzc/zerotree.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace wzc {

// Node states of the spatial-orientation-tree coder:
//   IR  value and descendants insignificant
//   IV  value insignificant, some descendant significant
//   SR  value significant, descendants insignificant
//   SV  value and some descendant significant
enum class StwState : std::uint8_t { IR = 0, IV = 1, SR = 2, SV = 3 };

const char* stw_state_name(StwState s) noexcept;

/// Whether `to` is reachable from `from` (IR -> any, IV -> SV, SR -> SV).
bool stw_transition_allowed(StwState from, StwState to) noexcept;

struct StwPassInfo {
    int n = 0;                          // plane that was just coded
    std::vector<StwState> states;       // after the pass
    std::vector<std::uint8_t> skipped;  // 1 where the node's insignificance was implied
};

using StwObserver = std::function<void(const StwPassInfo&)>;

/// Per pass, visits nodes in SpatialTree::scan_order(), skipping every node
/// with an ancestor in IR or SR. Transition codes: IR emits the value bit then
/// (non-leaf) the descendant bit; IV emits the value bit; SR emits (non-leaf)
/// the descendant bit; SV emits nothing. A sign bit follows each value bit
/// that turns 1. The refinement pass then emits bit n of every coefficient
/// found significant in an earlier pass, in scan order.
EmbeddedStream stw_encode(const CoefficientPyramid& p, int loops, const StwObserver& observer = {});

DecodedPyramid stw_decode(const BitBuffer& bits, std::optional<int> n0, int loops,
                          const SubbandLayout& layout, Wavelet wavelet = Wavelet::Cdf97,
                          const StwObserver& observer = {});

} // namespace wzc
