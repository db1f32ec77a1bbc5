#pragma once

#include "wzc/dwt.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace wzc {

struct NodeIndex {
    std::size_t row = 0;
    std::size_t col = 0;
    friend bool operator==(const NodeIndex&, const NodeIndex&) = default;
};

/// Bit-plane thresholds 2^n for n = n0, n0-1, ..., max(n0 - loops + 1, 0).
struct BitplaneSchedule {
    int n0 = 0;
    int loops = 1;

    int final_plane() const noexcept { return n0 - loops + 1 > 0 ? n0 - loops + 1 : 0; }
    int pass_count() const noexcept { return n0 - final_plane() + 1; }
};

/// floor(log2(max |c|)), or nullopt when every coefficient is below 1.
std::optional<int> initial_bitplane(std::span<const double> coeffs);
std::optional<int> initial_bitplane(const CoefficientPyramid& p);

/// |c| >= 2^n.
bool is_significant(double c, int n);

/// Offspring of a node in the spatial orientation tree (0 or 4 nodes).
/// Throws InvalidArgument for out-of-bounds nodes.
std::vector<NodeIndex> offspring(NodeIndex m, const SubbandLayout& layout);

// Precomputed spatial orientation tree over a layout, in flat row-major
// indices.
//
// When the coarsest LL band has even dimensions, LL coefficients are grouped
// 2x2: the top-left member of each group is childless, the other three parent
// the matching 2x2 block of the coarsest LH/HL/HH band. When LL has an odd
// dimension (e.g. 1x1 for a fully decomposed square image), LL coefficients are
// childless and the coarsest detail coefficients become roots themselves.
// Everywhere else node (r, c) parents (2r..2r+1, 2c..2c+1) unless it sits in
// the finest level.
class SpatialTree {
public:
    explicit SpatialTree(const SubbandLayout& layout);

    const SubbandLayout& layout() const noexcept { return m_layout; }
    std::size_t size() const noexcept { return m_parent.size(); }
    std::size_t width() const noexcept { return m_layout.width(); }

    std::size_t index(NodeIndex m) const noexcept { return m.row * width() + m.col; }
    NodeIndex node(std::size_t idx) const noexcept { return {idx / width(), idx % width()}; }

    std::span<const std::uint32_t> offspring(std::size_t idx) const noexcept
    {
        return {m_children[idx].data(), m_has_children[idx] ? std::size_t{4} : std::size_t{0}};
    }
    bool has_offspring(std::size_t idx) const noexcept { return m_has_children[idx] != 0; }

    // Whether the node has descendants beyond its offspring.
    bool has_grand_descendants(std::size_t idx) const noexcept
    {
        return has_offspring(idx) && has_offspring(m_children[idx][0]);
    }

    std::optional<std::size_t> parent(std::size_t idx) const noexcept
    {
        return m_parent[idx] == kNone ? std::nullopt : std::optional<std::size_t>(m_parent[idx]);
    }

    // Parentless nodes: LL in raster order, then (odd-LL case only) the
    // coarsest LH, HL, HH bands in raster order.
    const std::vector<std::uint32_t>& roots() const noexcept { return m_roots; }

    // Every node, coarse to fine: LL raster, then per level L..1 the LH, HL
    // and HH bands, each in raster order. Parents always precede children.
    const std::vector<std::uint32_t>& scan_order() const noexcept { return m_scan; }

    bool grouped_ll() const noexcept { return m_grouped_ll; }

private:
    static constexpr std::uint32_t kNone = 0xFFFFFFFFu;

    SubbandLayout m_layout;
    bool m_grouped_ll;
    std::vector<std::array<std::uint32_t, 4>> m_children;
    std::vector<std::uint8_t> m_has_children;
    std::vector<std::uint32_t> m_parent;
    std::vector<std::uint32_t> m_roots;
    std::vector<std::uint32_t> m_scan;
};

// Per-node maxima of |c| over strict descendants and over descendants
// excluding offspring, so set-significance tests are O(1).
class DescendantTable {
public:
    DescendantTable(const SpatialTree& tree, std::span<const double> coeffs);

    double descendant_max(std::size_t idx) const noexcept { return m_desc[idx]; }
    double grand_descendant_max(std::size_t idx) const noexcept { return m_grand[idx]; }

    bool descendants_significant(std::size_t idx, int n) const
    {
        return is_significant(m_desc[idx], n);
    }
    bool grand_descendants_significant(std::size_t idx, int n) const
    {
        return is_significant(m_grand[idx], n);
    }

private:
    std::vector<double> m_desc;
    std::vector<double> m_grand;
};

/// True iff some strict descendant of `m` is significant at plane n.
bool descendants_significant(const CoefficientPyramid& p, NodeIndex m, int n);

} // namespace wzc
