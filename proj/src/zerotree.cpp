#include "wzc/zerotree.hpp"

#include "wzc/error.hpp"

#include <algorithm>
#include <cmath>

namespace wzc {

std::optional<int> initial_bitplane(std::span<const double> coeffs)
{
    double peak = 0.0;
    for (const double c : coeffs)
        peak = std::max(peak, std::abs(c));
    if (!(peak >= 1.0))
        return std::nullopt;
    return std::ilogb(peak);
}

std::optional<int> initial_bitplane(const CoefficientPyramid& p)
{
    return initial_bitplane(p.coeffs.data());
}

bool is_significant(double c, int n)
{
    return std::abs(c) >= std::ldexp(1.0, n);
}

namespace {

    void append_band(std::vector<std::uint32_t>& out, const Rect& r, std::size_t width)
    {
        for (std::size_t row = r.row; row < r.row + r.rows; ++row)
            for (std::size_t col = r.col; col < r.col + r.cols; ++col)
                out.push_back(static_cast<std::uint32_t>(row * width + col));
    }

} // namespace

SpatialTree::SpatialTree(const SubbandLayout& layout)
    : m_layout(layout)
{
    const std::size_t w = layout.width();
    const std::size_t h = layout.height();
    const std::size_t n = w * h;
    if (n >= kNone)
        throw Error(Errc::InvalidArgument, "layout too large for the spatial tree");

    const Rect ll = layout.subband_rect(Band::LL, layout.levels());
    m_grouped_ll = ll.rows % 2 == 0 && ll.cols % 2 == 0;

    m_children.assign(n, {});
    m_has_children.assign(n, 0);
    m_parent.assign(n, kNone);

    const auto link = [&](std::size_t parent, std::size_t r0, std::size_t c0) {
        auto& kids = m_children[parent];
        kids = {static_cast<std::uint32_t>(r0 * w + c0), static_cast<std::uint32_t>(r0 * w + c0 + 1),
                static_cast<std::uint32_t>((r0 + 1) * w + c0),
                static_cast<std::uint32_t>((r0 + 1) * w + c0 + 1)};
        m_has_children[parent] = 1;
        for (const auto k : kids)
            m_parent[k] = static_cast<std::uint32_t>(parent);
    };

    for (std::size_t r = 0; r < h; ++r) {
        for (std::size_t c = 0; c < w; ++c) {
            const std::size_t idx = r * w + c;
            if (ll.contains(r, c)) {
                if (!m_grouped_ll)
                    continue;
                const std::size_t pr = r % 2, pc = c % 2;
                if (pr == 0 && pc == 0)
                    continue;
                link(idx, (r - pr) + pr * ll.rows, (c - pc) + pc * ll.cols);
                continue;
            }
            // Finest-level coefficients occupy rows >= h/2 or cols >= w/2.
            if (r < h / 2 && c < w / 2)
                link(idx, 2 * r, 2 * c);
        }
    }

    append_band(m_scan, ll, w);
    for (int level = layout.levels(); level >= 1; --level)
        for (const Band b : {Band::LH, Band::HL, Band::HH})
            append_band(m_scan, layout.subband_rect(b, level), w);

    for (const auto idx : m_scan)
        if (m_parent[idx] == kNone)
            m_roots.push_back(idx);
}

std::vector<NodeIndex> offspring(NodeIndex m, const SubbandLayout& layout)
{
    if (m.row >= layout.height() || m.col >= layout.width())
        throw Error(Errc::InvalidArgument, "node (" + std::to_string(m.row) + "," +
                                               std::to_string(m.col) + ") outside the layout");
    const SpatialTree tree(layout);
    std::vector<NodeIndex> out;
    for (const auto k : tree.offspring(tree.index(m)))
        out.push_back(tree.node(k));
    return out;
}

DescendantTable::DescendantTable(const SpatialTree& tree, std::span<const double> coeffs)
    : m_desc(tree.size(), 0.0), m_grand(tree.size(), 0.0)
{
    if (coeffs.size() != tree.size())
        throw Error(Errc::DimensionMismatch, "coefficient count does not match the tree");
    // Children always have larger flat indices than their parent.
    for (std::size_t i = tree.size(); i-- > 0;) {
        double desc = 0.0, grand = 0.0;
        for (const auto k : tree.offspring(i)) {
            desc = std::max({desc, std::abs(coeffs[k]), m_desc[k]});
            grand = std::max(grand, m_desc[k]);
        }
        m_desc[i] = desc;
        m_grand[i] = grand;
    }
}

bool descendants_significant(const CoefficientPyramid& p, NodeIndex m, int n)
{
    const SpatialTree tree(p.layout);
    if (m.row >= p.layout.height() || m.col >= p.layout.width())
        throw Error(Errc::InvalidArgument, "node outside the layout");
    const DescendantTable table(tree, p.coeffs.data());
    return table.descendants_significant(tree.index(m), n);
}

} // namespace wzc
