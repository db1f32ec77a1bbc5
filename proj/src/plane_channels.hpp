#pragma once

// Bit channels shared by the SPIHT and STW schedules. Each schedule is written
// once against this interface; the encoder channel computes and emits each
// decision, the decoder channel reads it back, so both sides follow the same
// control flow by construction.

#include "wzc/bitstream.hpp"
#include "wzc/embedded.hpp"
#include "wzc/zerotree.hpp"

#include <cstdint>
#include <cstdlib>
#include <span>
#include <vector>

namespace wzc::detail {

class EncoderChannel {
public:
    EncoderChannel(const SpatialTree& tree, std::span<const std::int64_t> coeffs)
        : m_coeffs(coeffs), m_table(tree, as_doubles(coeffs))
    {
    }

    bool value(std::size_t idx, int n) { return emit(magnitude(idx) >= (std::int64_t{1} << n)); }
    void sign(std::size_t idx, int) { m_writer.put(m_coeffs[idx] < 0); }
    bool descendants(std::size_t idx, int n) { return emit(m_table.descendants_significant(idx, n)); }
    bool grand_descendants(std::size_t idx, int n)
    {
        return emit(m_table.grand_descendants_significant(idx, n));
    }
    void refine(std::size_t idx, int n) { m_writer.put((magnitude(idx) >> n) & 1); }
    void end_pass() { m_pass_ends.push_back(m_writer.bit_count()); }

    EmbeddedStream finish(int n0)
    {
        return {n0, m_writer.finish(), std::move(m_pass_ends)};
    }

private:
    static std::vector<double> as_doubles(std::span<const std::int64_t> v)
    {
        return {v.begin(), v.end()};
    }
    std::int64_t magnitude(std::size_t idx) const { return std::llabs(m_coeffs[idx]); }
    bool emit(bool bit)
    {
        m_writer.put(bit);
        return bit;
    }

    std::span<const std::int64_t> m_coeffs;
    DescendantTable m_table;
    BitWriter m_writer;
    std::vector<std::size_t> m_pass_ends;
};

class DecoderChannel {
public:
    DecoderChannel(const BitBuffer& bits, std::size_t node_count)
        : m_reader(bits), m_cells(node_count)
    {
    }

    bool value(std::size_t, int) { return m_reader.get(); }
    void sign(std::size_t idx, int n) { m_cells[idx].mark_significant(n, m_reader.get()); }
    bool descendants(std::size_t, int) { return m_reader.get(); }
    bool grand_descendants(std::size_t, int) { return m_reader.get(); }
    void refine(std::size_t idx, int) { m_cells[idx].refine(m_reader.get()); }
    void end_pass() { ++m_passes; }

    const std::vector<ReconstructionCell>& cells() const noexcept { return m_cells; }
    std::size_t bits_consumed() const noexcept { return m_reader.position(); }
    int passes() const noexcept { return m_passes; }

private:
    BitReader m_reader;
    std::vector<ReconstructionCell> m_cells;
    int m_passes = 0;
};

} // namespace wzc::detail
