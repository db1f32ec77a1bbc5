#include "wzc/spiht.hpp"

#include "plane_channels.hpp"
#include "wzc/error.hpp"

namespace wzc {

namespace {

    void check_loops(int loops)
    {
        if (loops < 1)
            throw Error(Errc::InvalidArgument, "loops must be at least 1");
    }

    template <class Channel>
    void run_schedule(const SpatialTree& tree, BitplaneSchedule schedule, Channel& ch,
                      const SpihtObserver& observer)
    {
        SpihtCoderState st;
        st.n = schedule.n0;
        st.lip = tree.roots();
        for (const auto r : tree.roots())
            if (tree.has_offspring(r))
                st.lis.push_back({r, SetKind::A});

        std::vector<std::uint32_t> kept;
        std::vector<LisEntry> next_lis;
        for (int n = schedule.n0; n >= schedule.final_plane(); --n) {
            // Sorting pass: single coefficients first.
            kept.clear();
            for (const auto node : st.lip) {
                if (ch.value(node, n)) {
                    ch.sign(node, n);
                    st.lsp.push_back({node, n});
                } else {
                    kept.push_back(node);
                }
            }
            st.lip.swap(kept);

            // Then sets; entries appended during the walk are handled in
            // this same pass.
            next_lis.clear();
            for (std::size_t i = 0; i < st.lis.size(); ++i) {
                const LisEntry e = st.lis[i];
                if (e.kind == SetKind::A) {
                    if (!ch.descendants(e.node, n)) {
                        next_lis.push_back(e);
                        continue;
                    }
                    for (const auto child : tree.offspring(e.node)) {
                        if (ch.value(child, n)) {
                            ch.sign(child, n);
                            st.lsp.push_back({child, n});
                        } else {
                            st.lip.push_back(child);
                        }
                    }
                    if (tree.has_grand_descendants(e.node))
                        st.lis.push_back({e.node, SetKind::B});
                } else {
                    if (!ch.grand_descendants(e.node, n)) {
                        next_lis.push_back(e);
                        continue;
                    }
                    for (const auto child : tree.offspring(e.node))
                        st.lis.push_back({child, SetKind::A});
                }
            }
            st.lis.swap(next_lis);

            // Refinement pass over coefficients found in earlier passes.
            for (const auto& s : st.lsp)
                if (s.plane > n)
                    ch.refine(s.node, n);

            ch.end_pass();
            st.n = n - 1;
            if (observer)
                observer(st);
        }
    }

} // namespace

EmbeddedStream spiht_encode(const CoefficientPyramid& p, int loops, const SpihtObserver& observer)
{
    check_loops(loops);
    const auto ints = round_coefficients(p.coeffs.data());
    const std::vector<double> rounded(ints.begin(), ints.end());
    const auto n0 = initial_bitplane(rounded);
    if (!n0)
        return {};

    const SpatialTree tree(p.layout);
    detail::EncoderChannel ch(tree, ints);
    run_schedule(tree, {*n0, loops}, ch, observer);
    return ch.finish(*n0);
}

DecodedPyramid spiht_decode(const BitBuffer& bits, std::optional<int> n0, int loops,
                            const SubbandLayout& layout, Wavelet wavelet, const SpihtObserver& observer)
{
    check_loops(loops);
    const SpatialTree tree(layout);
    detail::DecoderChannel ch(bits, tree.size());
    DecodedPyramid out{reconstruct({}, layout, wavelet)};
    if (n0) {
        try {
            run_schedule(tree, {*n0, loops}, ch, observer);
        } catch (const Error& e) {
            if (e.code() != Errc::Truncated)
                throw;
            out.truncated = true;
        }
    }
    out.pyramid = reconstruct(ch.cells(), layout, wavelet);
    out.bits_consumed = ch.bits_consumed();
    out.passes_completed = ch.passes();
    return out;
}

} // namespace wzc
