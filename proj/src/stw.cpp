#include "wzc/stw.hpp"

#include "plane_channels.hpp"
#include "wzc/error.hpp"

namespace wzc {

const char* stw_state_name(StwState s) noexcept
{
    switch (s) {
    case StwState::IR: return "IR";
    case StwState::IV: return "IV";
    case StwState::SR: return "SR";
    case StwState::SV: return "SV";
    }
    return "?";
}

bool stw_transition_allowed(StwState from, StwState to) noexcept
{
    switch (from) {
    case StwState::IR: return true;
    case StwState::IV: return to == StwState::IV || to == StwState::SV;
    case StwState::SR: return to == StwState::SR || to == StwState::SV;
    case StwState::SV: return to == StwState::SV;
    }
    return false;
}

namespace {

    StwState make_state(bool value, bool descendants)
    {
        return static_cast<StwState>((value ? 2 : 0) | (descendants ? 1 : 0));
    }

    bool value_significant(StwState s) { return s == StwState::SR || s == StwState::SV; }
    bool prunes_children(StwState s) { return s == StwState::IR || s == StwState::SR; }

    template <class Channel>
    void run_schedule(const SpatialTree& tree, BitplaneSchedule schedule, Channel& ch,
                      const StwObserver& observer)
    {
        const auto& order = tree.scan_order();
        std::vector<StwState> state(tree.size(), StwState::IR);
        std::vector<int> found_at(tree.size(), -1);
        std::vector<std::uint8_t> skipped(tree.size(), 0);

        for (int n = schedule.n0; n >= schedule.final_plane(); --n) {
            for (const auto idx : order) {
                const auto parent = tree.parent(idx);
                if (parent && (skipped[*parent] || prunes_children(state[*parent]))) {
                    skipped[idx] = 1;
                    continue;
                }
                skipped[idx] = 0;

                const bool leaf = !tree.has_offspring(idx);
                bool v = value_significant(state[idx]);
                bool d = state[idx] == StwState::IV || state[idx] == StwState::SV;
                if (!v) {
                    v = ch.value(idx, n);
                    if (v) {
                        ch.sign(idx, n);
                        found_at[idx] = n;
                    }
                }
                if (!d && !leaf)
                    d = ch.descendants(idx, n);
                state[idx] = make_state(v, d);
            }

            for (const auto idx : order)
                if (found_at[idx] > n)
                    ch.refine(idx, n);

            ch.end_pass();
            if (observer)
                observer({n, state, skipped});
        }
    }

} // namespace

EmbeddedStream stw_encode(const CoefficientPyramid& p, int loops, const StwObserver& observer)
{
    if (loops < 1)
        throw Error(Errc::InvalidArgument, "loops must be at least 1");
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

DecodedPyramid stw_decode(const BitBuffer& bits, std::optional<int> n0, int loops,
                          const SubbandLayout& layout, Wavelet wavelet, const StwObserver& observer)
{
    if (loops < 1)
        throw Error(Errc::InvalidArgument, "loops must be at least 1");
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
