#pragma once

#include "wzc/bitstream.hpp"
#include "wzc/dwt.hpp"
#include "wzc/metrics.hpp"
#include "wzc/pixmap.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wzc {

struct SweepConfig {
    std::vector<Codec> codecs{Codec::Spiht, Codec::Stw};
    std::vector<int> levels{1, 2, 3, 4, 5, 6, 7, 8};
    int loops = 10;
    Wavelet wavelet = Wavelet::Cdf97;
    bool color_transform = true;
    // Cells run concurrently unless false or WZC_NO_PARALLEL=1 is set.
    bool parallel = true;
};

struct ReportRow {
    Codec codec = Codec::Spiht;
    int level = 0;
    std::optional<QualityReport> quality;   // empty when the cell failed
    double wall_seconds = 0.0;
    std::string note;                       // error text for failed cells
};

struct ReportTable {
    std::vector<ReportRow> rows;   // ordered by (codec, level) as configured
};

/// Encodes, writes the container, decodes and measures every (codec, level)
/// cell. A failing cell is reported in its row; the others still run.
ReportTable run_sweep(const Pixmap& image, const SweepConfig& config);

enum class ReportFormat { Markdown, Csv };

/// Columns: Codec, Level, MSE, PSNR, CR, Size (KB), Note, and Time (s) when
/// `include_timing` is set. Output is byte-for-byte deterministic otherwise.
std::string emit_report(const ReportTable& table, ReportFormat format, bool include_timing = false);

// Counts adjacent-level pairs where the size grows or the MSE drops as the
// level increases, for one codec's successful rows.
struct TrendSummary {
    int size_inversions = 0;
    int mse_inversions = 0;
    int cells = 0;
};

TrendSummary trend_summary(const ReportTable& table, Codec codec);

// ---------------------------------------------------------------------------
// Published results, embedded verbatim as printed.

struct PublishedRow {
    std::string_view level, mse, psnr, cr, size_kb;
};

struct PublishedAverages {
    std::string_view mse, psnr, cr;   // in the order they are printed
};

struct PublishedTables {
    std::array<PublishedRow, 8> spiht;
    std::array<PublishedRow, 8> stw;
    PublishedAverages spiht_averages;
    PublishedAverages stw_averages;

    static const PublishedTables& published();
};

ReportTable fixture_report(const PublishedTables& f);

struct VerificationCheck {
    std::string name;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct TableVerification {
    std::vector<VerificationCheck> checks;
    double stw_psnr_average = 0.0;
    double stw_cr_average = 0.0;
    std::string printed_stw_psnr;
    std::string printed_stw_cr;
    // The printed STW averages carry the PSNR value in the CR slot and vice versa.
    bool stw_psnr_cr_swapped = false;

    bool all_passed() const;
};

/// Pure arithmetic over the fixture: PSNR/MSE agreement per row and the
/// column averages against the printed conclusions.
TableVerification verify_published_tables(const PublishedTables& f);

std::string format_verification(const TableVerification& v);

} // namespace wzc
