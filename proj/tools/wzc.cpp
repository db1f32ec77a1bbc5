// wzc: compress, decompress, inspect and benchmark images with the SPIHT and
// STW wavelet coders.

#include "wzc/bench.hpp"
#include "wzc/error.hpp"
#include "wzc/metrics.hpp"
#include "wzc/pipeline.hpp"
#include "wzc/pixmap.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

const std::map<std::string, wzc::Codec> kCodecs{{"spiht", wzc::Codec::Spiht}, {"stw", wzc::Codec::Stw}};
const std::map<std::string, wzc::Wavelet> kWavelets{{"cdf97", wzc::Wavelet::Cdf97},
                                                    {"haar", wzc::Wavelet::Haar}};
const std::map<std::string, wzc::ReportFormat> kFormats{{"markdown", wzc::ReportFormat::Markdown},
                                                        {"csv", wzc::ReportFormat::Csv}};

// "3", "1..8" or "1,2,5".
std::vector<int> parse_levels(const std::string& text)
{
    std::vector<int> out;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi)
            throw wzc::Error(wzc::Errc::InvalidArgument, "empty level range '" + text + "'");
        for (int l = lo; l <= hi; ++l)
            out.push_back(l);
        return out;
    }
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        out.push_back(std::stoi(item));
    if (out.empty())
        throw wzc::Error(wzc::Errc::InvalidArgument, "no levels given");
    return out;
}

std::vector<wzc::Codec> parse_codecs(const std::string& text)
{
    std::vector<wzc::Codec> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto it = kCodecs.find(item);
        if (it == kCodecs.end())
            throw wzc::Error(wzc::Errc::InvalidArgument, "unknown codec '" + item + "'");
        out.push_back(it->second);
    }
    return out;
}

std::string fmt_double(const char* spec, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string psnr_text(double psnr)
{
    return std::isinf(psnr) ? "inf" : fmt_double("%.2f", psnr);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Embedded wavelet image codec (SPIHT / STW)"};
    app.require_subcommand(1);

    // compress
    std::string in_path, out_path;
    std::string codec = "spiht", wavelet = "cdf97";
    int levels = 4, loops = 10;
    bool no_ycc = false;
    auto* compress = app.add_subcommand("compress", "Encode a PGM/PPM image into a WZC1 file");
    compress->add_option("input", in_path, "Input PGM/PPM image")->required();
    compress->add_option("output", out_path, "Output WZC1 file")->required();
    compress->add_option("--codec", codec, "spiht or stw")->check(CLI::IsMember({"spiht", "stw"}));
    compress->add_option("--levels", levels, "Wavelet decomposition levels");
    compress->add_option("--loops", loops, "Bit-plane passes");
    compress->add_option("--wavelet", wavelet, "cdf97 or haar")->check(CLI::IsMember({"cdf97", "haar"}));
    compress->add_flag("--no-ycc", no_ycc, "Code RGB channels directly");

    // decompress
    auto* decompress = app.add_subcommand("decompress", "Decode a WZC1 file into a PGM/PPM image");
    decompress->add_option("input", in_path, "Input WZC1 file")->required();
    decompress->add_option("output", out_path, "Output PGM/PPM image")->required();

    // info
    auto* info = app.add_subcommand("info", "Print the header of a WZC1 file");
    info->add_option("input", in_path, "WZC1 file")->required();

    // metrics
    std::string other_path;
    auto* metrics = app.add_subcommand("metrics", "Compare two images (MSE, PSNR)");
    metrics->add_option("a", in_path, "Reference image")->required();
    metrics->add_option("b", other_path, "Test image")->required();

    // bench
    std::string bench_levels = "1..8", bench_codecs = "spiht,stw", format = "markdown";
    bool timing = false;
    auto* bench = app.add_subcommand("bench", "Sweep decomposition levels and report quality and size");
    bench->add_option("image", in_path, "Input PGM/PPM image")->required();
    bench->add_option("--levels", bench_levels, "Levels: N, A..B or a comma list");
    bench->add_option("--codecs", bench_codecs, "Comma list of spiht, stw");
    bench->add_option("--loops", loops, "Bit-plane passes");
    bench->add_option("--wavelet", wavelet, "cdf97 or haar")->check(CLI::IsMember({"cdf97", "haar"}));
    bench->add_flag("--no-ycc", no_ycc, "Code RGB channels directly");
    bench->add_option("--format", format, "markdown or csv")->check(CLI::IsMember({"markdown", "csv"}));
    bench->add_flag("--timing", timing, "Add a wall-clock column");

    auto* verify = app.add_subcommand("verify-paper", "Check the arithmetic of the published result tables");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compress) {
            const auto image = wzc::read_pixmap(wzc::read_file(in_path));
            const wzc::CompressOptions opts{kCodecs.at(codec), levels, loops, kWavelets.at(wavelet), !no_ycc};
            const auto bytes = wzc::compress_image(image, opts);
            wzc::write_file(out_path, bytes);
            const auto cr = wzc::compression_ratio(
                wzc::write_pixmap(image).size(), bytes.size(),
                wzc::PixelGeometry{image.width(), image.height(), image.channels()});
            std::cout << "wrote " << bytes.size() << " bytes, " << fmt_double("%.4f", *cr.bpp) << " bpp, CR "
                      << fmt_double("%.2f", cr.cr_percent) << "%\n";
            return 0;
        }
        if (*decompress) {
            const auto result = wzc::decompress_image(wzc::read_file(in_path));
            wzc::write_file(out_path, wzc::write_pixmap(result.image));
            if (result.truncated) {
                std::cerr << "wzc: TRUNCATED: " << in_path << " ended early; wrote a partial image to "
                          << out_path << "\n";
                return 2;
            }
            std::cout << "wrote " << result.image.width() << "x" << result.image.height() << " "
                      << wzc::colorspace_name(result.image.colorspace()) << " image\n";
            return 0;
        }
        if (*info) {
            const auto bytes = wzc::read_file(in_path);
            const auto parsed = wzc::parse_container(bytes, true);
            const auto& h = parsed.header;
            std::cout << "codec " << wzc::codec_name(h.codec) << "\n"
                      << "wavelet " << wzc::wavelet_name(h.wavelet) << "\n"
                      << "size " << h.width << "x" << h.height << "\n"
                      << "channels " << h.channels.size() << "\n"
                      << "color_transform " << (h.color_transform() ? "yes" : "no") << "\n"
                      << "levels " << int(h.levels) << "\n"
                      << "loops " << int(h.loops) << "\n";
            for (std::size_t i = 0; i < h.channels.size(); ++i) {
                const auto& ch = h.channels[i];
                std::cout << "channel " << i << " n0 " << (ch.n0 ? std::to_string(*ch.n0) : "empty") << " bits "
                          << ch.bit_length << "\n";
            }
            std::cout << "file_bytes " << bytes.size() << "\n";
            if (parsed.truncated) {
                std::cerr << "wzc: TRUNCATED: payloads end early\n";
                return 2;
            }
            return 0;
        }
        if (*metrics) {
            const auto a = wzc::read_pixmap(wzc::read_file(in_path));
            const auto b = wzc::read_pixmap(wzc::read_file(other_path));
            const double m = wzc::mse(a, b);
            std::cout << "MSE " << fmt_double("%.6g", m) << ", PSNR " << psnr_text(wzc::psnr(m)) << "\n";
            return 0;
        }
        if (*bench) {
            const auto image = wzc::read_pixmap(wzc::read_file(in_path));
            wzc::SweepConfig cfg;
            cfg.codecs = parse_codecs(bench_codecs);
            cfg.levels = parse_levels(bench_levels);
            cfg.loops = loops;
            cfg.wavelet = kWavelets.at(wavelet);
            cfg.color_transform = !no_ycc;
            const auto table = wzc::run_sweep(image, cfg);
            std::cout << wzc::emit_report(table, kFormats.at(format), timing);
            return 0;
        }
        if (*verify) {
            const auto v = wzc::verify_published_tables(wzc::PublishedTables::published());
            std::cout << wzc::format_verification(v);
            return v.all_passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "wzc: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
