#include "wzc/pixmap.hpp"

#include "wzc/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <string>

namespace wzc {

const char* colorspace_name(Colorspace cs) noexcept
{
    switch (cs) {
    case Colorspace::Gray:  return "gray";
    case Colorspace::Rgb:   return "rgb";
    case Colorspace::YCbCr: return "ycbcr";
    }
    return "?";
}

Pixmap::Pixmap(std::size_t width, std::size_t height, Colorspace cs,
               std::vector<std::uint8_t> samples)
    : m_width(width), m_height(height), m_colorspace(cs), m_samples(std::move(samples))
{
    if (width == 0 || height == 0)
        throw Error(Errc::ZeroDimension, "pixmap dimensions must be non-zero");
    if (m_samples.size() != width * height * channels())
        throw Error(Errc::InvalidArgument,
                    "pixmap sample count " + std::to_string(m_samples.size()) +
                        " does not match " + std::to_string(width) + "x" +
                        std::to_string(height) + "x" + std::to_string(channels()));
}

namespace {

    class HeaderScanner {
    public:
        explicit HeaderScanner(std::span<const std::uint8_t> bytes) : m_bytes(bytes) {}

        std::size_t pos() const { return m_pos; }
        bool at_end() const { return m_pos >= m_bytes.size(); }
        std::uint8_t peek() const { return m_bytes[m_pos]; }
        void advance(std::size_t n = 1) { m_pos += n; }

        void skip_space_and_comments()
        {
            while (!at_end()) {
                const auto c = peek();
                if (c == '#') {
                    while (!at_end() && peek() != '\n' && peek() != '\r')
                        advance();
                } else if (is_space(c)) {
                    advance();
                } else {
                    break;
                }
            }
        }

        // Reads one unsigned decimal token; `what` names it in diagnostics.
        std::size_t read_number(const char* what, Errc missing_code)
        {
            skip_space_and_comments();
            if (at_end())
                throw Error(missing_code, std::string("missing ") + what, m_pos);
            if (!std::isdigit(peek()))
                throw Error(missing_code == Errc::TruncatedData ? Errc::MalformedData
                                                                : Errc::MalformedHeader,
                            std::string("expected decimal ") + what, m_pos);
            std::size_t value = 0;
            while (!at_end() && std::isdigit(peek())) {
                value = value * 10 + (peek() - '0');
                if (value > (1u << 30))
                    throw Error(Errc::MalformedHeader, std::string(what) + " too large", m_pos);
                advance();
            }
            if (!at_end() && !is_space(peek()) && peek() != '#')
                throw Error(missing_code == Errc::TruncatedData ? Errc::MalformedData
                                                                : Errc::MalformedHeader,
                            std::string("junk after ") + what, m_pos);
            return value;
        }

        static bool is_space(std::uint8_t c)
        {
            return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
        }

    private:
        std::span<const std::uint8_t> m_bytes;
        std::size_t m_pos = 0;
    };

    std::uint8_t round_clamp(double v)
    {
        const double r = std::floor(v + 0.5);
        return static_cast<std::uint8_t>(std::clamp(r, 0.0, 255.0));
    }

} // namespace

Pixmap read_pixmap(std::span<const std::uint8_t> bytes)
{
    if (bytes.size() < 2 || bytes[0] != 'P')
        throw Error(Errc::MalformedHeader, "missing netpbm magic", 0);
    bool binary = false;
    Colorspace cs = Colorspace::Gray;
    switch (bytes[1]) {
    case '2': binary = false; cs = Colorspace::Gray; break;
    case '3': binary = false; cs = Colorspace::Rgb; break;
    case '5': binary = true;  cs = Colorspace::Gray; break;
    case '6': binary = true;  cs = Colorspace::Rgb; break;
    default:
        throw Error(Errc::MalformedHeader, "unsupported netpbm magic", 1);
    }

    HeaderScanner scan(bytes);
    scan.advance(2);
    if (!scan.at_end() && !HeaderScanner::is_space(scan.peek()) && scan.peek() != '#')
        throw Error(Errc::MalformedHeader, "magic must be followed by whitespace", scan.pos());

    scan.skip_space_and_comments();
    const std::size_t width_pos = scan.pos();
    const auto width = scan.read_number("width", Errc::MalformedHeader);
    const auto height = scan.read_number("height", Errc::MalformedHeader);
    if (width == 0 || height == 0)
        throw Error(Errc::ZeroDimension, "zero image dimension", width_pos);
    scan.skip_space_and_comments();
    const std::size_t maxval_pos = scan.pos();
    const auto maxval = scan.read_number("maxval", Errc::MalformedHeader);
    if (maxval != 255)
        throw Error(Errc::UnsupportedMaxval,
                    "maxval " + std::to_string(maxval) + " (only 255 is supported)", maxval_pos);

    const std::size_t channels = cs == Colorspace::Gray ? 1 : 3;
    const std::size_t count = width * height * channels;
    std::vector<std::uint8_t> samples;
    samples.reserve(count);

    if (binary) {
        // Exactly one whitespace byte separates maxval from the raster.
        if (scan.at_end())
            throw Error(Errc::TruncatedData, "missing raster", scan.pos());
        scan.advance();
        const std::size_t start = scan.pos();
        if (bytes.size() - start < count)
            throw Error(Errc::TruncatedData,
                        "raster holds " + std::to_string(bytes.size() - start) + " of " +
                            std::to_string(count) + " samples",
                        bytes.size());
        samples.assign(bytes.begin() + static_cast<std::ptrdiff_t>(start),
                       bytes.begin() + static_cast<std::ptrdiff_t>(start + count));
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t at = scan.pos();
            const auto v = scan.read_number("sample", Errc::TruncatedData);
            if (v > 255)
                throw Error(Errc::MalformedData, "sample exceeds maxval", at);
            samples.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return Pixmap(width, height, cs, std::move(samples));
}

std::vector<std::uint8_t> write_pixmap(const Pixmap& p, bool binary)
{
    if (p.colorspace() == Colorspace::YCbCr)
        throw Error(Errc::WrongColorspace, "YCbCr pixmaps must be converted to RGB before writing");
    const bool gray = p.colorspace() == Colorspace::Gray;
    const char* magic = binary ? (gray ? "P5" : "P6") : (gray ? "P2" : "P3");
    const std::string header = std::string(magic) + "\n" + std::to_string(p.width()) + " " +
                               std::to_string(p.height()) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    const auto samples = p.samples();
    if (binary) {
        out.insert(out.end(), samples.begin(), samples.end());
        return out;
    }
    // One image row per text line.
    const std::size_t row_len = p.width() * p.channels();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto text = std::to_string(samples[i]);
        out.insert(out.end(), text.begin(), text.end());
        out.push_back((i + 1) % row_len == 0 ? '\n' : ' ');
    }
    return out;
}

Pixmap rgb_to_ycbcr(const Pixmap& p)
{
    if (p.colorspace() != Colorspace::Rgb)
        throw Error(Errc::WrongColorspace,
                    std::string("rgb_to_ycbcr expects rgb, got ") + colorspace_name(p.colorspace()));
    const auto in = p.samples();
    std::vector<std::uint8_t> out(in.size());
    for (std::size_t i = 0; i < in.size(); i += 3) {
        const double r = in[i], g = in[i + 1], b = in[i + 2];
        out[i] = round_clamp(0.299 * r + 0.587 * g + 0.114 * b);
        out[i + 1] = round_clamp(128.0 - 0.168736 * r - 0.331264 * g + 0.5 * b);
        out[i + 2] = round_clamp(128.0 + 0.5 * r - 0.418688 * g - 0.081312 * b);
    }
    return Pixmap(p.width(), p.height(), Colorspace::YCbCr, std::move(out));
}

Pixmap ycbcr_to_rgb(const Pixmap& p)
{
    if (p.colorspace() != Colorspace::YCbCr)
        throw Error(Errc::WrongColorspace,
                    std::string("ycbcr_to_rgb expects ycbcr, got ") + colorspace_name(p.colorspace()));
    const auto in = p.samples();
    std::vector<std::uint8_t> out(in.size());
    for (std::size_t i = 0; i < in.size(); i += 3) {
        const double y = in[i], cb = in[i + 1] - 128.0, cr = in[i + 2] - 128.0;
        out[i] = round_clamp(y + 1.402 * cr);
        out[i + 1] = round_clamp(y - 0.344136 * cb - 0.714136 * cr);
        out[i + 2] = round_clamp(y + 1.772 * cb);
    }
    return Pixmap(p.width(), p.height(), Colorspace::Rgb, std::move(out));
}

std::vector<std::uint8_t> read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::Io, "cannot open '" + path + "' for reading");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(Errc::Io, "cannot open '" + path + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw Error(Errc::Io, "short write to '" + path + "'");
}

} // namespace wzc
