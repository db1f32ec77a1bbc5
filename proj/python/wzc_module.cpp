#include "wzc/bench.hpp"
#include "wzc/dwt.hpp"
#include "wzc/error.hpp"
#include "wzc/metrics.hpp"
#include "wzc/pipeline.hpp"
#include "wzc/pixmap.hpp"
#include "wzc/spiht.hpp"
#include "wzc/stw.hpp"

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <map>
#include <string>

namespace py = pybind11;

namespace {

std::span<const std::uint8_t> as_span(const py::bytes& b, std::string& storage)
{
    storage = b;
    return {reinterpret_cast<const std::uint8_t*>(storage.data()), storage.size()};
}

py::bytes to_bytes(std::span<const std::uint8_t> v)
{
    return py::bytes(reinterpret_cast<const char*>(v.data()), v.size());
}

wzc::Wavelet wavelet_from(const std::string& name)
{
    if (name == "cdf97")
        return wzc::Wavelet::Cdf97;
    if (name == "haar")
        return wzc::Wavelet::Haar;
    throw wzc::Error(wzc::Errc::InvalidArgument, "unknown wavelet '" + name + "'");
}

wzc::Codec codec_from(const std::string& name)
{
    if (name == "spiht")
        return wzc::Codec::Spiht;
    if (name == "stw")
        return wzc::Codec::Stw;
    throw wzc::Error(wzc::Errc::InvalidArgument, "unknown codec '" + name + "'");
}

wzc::Colorspace colorspace_from(const std::string& name)
{
    if (name == "gray")
        return wzc::Colorspace::Gray;
    if (name == "rgb")
        return wzc::Colorspace::Rgb;
    if (name == "ycbcr")
        return wzc::Colorspace::YCbCr;
    throw wzc::Error(wzc::Errc::InvalidArgument, "unknown colorspace '" + name + "'");
}

py::array_t<double> matrix_to_array(const wzc::Matrix& m)
{
    py::array_t<double> out({m.rows(), m.cols()});
    std::memcpy(out.mutable_data(), m.data().data(), m.size() * sizeof(double));
    return out;
}

wzc::Matrix array_to_matrix(const py::array_t<double, py::array::c_style | py::array::forcecast>& a)
{
    if (a.ndim() != 2)
        throw wzc::Error(wzc::Errc::InvalidArgument, "expected a 2-D array");
    wzc::Matrix m(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
    std::memcpy(m.data().data(), a.data(), m.size() * sizeof(double));
    return m;
}

wzc::BitBuffer bit_buffer(const py::bytes& data, std::optional<std::size_t> bit_count)
{
    std::string storage;
    const auto span = as_span(data, storage);
    wzc::BitBuffer b{{span.begin(), span.end()}, bit_count.value_or(span.size() * 8)};
    if (b.bit_count > b.bytes.size() * 8)
        throw wzc::Error(wzc::Errc::InvalidArgument, "bit_count exceeds the data");
    return b;
}

py::dict quality_dict(const wzc::QualityReport& q)
{
    py::dict d;
    d["mse"] = q.mse;
    d["psnr"] = q.psnr;
    d["cr_percent"] = q.cr_percent;
    d["bpp"] = q.bpp;
    d["original_bytes"] = q.original_bytes;
    d["compressed_bytes"] = q.compressed_bytes;
    return d;
}

} // namespace

PYBIND11_MODULE(_wzc, m)
{
    m.doc() = "SPIHT and STW embedded wavelet image codecs";

    py::register_exception<wzc::Error>(m, "WzcError", PyExc_ValueError);

    py::class_<wzc::Pixmap>(m, "Pixmap")
        .def(py::init([](std::size_t width, std::size_t height, const std::string& colorspace,
                         const py::bytes& samples) {
                 std::string storage;
                 const auto s = as_span(samples, storage);
                 return wzc::Pixmap(width, height, colorspace_from(colorspace), {s.begin(), s.end()});
             }),
             py::arg("width"), py::arg("height"), py::arg("colorspace"), py::arg("samples"))
        .def_property_readonly("width", &wzc::Pixmap::width)
        .def_property_readonly("height", &wzc::Pixmap::height)
        .def_property_readonly("channels", &wzc::Pixmap::channels)
        .def_property_readonly("colorspace",
                               [](const wzc::Pixmap& p) { return wzc::colorspace_name(p.colorspace()); })
        .def_property_readonly("samples", [](const wzc::Pixmap& p) { return to_bytes(p.samples()); })
        .def("to_array",
             [](const wzc::Pixmap& p) {
                 py::array_t<std::uint8_t> out({p.height(), p.width(), p.channels()});
                 std::memcpy(out.mutable_data(), p.samples().data(), p.samples().size());
                 return out;
             })
        .def("__eq__", [](const wzc::Pixmap& a, const wzc::Pixmap& b) { return a == b; });

    m.def("read_pixmap", [](const py::bytes& data) {
        std::string storage;
        return wzc::read_pixmap(as_span(data, storage));
    });
    m.def(
        "write_pixmap", [](const wzc::Pixmap& p, bool binary) { return to_bytes(wzc::write_pixmap(p, binary)); },
        py::arg("pixmap"), py::arg("binary") = true);
    m.def("rgb_to_ycbcr", &wzc::rgb_to_ycbcr);
    m.def("ycbcr_to_rgb", &wzc::ycbcr_to_rgb);

    py::class_<wzc::CoefficientPyramid>(m, "CoefficientPyramid")
        .def_property_readonly("width", [](const wzc::CoefficientPyramid& p) { return p.layout.width(); })
        .def_property_readonly("height", [](const wzc::CoefficientPyramid& p) { return p.layout.height(); })
        .def_property_readonly("levels", [](const wzc::CoefficientPyramid& p) { return p.layout.levels(); })
        .def_property_readonly("wavelet",
                               [](const wzc::CoefficientPyramid& p) { return wzc::wavelet_name(p.wavelet); })
        .def_property_readonly("coeffs",
                               [](const wzc::CoefficientPyramid& p) { return matrix_to_array(p.coeffs); });

    m.def(
        "forward_dwt_2d",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a, int levels,
           const std::string& wavelet) { return wzc::forward_dwt_2d(array_to_matrix(a), levels, wavelet_from(wavelet)); },
        py::arg("channel"), py::arg("levels"), py::arg("wavelet") = "cdf97");
    m.def("inverse_dwt_2d", [](const wzc::CoefficientPyramid& p) { return matrix_to_array(wzc::inverse_dwt_2d(p)); });

    py::class_<wzc::EmbeddedStream>(m, "EmbeddedStream")
        .def_readonly("n0", &wzc::EmbeddedStream::n0)
        .def_property_readonly("bits", [](const wzc::EmbeddedStream& s) { return to_bytes(s.bits.bytes); })
        .def_property_readonly("bit_count", [](const wzc::EmbeddedStream& s) { return s.bits.bit_count; })
        .def_readonly("pass_ends", &wzc::EmbeddedStream::pass_ends);

    py::class_<wzc::DecodedPyramid>(m, "DecodedPyramid")
        .def_readonly("pyramid", &wzc::DecodedPyramid::pyramid)
        .def_readonly("truncated", &wzc::DecodedPyramid::truncated)
        .def_readonly("bits_consumed", &wzc::DecodedPyramid::bits_consumed)
        .def_readonly("passes_completed", &wzc::DecodedPyramid::passes_completed);

    m.def(
        "spiht_encode", [](const wzc::CoefficientPyramid& p, int loops) { return wzc::spiht_encode(p, loops); },
        py::arg("pyramid"), py::arg("loops"));
    m.def(
        "stw_encode", [](const wzc::CoefficientPyramid& p, int loops) { return wzc::stw_encode(p, loops); },
        py::arg("pyramid"), py::arg("loops"));

    const auto decode_binding = [&m](const char* name, auto decoder) {
        m.def(
            name,
            [decoder](const py::bytes& bits, std::optional<std::size_t> bit_count, std::optional<int> n0, int loops,
                      std::size_t width, std::size_t height, int levels, const std::string& wavelet) {
                return decoder(bit_buffer(bits, bit_count), n0, loops, wzc::SubbandLayout(width, height, levels),
                               wavelet_from(wavelet));
            },
            py::arg("bits"), py::arg("bit_count"), py::arg("n0"), py::arg("loops"), py::arg("width"),
            py::arg("height"), py::arg("levels"), py::arg("wavelet") = "cdf97");
    };
    decode_binding("spiht_decode", [](const wzc::BitBuffer& b, std::optional<int> n0, int loops,
                                      const wzc::SubbandLayout& l, wzc::Wavelet w) {
        return wzc::spiht_decode(b, n0, loops, l, w);
    });
    decode_binding("stw_decode", [](const wzc::BitBuffer& b, std::optional<int> n0, int loops,
                                    const wzc::SubbandLayout& l, wzc::Wavelet w) {
        return wzc::stw_decode(b, n0, loops, l, w);
    });

    m.def(
        "compress",
        [](const wzc::Pixmap& image, const std::string& codec, int levels, int loops, const std::string& wavelet,
           bool color_transform) {
            const wzc::CompressOptions opts{codec_from(codec), levels, loops, wavelet_from(wavelet), color_transform};
            return to_bytes(wzc::compress_image(image, opts));
        },
        py::arg("image"), py::arg("codec") = "spiht", py::arg("levels") = 4, py::arg("loops") = 10,
        py::arg("wavelet") = "cdf97", py::arg("color_transform") = true);
    m.def("decompress", [](const py::bytes& data) {
        std::string storage;
        auto r = wzc::decompress_image(as_span(data, storage));
        return py::make_tuple(std::move(r.image), r.truncated);
    });

    m.def("mse", &wzc::mse);
    m.def("psnr", &wzc::psnr);
    m.def("compression_ratio", [](std::size_t original, std::size_t compressed) {
        return wzc::compression_ratio(original, compressed).cr_percent;
    });

    m.def("verify_published_tables", []() {
        const auto v = wzc::verify_published_tables(wzc::PublishedTables::published());
        py::dict d;
        py::list checks;
        for (const auto& c : v.checks) {
            py::dict cd;
            cd["name"] = c.name;
            cd["computed"] = c.computed;
            cd["expected"] = c.expected;
            cd["tolerance"] = c.tolerance;
            cd["pass"] = c.pass;
            checks.append(cd);
        }
        d["checks"] = checks;
        d["all_passed"] = v.all_passed();
        d["stw_psnr_cr_swapped"] = v.stw_psnr_cr_swapped;
        d["stw_psnr_average"] = v.stw_psnr_average;
        d["stw_cr_average"] = v.stw_cr_average;
        d["text"] = wzc::format_verification(v);
        return d;
    });

    m.def(
        "run_sweep",
        [](const wzc::Pixmap& image, const std::vector<std::string>& codecs, const std::vector<int>& levels,
           int loops, const std::string& wavelet, bool color_transform) {
            wzc::SweepConfig cfg;
            cfg.codecs.clear();
            for (const auto& c : codecs)
                cfg.codecs.push_back(codec_from(c));
            cfg.levels = levels;
            cfg.loops = loops;
            cfg.wavelet = wavelet_from(wavelet);
            cfg.color_transform = color_transform;
            wzc::ReportTable table;
            {
                py::gil_scoped_release release;
                table = wzc::run_sweep(image, cfg);
            }
            py::list rows;
            for (const auto& r : table.rows) {
                py::dict d;
                d["codec"] = wzc::codec_name(r.codec);
                d["level"] = r.level;
                d["quality"] = r.quality ? py::object(quality_dict(*r.quality)) : py::object(py::none());
                d["note"] = r.note;
                rows.append(d);
            }
            return rows;
        },
        py::arg("image"), py::arg("codecs") = std::vector<std::string>{"spiht", "stw"},
        py::arg("levels") = std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8}, py::arg("loops") = 10,
        py::arg("wavelet") = "cdf97", py::arg("color_transform") = true);
}
