#include "wzc/error.hpp"

namespace wzc {

const char* errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::InvalidArgument:   return "INVALID_ARGUMENT";
    case Errc::MalformedHeader:   return "MALFORMED_HEADER";
    case Errc::UnsupportedMaxval: return "UNSUPPORTED_MAXVAL";
    case Errc::TruncatedData:     return "TRUNCATED_DATA";
    case Errc::MalformedData:     return "MALFORMED_DATA";
    case Errc::ZeroDimension:     return "ZERO_DIMENSION";
    case Errc::WrongColorspace:   return "WRONG_COLORSPACE";
    case Errc::NotDivisible:      return "NOT_DIVISIBLE";
    case Errc::DimensionMismatch: return "DIMENSION_MISMATCH";
    case Errc::BadMagic:          return "BAD_MAGIC";
    case Errc::UnknownCodec:      return "UNKNOWN_CODEC";
    case Errc::UnknownWavelet:    return "UNKNOWN_WAVELET";
    case Errc::LengthMismatch:    return "LENGTH_MISMATCH";
    case Errc::Truncated:         return "TRUNCATED";
    case Errc::Io:                return "IO";
    }
    return "UNKNOWN";
}

static std::string decorate(Errc code, const std::string& what,
                            std::optional<std::size_t> offset)
{
    std::string msg = std::string(errc_name(code)) + ": " + what;
    if (offset)
        msg += " (at byte " + std::to_string(*offset) + ")";
    return msg;
}

Error::Error(Errc code, const std::string& what, std::optional<std::size_t> offset)
    : std::runtime_error(decorate(code, what, offset)), m_code(code), m_offset(offset)
{
}

} // namespace wzc
