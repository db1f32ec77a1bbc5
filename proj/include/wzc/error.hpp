#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace wzc {

enum class Errc {
    InvalidArgument,
    MalformedHeader,
    UnsupportedMaxval,
    TruncatedData,
    MalformedData,
    ZeroDimension,
    WrongColorspace,
    NotDivisible,
    DimensionMismatch,
    BadMagic,
    UnknownCodec,
    UnknownWavelet,
    LengthMismatch,
    Truncated,
    Io,
};

const char* errc_name(Errc code) noexcept;

// Every failure in the library surfaces as this exception. Parse errors
// additionally carry the byte offset at which the input went wrong.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what,
          std::optional<std::size_t> offset = std::nullopt);

    Errc code() const noexcept { return m_code; }
    std::optional<std::size_t> offset() const noexcept { return m_offset; }

private:
    Errc m_code;
    std::optional<std::size_t> m_offset;
};

} // namespace wzc
