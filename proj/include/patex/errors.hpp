#pragma once

#include <stdexcept>
#include <string>

namespace patex {

/// Base of every error raised by the engine. `code()` is the stable name used
/// on the wire (`{"code": ..., "message": ...}`).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define PATEX_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& message) : Error(#Name, message) {} \
    }

PATEX_DEFINE_ERROR(ParseError);
PATEX_DEFINE_ERROR(DanglingEndpoint);
PATEX_DEFINE_ERROR(EmptyNetwork);
PATEX_DEFINE_ERROR(UnknownElement);
PATEX_DEFINE_ERROR(NotTemporal);
PATEX_DEFINE_ERROR(MissingOrdering);
PATEX_DEFINE_ERROR(MissingCoordinates);
PATEX_DEFINE_ERROR(DegenerateRegion);
PATEX_DEFINE_ERROR(UnknownPair);

#undef PATEX_DEFINE_ERROR

}  // namespace patex
