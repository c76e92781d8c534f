#pragma once

#include <stdexcept>
#include <string>

namespace hwp {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define HWP_DEFINE_ERROR(NAME)                                 \
    class NAME : public Error {                                \
    public:                                                    \
        explicit NAME(const std::string& msg) : Error(msg) {}  \
    }

HWP_DEFINE_ERROR(EllNotSupported);
HWP_DEFINE_ERROR(NTooSmall);
HWP_DEFINE_ERROR(LengthMismatch);
HWP_DEFINE_ERROR(SpecViolation);
HWP_DEFINE_ERROR(TooLarge);
HWP_DEFINE_ERROR(NotPairable);
HWP_DEFINE_ERROR(SkolemMismatch);
HWP_DEFINE_ERROR(IndexOutOfRange);
HWP_DEFINE_ERROR(ShapeMismatch);
HWP_DEFINE_ERROR(NoMuFound);
HWP_DEFINE_ERROR(DomainOverlap);
HWP_DEFINE_ERROR(DomainGap);
HWP_DEFINE_ERROR(InsufficientFlipSet);
HWP_DEFINE_ERROR(AnchorViolation);
HWP_DEFINE_ERROR(DevelopBeforeCheck);

// Serialization errors.  ParseError carries a best-effort input position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at byte " + std::to_string(position) + ")"), position_(position) {}
    explicit ParseError(const std::string& msg) : Error(msg), position_(0) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

HWP_DEFINE_ERROR(SchemaError);

#undef HWP_DEFINE_ERROR

}  // namespace hwp
