#pragma once

#include <stdexcept>
#include <string>

namespace lattice {

enum class Errc {
    InvalidPoint,
    InvalidArgument,
    NonPositiveX,
    TruncationNotReached,
    IterationLimitExceeded,
    NonPositiveAlpha,
    NonPositiveK,
    OrderViolation,
    BoundaryX,
    UnknownFunction,
    OutOfRegion,
    UnknownLemma,
    RegionMismatch,
    NoConvergence,
};

const char* errc_name(Errc c);

class LatticeError : public std::runtime_error {
public:
    LatticeError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace lattice
