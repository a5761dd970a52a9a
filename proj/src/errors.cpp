#include "lattice/errors.hpp"

namespace lattice {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::InvalidPoint: return "InvalidPoint";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::NonPositiveX: return "NonPositiveX";
        case Errc::TruncationNotReached: return "TruncationNotReached";
        case Errc::IterationLimitExceeded: return "IterationLimitExceeded";
        case Errc::NonPositiveAlpha: return "NonPositiveAlpha";
        case Errc::NonPositiveK: return "NonPositiveK";
        case Errc::OrderViolation: return "OrderViolation";
        case Errc::BoundaryX: return "BoundaryX";
        case Errc::UnknownFunction: return "UnknownFunction";
        case Errc::OutOfRegion: return "OutOfRegion";
        case Errc::UnknownLemma: return "UnknownLemma";
        case Errc::RegionMismatch: return "RegionMismatch";
        case Errc::NoConvergence: return "NoConvergence";
    }
    return "Unknown";
}

}  // namespace lattice
