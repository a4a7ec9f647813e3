#include "eitmech/errors.hpp"

namespace eitmech {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidParameter: return "invalid-parameter";
        case ErrorKind::SingularPoint: return "singular-point";
        case ErrorKind::ExtractionFailure: return "extraction-failure";
        case ErrorKind::NumericFailure: return "numeric-failure";
        case ErrorKind::UnstableSystem: return "unstable-system";
        case ErrorKind::NoThreshold: return "no-threshold";
        case ErrorKind::NotFound: return "not-found";
        case ErrorKind::InvalidState: return "invalid-state";
        case ErrorKind::InvalidConfig: return "invalid-config";
    }
    return "unknown";
}

}  // namespace eitmech
