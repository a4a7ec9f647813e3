#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eitmech {

enum class ErrorKind {
    InvalidParameter,
    SingularPoint,
    ExtractionFailure,
    NumericFailure,
    UnstableSystem,
    NoThreshold,
    NotFound,
    InvalidState,
    InvalidConfig,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it onto exit codes and flagged sweep rows.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace eitmech
