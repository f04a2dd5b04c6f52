#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fpk {

// Domain error with a stable machine-readable code, e.g. "nonzero-constant-term",
// "cap-exceeded". The CLI maps these to JSON error objects and exit code 1.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace fpk
