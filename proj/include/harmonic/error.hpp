#pragma once

#include <stdexcept>
#include <string>

namespace harmonic {

/// A numerical procedure ran but its own self-check failed (non-finite
/// recurrence, blow-up, a profile that does not fit).
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace harmonic
