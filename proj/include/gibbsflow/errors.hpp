#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gibbsflow {

// Operation is defined, but not for this model.
struct UnsupportedOperation : std::logic_error {
    using std::logic_error::logic_error;
};

struct DegenerateDensityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BlowUpError : std::runtime_error {
    BlowUpError(const std::string& what, double last_good_time)
        : std::runtime_error(what), last_good_time(last_good_time) {}
    double last_good_time;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FormatError : std::runtime_error {
    FormatError(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset(offset) {}
    std::size_t offset;
};

struct FingerprintMismatch : std::runtime_error {
    FingerprintMismatch(const std::string& what, std::uint64_t expected, std::uint64_t found)
        : std::runtime_error(what), expected(expected), found(found) {}
    std::uint64_t expected;
    std::uint64_t found;
};

}  // namespace gibbsflow
