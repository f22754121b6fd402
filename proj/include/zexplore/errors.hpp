#pragma once

#include <stdexcept>
#include <string>

namespace zexplore {

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Bernoulli tail of the Euler-Maclaurin sum larger than requested tolerance.
struct AccuracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Magnitudes that would leave binary64 range; raised rather than saturating.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

// Tracked angle sum is not an integer multiple of pi: a tracking fault.
struct NonIntegerResidual : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace zexplore
