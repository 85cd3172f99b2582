#pragma once

#include <stdexcept>
#include <string>

namespace diam {

// Bad caller input: out-of-range vertex ids, malformed parameters, parse errors.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A construction would exceed the configured vertex+edge budget.
struct SizeBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A seeded randomized search exhausted its retry budget without producing a
// verifiable artifact. Callers may re-seed and try again.
struct GenerationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace diam
