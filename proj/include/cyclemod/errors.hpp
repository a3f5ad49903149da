#pragma once

#include <stdexcept>

namespace cyclemod {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed serialized input (spec JSON that fails to parse or has the
/// wrong shape).
class spec_error : public error {
public:
    using error::error;
};

/// A domain invariant was violated (modulus out of range, empty block,
/// non-unit trailing coefficient, ...).
class invariant_error : public error {
public:
    using error::error;
};

/// Checked integer arithmetic left the representable range.
class overflow_error : public error {
public:
    using error::error;
};

/// A derived level would exceed the configured realization cap.
class cap_error : public error {
public:
    using error::error;
};

} // namespace cyclemod
