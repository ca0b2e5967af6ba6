#pragma once

#include <stdexcept>
#include <string>

namespace septica {

/// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested decimal precision below the supported floor.
class invalid_precision : public error {
public:
    using error::error;
};

/// Argument outside the mathematical domain of an operation.
class domain_error : public error {
public:
    using error::error;
};

/// A series or product did not settle within the term cap.
class non_convergence : public error {
public:
    using error::error;
};

/// No closed form is tabulated for the requested class invariant.
class unknown_invariant : public error {
public:
    using error::error;
};

/// Unknown closed-form or check identifier.
class registry_error : public error {
public:
    using error::error;
};

/// A cubic that must have three distinct real roots does not.
class unexpected_discriminant : public error {
public:
    using error::error;
};

/// Root-ordering decision could not separate the two orientations at the
/// working precision. Retrying at higher precision is the intended recovery.
class ambiguous_orientation : public error {
public:
    using error::error;
};

/// A fixed radical expression produced an invalid radicand. Indicates a
/// transcription defect, not a runtime condition.
class construction_error : public error {
public:
    using error::error;
};

/// Malformed cache or report file.
class parse_error : public error {
public:
    using error::error;
};

} // namespace septica
