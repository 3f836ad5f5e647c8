// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace triad {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact arithmetic left the representable 64-bit range. Never silent.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Invalid value passed to a constructor or geometric operation
/// (zero denominator, degenerate box, boundary point, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Dimension outside the supported range.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Unknown vertex or cell id.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Evaluator produced non-finite or malformed output, or failed to run.
class EvalError : public Error {
public:
    using Error::Error;
};

/// Scripted selection referenced a cell that does not exist at its turn.
class ScriptError : public Error {
public:
    using Error::Error;
};

/// Malformed run configuration or comparison matrix.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Malformed serialized input (trace, stats, rational literal).
class FormatError : public Error {
public:
    using Error::Error;
};

/// Trace cannot be rendered (only 2-D traces have an SVG projection).
class RenderError : public Error {
public:
    using Error::Error;
};

} // namespace triad
