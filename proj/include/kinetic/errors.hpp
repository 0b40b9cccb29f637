#pragma once

#include <stdexcept>
#include <string>

namespace kinetic {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// S(s) has no sign change on (0,2]: the kernel is outside the supported class.
struct NoRootError : Error {
    explicit NoRootError(const std::string& msg) : Error("NoRoot: " + msg) {}
};

// Gamma-ratio expectation undefined, S(s) <= -1.
struct InvalidSError : Error {
    explicit InvalidSError(const std::string& msg) : Error("InvalidS: " + msg) {}
};

// Operation requires a kernel with a specific conserved exponent.
struct AlphaMismatchError : Error {
    explicit AlphaMismatchError(const std::string& msg) : Error("AlphaMismatch: " + msg) {}
};

struct GridMismatchError : Error {
    explicit GridMismatchError(const std::string& msg) : Error("GridMismatch: " + msg) {}
};

struct GridTooSmallError : Error {
    explicit GridTooSmallError(const std::string& msg) : Error("GridTooSmall: " + msg) {}
};

struct DegenerateFitError : Error {
    explicit DegenerateFitError(const std::string& msg) : Error("DegenerateFit: " + msg) {}
};

// Config file could not be parsed / refers to unknown presets.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error("Config: " + msg) {}
};

// A scenario-level sanity assertion failed during a run.
struct ScenarioError : Error {
    explicit ScenarioError(const std::string& msg) : Error("Scenario: " + msg) {}
};

}  // namespace kinetic
