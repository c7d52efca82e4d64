#pragma once

#include <stdexcept>
#include <string>

namespace idealcalc {

// Raised when a numeric kernel cannot produce a trustworthy result
// (non-finite input, failed decomposition).  what() carries diagnostics.
class NumericFailure : public std::runtime_error {
public:
    explicit NumericFailure(const std::string& what) : std::runtime_error(what) {}
};

// Raised by config parsing and by malformed input files.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by generator recovery when the probed map fails the linearity test.
class NotLinearError : public std::invalid_argument {
public:
    explicit NotLinearError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace idealcalc
