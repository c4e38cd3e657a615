#pragma once

#include <stdexcept>
#include <string>

namespace sigvis {

/// Operands disagree on alphabet size or truncation depth.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Invalid run configuration (bad transform chain, bad feature kind, ...).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input data; the message names the offending line or record.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sigvis
