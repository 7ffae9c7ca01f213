#pragma once

#include <stdexcept>
#include <string>

namespace lperc {

// Bad flags, presets, or config files. CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Anything wrong with input data: unreadable file, malformed row,
// unknown label token, empty dataset, un-imputable column. Exit code 3.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public DataError {
public:
    explicit ParseError(const std::string& msg) : DataError(msg) {}
};

class SchemaError : public DataError {
public:
    explicit SchemaError(const std::string& msg) : DataError(msg) {}
};

class DimensionError : public DataError {
public:
    explicit DimensionError(const std::string& msg) : DataError(msg) {}
};

// Non-finite values where finite arithmetic is required. Exit code 4.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace lperc
