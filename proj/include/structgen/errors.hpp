#pragma once

#include <stdexcept>
#include <string>

namespace structgen {

// Bad configuration / malformed grammar or lexicon files. CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad data at runtime (unparseable sentence, malformed TSV line, unknown
// token, misaligned prediction file). CLI exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// A violated internal invariant; indicates a bug. CLI exit code 3.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace structgen
