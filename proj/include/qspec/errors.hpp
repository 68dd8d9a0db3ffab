#ifndef QSPEC_ERRORS_HPP
#define QSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qspec {

// Incompatible objects were combined (variable sets, truncation orders, ...).
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside the mathematical domain of an operation.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a configured cap (degree cap D, truncation order T).
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Persistent cache cannot be used for this run; callers recompute.
struct cache_invalid_error : std::runtime_error {
    explicit cache_invalid_error(const std::string& what) : std::runtime_error(what) {}
};

// Operation not defined for this surface kind.
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace qspec

#endif
