#pragma once

#include <stdexcept>
#include <string>

namespace shiftspec {

// Norm family does not support the requested operation (Orlicz / variable
// exponent where weighted-lp is required, or p != 2 for finite sections).
class UnsupportedNormError : public std::runtime_error {
public:
    explicit UnsupportedNormError(const std::string& what) : std::runtime_error(what) {}
};

// The operator/space combination falls outside the hypotheses the spectral
// predictions need (e.g. both shift directions unbounded).
class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

// Laurent evaluation at 0 with negative powers present.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// Malformed experiment configuration.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Unwritable output path or similar.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace shiftspec
