#pragma once

#include <stdexcept>
#include <string>

namespace ojam {

// Raised when an iterative routine fails to converge or a bracket cannot be
// established. Invalid arguments use std::domain_error / std::invalid_argument.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ojam
