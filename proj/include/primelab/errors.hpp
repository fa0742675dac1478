#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace primelab {

// Requested work exceeds the configured global limit (sieve range, polynomial
// order, prime budget for a truncation tail, ...).
class capacity_error : public std::runtime_error {
public:
    capacity_error(const std::string& what, std::uint64_t required)
        : std::runtime_error(what), required_(required) {}

    std::uint64_t required() const noexcept { return required_; }

private:
    std::uint64_t required_;
};

// A quadrature or iteration failed to reach its tolerance.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace primelab
