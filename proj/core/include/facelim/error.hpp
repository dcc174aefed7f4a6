#pragma once

#include <stdexcept>
#include <string>

namespace facelim {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds a configured resource ceiling (sieve limit, oracle bound, ...).
struct CapacityError : Error {
    explicit CapacityError(const std::string& what) : Error(what) {}
};

// Input is outside the mathematical domain of the operation.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A partition violates its structural invariants, or its text form is malformed.
struct InvalidPartitionError : Error {
    explicit InvalidPartitionError(const std::string& what) : Error(what) {}
};

}  // namespace facelim
