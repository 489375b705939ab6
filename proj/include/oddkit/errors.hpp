#pragma once

#include <stdexcept>
#include <string>

namespace oddkit {

// Raised for malformed input files (bad CSV cells, ragged rows, unreadable
// model files). Argument/contract violations use std::invalid_argument.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oddkit
