#pragma once

#include <stdexcept>
#include <string>

namespace ttskit {

// Malformed or out-of-range input: bad indices, carrier mismatch, failed preconditions.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured size cap would be exceeded.
class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace ttskit
