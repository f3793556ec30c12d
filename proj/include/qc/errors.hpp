#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qc {

// Graph or parameter exceeds the 64-vertex representation.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition (improper coloring, bad k, ...).
class contract_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A construction's claimed invariants disagree with solver results.
class claim_mismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested witness does not exist.
class not_found_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed serialized input; offset is the byte where decoding failed.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t byte_offset)
        : std::runtime_error(msg + " (byte " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    std::size_t offset;
};

}  // namespace qc
