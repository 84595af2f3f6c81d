#pragma once

#include <stdexcept>
#include <string>

namespace vsa {

// Stable error categories, mirrored one-to-one by the C API status codes.
enum class ErrorCode : int {
    Ok = 0,
    InvalidArgument,   // bad dimension, probability, hyperparameter, descriptor
    ShapeMismatch,     // dim/repr disagreement between operands
    EmptyInput,        // empty bundle, empty cleanup codebook
    MissingItem,       // unknown symbol, node, modality or role
    ModelState,        // untrained model queried
    MappingError,      // workload demands a core role the architecture lacks
    IncompleteTable,   // memory technology entry or parameter missing
    UnsupportedNode,   // technology node outside the scaling table
    IoError,           // file open/read/write failure
    ParseError,        // malformed config, CSV, JSONL or container file
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace vsa
