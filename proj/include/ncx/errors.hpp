#pragma once

#include <stdexcept>
#include <string>

namespace ncx {

// Mathematical precondition violations: bad amplitude ranges, mismatched
// fields, inconsistent tables, roots of the wrong order, ...
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input documents that cannot be read at all: malformed JSON, schema
// violations, out-of-range entries.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace ncx
