#pragma once

#include <stdexcept>
#include <string>

namespace grouplat {

// Base class for everything the engine throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured size cap was exceeded (group order, subgroup count, ...).
struct CapacityError : Error {
    explicit CapacityError(const std::string& msg) : Error(msg) {}
};

// Malformed input: bad spec string, invalid generator file, action that is
// not an automorphism, quotient by a non-normal subgroup, ...
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// An internal consistency check failed. This means an engine bug (or a
// violated theorem, which we treat the same way): abort loudly, never patch.
struct InternalCheckError : Error {
    explicit InternalCheckError(const std::string& msg) : Error(msg) {}
};

}  // namespace grouplat
