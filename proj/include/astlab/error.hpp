#pragma once

#include <stdexcept>
#include <string>

namespace astlab {

/// Precondition violated by caller-supplied parameters.
class invalid_argument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An object failed its validity rules (AST, ASM, triangle, pattern...).
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// (s,t)-shape whose left and right deletions interfere.
class unsupported_shape : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Polynomial operands with different variable counts.
class arity_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Something that is mathematically impossible happened.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw invalid_argument(what);
}

}  // namespace astlab
