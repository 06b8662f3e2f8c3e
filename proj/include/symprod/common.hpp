#ifndef SYMPROD_COMMON_HPP
#define SYMPROD_COMMON_HPP

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace symprod {

/// Exact unbounded integer. Every coefficient and count in this library is
/// computed in exact arithmetic; equality is the only tolerance anywhere.
using Integer = mpz_class;

/// Precondition violation on a library entry point.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A degree argument outside the range where a formula is valid
/// (e.g. Riemann-Roch with nonvanishing h^1).
class OutOfRegime : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Raised when no implemented invariant separates a pair of spaces.
/// This is a loud failure, never a silent "isomorphic".
class Indistinguishable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Execution policy for kernels that have both a plain serial loop and an
/// OpenMP version. Results are bit-identical either way; the serial loops
/// are kept as the reference the tests compare against.
enum class Exec { Serial, Parallel };

} // namespace symprod

#endif
