#pragma once

#include <stdexcept>
#include <string>

namespace areawalk {

// Thrown when two series with different coefficient realizations (e.g.
// residues modulo different primes) are combined.
class RingMismatchError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when the brute-force oracle is asked for a length above its cap.
class OracleLimitError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when an enumeration would exceed the configured memory budget.
class ResourceLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace areawalk
