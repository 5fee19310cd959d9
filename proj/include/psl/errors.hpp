#ifndef PSL_ERRORS_HPP
#define PSL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace psl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad argument or malformed input.
struct ValidationError : Error {
  using Error::Error;
};

/// A configured guard (enumeration budget, class size cap) would be exceeded.
struct CapacityError : Error {
  using Error::Error;
};

/// Floating-point computation lost too much precision to proceed.
struct PrecisionError : Error {
  using Error::Error;
};

struct RankDeficiencyError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace psl

#endif  // PSL_ERRORS_HPP
