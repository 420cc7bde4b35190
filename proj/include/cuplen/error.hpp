#ifndef CUPLEN_ERROR_HPP
#define CUPLEN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cuplen {

/// Bad arguments: mismatched rings, malformed input, non-homogeneous classes.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (n,k) outside n >= 2k >= 6, or a bound applied outside its hypotheses.
class HypothesisViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A query whose answer is not defined, e.g. the height of a zero class.
class UndefinedQuery : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured degree or basis-size cap would be exceeded.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An internal consistency check failed; always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cuplen

#endif  // CUPLEN_ERROR_HPP
