#ifndef L2SIG_ERRORS_HPP
#define L2SIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace l2sig {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that could not be read at all (malformed JSON, unknown keys, bad literals).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a mathematical contract: a table that is not
/// a group law, a matrix that is not Hermitian, a non-orientable complex, ...
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace l2sig

#endif  // L2SIG_ERRORS_HPP
