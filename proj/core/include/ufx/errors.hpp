#ifndef UFX_ERRORS_HPP
#define UFX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ufx {

// Malformed or inconsistent user input: unknown names, duplicate ids,
// out-of-domain values, broken hierarchies.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called in a state its contract does not allow.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ufx

#endif  // UFX_ERRORS_HPP
