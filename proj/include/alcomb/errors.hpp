#ifndef ALCOMB_ERRORS_HPP
#define ALCOMB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace alcomb {

// Input is well-formed but outside the range where the implemented
// formulas are exact (singular weight, c below the Coxeter number,
// unlinked pair, ...).  The CLI maps this to exit code 2.
class ScopeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace alcomb

#endif
