#pragma once

#include <stdexcept>
#include <string>

namespace levymix {

// Numerical failure as opposed to a domain violation: a continued fraction or
// quadrature that did not converge, an unstable extrapolation, or a result
// that does not fit in a double. Domain violations throw std::domain_error.
class numeric_error : public std::runtime_error {
  public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace levymix
