#pragma once

#include <stdexcept>
#include <string>

namespace levy {

enum class ErrorCode {
    invalid_argument,  // malformed input (bad parameter, bad spec)
    domain,            // precondition violated (e.g. measure not in the required moment class)
    divergence,        // an integral required to be finite diverges
    quadrature,        // adaptive quadrature failed to reach the requested tolerance
    unsupported,       // operation not available for this representation
    numeric,           // root finding / interpolation breakdown
    io                 // file or serialization problem
};

// All core routines throw Error.  `partial` and `achieved_tol` carry the best
// available estimate when a quadrature or root search gives up.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string msg)
        : std::runtime_error(std::move(msg)), code_(code) {}
    Error(ErrorCode code, std::string msg, double partial, double achieved_tol)
        : std::runtime_error(std::move(msg)),
          code_(code), partial_(partial), achieved_tol_(achieved_tol), has_partial_(true) {}

    ErrorCode code() const noexcept { return code_; }
    bool has_partial() const noexcept { return has_partial_; }
    double partial() const noexcept { return partial_; }
    double achieved_tol() const noexcept { return achieved_tol_; }

  private:
    ErrorCode code_;
    double partial_ = 0.0;
    double achieved_tol_ = 0.0;
    bool has_partial_ = false;
};

}  // namespace levy
