#ifndef X1LAG_ERRORS_HPP
#define X1LAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace x1lag {

// Quadrature ran out of refinement levels/nodes with the error estimate
// still above the requested tolerance.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double estimate, double tolerance)
        : std::runtime_error(what), estimate_(estimate), tolerance_(tolerance) {}
    double estimate() const { return estimate_; }
    double tolerance() const { return tolerance_; }

private:
    double estimate_;
    double tolerance_;
};

// Moment matrix is singular (or numerically indistinguishable from singular).
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(const std::string& what, double rcond)
        : std::runtime_error(what), rcond_(rcond) {}
    // Reciprocal condition estimate at the point of failure.
    double rcond() const { return rcond_; }

private:
    double rcond_;
};

// Synthetic division left a nonzero remainder: the input polynomial does not
// satisfy the exceptional condition p'(-alpha) = p(-alpha).
class NonzeroRemainderError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace x1lag

#endif
