#ifndef ARCFIT_ERRORS_HPP
#define ARCFIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arcfit {

/// Base class for all arcfit failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument (out of domain, malformed input).
class InputError : public Error {
 public:
  using Error::Error;
};

/// The radicand g(t,d) of an error function is not positive.
class RegularityError : public Error {
 public:
  using Error::Error;
};

/// Vanishing first derivative while evaluating curvature.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& msg, double t) : Error(msg), t_(t) {}
  double where() const { return t_; }

 private:
  double t_;
};

/// A root solve was requested on an interval without a sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// An iterative solve hit its iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The extremum structure promised by the bracketing lemmas did not hold.
class StructureError : public Error {
 public:
  using Error::Error;
};

}  // namespace arcfit

#endif  // ARCFIT_ERRORS_HPP
