#pragma once

#include <stdexcept>
#include <string>

namespace scf {

/// Malformed input: wrong dimensions, broken antisymmetry, bad parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Brackets that violate the Jacobi identity.
class JacobiError : public InputError {
 public:
  JacobiError(const std::string& what, double defect)
      : InputError(what), defect_(defect) {}
  double defect() const { return defect_; }

 private:
  double defect_;
};

/// A metric that is singular or not positive definite.
class DegenerateMetric : public std::runtime_error {
 public:
  DegenerateMetric(const std::string& what, double min_eigenvalue)
      : std::runtime_error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

}  // namespace scf
