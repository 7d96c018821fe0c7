#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace qhl {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Invalid or inconsistent input parameters (CLI exit code 1).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Request outside a model's domain of definition, e.g. asking for the
/// nearest-impurity metric with n != 2m.
struct ModelDomainError : ParameterError {
  using ParameterError::ParameterError;
};

/// A stated precondition of an operation does not hold for the given input.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// No metric exists: the operator has complex eigenvalues or is defective.
struct NoMetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured size cap was exceeded (CLI exit code 2).
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultRankTol = 1e-10;
inline constexpr double kDefaultResidualTol = 1e-10;

/// Integer power of a complex number; avoids std::pow(0,0) = NaN.
inline Complex cpow_int(Complex base, int k) {
  Complex r{1.0, 0.0};
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

}  // namespace qhl
