#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace wiretap {

using Complex = std::complex<double>;
using Cmat = Eigen::MatrixXcd;
using Cvec = Eigen::VectorXcd;
using Rvec = Eigen::VectorXd;

// Numerical failures (exit code 3 at the CLI boundary).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPositiveDefinite : NumericalError {
    using NumericalError::NumericalError;
};
struct NotPSD : NumericalError {
    using NumericalError::NumericalError;
};
struct DimensionMismatch : NumericalError {
    using NumericalError::NumericalError;
};
struct RankDeficient : NumericalError {
    using NumericalError::NumericalError;
};
struct ConvergenceFailure : NumericalError {
    using NumericalError::NumericalError;
};
struct SingularBlock : NumericalError {
    using NumericalError::NumericalError;
};
struct SingularS : NumericalError {
    using NumericalError::NumericalError;
};
struct NearSingularResolvent : NumericalError {
    using NumericalError::NumericalError;
};
struct BracketFailure : NumericalError {
    using NumericalError::NumericalError;
};
struct EmptyNullspace : NumericalError {
    using NumericalError::NumericalError;
};
struct NoReachableModes : NumericalError {
    using NumericalError::NumericalError;
};

// Invalid user input / configuration (exit code 2 at the CLI boundary).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace wiretap
