#pragma once

#include <complex>

namespace dac {

/// k-th branch of the Lambert W function: the solution w of w*exp(w) = z
/// whose imaginary part lies in the strip ((2k-1)*pi, (2k+1)*pi], with the
/// usual real-line exceptions for branches 0 and -1.
///
/// Branch 0 is real on [-1/e, inf); branch -1 is real on [-1/e, 0).
/// Throws std::domain_error for non-finite z and for z = 0 on branches
/// other than 0.
std::complex<double> lambert_w(int branch, std::complex<double> z);

/// d W_k / d z = 1 / (z + exp(W_k(z))).
/// Throws std::domain_error at the branch singularity (z = -1/e for
/// branches 0 and -1).
std::complex<double> lambert_w_derivative(int branch, std::complex<double> z);

}  // namespace dac
