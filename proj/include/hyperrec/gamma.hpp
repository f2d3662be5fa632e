#pragma once

#include "hyperrec/types.hpp"

namespace hyperrec {

bool is_nonpositive_integer(Complex z);

// True when z lies within tol of an integer (real part and imaginary part).
bool near_integer(Complex z, double tol);

// Analytic continuation of log Gamma from the positive real axis, so that
// log_gamma(z + 1) == log(z) + log_gamma(z) holds without 2*pi*i jumps.
Complex log_gamma(Complex z);

// Same, but rejects arguments within tol of a pole.
Complex log_gamma_checked(Complex z, double tol = 1e-8);

// log Gamma(a - n) via Gamma(a-n) = (-1)^n pi / (sin(pi a) Gamma(n+1-a)).
Complex reflect_negative_gamma(Complex a, long n);

// exp(log_value) * v, formed so that a huge exponent and a tiny v do not
// overflow or underflow in between.
Complex scaled_exp(Complex log_value, Complex v = 1.0);

}  // namespace hyperrec
