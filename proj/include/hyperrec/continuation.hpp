#pragma once

#include "hyperrec/types.hpp"

namespace hyperrec {

struct ContinuationResult {
    Complex value;
    double est_error = 0.0;  // relative, from two step-size runs
    int steps = 0;
};

// 2F1 at z by Taylor-stepping the hypergeometric differential equation from
// |z0| = 1/2 along a path that stays off [1, inf). Slow; meant for parameter
// sets where every series route cancels.
ContinuationResult continue_f21(const ParameterSet& p, Complex z);

}  // namespace hyperrec
