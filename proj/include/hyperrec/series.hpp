#pragma once

#include "hyperrec/types.hpp"

namespace hyperrec {

struct SeriesResult {
    Complex value;
    double est_error = 0.0;  // relative
    int terms_used = 1;
};

constexpr double kDefaultSeriesTol = 1.1e-16;
constexpr int kDefaultMaxTerms = 5000;

// Gauss series sum_k (a)_k (b)_k / ((c)_k k!) z^k.
SeriesResult series_f21(const ParameterSet& p, Complex z, double tol = kDefaultSeriesTol,
                        int max_terms = kDefaultMaxTerms);

}  // namespace hyperrec
