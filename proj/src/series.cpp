#include "hyperrec/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperrec/errors.hpp"
#include "hyperrec/gamma.hpp"

namespace hyperrec {

SeriesResult series_f21(const ParameterSet& p, Complex z, double tol, int max_terms) {
    const Complex a = p.a, b = p.b, c = p.c;
    const bool terminates = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if (!terminates && std::abs(z) > 1.0) {
        throw NoConvergence("series_f21: |z| > 1 for a non-terminating series");
    }

    // Terms of series with large negative parameters dip before growing;
    // the stopping test is armed only past the last sign change.
    const double arm = std::max({0.0, -a.real(), -b.real(), -c.real()}) + 1.0;

    Complex sum = 1.0;
    Complex term = 1.0;
    double biggest = 1.0;
    int quiet = 0;
    for (int k = 0; k < max_terms; ++k) {
        const double kk = static_cast<double>(k);
        const Complex ak = a + kk, bk = b + kk, ck = c + kk;
        if (ak == 0.0 || bk == 0.0) {
            SeriesResult r;
            r.value = sum;
            r.est_error = std::numeric_limits<double>::epsilon() * biggest / std::max(std::abs(sum), 1e-300);
            r.terms_used = k + 1;
            return r;
        }
        if (ck == 0.0) throw PoleOfGamma("series_f21: c is a non-positive integer");
        term *= ak * bk / (ck * (kk + 1.0)) * z;
        sum += term;
        biggest = std::max(biggest, std::abs(term));
        if (kk + 1.0 > arm && std::abs(term) <= tol * std::abs(sum)) {
            if (++quiet == 2) {
                const double k1 = kk + 1.0;
                const Complex next = term * (a + k1) * (b + k1) / ((c + k1) * (k1 + 1.0)) * z;
                SeriesResult r;
                r.value = sum;
                // Truncation plus the rounding carried by the largest term.
                r.est_error = (std::abs(next) + std::numeric_limits<double>::epsilon() * biggest) /
                              std::max(std::abs(sum), 1e-300);
                r.terms_used = k + 2;
                return r;
            }
        } else {
            quiet = 0;
        }
    }
    throw NoConvergence("series_f21: max_terms reached");
}

}  // namespace hyperrec
