#pragma once

#include <functional>

#include "hyperrec/types.hpp"

namespace hyperrec {

struct RecurrenceCoefficients {
    Complex A;
    Complex B;
    Complex C;
    long n = 0;
};

// Parameters of the form's f_n: k=2 (a+n,b+n,c), k=3 (a+n,b+n,c-n),
// k=5 (a+n,b,c), k=6 (a+n,b,c-n), k=13 (a,b,c+n).
ParameterSet shifted_parameters(BasicForm form, const ParameterSet& p, long n);

// A_n y_{n-1} + B_n y_n + C_n y_{n+1} = 0.
RecurrenceCoefficients coefficients(BasicForm form, const ParameterSet& p, Complex z, long n);

// Intermediates of the k=3 coefficients, evaluated at the shifted parameters.
struct K3Record {
    Complex U, V, c1, c2, c3;
    RecurrenceCoefficients coef;
};
K3Record k3_record(const ParameterSet& p, Complex z, long n);

struct CoefficientLimits {
    Complex alpha;  // lim B_n / C_n
    Complex beta;   // lim A_n / C_n
};

CoefficientLimits coefficient_limits(BasicForm form, Complex z);

// |A y_{n-1} + B y_n + C y_{n+1}| / max(|A y_{n-1}|, |B y_n|, |C y_{n+1}|).
double residual(BasicForm form, const ParameterSet& p, Complex z, long n,
                const std::function<Complex(long)>& solution);

}  // namespace hyperrec
