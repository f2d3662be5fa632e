#include "hyperrec/coefficients.hpp"

#include <algorithm>
#include <cmath>

#include "hyperrec/errors.hpp"

namespace hyperrec {

ParameterSet shifted_parameters(BasicForm form, const ParameterSet& p, long n) {
    const double d = static_cast<double>(n);
    switch (form) {
        case BasicForm::k2: return {p.a + d, p.b + d, p.c};
        case BasicForm::k3: return {p.a + d, p.b + d, p.c - d};
        case BasicForm::k5: return {p.a + d, p.b, p.c};
        case BasicForm::k6: return {p.a + d, p.b, p.c - d};
        case BasicForm::k13: return {p.a, p.b, p.c + d};
    }
    return p;
}

K3Record k3_record(const ParameterSet& p, Complex z, long n) {
    const ParameterSet q = shifted_parameters(BasicForm::k3, p, n);
    const Complex a = q.a, b = q.b, c = q.c;
    const Complex s = a + b - c;
    K3Record r;
    r.U = z * (s + 1.0) * (s + 2.0) + a * b * (1.0 - z);
    r.V = (1.0 - z) * (1.0 - a - b + a * b) + z * (s - 1.0) * (s - 2.0);
    r.c1 = (1.0 - z) * (b - c) * (b - 1.0) * (a - 1.0 + z * (b - c - 1.0));
    r.c2 = b * (b + 1.0 - c) * (1.0 - z) * (a + b * z - c * z + 2.0 * z);
    r.c3 = c - 2.0 * b - (a - b) * z;
    const Complex omz = 1.0 - z;
    r.coef.A = -(a - c) * (a - c - 1.0) * (b - 1.0 - c) * (b - c) * z * r.U;
    r.coef.B = c * (r.c1 * r.U + r.c2 * r.V + r.c3 * r.U * r.V);
    r.coef.C = a * b * c * (c - 1.0) * omz * omz * omz * r.V;
    r.coef.n = n;
    return r;
}

RecurrenceCoefficients coefficients(BasicForm form, const ParameterSet& p, Complex z, long n) {
    if (form == BasicForm::k3) return k3_record(p, z, n).coef;
    const ParameterSet q = shifted_parameters(form, p, n);
    const Complex a = q.a, b = q.b, c = q.c;
    const Complex omz = 1.0 - z;
    RecurrenceCoefficients r;
    r.n = n;
    switch (form) {
        case BasicForm::k2:
            r.A = (c - a) * (c - b) * (c - a - b - 1.0);
            r.B = (c - a - b) *
                  (c * (a + b - c) + c - 2.0 * a * b + z * ((a + b) * (c - a - b) + 2.0 * a * b + 1.0 - c));
            r.C = a * b * (c - a - b + 1.0) * omz * omz;
            break;
        case BasicForm::k5:
            r.A = c - a;
            r.B = 2.0 * a - c - (a - b) * z;
            r.C = a * (z - 1.0);
            break;
        case BasicForm::k6: {
            const Complex z2 = z * z;
            r.A = z * (a - c) * (a - c - 1.0) * (b - c) * (a + z * (b + 1.0 - c));
            r.B = c * (a * (a - 1.0) * (c - 1.0) + a * (a - 1.0) * (a + 3.0 * b - 4.0 * c + 2.0) * z +
                       (b - c) * (b + 1.0 - c) * (4.0 * a - c - 1.0) * z2 -
                       (a - b) * (b - c) * (b + 1.0 - c) * z2 * z);
            r.C = -a * c * (c - 1.0) * (a - 1.0 + z * (b - c)) * omz * omz;
            break;
        }
        case BasicForm::k13:
            r.A = c * (c - 1.0) * (z - 1.0);
            r.B = c * (c - 1.0 - (2.0 * c - a - b - 1.0) * z);
            r.C = (c - a) * (c - b) * z;
            break;
        case BasicForm::k3:
            break;
    }
    return r;
}

CoefficientLimits coefficient_limits(BasicForm form, Complex z) {
    if (z == 1.0) throw SingularPoint("coefficient_limits: z = 1");
    if (form == BasicForm::k13 && z == 0.0) throw SingularPoint("coefficient_limits: z = 0 for form 13");
    const Complex omz = 1.0 - z;
    switch (form) {
        case BasicForm::k2: return {-2.0 * (z + 1.0) / (omz * omz), 1.0 / (omz * omz)};
        case BasicForm::k3: {
            const Complex d = omz * omz * omz;
            return {(8.0 * z * z + 20.0 * z - 1.0) / d, -16.0 * z / d};
        }
        case BasicForm::k5: return {(z - 2.0) / omz, 1.0 / omz};
        case BasicForm::k6: return {-(z * z - 6.0 * z + 1.0) / (omz * omz), -4.0 * z / (omz * omz)};
        case BasicForm::k13: return {-(2.0 * z - 1.0) / z, (z - 1.0) / z};
    }
    return {};
}

double residual(BasicForm form, const ParameterSet& p, Complex z, long n,
                const std::function<Complex(long)>& solution) {
    const RecurrenceCoefficients r = coefficients(form, p, z, n);
    const Complex t0 = r.A * solution(n - 1);
    const Complex t1 = r.B * solution(n);
    const Complex t2 = r.C * solution(n + 1);
    const double scale = std::max({std::abs(t0), std::abs(t1), std::abs(t2)});
    if (scale == 0.0) return 0.0;
    return std::abs(t0 + t1 + t2) / scale;
}

}  // namespace hyperrec
