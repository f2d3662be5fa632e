#include "hyperrec/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "hyperrec/errors.hpp"

namespace hyperrec {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2k} / (2k (2k-1)), k = 1..9.
constexpr std::array<double, 9> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,       1.0 / 1260.0,
    -1.0 / 1680.0,       1.0 / 1188.0,       -691.0 / 360360.0,
    1.0 / 156.0,         -3617.0 / 122400.0, 43867.0 / 244188.0,
};

Complex stirling(Complex z) {
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex sum = 0.0;
    Complex p = inv;
    for (double coef : kStirling) {
        sum += coef * p;
        p *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + sum;
}

// Re z >= 0.5: shift up until the asymptotic series is accurate.
Complex log_gamma_right(Complex z) {
    if (std::abs(z) >= 15.0) return stirling(z);
    const int shift = static_cast<int>(std::ceil(15.0 - z.real()));
    Complex acc = 0.0;
    Complex w = z;
    for (int k = 0; k < shift; ++k) {
        acc += std::log(w);
        w += 1.0;
    }
    return stirling(w) - acc;
}

// exp(u) - 1 without cancellation for small |u|.
Complex cexpm1(Complex u) {
    const double x = u.real();
    const double y = u.imag();
    const double s = std::sin(0.5 * y);
    const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
    const double im = std::exp(x) * std::sin(y);
    return {re, im};
}

// Analytic log sin(pi z) on Im z >= 0:
// sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}).
Complex log_sin_pi_upper(Complex z) {
    const double frac = z.real() - std::round(z.real());
    const Complex u(-2.0 * kPi * z.imag(), 2.0 * kPi * frac);
    const Complex one_minus = -cexpm1(u);
    return Complex(-std::log(2.0), 0.5 * kPi) + Complex(kPi * z.imag(), -kPi * z.real()) +
           std::log(one_minus);
}

Complex log_gamma_upper(Complex z) {
    if (z.real() >= 0.5) return log_gamma_right(z);
    return std::log(kPi) - log_sin_pi_upper(z) - log_gamma_right(1.0 - z);
}

}  // namespace

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

bool near_integer(Complex z, double tol) {
    return std::abs(z.imag()) <= tol && std::abs(z.real() - std::round(z.real())) <= tol;
}

Complex log_gamma(Complex z) {
    z = canonical(z);
    if (is_nonpositive_integer(z)) {
        throw PoleOfGamma("log_gamma: pole at " + std::to_string(z.real()));
    }
    if (z.imag() >= 0.0) return canonical(log_gamma_upper(z));
    return canonical(std::conj(log_gamma_upper(std::conj(z))));
}

Complex log_gamma_checked(Complex z, double tol) {
    if (z.real() < 0.5 && near_integer(z, tol)) {
        throw PoleOfGamma("gamma argument within tolerance of a pole");
    }
    return log_gamma(z);
}

Complex reflect_negative_gamma(Complex a, long n) {
    if (near_integer(a, 0.0)) throw PoleOfGamma("reflect_negative_gamma: integer a");
    Complex sign_log = (n % 2 == 0) ? Complex(0.0) : Complex(0.0, kPi);
    return sign_log + std::log(kPi) - std::log(std::sin(kPi * a)) -
           log_gamma(static_cast<double>(n) + 1.0 - a);
}

Complex scaled_exp(Complex log_value, Complex v) {
    if (v == 0.0) return 0.0;
    const double mag = std::abs(v);
    const Complex lv = log_value + std::log(mag);
    return std::exp(lv) * (v / mag);
}

}  // namespace hyperrec
