#pragma once

#include <cmath>
#include <complex>
#include <string>

namespace hyperrec {

using Complex = std::complex<double>;

struct ParameterSet {
    Complex a;
    Complex b;
    Complex c;
};

enum class Direction { forward, backward };

// The five recursions every shift vector reduces to.
enum class BasicForm { k2 = 2, k3 = 3, k5 = 5, k6 = 6, k13 = 13 };

enum class SolutionLabel { F, G, H, J };

std::string to_string(Direction d);
std::string to_string(BasicForm f);
std::string to_string(SolutionLabel l);

BasicForm basic_form_from_int(int k);
Direction direction_from_string(const std::string& s);

// Drops a negative zero imaginary part so branch choices are reproducible.
inline Complex canonical(Complex z) {
    if (z.imag() == 0.0) return {z.real(), 0.0};
    return z;
}

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace hyperrec
