#include "hyperrec/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hyperrec {

std::string to_string(ArgumentKind k) {
    switch (k) {
        case ArgumentKind::z: return "z";
        case ArgumentKind::one_minus_z: return "1-z";
        case ArgumentKind::inv_z: return "1/z";
        case ArgumentKind::z_minus_1_over_z: return "(z-1)/z";
        case ArgumentKind::inv_one_minus_z: return "1/(1-z)";
        case ArgumentKind::z_over_z_minus_1: return "z/(z-1)";
        case ArgumentKind::none: return "none";
    }
    return "none";
}

Complex transformed_argument(ArgumentKind k, Complex z) {
    switch (k) {
        case ArgumentKind::z: return z;
        case ArgumentKind::one_minus_z: return canonical(1.0 - z);
        case ArgumentKind::inv_z: return canonical(1.0 / z);
        case ArgumentKind::z_minus_1_over_z: return canonical((z - 1.0) / z);
        case ArgumentKind::inv_one_minus_z: return canonical(1.0 / (1.0 - z));
        case ArgumentKind::z_over_z_minus_1: return canonical(z / (z - 1.0));
        case ArgumentKind::none: break;
    }
    return z;
}

namespace {

// |num| / |den| with a zero denominator giving infinity.
double ratio(double num, double den) {
    if (den == 0.0) return std::numeric_limits<double>::infinity();
    return num / den;
}

}  // namespace

std::vector<TransformPath> ranked_arguments(Complex z) {
    const double az = std::abs(z);
    const double a1 = std::abs(1.0 - z);
    std::vector<TransformPath> out = {
        {ArgumentKind::z, az},
        {ArgumentKind::one_minus_z, a1},
        {ArgumentKind::inv_z, ratio(1.0, az)},
        {ArgumentKind::z_minus_1_over_z, ratio(a1, az)},
        {ArgumentKind::inv_one_minus_z, ratio(1.0, a1)},
        {ArgumentKind::z_over_z_minus_1, ratio(az, a1)},
    };
    std::stable_sort(out.begin(), out.end(),
                     [](const TransformPath& x, const TransformPath& y) { return x.modulus < y.modulus; });
    return out;
}

TransformPath select_transform(Complex z, double rho) {
    const TransformPath best = ranked_arguments(z).front();
    if (best.modulus < rho) return best;
    return {ArgumentKind::none, best.modulus};
}

}  // namespace hyperrec
