#pragma once

#include <string>
#include <vector>

#include "hyperrec/types.hpp"

namespace hyperrec {

// The six arguments reachable by linear transformations, in the order
// z, 1-z, 1/z, (z-1)/z, 1/(1-z), z/(z-1), which is also the tie order.
enum class ArgumentKind { z, one_minus_z, inv_z, z_minus_1_over_z, inv_one_minus_z, z_over_z_minus_1, none };

constexpr double kDefaultRho = 0.75;

struct TransformPath {
    ArgumentKind argument_kind = ArgumentKind::none;
    double modulus = 0.0;
};

std::string to_string(ArgumentKind k);

Complex transformed_argument(ArgumentKind k, Complex z);

// All six candidates sorted by modulus (stable, so ties keep the order above).
std::vector<TransformPath> ranked_arguments(Complex z);

// Smallest-modulus candidate if it is below rho, otherwise kind none.
TransformPath select_transform(Complex z, double rho = kDefaultRho);

}  // namespace hyperrec
