#pragma once

#include <string>
#include <vector>

#include "hyperrec/types.hpp"

namespace hyperrec {

// sym, i5, i6, i7: one-term relations. b2: z -> 1-z. b5: the mixed 1/z and z
// relation. inverse: the classical two-term z -> 1/z relation.
enum class Relation { symmetry, i5, i6, i7, b2, b5, inverse };

std::string to_string(Relation r);
Relation relation_from_string(const std::string& s);

struct ConnectionTerm {
    Complex log_prefactor;  // the term is exp(log_prefactor) * 2F1(params; argument)
    ParameterSet params;
    Complex argument;

    Complex prefactor() const;
};

struct ConnectionExpansion {
    std::vector<ConnectionTerm> terms;
};

// Distance to an integer below which b2, b5 and inverse are refused.
constexpr double kDegenerateTol = 1e-8;

// Terms whose reciprocal gamma factor vanishes are dropped.
ConnectionExpansion apply_connection(Relation r, const ParameterSet& p, Complex z);

}  // namespace hyperrec
