#pragma once

#include <string>
#include <vector>

#include "hyperrec/connection.hpp"
#include "hyperrec/series.hpp"
#include "hyperrec/transform.hpp"
#include "hyperrec/types.hpp"

namespace hyperrec {

struct EvalOptions {
    double rho = kDefaultRho;
    double tol = kDefaultSeriesTol;
    int max_terms = kDefaultMaxTerms;
    int n_seed = 0;  // c-recursion seed index, 0 picks it automatically
};

struct Evaluation {
    Complex value;
    std::string method;
    double est_error = 0.0;  // relative
};

using Route = std::vector<Relation>;

// Relation chains that carry 2F1(z) to a given argument, each ending in series.
Route primary_route(ArgumentKind k);
Route alternate_route(ArgumentKind k);

// Applies the chain, then sums every resulting term by its power series.
Evaluation eval_via(const Route& route, const ParameterSet& p, Complex z, const EvalOptions& opt = {});

Evaluation evaluate_f21(const ParameterSet& p, Complex z, const EvalOptions& opt = {});

inline Complex eval_f21(const ParameterSet& p, Complex z, const EvalOptions& opt = {}) {
    return evaluate_f21(p, z, opt).value;
}

std::string route_name(const Route& r);

}  // namespace hyperrec
