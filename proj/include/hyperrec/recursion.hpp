#pragma once

#include <string>
#include <vector>

#include "hyperrec/perron.hpp"
#include "hyperrec/reduction.hpp"
#include "hyperrec/types.hpp"

namespace hyperrec {

// mantissa * 2^exponent, mantissa components kept below 1 in magnitude.
struct ScaledComplex {
    Complex mantissa;
    long exponent = 0;

    static ScaledComplex from(Complex v);
    ScaledComplex normalized() const;
    Complex value() const;
    double log_abs() const;
};

struct RecursionRun {
    Direction direction = Direction::forward;
    long n_from = 0;
    long n_to = 0;
    std::vector<ScaledComplex> values;  // in stepping order, values[k] at n_from -/+ k

    long size() const { return static_cast<long>(values.size()); }
    const ScaledComplex& at(long n) const;
    Complex value(long n) const { return at(n).value(); }
    double log_abs(long n) const { return at(n).log_abs(); }
    // y_{n+1} / y_n without leaving the scaled representation.
    Complex ratio(long n) const;
};

// Seeds are y at n_from and at its neighbour towards n_to.
struct Seeds {
    ScaledComplex first;
    ScaledComplex second;
};

Seeds make_seeds(Complex first, Complex second);

RecursionRun run_recursion(BasicForm form, const ParameterSet& p, Complex z, const Seeds& seeds, long n_from,
                           long n_to);

enum class StableDirection { forward, backward, either };
std::string to_string(StableDirection d);

struct DirectionAdvice {
    StableDirection stable_direction = StableDirection::either;
    std::string reason;
    ReductionPlan plan;
    Complex z_basic;
    RegionClassification classification;
};

DirectionAdvice advise_direction(const ShiftVector& s, Complex z, double eps_b = kDefaultBoundaryBand);

struct CRecursionResult {
    Complex value;
    double est_error = 0.0;
    int n_seed = 0;
    int seed_terms = 0;  // series terms used by the top seed
};

// 2F1(a,b;c;z) from seeds 2F1(a,b;c+N;z), 2F1(a,b;c+N-1;z) run down the
// form-13 recurrence. n_seed <= 0 selects the smallest N >= 20 whose seed
// series needs at most 60 terms.
CRecursionResult eval_by_c_recursion(const ParameterSet& p, Complex z, int n_seed = 0);

constexpr int kAutoSeedMin = 20;
constexpr int kAutoSeedMaxTerms = 60;

// Jacobi polynomial P_n^{(alpha,beta)}(x) through the form-2 recurrence.
double jacobi_eval(int n, double alpha, double beta, double x);

}  // namespace hyperrec
