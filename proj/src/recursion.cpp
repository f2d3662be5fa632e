#include "hyperrec/recursion.hpp"

#include <algorithm>
#include <cmath>

#include "hyperrec/coefficients.hpp"
#include "hyperrec/errors.hpp"
#include "hyperrec/gamma.hpp"
#include "hyperrec/series.hpp"

namespace hyperrec {

ScaledComplex ScaledComplex::from(Complex v) { return ScaledComplex{v, 0}.normalized(); }

ScaledComplex ScaledComplex::normalized() const {
    const double m = std::max(std::abs(mantissa.real()), std::abs(mantissa.imag()));
    if (m == 0.0 || !std::isfinite(m)) return *this;
    int e = 0;
    std::frexp(m, &e);
    return {Complex(std::ldexp(mantissa.real(), -e), std::ldexp(mantissa.imag(), -e)), exponent + e};
}

Complex ScaledComplex::value() const {
    const int e = static_cast<int>(std::clamp<long>(exponent, -100000, 100000));
    return {std::ldexp(mantissa.real(), e), std::ldexp(mantissa.imag(), e)};
}

double ScaledComplex::log_abs() const { return std::log(std::abs(mantissa)) + exponent * std::log(2.0); }

namespace {

Complex shift(const ScaledComplex& x, long to) {
    const long d = x.exponent - to;
    if (d < -2000) return 0.0;
    return {std::ldexp(x.mantissa.real(), static_cast<int>(d)), std::ldexp(x.mantissa.imag(), static_cast<int>(d))};
}

long common_exponent(const ScaledComplex& x, const ScaledComplex& y) {
    if (x.mantissa == 0.0) return y.exponent;
    if (y.mantissa == 0.0) return x.exponent;
    return std::max(x.exponent, y.exponent);
}

// -(p * x + q * y) / r in scaled arithmetic.
ScaledComplex combine(Complex p, const ScaledComplex& x, Complex q, const ScaledComplex& y, Complex r) {
    const long e = common_exponent(x, y);
    const Complex t = -(p * shift(x, e) + q * shift(y, e)) / r;
    return ScaledComplex{t, e}.normalized();
}

}  // namespace

const ScaledComplex& RecursionRun::at(long n) const {
    const long k = direction == Direction::forward ? n - n_from : n_from - n;
    if (k < 0 || k >= size()) throw DomainError("RecursionRun: index outside the run");
    return values[static_cast<size_t>(k)];
}

Complex RecursionRun::ratio(long n) const {
    const ScaledComplex& y0 = at(n);
    const ScaledComplex& y1 = at(n + 1);
    const Complex m = y1.mantissa / y0.mantissa;
    return m * std::pow(2.0, static_cast<double>(y1.exponent - y0.exponent));
}

Seeds make_seeds(Complex first, Complex second) {
    return {ScaledComplex::from(first), ScaledComplex::from(second)};
}

RecursionRun run_recursion(BasicForm form, const ParameterSet& p, Complex z, const Seeds& seeds, long n_from,
                           long n_to) {
    if (n_to == n_from) throw DomainError("run_recursion: n_to must differ from n_from");
    RecursionRun run;
    run.direction = n_to > n_from ? Direction::forward : Direction::backward;
    run.n_from = n_from;
    run.n_to = n_to;
    const long steps = std::abs(n_to - n_from);
    run.values.reserve(static_cast<size_t>(steps + 1));
    run.values.push_back(seeds.first.normalized());
    run.values.push_back(seeds.second.normalized());
    z = canonical(z);
    if (run.direction == Direction::forward) {
        for (long n = n_from + 1; n < n_to; ++n) {
            const RecurrenceCoefficients r = coefficients(form, p, z, n);
            if (r.C == 0.0) throw StepSingular(n, "run_recursion: C_n vanishes at n=" + std::to_string(n));
            const ScaledComplex& ym = run.values[run.values.size() - 2];
            const ScaledComplex& y0 = run.values.back();
            run.values.push_back(combine(r.A, ym, r.B, y0, r.C));
        }
    } else {
        for (long n = n_from - 1; n > n_to; --n) {
            const RecurrenceCoefficients r = coefficients(form, p, z, n);
            if (r.A == 0.0) throw StepSingular(n, "run_recursion: A_n vanishes at n=" + std::to_string(n));
            const ScaledComplex& yp = run.values[run.values.size() - 2];
            const ScaledComplex& y0 = run.values.back();
            run.values.push_back(combine(r.C, yp, r.B, y0, r.A));
        }
    }
    for (const ScaledComplex& v : run.values) {
        if (!is_finite(v.mantissa)) throw StepSingular(n_to, "run_recursion: non-finite value");
    }
    return run;
}

std::string to_string(StableDirection d) {
    switch (d) {
        case StableDirection::forward: return "forward";
        case StableDirection::backward: return "backward";
        case StableDirection::either: return "either";
    }
    return "";
}

DirectionAdvice advise_direction(const ShiftVector& s, Complex z, double eps_b) {
    DirectionAdvice out;
    out.plan = reduce_case(s);
    out.z_basic = basic_argument(out.plan, z);
    out.classification = classify(out.plan.basic_form, out.z_basic, out.plan.direction, eps_b);
    const std::string where = "form " + to_string(out.plan.basic_form) + " " + to_string(out.plan.direction);
    if (out.classification.no_minimal_pair || out.classification.relation == RootRelation::boundary) {
        out.stable_direction = StableDirection::either;
        out.reason = where + ": no minimal solution, only rounding errors propagate";
    } else if (out.classification.minimal == SolutionLabel::F) {
        out.stable_direction = StableDirection::backward;
        out.reason = where + ", " + out.classification.zone + ": F minimal";
    } else {
        out.stable_direction = StableDirection::forward;
        out.reason = where + ", " + out.classification.zone + ": F dominant";
    }
    return out;
}

namespace {

Complex c_recursion_value(const ParameterSet& p, Complex z, int n_seed, int& terms) {
    const SeriesResult top = series_f21({p.a, p.b, p.c + static_cast<double>(n_seed)}, z);
    const SeriesResult below = series_f21({p.a, p.b, p.c + static_cast<double>(n_seed - 1)}, z);
    terms = top.terms_used;
    if (n_seed == 1) return below.value;
    const RecursionRun run = run_recursion(BasicForm::k13, p, z, make_seeds(top.value, below.value), n_seed, 0);
    return run.value(0);
}

}  // namespace

CRecursionResult eval_by_c_recursion(const ParameterSet& p, Complex z, int n_seed) {
    z = canonical(z);
    if (std::abs(z) > 1.0) throw DomainError("eval_by_c_recursion: seeds need |z| <= 1");
    CRecursionResult out;
    if (n_seed <= 0) {
        int n = kAutoSeedMin;
        for (; n < 5000; ++n) {
            try {
                const SeriesResult s = series_f21({p.a, p.b, p.c + static_cast<double>(n)}, z, kDefaultSeriesTol,
                                                  kAutoSeedMaxTerms);
                (void)s;
                break;
            } catch (const NoConvergence&) {
            }
        }
        if (n >= 5000) throw NoConvergence("eval_by_c_recursion: no seed index with a short series");
        n_seed = n;
    }
    out.n_seed = n_seed;
    out.value = c_recursion_value(p, z, n_seed, out.seed_terms);
    int unused = 0;
    const Complex check = c_recursion_value(p, z, n_seed + 5, unused);
    out.est_error = std::abs(out.value - check) / std::max(std::abs(out.value), 1e-300);
    return out;
}

double jacobi_eval(int n, double alpha, double beta, double x) {
    if (n < 0) throw DomainError("jacobi_eval: n must be non-negative");
    if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("jacobi_eval: alpha, beta must exceed -1");
    if (!(x > -1.0) || !std::isfinite(x)) throw DomainError("jacobi_eval: x must exceed -1");
    if (n == 0) return 1.0;
    const double z = (x - 1.0) / (x + 1.0);
    // P_n = binom(n+alpha, n) ((1+x)/2)^n 2F1(-n, -beta-n; alpha+1; z), the
    // (-1,-1,0) family, reduced to form 2 forward.
    const ParameterSet orig{0.0, -beta, alpha + 1.0};
    const ReductionPlan plan = reduce_case({-1, -1, 0});
    const FamilyMapping m0 = family_prefactor(plan, orig, z, 0);
    const FamilyMapping m1 = family_prefactor(plan, orig, z, 1);
    const double o1 = 1.0 + (beta + 1.0) * z / (alpha + 1.0);
    Complex tail_log = 0.0;
    Complex basic_n = 0.0;
    if (n == 1) {
        tail_log = std::log(std::abs((1.0 + x) / 2.0));
        basic_n = o1;
    } else {
        const Seeds seeds{ScaledComplex::from(std::exp(-m0.log_prefactor)),
                          ScaledComplex::from(o1 * std::exp(-m1.log_prefactor))};
        const RecursionRun run = run_recursion(plan.basic_form, m0.p_basic, m0.z_basic, seeds, 0, n);
        const FamilyMapping mn = family_prefactor(plan, orig, z, n);
        const ScaledComplex& yn = run.at(n);
        tail_log = mn.log_prefactor + static_cast<double>(yn.exponent) * std::log(2.0) +
                   static_cast<double>(n) * std::log((1.0 + x) / 2.0);
        basic_n = yn.mantissa;
    }
    const double lbinom = std::lgamma(n + alpha + 1.0) - std::lgamma(n + 1.0) - std::lgamma(alpha + 1.0);
    return scaled_exp(tail_log + lbinom, basic_n).real();
}

}  // namespace hyperrec
