#include "hyperrec/evaluate.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "hyperrec/continuation.hpp"
#include "hyperrec/errors.hpp"
#include "hyperrec/gamma.hpp"
#include "hyperrec/recursion.hpp"

namespace hyperrec {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Partial {
    Complex value;
    double abs_err;
};

Partial sum_route(const Route& route, size_t idx, const ParameterSet& p, Complex z, const EvalOptions& opt) {
    if (idx == route.size()) {
        const SeriesResult s = series_f21(p, z, opt.tol, opt.max_terms);
        const double mag = std::abs(s.value);
        return {s.value, mag * (s.est_error + kEps)};
    }
    const ConnectionExpansion e = apply_connection(route[idx], p, z);
    // On the cut, z/(z-1) lands on the cut again but approached from the
    // other side; that side is reached through conjugated parameters.
    const bool flips = (route[idx] == Relation::i5 || route[idx] == Relation::i6) && z.imag() == 0.0 && z.real() > 1.0;
    Partial out{0.0, 0.0};
    for (const ConnectionTerm& t : e.terms) {
        Partial sub;
        if (flips) {
            const ParameterSet q{std::conj(t.params.a), std::conj(t.params.b), std::conj(t.params.c)};
            sub = sum_route(route, idx + 1, q, t.argument, opt);
            sub.value = std::conj(sub.value);
        } else {
            sub = sum_route(route, idx + 1, t.params, t.argument, opt);
        }
        const Complex v = scaled_exp(t.log_prefactor, sub.value);
        out.value += v;
        out.abs_err += std::exp(t.log_prefactor.real()) * sub.abs_err + kEps * std::abs(v);
    }
    return out;
}

Evaluation light_region(const ParameterSet& p, Complex z, const EvalOptions& opt) {
    if (std::abs(z) <= 1.0) {
        const CRecursionResult r = eval_by_c_recursion(p, z, opt.n_seed);
        return {r.value, "c-recursion", r.est_error};
    }
    // Carry the point inside the unit disk first; the light region is
    // invariant under the six arguments, so the image is still light.
    const Relation rel = z.real() <= 0.5 ? Relation::i5 : Relation::inverse;
    const ConnectionExpansion e = apply_connection(rel, p, z);
    Complex total = 0.0;
    double err = 0.0;
    for (const ConnectionTerm& t : e.terms) {
        const CRecursionResult r = eval_by_c_recursion(t.params, t.argument, opt.n_seed);
        const Complex v = scaled_exp(t.log_prefactor, r.value);
        total += v;
        err += std::abs(v) * (r.est_error + kEps);
    }
    return {total, "c-recursion(" + to_string(rel) + ")", err / std::max(std::abs(total), 1e-300)};
}

// Results with a larger estimate keep the search going.
constexpr double kAcceptErr = 1e-13;
constexpr double kContinueErr = 1e-10;

void keep_better(std::optional<Evaluation>& best, const Evaluation& e) {
    if (!best || e.est_error < best->est_error) best = e;
}

bool good_enough(const std::optional<Evaluation>& best) { return best && best->est_error <= kAcceptErr; }

void try_kind(ArgumentKind kind, const ParameterSet& p, Complex z, const EvalOptions& opt,
              std::optional<Evaluation>& best, std::optional<Error>& last) {
    for (const Route& r : {primary_route(kind), alternate_route(kind)}) {
        try {
            keep_better(best, eval_via(r, p, z, opt));
            if (good_enough(best)) return;
        } catch (const DegenerateConnection& e) {
            last = e;
        } catch (const NoConvergence& e) {
            last = e;
        }
    }
}

}  // namespace

Route primary_route(ArgumentKind k) {
    switch (k) {
        case ArgumentKind::z: return {};
        case ArgumentKind::one_minus_z: return {Relation::b2};
        case ArgumentKind::inv_z: return {Relation::inverse};
        case ArgumentKind::z_minus_1_over_z: return {Relation::b2, Relation::i5};
        case ArgumentKind::inv_one_minus_z: return {Relation::i5, Relation::b2};
        case ArgumentKind::z_over_z_minus_1: return {Relation::i5};
        case ArgumentKind::none: break;
    }
    throw DomainError("no route for argument kind none");
}

Route alternate_route(ArgumentKind k) {
    switch (k) {
        case ArgumentKind::z: return {Relation::i7};
        case ArgumentKind::one_minus_z: return {Relation::i7, Relation::b2};
        case ArgumentKind::inv_z: return {Relation::i7, Relation::inverse};
        case ArgumentKind::z_minus_1_over_z: return {Relation::i5, Relation::inverse};
        case ArgumentKind::inv_one_minus_z: return {Relation::inverse, Relation::i5};
        case ArgumentKind::z_over_z_minus_1: return {Relation::i6};
        case ArgumentKind::none: break;
    }
    throw DomainError("no route for argument kind none");
}

std::string route_name(const Route& r) {
    if (r.empty()) return "series";
    std::string s = "series[";
    for (size_t i = 0; i < r.size(); ++i) {
        if (i) s += ",";
        s += to_string(r[i]);
    }
    return s + "]";
}

Evaluation eval_via(const Route& route, const ParameterSet& p, Complex z, const EvalOptions& opt) {
    const Partial r = sum_route(route, 0, p, canonical(z), opt);
    return {r.value, route_name(route), r.abs_err / std::max(std::abs(r.value), 1e-300)};
}

Evaluation evaluate_f21(const ParameterSet& p, Complex z, const EvalOptions& opt) {
    z = canonical(z);
    if (!is_finite(z) || !is_finite(p.a) || !is_finite(p.b) || !is_finite(p.c)) {
        throw DomainError("eval_f21: non-finite input");
    }
    if (z == 0.0) return {1.0, "series", 0.0};
    const bool terminates = is_nonpositive_integer(p.a) || is_nonpositive_integer(p.b);
    if (terminates) return eval_via({}, p, z, opt);
    if (is_nonpositive_integer(p.c)) throw PoleOfGamma("eval_f21: c is a non-positive integer");
    if (z == 1.0) {
        const Complex s = p.c - p.a - p.b;
        if (s.real() <= 0.0) throw SingularPoint("eval_f21: z = 1 with Re(c-a-b) <= 0");
        const Complex lg = log_gamma(p.c) + log_gamma(s);
        if (is_nonpositive_integer(p.c - p.a) || is_nonpositive_integer(p.c - p.b)) return {0.0, "gauss-sum", 0.0};
        return {std::exp(lg - log_gamma(p.c - p.a) - log_gamma(p.c - p.b)), "gauss-sum", 1e-15};
    }

    const std::vector<TransformPath> ranked = ranked_arguments(z);
    const bool light = ranked.front().modulus >= opt.rho;
    std::optional<Error> last;
    std::optional<Evaluation> best;
    for (const TransformPath& t : ranked) {
        if (t.modulus >= opt.rho) break;
        try_kind(t.argument_kind, p, z, opt, best, last);
        if (good_enough(best)) return *best;
    }
    if (light || best) {
        // Backward c-recursion avoids the cancellation of series with large
        // negative c.
        try {
            keep_better(best, light_region(p, z, opt));
        } catch (const DegenerateConnection& e) {
            last = e;
        } catch (const NoConvergence& e) {
            last = e;
        } catch (const StepSingular& e) {
            last = e;
        } catch (const DomainError& e) {
            last = e;
        }
        if (good_enough(best)) return *best;
    }
    // Slower but convergent candidates before giving up.
    for (const TransformPath& t : ranked) {
        if (t.modulus < opt.rho) continue;
        if (t.modulus >= 1.0) break;
        try_kind(t.argument_kind, p, z, opt, best, last);
        if (good_enough(best)) return *best;
    }
    // Every route loses digits: continue the differential equation instead.
    if (std::abs(z) > 0.5 && std::abs(1.0 - z) > 1e-8 && (!best || best->est_error > kContinueErr)) {
        try {
            const ContinuationResult c = continue_f21(p, z);
            keep_better(best, {c.value, "taylor-ode", c.est_error});
        } catch (const NoConvergence& e) {
            last = e;
        }
    }
    if (best) return *best;
    if (last && last->kind() == ErrorKind::degenerate_connection) throw DegenerateConnection(last->what());
    throw NoConvergence(last ? last->what() : "eval_f21: no admissible method");
}

}  // namespace hyperrec
