#include "hyperrec/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyperrec/coefficients.hpp"
#include "hyperrec/errors.hpp"
#include "hyperrec/gamma.hpp"

namespace hyperrec {

namespace {

constexpr Complex kIPi(0.0, std::numbers::pi);

Complex lg(Complex x) { return log_gamma_checked(x); }

Complex sign_log(long n) { return (n % 2 == 0) ? Complex(0.0) : kIPi; }

Complex log_base(Complex x, const char* what) {
    x = canonical(x);
    if (x == 0.0) throw SingularPrefactor(std::string("g_solution: ") + what + " vanishes");
    return std::log(x);
}

// (z/(1-z))^n for integer n; the branch drops out.
Complex log_ratio_power(Complex z, long n) {
    if (n == 0) return 0.0;
    return static_cast<double>(n) * log_base(z / (1.0 - z), "z/(1-z)");
}

}  // namespace

Complex f_solution(BasicForm form, const ParameterSet& p, Complex z, long n, const EvalOptions& opt) {
    return eval_f21(shifted_parameters(form, p, n), z, opt);
}

Complex g_solution(BasicForm form, const ParameterSet& p, Complex z, long n, const EvalOptions& opt) {
    const Complex a = p.a, b = p.b, c = p.c;
    const double d = static_cast<double>(n);
    const Complex omz = canonical(1.0 - z);
    switch (form) {
        case BasicForm::k2: {
            const Complex lp = lg(a + d + 1.0 - c) + lg(b + d + 1.0 - c) - lg(a + b + 2.0 * d - c + 1.0);
            return scaled_exp(lp, eval_f21({a + d, b + d, a + b + 2.0 * d - c + 1.0}, omz, opt));
        }
        case BasicForm::k3: {
            const Complex lz = n == 0 ? Complex(0.0) : d * log_base(-z, "-z");
            const Complex lp = lz + lg(a + 1.0 - c + 2.0 * d) + lg(b + 1.0 - c + 2.0 * d) - lg(a + d) - lg(b + d) -
                               lg(2.0 - c + d) - lg(1.0 - c + d);
            return scaled_exp(lp, eval_f21({a - c + 1.0 + 2.0 * d, b - c + 1.0 + 2.0 * d, 2.0 - c + d}, z, opt));
        }
        case BasicForm::k5: {
            const Complex l1 = n == 0 ? Complex(0.0) : -d * log_base(omz, "1-z");
            const Complex lp = l1 + lg(a + d + 1.0 - c) - lg(a + d);
            return scaled_exp(lp, eval_f21({1.0 - a - d, 1.0 - b, 2.0 - c}, z, opt));
        }
        case BasicForm::k6: {
            const Complex lp = lg(a + 1.0 - c + 2.0 * d) + lg(b + 1.0 - c + d) - lg(a + b - c + 1.0 + 2.0 * d) -
                               lg(1.0 - c + d);
            return scaled_exp(lp, eval_f21({a + d, b, a + b - c + 1.0 + 2.0 * d}, omz, opt));
        }
        case BasicForm::k13: {
            if (n >= 0) {
                const Complex l1 = n == 0 ? Complex(0.0) : d * log_base(omz, "1-z");
                const Complex lp = sign_log(n) + l1 + lg(c + d) - lg(c - a - b + 1.0 + d);
                return scaled_exp(lp, eval_f21({c - a + d, c - b + d, c - a - b + 1.0 + d}, omz, opt));
            }
            return backward_companions_k15(p, z, -n, opt).g;
        }
    }
    return 0.0;
}

Complex h_solution_k6(const ParameterSet& p, Complex z, long n, const EvalOptions& opt) {
    const Complex f = f_solution(BasicForm::k6, p, z, n, opt);
    const Complex g = g_solution(BasicForm::k6, p, z, n, opt);
    const Complex h = g - f;
    if (std::abs(h) < 1e-10 * std::max(std::abs(f), std::abs(g))) {
        throw CatastrophicCancellation("h_solution_k6: g - f cancels to below 1e-10 of its terms");
    }
    return h;
}

BackwardCompanions backward_companions_k15(const ParameterSet& p, Complex z, long n, const EvalOptions& opt) {
    const Complex a = p.a, b = p.b, c = p.c;
    const double d = static_cast<double>(n);
    const Complex omz = canonical(1.0 - z);
    BackwardCompanions out;

    const Complex lh = lg(d + 1.0 - c + a) + lg(d + 1.0 - c + b) - lg(d + 1.0 - c) - lg(d + 1.0 - c + a + b);
    out.h = scaled_exp(lh, eval_f21({a, b, d + 1.0 - c + a + b}, omz, opt));

    const Complex lj = sign_log(n) + lg(a - c + d + 1.0) + lg(b - c + d + 1.0) - lg(2.0 - c + d) - lg(1.0 - c + d) +
                       log_ratio_power(z, n);
    out.j = scaled_exp(lj, eval_f21({1.0 - a, 1.0 - b, 2.0 - c + d}, z, opt));

    const Complex lzc = (1.0 - c) * log_base(z, "z");
    const Complex lgg = sign_log(n) + lzc + lg(c - d) - lg(c - a - b + 1.0 - d) + log_ratio_power(z, n);
    out.g = scaled_exp(lgg, eval_f21({1.0 - b, 1.0 - a, c - a - b + 1.0 - d}, omz, opt));
    return out;
}

bool label_admissible(SolutionLabel label, BasicForm form, Direction dir) {
    switch (label) {
        case SolutionLabel::F:
        case SolutionLabel::G: return true;
        case SolutionLabel::H:
            return form == BasicForm::k6 || (form == BasicForm::k13 && dir == Direction::backward);
        case SolutionLabel::J: return form == BasicForm::k13 && dir == Direction::backward;
    }
    return false;
}

Complex labeled_solution(SolutionLabel label, BasicForm form, const ParameterSet& p, Complex z, long m,
                         const EvalOptions& opt) {
    switch (label) {
        case SolutionLabel::F: return f_solution(form, p, z, m, opt);
        case SolutionLabel::G: return g_solution(form, p, z, m, opt);
        case SolutionLabel::H:
            if (form == BasicForm::k6) return h_solution_k6(p, z, m, opt);
            if (form == BasicForm::k13) return backward_companions_k15(p, z, -m, opt).h;
            break;
        case SolutionLabel::J:
            if (form == BasicForm::k13) return backward_companions_k15(p, z, -m, opt).j;
            break;
    }
    throw DomainError("labeled_solution: label " + to_string(label) + " not defined for form " + to_string(form));
}

}  // namespace hyperrec
