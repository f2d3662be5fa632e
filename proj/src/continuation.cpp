#include "hyperrec/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hyperrec/errors.hpp"
#include "hyperrec/series.hpp"

namespace hyperrec {

namespace {

constexpr double kRadius = 0.5;
constexpr int kMaxTaylorTerms = 4000;
constexpr int kMaxSteps = 20000;

struct State {
    Complex w;
    Complex dw;
};

// One Taylor step of z(1-z) w'' + (c - (a+b+1) z) w' - ab w = 0 from z0 by h.
State taylor_step(const ParameterSet& p, Complex z0, const State& s, Complex h) {
    const Complex p0 = z0 * (1.0 - z0), p1 = 1.0 - 2.0 * z0;
    const Complex q0 = p.c - (p.a + p.b + 1.0) * z0, q1 = -(p.a + p.b + 1.0);
    const Complex ab = p.a * p.b;
    Complex ck = s.w, ck1 = s.dw;  // c_k, c_{k+1}
    Complex hk = 1.0;              // h^k
    Complex w = ck, dw = 0.0;
    double prev = std::abs(ck);
    int quiet = 0;
    for (int k = 0; k < kMaxTaylorTerms; ++k) {
        const double kk = static_cast<double>(k);
        // Add the k+1 term before forming c_{k+2}.
        const Complex hk1 = hk * h;
        const Complex tw = ck1 * hk1;
        w += tw;
        dw += (kk + 1.0) * ck1 * hk;
        const Complex ck2 = -((p1 * kk * (kk + 1.0) + q0 * (kk + 1.0)) * ck1 + (-kk * (kk - 1.0) + q1 * kk - ab) * ck) /
                            (p0 * (kk + 2.0) * (kk + 1.0));
        (void)p1;
        ck = ck1;
        ck1 = ck2;
        hk = hk1;
        const double mag = std::abs(tw);
        const double scale = std::max(std::abs(w), std::abs(dw * h));
        if (k > 4 && mag < prev && mag <= 1e-17 * scale) {
            if (++quiet == 3) return {w, dw};
        } else {
            quiet = 0;
        }
        prev = mag;
    }
    throw NoConvergence("continue_f21: Taylor step did not converge");
}

// Waypoints from the start circle to z, detouring around z = 1.
std::vector<Complex> path_to(Complex z) {
    std::vector<Complex> pts;
    // Exactly on the cut the lower side is taken, as the series routes do.
    const double s = z.imag() > 0.0 ? 1.0 : -1.0;
    // Distance from 1 to the ray through z, if 1 lies ahead on it.
    const Complex u = z / std::abs(z);
    const double along = (std::conj(u) * Complex(1.0)).real();
    const double off = std::abs((std::conj(u) * Complex(1.0)).imag());
    if (along > 0.0 && along < std::abs(z) && off < 0.25) {
        const Complex detour(1.0, 0.5 * s);
        pts.push_back(kRadius * detour / std::abs(detour));
        pts.push_back(detour);
    } else {
        pts.push_back(kRadius * u);
    }
    pts.push_back(z);
    return pts;
}

Complex run(const ParameterSet& p, Complex z, double frac, int& steps) {
    const std::vector<Complex> pts = path_to(z);
    const Complex z0 = pts.front();
    const SeriesResult f = series_f21(p, z0);
    const SeriesResult df = series_f21({p.a + 1.0, p.b + 1.0, p.c + 1.0}, z0);
    State s{f.value, p.a * p.b / p.c * df.value};
    Complex at = z0;
    for (size_t i = 1; i < pts.size(); ++i) {
        const Complex target = pts[i];
        while (at != target) {
            const double r = frac * std::min(std::abs(at), std::abs(1.0 - at));
            Complex h = target - at;
            if (std::abs(h) > r) h *= r / std::abs(h);
            s = taylor_step(p, at, s, h);
            at = std::abs(target - (at + h)) < 1e-15 * std::abs(target) ? target : at + h;
            if (++steps > kMaxSteps) throw NoConvergence("continue_f21: too many steps");
        }
    }
    return s.w;
}

}  // namespace

ContinuationResult continue_f21(const ParameterSet& p, Complex z) {
    z = canonical(z);
    if (z == 1.0 || z == 0.0 || std::abs(1.0 - z) < 1e-8) {
        throw DomainError("continue_f21: z must avoid 0 and 1");
    }
    if (std::abs(z) <= kRadius) throw DomainError("continue_f21: |z| <= 1/2 is served by the series");
    ContinuationResult out;
    const Complex coarse = run(p, z, 0.5, out.steps);
    out.value = run(p, z, 0.3, out.steps);
    out.est_error = std::abs(out.value - coarse) / std::max(std::abs(out.value), 1e-300) +
                    std::numeric_limits<double>::epsilon();
    return out;
}

}  // namespace hyperrec
