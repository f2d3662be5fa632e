#include "hyperrec/perron.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>

#include "hyperrec/coefficients.hpp"
#include "hyperrec/errors.hpp"

namespace hyperrec {

namespace {

constexpr double kPi = std::numbers::pi;
using L = SolutionLabel;

std::pair<Complex, Complex> labeled_roots(BasicForm form, Complex z) {
    if (z == 1.0) throw SingularPoint("characteristic_roots: z = 1");
    if (form == BasicForm::k13 && z == 0.0) throw SingularPoint("characteristic_roots: z = 0 for form 13");
    const Complex omz = 1.0 - z;
    switch (form) {
        case BasicForm::k2: {
            const Complex s = std::sqrt(z);
            return {1.0 / ((1.0 - s) * (1.0 - s)), 1.0 / ((1.0 + s) * (1.0 + s))};
        }
        case BasicForm::k3: {
            const Complex w = std::sqrt(8.0 * z + 1.0);
            const Complex p = 3.0 + w, m = 3.0 - w;
            return {32.0 * (1.0 + w) / (p * p * p), 32.0 * (1.0 - w) / (m * m * m)};
        }
        case BasicForm::k5: return {1.0, 1.0 / omz};
        case BasicForm::k6: return {1.0, -4.0 * z / (omz * omz)};
        case BasicForm::k13: return {1.0, (z - 1.0) / z};
    }
    return {};
}

struct Roles {
    std::optional<L> minimal;
    std::optional<L> dominant;
};

const Roles kUnlabeledF{std::nullopt, L::F};
const Roles kUnlabeledG{std::nullopt, L::G};

std::string zone_of(BasicForm form, Complex z, const std::pair<Complex, Complex>& lr) {
    const double m1 = std::abs(lr.first), m2 = std::abs(lr.second);
    switch (form) {
        case BasicForm::k2: return "off-ray";
        case BasicForm::k3: return m1 > m2 ? "inside-lobe" : "outside-lobe";
        case BasicForm::k5: return m2 > m1 ? "inside-disk" : "outside-disk";
        case BasicForm::k6:
            if (m2 > m1) return "annulus";
            return std::abs(z) < 1.0 ? "inner" : "outer";
        case BasicForm::k13: return m2 > m1 ? "re<1/2" : "re>1/2";
    }
    return "";
}

Roles verified_roles(BasicForm form, Direction dir, const std::string& zone) {
    if (dir == Direction::forward) {
        switch (form) {
            case BasicForm::k2: return {L::G, L::F};
            case BasicForm::k3: return zone == "inside-lobe" ? Roles{L::G, L::F} : kUnlabeledF;
            case BasicForm::k5: return kUnlabeledF;
            case BasicForm::k6:
                if (zone == "inner") return {L::H, L::G};
                if (zone == "annulus") return {L::G, L::H};
                return kUnlabeledG;
            case BasicForm::k13: return zone == "re<1/2" ? Roles{L::F, L::G} : Roles{L::G, L::F};
        }
    }
    switch (form) {
        case BasicForm::k3: return zone == "inside-lobe" ? Roles{L::F, L::G} : kUnlabeledF;
        case BasicForm::k6: return zone == "inner" ? Roles{L::F, L::G} : kUnlabeledF;
        case BasicForm::k13: return zone == "re<1/2" ? Roles{L::J, L::F} : Roles{L::H, L::F};
        default: break;
    }
    throw DomainError("classify: form " + to_string(form) + " has no backward family");
}

Roles printed_roles(BasicForm form, Direction dir, const std::string& zone) {
    const bool first = zone == "inside-lobe" || zone == "inside-disk" || zone == "inner" || zone == "re<1/2";
    if (dir == Direction::forward) {
        switch (form) {
            case BasicForm::k2: return {L::G, L::F};
            case BasicForm::k3: return first ? Roles{L::F, L::G} : Roles{L::G, L::F};
            case BasicForm::k5: return first ? Roles{L::G, L::F} : Roles{L::F, L::G};
            case BasicForm::k6: return zone == "annulus" ? Roles{L::G, L::H} : Roles{L::H, L::G};
            case BasicForm::k13: return first ? Roles{L::F, L::G} : Roles{L::G, L::F};
        }
    }
    switch (form) {
        case BasicForm::k3: return first ? Roles{L::G, L::F} : Roles{L::F, L::G};
        case BasicForm::k6: return zone == "annulus" ? Roles{L::F, L::G} : Roles{L::G, L::F};
        case BasicForm::k13: return first ? Roles{L::J, L::F} : Roles{L::H, L::F};
        default: break;
    }
    throw DomainError("classify: form " + to_string(form) + " has no backward family");
}

bool on_degenerate_ray(BasicForm form, Complex z) {
    if (z.imag() != 0.0) return false;
    if (form == BasicForm::k2) return z.real() <= 0.0;
    if (form == BasicForm::k3) return z.real() <= -0.125;
    return false;
}

RegionClassification classify_with(BasicForm form, Complex z, Direction dir, double eps_b,
                                   Roles (*table)(BasicForm, Direction, const std::string&)) {
    z = canonical(z);
    if ((form == BasicForm::k2 || form == BasicForm::k5) && dir == Direction::backward) {
        throw DomainError("classify: form " + to_string(form) + " has no backward family");
    }
    const auto lr = labeled_roots(form, z);
    RegionClassification out;
    if (on_degenerate_ray(form, z)) {
        out.relation = RootRelation::boundary;
        out.no_minimal_pair = true;
        out.zone = "ray";
        return out;
    }
    if (relative_defect(form, z) <= eps_b) {
        throw BoundaryIndeterminate("classify: z within the boundary band");
    }
    out.relation = std::abs(lr.first) > std::abs(lr.second) ? RootRelation::t1_dominates
                                                              : RootRelation::t2_dominates;
    out.zone = zone_of(form, z, lr);
    const Roles r = table(form, dir, out.zone);
    out.minimal = r.minimal;
    out.dominant = r.dominant;
    out.minimal_unlabeled = !r.minimal.has_value();
    return out;
}

// Sign of log|t1| - log|t2| for the labeled roots; positive inside the
// region next to the origin (forms 3 and 6).
double separation(BasicForm form, Complex z) {
    const auto lr = labeled_roots(form, z);
    return std::log(std::abs(lr.first)) - std::log(std::abs(lr.second));
}

Complex bisect_ray(BasicForm form, double phi, double lo, double hi) {
    const Complex dir = std::polar(1.0, phi);
    const double s_lo = separation(form, lo * dir);
    for (int i = 0; i < 200 && hi - lo > 4e-16 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double s = separation(form, mid * dir);
        if ((s > 0.0) == (s_lo > 0.0)) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi) * dir;
}

// First sign change of the separation along a ray leaving the origin.
Complex first_crossing(BasicForm form, double phi) {
    const Complex dir = std::polar(1.0, phi);
    double lo = 0.0;
    double r = 0.01;
    for (int i = 0; i < 60; ++i, r *= 2.0) {
        if (separation(form, r * dir) < 0.0) return bisect_ray(form, phi, lo, r);
        lo = r;
    }
    throw TraceFailure("trace_boundary: no sign change along ray");
}

BoundarySample sample(BasicForm form, Complex z) { return {z, boundary_defect(form, z)}; }

void verify(const std::vector<BoundarySample>& pts) {
    for (const BoundarySample& s : pts) {
        if (!(s.defect <= kBoundaryTol)) throw TraceFailure("trace_boundary: defect above tolerance");
    }
}

// Angles -pi < phi <= pi, always containing 0 and pi.
std::vector<double> ray_angles(int samples) {
    std::vector<double> out;
    for (int j = 1; j <= samples; ++j) out.push_back(-kPi + 2.0 * kPi * j / samples);
    out.back() = kPi;
    if (samples % 2 == 1) {
        out.push_back(0.0);
        std::sort(out.begin(), out.end());
    } else {
        out[samples / 2 - 1] = 0.0;
    }
    return out;
}

}  // namespace

std::string to_string(RootRelation r) {
    switch (r) {
        case RootRelation::t1_dominates: return "t1_dominates";
        case RootRelation::t2_dominates: return "t2_dominates";
        case RootRelation::boundary: return "boundary";
    }
    return "";
}

std::string to_string(NodeStatus s) {
    switch (s) {
        case NodeStatus::classified: return "ok";
        case NodeStatus::boundary: return "boundary";
        case NodeStatus::band: return "band";
        case NodeStatus::singular: return "singular";
    }
    return "";
}

CharacteristicData characteristic_roots(BasicForm form, Complex z) {
    z = canonical(z);
    const auto lr = labeled_roots(form, z);
    const CoefficientLimits lim = coefficient_limits(form, z);
    CharacteristicData d;
    d.labeled_t1 = lr.first;
    d.labeled_t2 = lr.second;
    const bool swap = std::abs(lr.second) > std::abs(lr.first);
    d.t1 = swap ? lr.second : lr.first;
    d.t2 = swap ? lr.first : lr.second;
    d.alpha = lim.alpha;
    d.beta = lim.beta;
    return d;
}

double boundary_defect(BasicForm form, Complex z) {
    const auto lr = labeled_roots(form, canonical(z));
    return std::abs(std::abs(lr.first) - std::abs(lr.second));
}

double relative_defect(BasicForm form, Complex z) {
    const auto lr = labeled_roots(form, canonical(z));
    const double m1 = std::abs(lr.first), m2 = std::abs(lr.second);
    return std::abs(m1 - m2) / std::max(m1, m2);
}

RegionClassification classify(BasicForm form, Complex z, Direction dir, double eps_b) {
    return classify_with(form, z, dir, eps_b, verified_roles);
}

RegionClassification classify_printed(BasicForm form, Complex z, Direction dir, double eps_b) {
    return classify_with(form, z, dir, eps_b, printed_roles);
}

Complex k3_printed_curve(double theta) {
    const double r = -9.0 + 6.0 * std::sqrt(3.0) * std::cos(0.5 * theta);
    return (std::polar(std::max(r, 0.0), theta) - 1.0) / 8.0;
}

Complex k6_closed_curve(double theta, bool outer) {
    const double c = std::cos(theta);
    const double root = std::sqrt(std::max(0.0, c * c + 4.0 * c + 3.0));
    const double r = 2.0 + c + (outer ? root : -root);
    return std::polar(r, theta);
}

std::vector<BoundarySample> trace_boundary(BasicForm form, int samples) {
    if (samples < 2) throw DomainError("trace_boundary: samples must be >= 2");
    std::vector<BoundarySample> out;
    switch (form) {
        case BasicForm::k2:
            for (int j = 0; j < samples; ++j) out.push_back(sample(form, Complex(-4.0 * j / (samples - 1), 0.0)));
            break;
        case BasicForm::k5:
            for (int j = 0; j < samples; ++j) {
                const double t = -kPi + 2.0 * kPi * j / samples;
                out.push_back(sample(form, 1.0 + std::polar(1.0, t)));
            }
            break;
        case BasicForm::k13:
            for (int j = 0; j < samples; ++j) out.push_back(sample(form, Complex(0.5, -2.0 + 4.0 * j / (samples - 1))));
            break;
        case BasicForm::k3:
            for (double phi : ray_angles(samples)) {
                // Branch point where the two roots merge.
                if (phi == kPi) out.push_back(sample(form, Complex(-0.125, 0.0)));
                else out.push_back(sample(form, first_crossing(form, phi)));
            }
            break;
        case BasicForm::k6: {
            std::vector<BoundarySample> outer;
            for (double phi : ray_angles(samples)) {
                if (phi == kPi) {
                    out.push_back(sample(form, Complex(-1.0, 0.0)));
                    continue;
                }
                // 4r - |1 - r e^{i phi}|^2 peaks at r = 2 + cos phi, inside the annulus.
                const double peak = 2.0 + std::cos(phi);
                if (separation(form, peak * std::polar(1.0, phi)) >= 0.0) {
                    throw TraceFailure("trace_boundary: annulus not bracketed");
                }
                out.push_back(sample(form, bisect_ray(form, phi, 0.0, peak)));
                double hi = 2.0 * peak;
                while (separation(form, hi * std::polar(1.0, phi)) < 0.0) hi *= 2.0;
                outer.push_back(sample(form, bisect_ray(form, phi, peak, hi)));
            }
            out.insert(out.end(), outer.begin(), outer.end());
            break;
        }
    }
    verify(out);
    return out;
}

namespace {

GridNode grid_node(BasicForm form, Complex z, Direction dir, double eps_b, bool printed) {
    GridNode node;
    node.z = z;
    try {
        node.cls = printed ? classify_printed(form, z, dir, eps_b) : classify(form, z, dir, eps_b);
        node.status = node.cls.no_minimal_pair ? NodeStatus::boundary : NodeStatus::classified;
    } catch (const BoundaryIndeterminate&) {
        node.status = NodeStatus::band;
        node.cls = {};
    } catch (const SingularPoint&) {
        node.status = NodeStatus::singular;
        node.cls = {};
    }
    return node;
}

int axis_count(double lo, double hi, double step) {
    return static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

}  // namespace

void region_grid(BasicForm form, const GridWindow& w, double step, Direction dir,
                 const std::function<void(const std::vector<GridNode>&)>& on_row, int workers, double eps_b,
                 bool printed) {
    if (!(step > 0.0)) throw DomainError("region_grid: step must be positive");
    if (!(w.re_max >= w.re_min) || !(w.im_max >= w.im_min) || !std::isfinite(w.re_min) ||
        !std::isfinite(w.re_max) || !std::isfinite(w.im_min) || !std::isfinite(w.im_max)) {
        throw DomainError("region_grid: invalid window");
    }
    if ((form == BasicForm::k2 || form == BasicForm::k5) && dir == Direction::backward) {
        throw DomainError("region_grid: form " + to_string(form) + " has no backward family");
    }
    const int nre = axis_count(w.re_min, w.re_max, step);
    const int nim = axis_count(w.im_min, w.im_max, step);
    auto row = [&](int i) {
        std::vector<GridNode> out;
        out.reserve(nre);
        const double im = w.im_min + i * step;
        for (int j = 0; j < nre; ++j) {
            out.push_back(grid_node(form, Complex(w.re_min + j * step, im), dir, eps_b, printed));
        }
        return out;
    };
    workers = std::max(1, workers);
    for (int i0 = 0; i0 < nim; i0 += workers) {
        const int i1 = std::min(nim, i0 + workers);
        std::vector<std::future<std::vector<GridNode>>> jobs;
        for (int i = i0; i < i1; ++i) {
            jobs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, row, i));
        }
        for (auto& j : jobs) on_row(j.get());
    }
}

std::vector<GridNode> region_grid(BasicForm form, const GridWindow& w, double step, Direction dir, double eps_b) {
    std::vector<GridNode> all;
    region_grid(
        form, w, step, dir, [&](const std::vector<GridNode>& r) { all.insert(all.end(), r.begin(), r.end()); }, 1,
        eps_b);
    return all;
}

}  // namespace hyperrec
