#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "hyperrec/coefficients.hpp"
#include "hyperrec/errors.hpp"
#include "hyperrec/evaluate.hpp"
#include "hyperrec/perron.hpp"
#include "hyperrec/recursion.hpp"
#include "hyperrec/reduction.hpp"
#include "hyperrec/solutions.hpp"

namespace hyperrec::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& s, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("cannot parse " + what + " '" + s + "'");
        }
    }
    return out;
}

Complex parse_complex(const std::string& s, const std::string& what) {
    const std::vector<double> v = parse_list(s, what);
    if (v.size() == 1) return {v[0], 0.0};
    if (v.size() != 2) throw UsageError(what + " must be 're,im'");
    return {v[0], v[1]};
}

std::string fmt(double x, int digits) {
    char buf[64];
    // Adding zero turns -0 into 0.
    std::snprintf(buf, sizeof buf, "%.*g", digits, x + 0.0);
    return buf;
}

Json jnum(double x) { return std::isfinite(x) ? Json(x + 0.0) : Json(nullptr); }

// Collects single results as key=value lines or one JSON object.
class Emitter {
public:
    Emitter(std::ostream& out, bool json, int digits) : out_(out), json_(json), digits_(digits) {}

    void put(const std::string& k, const std::string& v) {
        if (json_) obj_[k] = v;
        else out_ << k << "=" << v << "\n";
    }
    void put(const std::string& k, const char* v) { put(k, std::string(v)); }
    void put(const std::string& k, double v) {
        if (json_) obj_[k] = jnum(v);
        else out_ << k << "=" << fmt(v, digits_) << "\n";
    }
    void put(const std::string& k, long v) {
        if (json_) obj_[k] = v;
        else out_ << k << "=" << v << "\n";
    }
    void put(const std::string& k, int v) { put(k, static_cast<long>(v)); }
    void put(const std::string& k, bool v) {
        if (json_) obj_[k] = v;
        else out_ << k << "=" << (v ? "true" : "false") << "\n";
    }
    void put(const std::string& k, Complex v) {
        if (json_) {
            obj_[k + "_re"] = jnum(v.real());
            obj_[k + "_im"] = jnum(v.imag());
        } else {
            out_ << k << "=" << fmt(v.real(), digits_) << "," << fmt(v.imag(), digits_) << "\n";
        }
    }
    void finish() {
        if (json_) out_ << obj_.dump() << "\n";
    }

private:
    std::ostream& out_;
    bool json_;
    int digits_;
    Json obj_ = Json::object();
};

std::string label_or(const std::optional<SolutionLabel>& l, const char* none) {
    return l ? to_string(*l) : std::string(none);
}

void put_classification(Emitter& e, const RegionClassification& c) {
    e.put("relation", to_string(c.relation));
    e.put("zone", c.zone);
    e.put("minimal", label_or(c.minimal, c.minimal_unlabeled ? "unlabeled" : "none"));
    e.put("dominant", label_or(c.dominant, "none"));
    e.put("no_minimal_pair", c.no_minimal_pair);
    e.put("minimal_unlabeled", c.minimal_unlabeled);
}

struct Options {
    std::string a = "0", b = "0", c = "1", z;
    int form = 13;
    long n = 0;
    std::string direction = "forward";
    double rho = kDefaultRho;
    double tol = kDefaultSeriesTol;
    int max_terms = kDefaultMaxTerms;
    std::string method = "auto";
    std::string route;
    int n_seed = 0;
    double eps_b = kDefaultBoundaryBand;
    bool printed = false;
    bool closed_form = false;
    int samples = 64;
    std::string window;
    double step = 0.0;
    int workers = 1;
    std::string shift;
    long n_from = 0, n_to = 0;
    std::string seed0, seed1;
    std::string label = "F";
    bool json = false;
    int digits = 16;
};

ParameterSet params(const Options& o) {
    return {parse_complex(o.a, "--a"), parse_complex(o.b, "--b"), parse_complex(o.c, "--c")};
}

SolutionLabel parse_label(const std::string& s) {
    if (s == "F") return SolutionLabel::F;
    if (s == "G") return SolutionLabel::G;
    if (s == "H") return SolutionLabel::H;
    if (s == "J") return SolutionLabel::J;
    throw UsageError("--label must be one of F, G, H, J");
}

Direction parse_direction(const std::string& s) {
    try {
        return direction_from_string(s);
    } catch (const DomainError&) {
        throw UsageError("--direction must be forward|backward");
    }
}

BasicForm parse_form(int k) {
    try {
        return basic_form_from_int(k);
    } catch (const DomainError&) {
        throw UsageError("--form must be one of 2, 3, 5, 6, 13");
    }
}

int cmd_eval(const Options& o, std::ostream& out) {
    const ParameterSet p = params(o);
    const Complex z = parse_complex(o.z, "--z");
    EvalOptions opt;
    opt.rho = o.rho;
    opt.tol = o.tol;
    opt.max_terms = o.max_terms;
    opt.n_seed = o.n_seed;
    Evaluation ev;
    if (!o.route.empty()) {
        Route r;
        std::stringstream ss(o.route);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                r.push_back(relation_from_string(item));
            } catch (const DomainError&) {
                throw UsageError("unknown relation in --route: " + item);
            }
        }
        ev = eval_via(r, p, z, opt);
    } else if (o.method == "c-recursion") {
        const CRecursionResult cr = eval_by_c_recursion(p, z, o.n_seed);
        ev = {cr.value, "c-recursion", cr.est_error};
    } else if (o.method == "series") {
        ev = eval_via({}, p, z, opt);
    } else if (o.method == "auto") {
        ev = evaluate_f21(p, z, opt);
    } else {
        throw UsageError("--method must be auto|series|c-recursion");
    }
    Emitter e(out, o.json, o.digits);
    e.put("value", ev.value);
    e.put("method", ev.method);
    e.put("est_error", ev.est_error);
    e.finish();
    return 0;
}

int cmd_roots(const Options& o, std::ostream& out) {
    const CharacteristicData d = characteristic_roots(parse_form(o.form), parse_complex(o.z, "--z"));
    Emitter e(out, o.json, o.digits);
    e.put("t1", d.labeled_t1);
    e.put("t2", d.labeled_t2);
    e.put("alpha", d.alpha);
    e.put("beta", d.beta);
    e.put("abs_t1", std::abs(d.labeled_t1));
    e.put("abs_t2", std::abs(d.labeled_t2));
    e.put("larger_root", d.t1);
    e.put("smaller_root", d.t2);
    e.finish();
    return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
    const BasicForm f = parse_form(o.form);
    const Complex z = parse_complex(o.z, "--z");
    const Direction dir = parse_direction(o.direction);
    const RegionClassification c = o.printed ? classify_printed(f, z, dir, o.eps_b) : classify(f, z, dir, o.eps_b);
    Emitter e(out, o.json, o.digits);
    e.put("form", static_cast<int>(f));
    e.put("direction", to_string(dir));
    e.put("table", o.printed ? "printed" : "verified");
    put_classification(e, c);
    e.finish();
    return 0;
}

int cmd_coeffs(const Options& o, std::ostream& out) {
    const BasicForm f = parse_form(o.form);
    const ParameterSet p = params(o);
    const Complex z = parse_complex(o.z, "--z");
    Emitter e(out, o.json, o.digits);
    e.put("form", static_cast<int>(f));
    e.put("n", o.n);
    if (f == BasicForm::k3) {
        const K3Record r = k3_record(p, z, o.n);
        e.put("A", r.coef.A);
        e.put("B", r.coef.B);
        e.put("C", r.coef.C);
        e.put("U", r.U);
        e.put("V", r.V);
        e.put("c1", r.c1);
        e.put("c2", r.c2);
        e.put("c3", r.c3);
    } else {
        const RecurrenceCoefficients r = coefficients(f, p, z, o.n);
        e.put("A", r.A);
        e.put("B", r.B);
        e.put("C", r.C);
    }
    e.finish();
    return 0;
}

int cmd_recurse(const Options& o, std::ostream& out) {
    const BasicForm f = parse_form(o.form);
    const ParameterSet p = params(o);
    const Complex z = parse_complex(o.z, "--z");
    if (o.n_to == o.n_from) throw UsageError("--n-to must differ from --n-from");
    const long next = o.n_to > o.n_from ? o.n_from + 1 : o.n_from - 1;
    Complex s0, s1;
    if (!o.seed0.empty() || !o.seed1.empty()) {
        if (o.seed0.empty() || o.seed1.empty()) throw UsageError("give both --seed0 and --seed1");
        s0 = parse_complex(o.seed0, "--seed0");
        s1 = parse_complex(o.seed1, "--seed1");
    } else {
        const SolutionLabel l = parse_label(o.label);
        s0 = labeled_solution(l, f, p, z, o.n_from);
        s1 = labeled_solution(l, f, p, z, next);
    }
    const RecursionRun run = run_recursion(f, p, z, make_seeds(s0, s1), o.n_from, o.n_to);
    const long step = o.n_to > o.n_from ? 1 : -1;
    if (o.json) {
        out << "{\"form\":" << static_cast<int>(f) << ",\"direction\":\"" << to_string(run.direction)
            << "\",\"rows\":[";
        for (long n = o.n_from, k = 0;; n += step, ++k) {
            const ScaledComplex& v = run.at(n);
            const Complex val = v.value();
            Json row = {{"n", n}, {"value_re", jnum(val.real())}, {"value_im", jnum(val.imag())},
                        {"log_abs", jnum(v.log_abs())}};
            out << (k ? "," : "") << row.dump();
            if (n == o.n_to) break;
        }
        out << "]}\n";
        return 0;
    }
    out << "n,re,im,log_abs\n";
    for (long n = o.n_from;; n += step) {
        const ScaledComplex& v = run.at(n);
        const Complex val = v.value();
        out << n << "," << fmt(val.real(), o.digits) << "," << fmt(val.imag(), o.digits) << ","
            << fmt(v.log_abs(), o.digits) << "\n";
        if (n == o.n_to) break;
    }
    return 0;
}

int cmd_boundary(const Options& o, std::ostream& out) {
    const BasicForm f = parse_form(o.form);
    std::vector<BoundarySample> pts;
    if (o.closed_form) {
        if (f != BasicForm::k3 && f != BasicForm::k6) throw UsageError("--closed-form applies to forms 3 and 6");
        if (o.samples < 2) throw UsageError("--samples must be >= 2");
        const double pi = std::acos(-1.0);
        for (int j = 0; j < o.samples; ++j) {
            if (f == BasicForm::k3) {
                const double t = -pi / 3.0 + 2.0 * pi / 3.0 * j / (o.samples - 1);
                const Complex z = k3_printed_curve(t);
                pts.push_back({z, boundary_defect(f, z)});
            } else {
                const double t = -pi + 2.0 * pi * j / o.samples;
                for (bool outer : {false, true}) {
                    const Complex z = k6_closed_curve(t, outer);
                    pts.push_back({z, boundary_defect(f, z)});
                }
            }
        }
    } else {
        pts = trace_boundary(f, o.samples);
    }
    if (o.json) {
        out << "{\"form\":" << static_cast<int>(f) << ",\"rows\":[";
        for (size_t i = 0; i < pts.size(); ++i) {
            Json row = {{"re", pts[i].z.real()}, {"im", pts[i].z.imag()}, {"defect", pts[i].defect}};
            out << (i ? "," : "") << row.dump();
        }
        out << "]}\n";
        return 0;
    }
    out << "re,im,defect\n";
    for (const BoundarySample& s : pts) {
        out << fmt(s.z.real(), o.digits) << "," << fmt(s.z.imag(), o.digits) << "," << fmt(s.defect, 3) << "\n";
    }
    return 0;
}

int cmd_grid(const Options& o, std::ostream& out) {
    const BasicForm f = parse_form(o.form);
    const std::vector<double> w = parse_list(o.window, "--window");
    if (w.size() != 4) throw UsageError("--window must be re_min,re_max,im_min,im_max");
    if (!(o.step > 0.0)) throw UsageError("--step must be positive");
    const Direction dir = parse_direction(o.direction);
    const GridWindow win{w[0], w[1], w[2], w[3]};
    bool first = true;
    if (o.json) out << "{\"form\":" << static_cast<int>(f) << ",\"direction\":\"" << to_string(dir) << "\",\"rows\":[";
    else out << "re,im,minimal,dominant,relation,status\n";
    region_grid(
        f, win, o.step, dir,
        [&](const std::vector<GridNode>& row) {
            for (const GridNode& g : row) {
                const bool ok = g.status == NodeStatus::classified;
                const std::string mn =
                    ok ? label_or(g.cls.minimal, g.cls.minimal_unlabeled ? "unlabeled" : "none") : "-";
                const std::string dm = ok ? label_or(g.cls.dominant, "none") : "-";
                const std::string rel = ok || g.status == NodeStatus::boundary ? to_string(g.cls.relation) : "-";
                if (o.json) {
                    Json j = {{"re", g.z.real()}, {"im", g.z.imag()}, {"minimal", mn},
                              {"dominant", dm},   {"relation", rel},  {"status", to_string(g.status)}};
                    out << (first ? "" : ",") << j.dump();
                } else {
                    out << fmt(g.z.real(), o.digits) << "," << fmt(g.z.imag(), o.digits) << "," << mn << ","
                        << dm << "," << rel << "," << to_string(g.status) << "\n";
                }
                first = false;
            }
            out.flush();
        },
        o.workers, o.eps_b, o.printed);
    if (o.json) out << "]}\n";
    return 0;
}

int cmd_advise(const Options& o, std::ostream& out) {
    const std::vector<double> s = parse_list(o.shift, "--shift");
    if (s.size() != 3) throw UsageError("--shift must be e1,e2,e3");
    for (double x : s) {
        if (x != -1.0 && x != 0.0 && x != 1.0) throw UsageError("--shift components must be -1, 0 or 1");
    }
    const ShiftVector sv{static_cast<int>(s[0]), static_cast<int>(s[1]), static_cast<int>(s[2])};
    const DirectionAdvice a = advise_direction(sv, parse_complex(o.z, "--z"), o.eps_b);
    std::string steps;
    for (StepKind k : a.plan.steps) steps += (steps.empty() ? "" : ",") + to_string(k);
    Emitter e(out, o.json, o.digits);
    e.put("stable_direction", to_string(a.stable_direction));
    e.put("reason", a.reason);
    e.put("table_row", table_row(sv));
    e.put("basic_form", static_cast<int>(a.plan.basic_form));
    e.put("plan_direction", to_string(a.plan.direction));
    e.put("steps", steps.empty() ? std::string("none") : steps);
    e.put("z_basic", a.z_basic);
    put_classification(e, a.classification);
    e.finish();
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hypergeometric recursion toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_params = [&](CLI::App* s) {
        s->add_option("--a", o.a, "parameter a as re,im")->required();
        s->add_option("--b", o.b, "parameter b as re,im")->required();
        s->add_option("--c", o.c, "parameter c as re,im")->required();
    };
    auto add_common = [&](CLI::App* s) {
        s->add_flag("--json", o.json, "emit one JSON object");
        s->add_option("--digits", o.digits, "significant digits in text output")->check(CLI::Range(1, 17));
    };
    auto add_form = [&](CLI::App* s) { s->add_option("--form", o.form, "basic form 2|3|5|6|13")->required(); };

    CLI::App* ev = app.add_subcommand("eval", "evaluate 2F1(a,b;c;z)");
    add_params(ev);
    ev->add_option("--z", o.z, "argument as re,im")->required();
    ev->add_option("--rho", o.rho, "transform radius")->check(CLI::Range(0.0, 1.0));
    ev->add_option("--tol", o.tol, "series tolerance");
    ev->add_option("--max-terms", o.max_terms, "series term limit");
    ev->add_option("--method", o.method, "auto|series|c-recursion");
    ev->add_option("--route", o.route, "explicit relation chain, e.g. i5,b2");
    ev->add_option("--n-seed", o.n_seed, "c-recursion seed index, 0 = auto");
    add_common(ev);

    CLI::App* ro = app.add_subcommand("roots", "characteristic roots and limits");
    add_form(ro);
    ro->add_option("--z", o.z)->required();
    add_common(ro);

    CLI::App* cl = app.add_subcommand("classify", "minimal/dominant classification");
    add_form(cl);
    cl->add_option("--z", o.z)->required();
    cl->add_option("--direction", o.direction, "forward|backward");
    cl->add_option("--eps-b", o.eps_b, "boundary band");
    cl->add_flag("--printed", o.printed, "use the printed role table");
    add_common(cl);

    CLI::App* co = app.add_subcommand("coeffs", "recurrence coefficients at n");
    add_form(co);
    add_params(co);
    co->add_option("--z", o.z)->required();
    co->add_option("--n", o.n);
    add_common(co);

    CLI::App* re = app.add_subcommand("recurse", "run a recurrence");
    add_form(re);
    add_params(re);
    re->add_option("--z", o.z)->required();
    re->add_option("--n-from", o.n_from)->required();
    re->add_option("--n-to", o.n_to)->required();
    re->add_option("--seed0", o.seed0, "value at n-from");
    re->add_option("--seed1", o.seed1, "value at the next index");
    re->add_option("--label", o.label, "solution used for seeds when none given");
    add_common(re);

    CLI::App* bo = app.add_subcommand("boundary", "trace |t1|=|t2|");
    add_form(bo);
    bo->add_option("--samples", o.samples);
    bo->add_flag("--closed-form", o.closed_form, "sample the closed-form curve (forms 3, 6)");
    add_common(bo);

    CLI::App* gr = app.add_subcommand("region-grid", "classification on a grid");
    add_form(gr);
    gr->add_option("--window", o.window, "re_min,re_max,im_min,im_max")->required();
    gr->add_option("--step", o.step)->required();
    gr->add_option("--direction", o.direction);
    gr->add_option("--eps-b", o.eps_b);
    gr->add_option("--workers", o.workers)->check(CLI::Range(1, 256));
    gr->add_flag("--printed", o.printed);
    add_common(gr);

    CLI::App* ad = app.add_subcommand("advise", "stable recursion direction for a shift vector");
    ad->add_option("--shift", o.shift, "e1,e2,e3")->required();
    ad->add_option("--z", o.z)->required();
    ad->add_option("--eps-b", o.eps_b);
    add_common(ad);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (ev->parsed()) return cmd_eval(o, out);
        if (ro->parsed()) return cmd_roots(o, out);
        if (cl->parsed()) return cmd_classify(o, out);
        if (co->parsed()) return cmd_coeffs(o, out);
        if (re->parsed()) return cmd_recurse(o, out);
        if (bo->parsed()) return cmd_boundary(o, out);
        if (gr->parsed()) return cmd_grid(o, out);
        if (ad->parsed()) return cmd_advise(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace hyperrec::cli
