#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "hyperrec/continuation.hpp"
#include "hyperrec/errors.hpp"
#include "hyperrec/evaluate.hpp"
#include "hyperrec/series.hpp"
#include "hyperrec/transform.hpp"

using namespace hyperrec;

namespace {

const Complex kGolden(0.883319375142724975, 0.509984679019064290);

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST(SelectTransform, Examples) {
    const TransformPath a = select_transform(0.1, 0.75);
    EXPECT_EQ(a.argument_kind, ArgumentKind::z);
    EXPECT_DOUBLE_EQ(a.modulus, 0.1);
    const TransformPath b = select_transform(Complex(0.5, std::sqrt(3.0) / 2.0), 0.75);
    EXPECT_EQ(b.argument_kind, ArgumentKind::none);
    const TransformPath c = select_transform(-5.0, 0.75);
    EXPECT_EQ(c.argument_kind, ArgumentKind::inv_one_minus_z);
    EXPECT_NEAR(c.modulus, 1.0 / 6.0, 1e-16);
}

TEST(SelectTransform, MatchesEnumeration) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int i = 0; i < 1000; ++i) {
        const Complex z(u(rng), u(rng));
        const Complex args[6] = {z, 1.0 - z, 1.0 / z, (z - 1.0) / z, 1.0 / (1.0 - z), z / (z - 1.0)};
        double best = 1e300;
        for (const Complex& w : args) best = std::min(best, std::abs(w));
        const TransformPath t = select_transform(z, 0.75);
        if (best < 0.75) {
            ASSERT_NE(t.argument_kind, ArgumentKind::none);
            EXPECT_NEAR(t.modulus, best, 1e-14 * std::max(1.0, best));
            EXPECT_NEAR(std::abs(transformed_argument(t.argument_kind, z)), best, 1e-14);
        } else {
            EXPECT_EQ(t.argument_kind, ArgumentKind::none);
        }
    }
}

TEST(SelectTransform, TieOrderFollowsListing) {
    // z = 1/2: |z| = |1-z| = 1/2.
    EXPECT_EQ(select_transform(0.5).argument_kind, ArgumentKind::z);
    // z = 2: |1/z| = |z/(z-1)|... 1/z = 0.5 and (z-1)/z = 0.5 both; 1/z comes first.
    EXPECT_EQ(select_transform(2.0).argument_kind, ArgumentKind::inv_z);
}

TEST(EvalF21, GoldenValue) {
    const ParameterSet p{2.0 / 3.0, 1.0, 4.0 / 3.0};
    const Evaluation e = evaluate_f21(p, Complex(0.5, std::sqrt(3.0) / 2.0));
    EXPECT_EQ(e.method, "c-recursion");
    EXPECT_LT(rel(e.value, kGolden), 1e-12);
}

TEST(EvalF21, TrivialAndLogarithm) {
    EXPECT_EQ(eval_f21({{0.3, 1.0}, 2.0, 3.5}, 0.0), Complex(1.0));
    EXPECT_NEAR(eval_f21({1.0, 1.0, 2.0}, 0.5).real(), -std::log(0.5) / 0.5, 2e-15);
}

TEST(EvalF21, FrozenValuesAcrossRoutes) {
    const ParameterSet p{{0.3, 0.1}, {0.7, -0.2}, {1.1, 0.05}};
    struct Case {
        Complex z, want;
        const char* method;
    };
    // mpmath hyp2f1 at 30 digits.
    const Case cases[] = {
        {{0.6, 0.2}, {1.177318308251788807, 0.096498168213186505646}, "series[b2]"},
        {{0.9, 0.1}, {1.4503218122377546702, 0.13753578117944206178}, "series[b2]"},
        {{-5.0, 0.0}, {0.65577526890563796671, -0.015438721792136738682}, "series[i5,b2]"},
        {{3.0, 0.5}, {0.69321530046358582506, 0.64848956487573699651}, "series[inverse]"},
        {{2.0, 1.0}, {0.85040111842777333287, 0.54052085960131692668}, "series[inverse]"},
        {{-0.5, 0.9}, {0.87892209732923984404, 0.10819006422578956839}, nullptr},
        {{5.0, -3.0}, {0.64388663512450558977, -0.45896132029843205629}, "series[inverse]"},
        {{0.5, 2.0}, {0.82048706096350219907, 0.27002931841628002152}, nullptr},
        {{1.2, 0.9}, {0.99389391282548625837, 0.41273460748693496315}, nullptr},
        {{-1.5, -0.2}, {0.81527295323399542411, -0.020117825147047840697}, "series[i5,b2]"},
        {{0.45, 0.8}, {1.000186201511961614, 0.21154943177367330178}, "c-recursion"},
        {{0.55, -0.85}, {1.0012927642068713779, -0.22116089676772182772}, "c-recursion(inverse)"},
        {{0.52, 0.82}, {1.0040680118071237063, 0.22865150655029829797}, "c-recursion"},
        {{0.48988381113962354, 0.9625039488663503}, {0.971708660117756957, 0.235989272648440686}, "c-recursion(i5)"},
        {{0.55000000000000015543, 0.95262794416288254506}, {0.97849949374937741871, 0.24731897424435540745},
         "c-recursion(inverse)"},
        {{0.50802765599664667651, -0.99815224326880780392}, {0.97176719464329443633, -0.22542204977132392523},
         "c-recursion(inverse)"},
    };
    for (const Case& c : cases) {
        const Evaluation e = evaluate_f21(p, c.z);
        EXPECT_LT(rel(e.value, c.want), 1e-12) << c.z << " via " << e.method;
        if (c.method) EXPECT_EQ(e.method, c.method) << c.z;
    }
}

TEST(EvalF21, LargerParameters) {
    const ParameterSet p{{2.5, 1.0}, {-1.5, 0.5}, {3.2, -0.7}};
    EXPECT_LT(rel(eval_f21(p, {0.7, -0.6}), {-0.021878564144569073566, 0.082273852130179263169}), 1e-11);
    EXPECT_LT(rel(eval_f21(p, {-3.0, 2.0}), {5.7528657349433555002, -4.9951649999829342155}), 1e-12);
}

TEST(EvalF21, DegenerateFallsBackToAnotherRoute) {
    // c - a - b = 0 blocks b2 at 1-z, the best argument for z = 0.8.
    const ParameterSet p{0.5, 0.5, 1.0};
    const Evaluation e = evaluate_f21(p, 0.8);
    EXPECT_NE(e.method.find("series"), std::string::npos);
    const SeriesResult direct = series_f21(p, 0.8);
    EXPECT_LT(rel(e.value, direct.value), 1e-13);
}

TEST(EvalF21, Errors) {
    EXPECT_THROW(eval_f21({0.5, 0.5, -2.0}, 0.3), PoleOfGamma);
    EXPECT_THROW(eval_f21({0.5, 0.5, 0.9}, 1.0), SingularPoint);
    EXPECT_NEAR(eval_f21({0.5, 0.5, 2.0}, 1.0).real(), 4.0 / std::numbers::pi, 3e-14);
}

TEST(EvalF21, TransformPathEquivalence) {
    // Wherever two or more arguments have modulus < rho, each one's route
    // must give the same value.
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> box(-3.0, 3.0), pr(-5.0, 5.0), pi(-1.0, 1.0);
    int points = 0;
    double worst = 0.0;
    while (points < 300) {
        const Complex z(box(rng), box(rng));
        std::vector<TransformPath> ok;
        for (const TransformPath& t : ranked_arguments(z)) {
            if (t.modulus < 0.75) ok.push_back(t);
        }
        if (ok.size() < 2) continue;
        ParameterSet p;
        do {
            p = {{pr(rng), pi(rng)}, {pr(rng), pi(rng)}, {pr(rng), pi(rng)}};
        } while (std::abs(p.a) > 5 || std::abs(p.b) > 5 || std::abs(p.c) > 5);
        std::vector<Complex> values;
        for (const TransformPath& t : ok) {
            try {
                values.push_back(eval_via(primary_route(t.argument_kind), p, z).value);
            } catch (const DegenerateConnection&) {
            }
        }
        for (size_t i = 1; i < values.size(); ++i) {
            const double r = rel(values[i], values[0]);
            worst = std::max(worst, r);
            EXPECT_LT(r, 1e-11) << "z=" << z << " a=" << p.a << " b=" << p.b << " c=" << p.c;
        }
        ++points;
    }
    RecordProperty("worst_relative_difference", std::to_string(worst));
}

TEST(EvalF21, AlternateRoutesAgree) {
    const ParameterSet p{{0.3, 0.1}, {0.7, -0.2}, {1.1, 0.05}};
    for (Complex z : {Complex(0.3, 0.2), Complex(0.8, 0.3), Complex(2.5, -1.0), Complex(-4.0, 1.0),
                      Complex(-0.9, 0.1), Complex(1.8, 0.4)}) {
        const TransformPath t = select_transform(z);
        ASSERT_NE(t.argument_kind, ArgumentKind::none);
        const Complex v1 = eval_via(primary_route(t.argument_kind), p, z).value;
        const Complex v2 = eval_via(alternate_route(t.argument_kind), p, z).value;
        EXPECT_LT(rel(v1, v2), 1e-12) << z << " " << to_string(t.argument_kind);
    }
}

TEST(EvalF21, LargeParametersUseContinuation) {
    // Every series route cancels here; mpmath hyp2f1 at 30 digits.
    const ParameterSet p{{30.3, 0.1}, {30.6, -0.2}, {60.5, -0.05}};
    struct Case {
        Complex z, want;
    };
    const Case cases[] = {
        {{2.0, -0.5}, {-15492.2871559975499308, 303012.51167632098355}},
        {{-3.0, 1.0}, {3.55332013508270189e-12, -1.01193804990987235e-11}},
        {{0.6, 0.3}, {-11713.0077304454916623, 34636.0514574452581566}},
        // On the cut: the limit from below.
        {{2.0, 0.0}, {-409397535.944350263657394, 694030974.129768515473232}},
    };
    for (const Case& c : cases) {
        const Evaluation e = evaluate_f21(p, c.z);
        EXPECT_LT(rel(e.value, c.want), 1e-10) << c.z << " via " << e.method;
        EXPECT_LT(e.est_error, 1e-4) << c.z;
    }
    EXPECT_EQ(evaluate_f21(p, {2.0, -0.5}).method, "taylor-ode");
}

TEST(Continuation, AgreesWithSeriesRoutes) {
    const ParameterSet p{{0.3, 0.1}, {0.7, -0.2}, {1.1, 0.05}};
    for (Complex z : {Complex(3.0, 0.5), Complex(-5.0, 0.0), Complex(0.5, 2.0), Complex(3.0, 0.0), Complex(0.9, 0.6)}) {
        const ContinuationResult c = continue_f21(p, z);
        EXPECT_LT(rel(c.value, eval_f21(p, z)), 1e-12) << z;
        EXPECT_LT(c.est_error, 1e-12) << z;
    }
    EXPECT_THROW(continue_f21(p, 0.3), DomainError);
    EXPECT_THROW(continue_f21(p, 1.0), DomainError);
}

TEST(EvalF21, RealCutTakesLowerSide) {
    // Routes through z/(z-1) must not switch sides on the way.
    for (double a : {0.3, 10.3, 50.3}) {
        const ParameterSet p{{a, 0.1}, {0.7, -0.2}, {1.1, 0.05}};
        for (double x : {1.5, 3.0, 7.0}) {
            const Complex on = eval_f21(p, x);
            const Complex below = eval_f21(p, {x, -1e-11});
            EXPECT_LT(rel(on, below), 1e-8) << "a=" << a << " x=" << x;
        }
    }
    // mpmath hyp2f1(50.3, 0.7, 1.1, 1.5).
    EXPECT_LT(rel(eval_f21({50.3, 0.7, 1.1}, 1.5), {130516601919868.0, 42407414649156.0}), 1e-12);
}
