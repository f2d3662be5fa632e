#include "hyperrec/reduction.hpp"

#include "hyperrec/errors.hpp"

namespace hyperrec {

namespace {

using S = StepKind;

struct Row {
    ShiftVector s;
    int k;
    BasicForm form;
    Direction dir;
    std::vector<StepKind> steps;
};

const std::vector<Row>& table() {
    static const std::vector<Row> rows = {
        {{1, 1, 1}, 1, BasicForm::k13, Direction::forward, {S::i7}},
        {{1, 1, 0}, 2, BasicForm::k2, Direction::forward, {}},
        {{1, 1, -1}, 3, BasicForm::k3, Direction::forward, {}},
        {{1, 0, 1}, 4, BasicForm::k13, Direction::forward, {S::i6}},
        {{1, 0, 0}, 5, BasicForm::k5, Direction::forward, {}},
        {{1, 0, -1}, 6, BasicForm::k6, Direction::forward, {}},
        {{1, -1, 1}, 7, BasicForm::k6, Direction::backward, {S::i6, S::symmetry, S::sign_flip}},
        {{1, -1, 0}, 8, BasicForm::k2, Direction::forward, {S::i5}},
        {{1, -1, -1}, 9, BasicForm::k6, Direction::forward, {S::i5}},
        {{0, 1, 1}, 10, BasicForm::k13, Direction::forward, {S::i5}},
        {{0, 1, 0}, 11, BasicForm::k5, Direction::forward, {S::symmetry}},
        {{0, 1, -1}, 12, BasicForm::k6, Direction::forward, {S::symmetry}},
        {{0, 0, 1}, 13, BasicForm::k13, Direction::forward, {}},
        {{0, 0, -1}, 15, BasicForm::k13, Direction::backward, {S::sign_flip}},
        {{0, -1, 1}, 16, BasicForm::k6, Direction::backward, {S::symmetry, S::sign_flip}},
        {{0, -1, 0}, 17, BasicForm::k5, Direction::forward, {S::i5, S::symmetry}},
        {{0, -1, -1}, 18, BasicForm::k13, Direction::backward, {S::i5, S::sign_flip}},
        {{-1, 1, 1}, 19, BasicForm::k6, Direction::backward, {S::i5, S::sign_flip}},
        {{-1, 1, 0}, 20, BasicForm::k2, Direction::forward, {S::symmetry, S::i5}},
        {{-1, 1, -1}, 21, BasicForm::k6, Direction::forward, {S::symmetry, S::i5}},
        {{-1, 0, 1}, 22, BasicForm::k6, Direction::backward, {S::sign_flip}},
        {{-1, 0, 0}, 23, BasicForm::k5, Direction::forward, {S::symmetry, S::i5, S::symmetry}},
        {{-1, 0, -1}, 24, BasicForm::k13, Direction::backward, {S::symmetry, S::i5, S::sign_flip}},
        {{-1, -1, 1}, 25, BasicForm::k3, Direction::backward, {S::sign_flip}},
        {{-1, -1, 0}, 26, BasicForm::k2, Direction::forward, {S::i7}},
        {{-1, -1, -1}, 27, BasicForm::k13, Direction::backward, {S::i7, S::sign_flip}},
    };
    return rows;
}

const Row& lookup(const ShiftVector& s) {
    if (s == ShiftVector{0, 0, 0}) throw VoidShift("shift vector (0,0,0) is void");
    for (const Row& r : table()) {
        if (r.s == s) return r;
    }
    throw DomainError("shift vector components must be -1, 0 or 1: " + to_string(s));
}

Complex log1m(Complex x) {
    if (x == 1.0) throw SingularPrefactor("family_prefactor: 1-z vanishes");
    return std::log(canonical(1.0 - x));
}

}  // namespace

std::string to_string(const ShiftVector& s) {
    return "(" + std::to_string(s.e1) + "," + std::to_string(s.e2) + "," + std::to_string(s.e3) + ")";
}

std::string to_string(StepKind k) {
    switch (k) {
        case S::symmetry: return "symmetry";
        case S::i5: return "i5";
        case S::i6: return "i6";
        case S::i7: return "i7";
        case S::sign_flip: return "sign-flip";
    }
    return "?";
}

ShiftVector basic_shift(BasicForm f) {
    switch (f) {
        case BasicForm::k2: return {1, 1, 0};
        case BasicForm::k3: return {1, 1, -1};
        case BasicForm::k5: return {1, 0, 0};
        case BasicForm::k6: return {1, 0, -1};
        case BasicForm::k13: return {0, 0, 1};
    }
    return {};
}

std::vector<ShiftVector> all_shift_vectors() {
    std::vector<ShiftVector> out;
    for (const Row& r : table()) out.push_back(r.s);
    return out;
}

int table_row(const ShiftVector& s) { return lookup(s).k; }

ShiftVector apply_step(StepKind k, const ShiftVector& s) {
    switch (k) {
        case S::symmetry: return {s.e2, s.e1, s.e3};
        case S::i5: return {s.e1, s.e3 - s.e2, s.e3};
        case S::i6: return {s.e3 - s.e1, s.e2, s.e3};
        case S::i7: return {s.e3 - s.e1, s.e3 - s.e2, s.e3};
        case S::sign_flip: return {-s.e1, -s.e2, -s.e3};
    }
    return s;
}

ReductionPlan reduce_case(const ShiftVector& s) {
    const Row& r = lookup(s);
    return {s, r.form, r.dir, r.steps};
}

Complex FamilyMapping::prefactor() const { return std::exp(log_prefactor); }

FamilyMapping family_prefactor(const ReductionPlan& plan, const ParameterSet& p, Complex z, long n) {
    ShiftVector sv = plan.input;
    ParameterSet q = p;
    Complex x = canonical(z);
    Complex lp = 0.0;
    long idx = n;
    const double dn = static_cast<double>(n);
    for (StepKind k : plan.steps) {
        // Parameters of the current family at index n.
        const Complex an = q.a + dn * sv.e1, bn = q.b + dn * sv.e2, cn = q.c + dn * sv.e3;
        switch (k) {
            case S::symmetry:
                q = {q.b, q.a, q.c};
                break;
            case S::i5:
                lp += -an * log1m(x);
                q = {q.a, q.c - q.b, q.c};
                x = canonical(x / (x - 1.0));
                break;
            case S::i6:
                lp += -bn * log1m(x);
                q = {q.c - q.a, q.b, q.c};
                x = canonical(x / (x - 1.0));
                break;
            case S::i7: {
                const Complex e = cn - an - bn;
                if (e != 0.0) lp += e * log1m(x);
                q = {q.c - q.a, q.c - q.b, q.c};
                break;
            }
            case S::sign_flip:
                idx = -idx;
                break;
        }
        sv = apply_step(k, sv);
    }
    return {canonical(lp), q, x, idx};
}

Complex basic_argument(const ReductionPlan& plan, Complex z) {
    Complex x = canonical(z);
    for (StepKind k : plan.steps) {
        if (k == S::i5 || k == S::i6) x = canonical(x / (x - 1.0));
    }
    return x;
}

}  // namespace hyperrec
