#include "hyperrec/connection.hpp"

#include <numbers>
#include <optional>

#include "hyperrec/errors.hpp"
#include "hyperrec/gamma.hpp"

namespace hyperrec {

namespace {

constexpr Complex kLogMinusOne(0.0, std::numbers::pi);

// log(1/Gamma(x)); empty when 1/Gamma(x) is zero.
std::optional<Complex> log_rgamma(Complex x) {
    if (is_nonpositive_integer(x)) return std::nullopt;
    return -log_gamma(x);
}

Complex log_gamma_num(Complex x, const char* who) {
    if (is_nonpositive_integer(x)) throw PoleOfGamma(std::string(who) + ": gamma prefactor has a pole");
    return log_gamma(x);
}

Complex log_one_minus(Complex z) {
    if (z == 1.0) throw SingularPrefactor("connection: (1-z) vanishes");
    return std::log(canonical(1.0 - z));
}

Complex log_minus(Complex z) {
    if (z == 0.0) throw SingularPrefactor("connection: z = 0 for a 1/z relation");
    return std::log(canonical(-z));
}

void push(ConnectionExpansion& e, std::optional<Complex> lp, ParameterSet p, Complex arg) {
    if (lp) e.terms.push_back({*lp, p, canonical(arg)});
}

// Adds a list of optional logs; empty when any is empty.
std::optional<Complex> sum(std::initializer_list<std::optional<Complex>> xs) {
    Complex s = 0.0;
    for (const auto& x : xs) {
        if (!x) return std::nullopt;
        s += *x;
    }
    return s;
}

}  // namespace

std::string to_string(Relation r) {
    switch (r) {
        case Relation::symmetry: return "sym";
        case Relation::i5: return "i5";
        case Relation::i6: return "i6";
        case Relation::i7: return "i7";
        case Relation::b2: return "b2";
        case Relation::b5: return "b5";
        case Relation::inverse: return "inverse";
    }
    return "?";
}

Relation relation_from_string(const std::string& s) {
    if (s == "sym" || s == "symmetry") return Relation::symmetry;
    if (s == "i5") return Relation::i5;
    if (s == "i6") return Relation::i6;
    if (s == "i7") return Relation::i7;
    if (s == "b2") return Relation::b2;
    if (s == "b5") return Relation::b5;
    if (s == "inverse") return Relation::inverse;
    throw DomainError("unknown relation '" + s + "'");
}

Complex ConnectionTerm::prefactor() const { return std::exp(log_prefactor); }

ConnectionExpansion apply_connection(Relation r, const ParameterSet& p, Complex z) {
    z = canonical(z);
    const Complex a = p.a, b = p.b, c = p.c;
    ConnectionExpansion e;
    switch (r) {
        case Relation::symmetry:
            e.terms.push_back({0.0, {b, a, c}, z});
            break;
        case Relation::i5:
            e.terms.push_back({-a * log_one_minus(z), {a, c - b, c}, canonical(z / (z - 1.0))});
            break;
        case Relation::i6:
            e.terms.push_back({-b * log_one_minus(z), {c - a, b, c}, canonical(z / (z - 1.0))});
            break;
        case Relation::i7: {
            const Complex s = c - a - b;
            const Complex lp = (s == 0.0) ? Complex(0.0) : s * log_one_minus(z);
            e.terms.push_back({lp, {c - a, c - b, c}, z});
            break;
        }
        case Relation::b2: {
            const Complex s = c - a - b;
            if (near_integer(s, kDegenerateTol)) {
                throw DegenerateConnection("b2: c-a-b is an integer");
            }
            const Complex lc = log_gamma_num(c, "b2");
            const Complex w = canonical(1.0 - z);
            push(e, sum({lc + log_gamma(s), log_rgamma(c - a), log_rgamma(c - b)}), {a, b, 1.0 - s}, w);
            if (z != 1.0) {
                push(e, sum({lc + log_gamma(-s) + s * log_one_minus(z), log_rgamma(a), log_rgamma(b)}),
                     {c - a, c - b, 1.0 + s}, w);
            }
            break;
        }
        case Relation::b5: {
            if (near_integer(b - a, kDegenerateTol)) throw DegenerateConnection("b5: b-a is an integer");
            if (near_integer(c, kDegenerateTol)) throw DegenerateConnection("b5: c is an integer");
            const Complex lmz = log_minus(z);
            const Complex l1z = (c - a - b == 0.0) ? Complex(0.0) : (c - a - b) * log_one_minus(z);
            const Complex g1a = log_gamma_num(1.0 - a, "b5");
            const Complex gbc = log_gamma_num(b - c + 1.0, "b5");
            push(e,
                 sum({g1a + gbc + (a - c) * lmz + l1z, log_rgamma(1.0 - c), log_rgamma(b - a + 1.0)}),
                 {1.0 - a, c - a, b - a + 1.0}, 1.0 / z);
            push(e,
                 sum({kLogMinusOne + log_gamma(c - 1.0) + gbc + g1a + (1.0 - c) * lmz + l1z,
                      log_rgamma(b), log_rgamma(c - a), log_rgamma(1.0 - c)}),
                 {1.0 - a, 1.0 - b, 2.0 - c}, z);
            break;
        }
        case Relation::inverse: {
            if (near_integer(b - a, kDegenerateTol)) throw DegenerateConnection("inverse: b-a is an integer");
            const Complex lc = log_gamma_num(c, "inverse");
            const Complex lmz = log_minus(z);
            push(e, sum({lc + log_gamma(b - a) - a * lmz, log_rgamma(b), log_rgamma(c - a)}),
                 {a, a - c + 1.0, a - b + 1.0}, 1.0 / z);
            push(e, sum({lc + log_gamma(a - b) - b * lmz, log_rgamma(a), log_rgamma(c - b)}),
                 {b, b - c + 1.0, b - a + 1.0}, 1.0 / z);
            break;
        }
    }
    return e;
}

}  // namespace hyperrec
