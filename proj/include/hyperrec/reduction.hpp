#pragma once

#include <string>
#include <vector>

#include "hyperrec/types.hpp"

namespace hyperrec {

struct ShiftVector {
    int e1 = 0;
    int e2 = 0;
    int e3 = 0;
    bool operator==(const ShiftVector&) const = default;
};

std::string to_string(const ShiftVector& s);

// sign_flip turns n into -n and only ever appears last.
enum class StepKind { symmetry, i5, i6, i7, sign_flip };

std::string to_string(StepKind k);

struct ReductionPlan {
    ShiftVector input;
    BasicForm basic_form = BasicForm::k13;
    Direction direction = Direction::forward;
    std::vector<StepKind> steps;
};

ShiftVector basic_shift(BasicForm f);

// The 26 admissible shift vectors in table order (k = 1..27 without 14).
std::vector<ShiftVector> all_shift_vectors();
int table_row(const ShiftVector& s);

// Effect of one step on the shift vector.
ShiftVector apply_step(StepKind k, const ShiftVector& s);

ReductionPlan reduce_case(const ShiftVector& s);

struct FamilyMapping {
    Complex log_prefactor;  // 2F1(original at n) = exp(log_prefactor) * f_basic(n_basic)
    ParameterSet p_basic;
    Complex z_basic;
    long n_basic = 0;

    Complex prefactor() const;
};

FamilyMapping family_prefactor(const ReductionPlan& plan, const ParameterSet& p, Complex z, long n);

// Image of z under the chain; independent of the parameters.
Complex basic_argument(const ReductionPlan& plan, Complex z);

}  // namespace hyperrec
