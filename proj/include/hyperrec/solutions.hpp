#pragma once

#include "hyperrec/evaluate.hpp"
#include "hyperrec/types.hpp"

namespace hyperrec {

// f_n of each basic form (the shifted 2F1 itself).
Complex f_solution(BasicForm form, const ParameterSet& p, Complex z, long n, const EvalOptions& opt = {});

// The second printed solution of each form, gamma prefactors in log-space.
Complex g_solution(BasicForm form, const ParameterSet& p, Complex z, long n, const EvalOptions& opt = {});

// h_n = g_n - f_n for form 6.
Complex h_solution_k6(const ParameterSet& p, Complex z, long n, const EvalOptions& opt = {});

struct BackwardCompanions {
    Complex h;
    Complex j;
    Complex g;
};

// Solutions of the form-13 recurrence at index -n (parameter c - n).
BackwardCompanions backward_companions_k15(const ParameterSet& p, Complex z, long n, const EvalOptions& opt = {});

// Labeled solution at basic index m of the given form; H of form 13 and J
// are the backward companions (m = -n).
Complex labeled_solution(SolutionLabel label, BasicForm form, const ParameterSet& p, Complex z, long m,
                         const EvalOptions& opt = {});

bool label_admissible(SolutionLabel label, BasicForm form, Direction dir);

}  // namespace hyperrec
