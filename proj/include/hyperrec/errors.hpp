#pragma once

#include <stdexcept>
#include <string>

namespace hyperrec {

enum class ErrorKind {
    pole_of_gamma,
    no_convergence,
    degenerate_connection,
    void_shift,
    singular_prefactor,
    singular_point,
    boundary_indeterminate,
    trace_failure,
    step_singular,
    catastrophic_cancellation,
    domain_error,
};

std::string to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

#define HYPERREC_ERROR(Name, Kind)                                   \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& what) : Error(Kind, what) {} \
    };

HYPERREC_ERROR(PoleOfGamma, ErrorKind::pole_of_gamma)
HYPERREC_ERROR(NoConvergence, ErrorKind::no_convergence)
HYPERREC_ERROR(DegenerateConnection, ErrorKind::degenerate_connection)
HYPERREC_ERROR(VoidShift, ErrorKind::void_shift)
HYPERREC_ERROR(SingularPrefactor, ErrorKind::singular_prefactor)
HYPERREC_ERROR(SingularPoint, ErrorKind::singular_point)
HYPERREC_ERROR(BoundaryIndeterminate, ErrorKind::boundary_indeterminate)
HYPERREC_ERROR(TraceFailure, ErrorKind::trace_failure)
HYPERREC_ERROR(CatastrophicCancellation, ErrorKind::catastrophic_cancellation)
HYPERREC_ERROR(DomainError, ErrorKind::domain_error)

#undef HYPERREC_ERROR

// Leading coefficient vanished while stepping; n is the offending index.
class StepSingular : public Error {
public:
    StepSingular(long n, const std::string& what)
        : Error(ErrorKind::step_singular, what), n_(n) {}
    long index() const noexcept { return n_; }

private:
    long n_;
};

}  // namespace hyperrec
