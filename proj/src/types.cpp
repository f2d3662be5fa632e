#include "hyperrec/errors.hpp"
#include "hyperrec/types.hpp"

namespace hyperrec {

std::string to_string(Direction d) {
    return d == Direction::forward ? "forward" : "backward";
}

std::string to_string(BasicForm f) { return std::to_string(static_cast<int>(f)); }

std::string to_string(SolutionLabel l) {
    switch (l) {
        case SolutionLabel::F: return "F";
        case SolutionLabel::G: return "G";
        case SolutionLabel::H: return "H";
        case SolutionLabel::J: return "J";
    }
    return "?";
}

BasicForm basic_form_from_int(int k) {
    switch (k) {
        case 2: return BasicForm::k2;
        case 3: return BasicForm::k3;
        case 5: return BasicForm::k5;
        case 6: return BasicForm::k6;
        case 13: return BasicForm::k13;
        default: throw DomainError("no basic form " + std::to_string(k));
    }
}

Direction direction_from_string(const std::string& s) {
    if (s == "forward" || s == "fwd") return Direction::forward;
    if (s == "backward" || s == "bwd") return Direction::backward;
    throw DomainError("unknown direction '" + s + "'");
}

std::string to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::pole_of_gamma: return "PoleOfGamma";
        case ErrorKind::no_convergence: return "NoConvergence";
        case ErrorKind::degenerate_connection: return "DegenerateConnection";
        case ErrorKind::void_shift: return "VoidShift";
        case ErrorKind::singular_prefactor: return "SingularPrefactor";
        case ErrorKind::singular_point: return "SingularPoint";
        case ErrorKind::boundary_indeterminate: return "BoundaryIndeterminate";
        case ErrorKind::trace_failure: return "TraceFailure";
        case ErrorKind::step_singular: return "StepSingular";
        case ErrorKind::catastrophic_cancellation: return "CatastrophicCancellation";
        case ErrorKind::domain_error: return "DomainError";
    }
    return "Error";
}

}  // namespace hyperrec
