#ifndef CREMONA_ERRORS_HPP
#define CREMONA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cremona {

enum class errc {
    degree_mismatch,
    not_divisible,
    base_locus,
    degenerate_composition,
    precondition,
    singular_matrix,
    closure_overflow,
    unexpected_orbit_size,
    not_proportional_to_identity,
    incomplete_factorization,
    probe_in_base_locus,
    indeterminate_result,
    not_divisible_by_divisor,
    not_in_span,
    singular_automorphism,
    type_mismatch,
    no_recurrence_found,
    non_square_parameter,
    degenerate_parameters,
    decomposition_mismatch,
    unknown_prop_id,
    parse_error,
};

inline const char* errc_name(errc c)
{
    switch (c) {
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::not_divisible: return "NotDivisible";
        case errc::base_locus: return "BaseLocus";
        case errc::degenerate_composition: return "DegenerateComposition";
        case errc::precondition: return "PreconditionError";
        case errc::singular_matrix: return "SingularMatrix";
        case errc::closure_overflow: return "ClosureOverflow";
        case errc::unexpected_orbit_size: return "UnexpectedOrbitSize";
        case errc::not_proportional_to_identity: return "NotProportionalToIdentity";
        case errc::incomplete_factorization: return "IncompleteFactorization";
        case errc::probe_in_base_locus: return "ProbeInBaseLocus";
        case errc::indeterminate_result: return "IndeterminateResult";
        case errc::not_divisible_by_divisor: return "NotDivisibleByD";
        case errc::not_in_span: return "NotInSpan";
        case errc::singular_automorphism: return "SingularAutomorphism";
        case errc::type_mismatch: return "TypeMismatch";
        case errc::no_recurrence_found: return "NoRecurrenceFound";
        case errc::non_square_parameter: return "NonSquareParameter";
        case errc::degenerate_parameters: return "DegenerateParameters";
        case errc::decomposition_mismatch: return "DecompositionMismatch";
        case errc::unknown_prop_id: return "UnknownPropId";
        case errc::parse_error: return "ParseError";
    }
    return "Error";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace cremona

#endif
