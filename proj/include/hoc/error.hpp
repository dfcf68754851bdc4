#pragma once

#include <stdexcept>
#include <string>

namespace hoc {

// Error taxonomy. `invalid` means a mathematical check failed (bad input or
// refuted claim); `resource` means a configured budget was hit; `usage` means
// the request itself was malformed. The CLI maps these to exit codes 1/2/2.
enum class errc {
    syntax,
    unknown_variable,
    not_a_unit,
    budget_exceeded,
    not_on_quadric,
    illegal_indices,
    not_orthogonal,
    not_identity_at_zero,
    not_local,
    internal_unit_failure,
    not_surjective_mod_square,
    certificate_failure,
    not_comaximal,
    search_budget_exhausted,
    comax_fails_on_path,
    orientation_invalid,
    chain_broken,
    unknown_suite,
    bad_input,
    precondition,
};

enum class err_class { invalid, resource, usage };

inline err_class classify(errc c) {
    switch (c) {
        case errc::budget_exceeded:
        case errc::search_budget_exhausted:
            return err_class::resource;
        case errc::unknown_suite:
        case errc::bad_input:
            return err_class::usage;
        default:
            return err_class::invalid;
    }
}

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::syntax: return "SyntaxError";
        case errc::unknown_variable: return "UnknownVariable";
        case errc::not_a_unit: return "NotAUnit";
        case errc::budget_exceeded: return "ResourceBudgetExceeded";
        case errc::not_on_quadric: return "NotOnQuadric";
        case errc::illegal_indices: return "IllegalIndices";
        case errc::not_orthogonal: return "NotOrthogonal";
        case errc::not_identity_at_zero: return "NotIdentityAtZero";
        case errc::not_local: return "NotLocal";
        case errc::internal_unit_failure: return "InternalUnitFailure";
        case errc::not_surjective_mod_square: return "NotSurjectiveModSquare";
        case errc::certificate_failure: return "CertificateFailure";
        case errc::not_comaximal: return "NotComaximal";
        case errc::search_budget_exhausted: return "BudgetExhausted";
        case errc::comax_fails_on_path: return "ComaximalityFailsOnPath";
        case errc::orientation_invalid: return "OrientationInvalid";
        case errc::chain_broken: return "ChainBroken";
        case errc::unknown_suite: return "UnknownSuite";
        case errc::bad_input: return "BadInput";
        case errc::precondition: return "PreconditionFailed";
    }
    return "Error";
}

class Error : public std::runtime_error {
    errc code_;

public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }
    err_class klass() const { return classify(code_); }
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace hoc
