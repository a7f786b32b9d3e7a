#pragma once

#include <string_view>

namespace thermistor {

/// Stiffness/boundary discretization of one equation.
///
/// paper_literal reproduces the ghost-node rows exactly as derived for the
/// lagged Galerkin scheme (unknowns 0..N-1, node N reconstructed), including
/// their sign and coefficient quirks. corrected is the symmetric weak-form
/// discretization over all N+1 nodes.
enum class Stiffness { paper_literal, corrected };

/// Quadrature of the Joule source sigma(u)|phi_x|^2 against v_j.
enum class SourceQuadrature { paper_literal, central };

struct SchemeVariant {
    Stiffness potential = Stiffness::corrected;
    Stiffness temperature = Stiffness::corrected;
    SourceQuadrature source = SourceQuadrature::central;

    friend bool operator==(const SchemeVariant&, const SchemeVariant&) = default;
};

inline constexpr std::string_view to_string(Stiffness s) {
    return s == Stiffness::paper_literal ? "paper" : "corrected";
}

inline constexpr std::string_view to_string(SourceQuadrature q) {
    return q == SourceQuadrature::paper_literal ? "paper" : "central";
}

}  // namespace thermistor
