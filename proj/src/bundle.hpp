#pragma once

#include <string>

#include "colimit.hpp"

namespace difftan {

enum class Verdict {
    ExactThreeTerm,
    ExactFourTerm,
    Violation,
};

const char* verdict_name(Verdict v);

// Exactness report for a fiber/total/base presentation. The verifier checks
// conclusions, not the bundle hypothesis: local triviality is not derivable
// from finite data, so a Violation verdict indicts the finite model rather
// than the theorems proved about genuine bundles.
struct ExactnessReport {
    int dim_fiber = 0;
    int dim_total = 0;
    int dim_base = 0;

    bool pi_surjective = false;
    bool image_iota_equals_kernel_pi = false;
    bool iota_injective = false;

    bool filtered_total = false;
    bool filtered_base = false;

    Verdict verdict = Verdict::Violation;
    std::string violation_detail;           // empty unless verdict is Violation
    std::vector<Rational> violation_witness; // kernel vector missing from the image, when that is the failure

    Matrix m_iota;
    Matrix m_pi;
};

// Computes the three tangent spaces, the induced maps of iota and pi, and
// checks exactness of T(F) -> T(E) -> T(B) -> 0; with both of total and base
// filtered the sequence extends by 0 -> T(F). A nonzero composite induced
// map raises FunctorMismatch (the presentation violates constancy of pi∘iota).
ExactnessReport verify_bundle(const TangentDiagram& fiber, const TangentDiagram& total,
                              const TangentDiagram& base, const DiagramMorphism& iota,
                              const DiagramMorphism& pi);

// Group quotient G -> G/H with fiber H: same linear algebra, reported under
// its own heading.
ExactnessReport verify_group_quotient(const TangentDiagram& subgroup, const TangentDiagram& group,
                                      const TangentDiagram& quotient, const DiagramMorphism& iota,
                                      const DiagramMorphism& pi);

} // namespace difftan
