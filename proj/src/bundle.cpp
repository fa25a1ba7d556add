#include "bundle.hpp"

namespace difftan {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::ExactThreeTerm: return "ExactThreeTerm";
    case Verdict::ExactFourTerm: return "ExactFourTerm";
    case Verdict::Violation: return "Violation";
    }
    return "Unknown";
}

ExactnessReport verify_bundle(const TangentDiagram& fiber, const TangentDiagram& total,
                              const TangentDiagram& base, const DiagramMorphism& iota,
                              const DiagramMorphism& pi) {
    ExactnessReport report;

    TangentSpace t_fiber = tangent_space(fiber);
    TangentSpace t_total = tangent_space(total);
    TangentSpace t_base = tangent_space(base);
    report.dim_fiber = t_fiber.dimension;
    report.dim_total = t_total.dimension;
    report.dim_base = t_base.dimension;

    report.m_iota = induced_map(iota, fiber, t_fiber, total, t_total);
    report.m_pi = induced_map(pi, total, t_total, base, t_base);

    Matrix composite = report.m_pi * report.m_iota;
    if (!composite.is_zero()) {
        throw Error(ErrorKind::FunctorMismatch,
                    "pi∘iota induces a nonzero map " + composite.to_string() +
                        "; the presentation does not model a constant composite");
    }

    const int rank_iota = rank(report.m_iota);
    const int rank_pi = rank(report.m_pi);
    report.pi_surjective = rank_pi == t_base.dimension;
    report.iota_injective = rank_iota == t_fiber.dimension;

    // Exactness at the middle, both inclusions checked independently.
    bool image_in_kernel = true;
    for (int c = 0; c < report.m_iota.cols() && image_in_kernel; ++c) {
        image_in_kernel = all_zero(report.m_pi.apply(report.m_iota.column(c)));
    }
    bool kernel_in_image = true;
    std::vector<Rational> missing;
    for (const auto& k : null_space_basis(report.m_pi)) {
        if (!in_column_span(report.m_iota, k)) {
            kernel_in_image = false;
            missing = k;
            break;
        }
    }
    report.image_iota_equals_kernel_pi = image_in_kernel && kernel_in_image;
    if (report.image_iota_equals_kernel_pi &&
        rank_iota + rank_pi != t_total.dimension) {
        throw Error(ErrorKind::Inconsistent,
                    "exactness holds but rank(iota_*) + rank(pi_*) differs from dim T(E)");
    }

    report.filtered_total = is_filtered(total.cat()).filtered;
    report.filtered_base = is_filtered(base.cat()).filtered;

    const bool both_filtered = report.filtered_total && report.filtered_base;
    if (!report.pi_surjective) {
        report.verdict = Verdict::Violation;
        report.violation_detail = "pi_* is not surjective";
    } else if (!report.image_iota_equals_kernel_pi) {
        report.verdict = Verdict::Violation;
        report.violation_detail = "a kernel vector of pi_* is not in the image of iota_*";
        report.violation_witness = missing;
    } else if (both_filtered && !report.iota_injective) {
        report.verdict = Verdict::Violation;
        report.violation_detail = "total and base are filtered but iota_* is not injective";
    } else if (both_filtered && report.iota_injective) {
        report.verdict = Verdict::ExactFourTerm;
    } else {
        report.verdict = Verdict::ExactThreeTerm;
    }
    return report;
}

ExactnessReport verify_group_quotient(const TangentDiagram& subgroup, const TangentDiagram& group,
                                      const TangentDiagram& quotient, const DiagramMorphism& iota,
                                      const DiagramMorphism& pi) {
    return verify_bundle(subgroup, group, quotient, iota, pi);
}

} // namespace difftan
