#include "report.hpp"

#include "corpus.hpp"
#include "parse.hpp"

namespace difftan {

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json vector_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back(rat_to_string(e));
    return out;
}

json validate_facts(const TangentDiagram& d) {
    json facts;
    facts["command"] = "validate";
    facts["space"] = d.name();
    facts["valid"] = true;
    json objects = json::array();
    for (int i = 0; i < d.cat().object_count(); ++i) {
        json obj;
        obj["name"] = d.cat().object_name(i);
        obj["dim"] = d.dim(i);
        obj["separated"] = d.separated(i);
        objects.push_back(std::move(obj));
    }
    facts["objects"] = std::move(objects);
    json morphisms = json::array();
    for (int i = 0; i < d.cat().morphism_count(); ++i) {
        const Morphism& m = d.cat().morphism(i);
        json mor;
        mor["name"] = m.id;
        mor["src"] = d.cat().object_name(m.src);
        mor["dst"] = d.cat().object_name(m.dst);
        morphisms.push_back(std::move(mor));
    }
    facts["morphisms"] = std::move(morphisms);

    auto separated = d.separated_objects();
    if (!separated.empty()) {
        // Separation flags present: run the injective-generation check and
        // surface its verdicts (errors propagate to the caller).
        auto report = check_injective_generation(d.cat(), separated);
        facts["injectively_generated"] = report.injectively_generated;
        facts["derived_filtered"] = report.derived_filtered;
    } else {
        facts["injectively_generated"] = nullptr;
        facts["derived_filtered"] = nullptr;
    }
    return facts;
}

json tangent_facts(const TangentDiagram& d, const TangentSpace& t) {
    json facts;
    facts["command"] = "tangent";
    facts["space"] = d.name();
    facts["dimension"] = t.dimension;
    json projections = json::array();
    for (int i = 0; i < d.cat().object_count(); ++i) {
        json p;
        p["object"] = d.cat().object_name(i);
        p["matrix"] = matrix_json(t.projections[i]);
        projections.push_back(std::move(p));
    }
    facts["projections"] = std::move(projections);
    return facts;
}

json filtered_facts(const TangentDiagram& d) {
    FilterednessReport report = is_filtered(d.cat());
    json facts;
    facts["command"] = "filtered";
    facts["space"] = d.name();
    facts["weakly_filtered"] = report.weakly_filtered;
    facts["filtered"] = report.filtered;
    switch (report.witness) {
    case FilterednessReport::Witness::None:
        facts["witness"] = nullptr;
        break;
    case FilterednessReport::Witness::Empty:
        facts["witness"] = {{"kind", "empty"}};
        break;
    case FilterednessReport::Witness::ObjectPair:
        facts["witness"] = {{"kind", "object-pair"},
                            {"objects", {d.cat().object_name(report.object_pair.first),
                                         d.cat().object_name(report.object_pair.second)}}};
        break;
    case FilterednessReport::Witness::ParallelPair:
        facts["witness"] = {{"kind", "parallel-pair"},
                            {"morphisms", {d.cat().ref_name(report.parallel_pair.first),
                                           d.cat().ref_name(report.parallel_pair.second)}}};
        break;
    }
    return facts;
}

json onerep_facts(const TangentDiagram& d, const TangentSpace& t) {
    OneRepResult result = is_one_representable(t);
    json facts;
    facts["command"] = "onerep";
    facts["space"] = d.name();
    facts["dimension"] = t.dimension;
    facts["one_representable"] = result.one_representable;
    facts["witness"] =
        result.witness_object ? json(d.cat().object_name(*result.witness_object)) : json(nullptr);
    return facts;
}

json zero_facts(const TangentDiagram& d, const FormalVector& w, const ZeroDecision& decision) {
    json facts;
    facts["command"] = "zero";
    facts["space"] = d.name();
    facts["vector"] = serialize_vector(d, normalize(d, w));
    facts["zero"] = decision.zero;
    if (decision.zero) {
        json summands = json::array();
        for (const auto& [mor, v] : decision.decomposition->summands) {
            json s;
            s["morphism"] = d.cat().morphism(mor).id;
            s["vector"] = vector_json(v);
            summands.push_back(std::move(s));
        }
        facts["decomposition"] = std::move(summands);
        facts["class"] = nullptr;
    } else {
        facts["decomposition"] = nullptr;
        facts["class"] = vector_json(decision.class_coords);
    }
    return facts;
}

json witness_facts(const TangentDiagram& d, const FormalVector& w,
                   const std::optional<SinglePlotWitness>& witness) {
    json facts;
    facts["command"] = "witness";
    facts["space"] = d.name();
    facts["vector"] = serialize_vector(d, normalize(d, w));
    if (witness) {
        json germs = json::array();
        for (size_t i = 0; i < witness->germs.size(); ++i) {
            json g;
            g["from"] = d.cat().object_name(witness->term_objects[i]);
            g["germ"] = d.cat().ref_name(witness->germs[i]);
            germs.push_back(std::move(g));
        }
        facts["witness"] = {{"target", d.cat().object_name(witness->target)},
                            {"germs", std::move(germs)}};
    } else {
        facts["witness"] = nullptr;
    }
    return facts;
}

json product_facts(const TangentDiagram& product) {
    json facts;
    facts["command"] = "product";
    facts["space"] = product.name();
    facts["objects"] = product.cat().object_count();
    facts["morphisms"] = product.cat().morphism_count();
    return facts;
}

json bundle_facts(const TangentDiagram& fiber, const TangentDiagram& total,
                  const TangentDiagram& base, const ExactnessReport& report, bool group_quotient) {
    json facts;
    facts["command"] = "bundle";
    facts["kind"] = group_quotient ? "group-quotient" : "bundle";
    facts["fiber"] = fiber.name();
    facts["total"] = total.name();
    facts["base"] = base.name();
    facts["dimensions"] = {{"fiber", report.dim_fiber},
                           {"total", report.dim_total},
                           {"base", report.dim_base}};
    facts["pi_surjective"] = report.pi_surjective;
    facts["image_iota_equals_kernel_pi"] = report.image_iota_equals_kernel_pi;
    facts["iota_injective"] = report.iota_injective;
    facts["filtered_total"] = report.filtered_total;
    facts["filtered_base"] = report.filtered_base;
    facts["exactness"] = verdict_name(report.verdict);
    if (report.verdict == Verdict::Violation) {
        facts["violation"] = report.violation_detail;
        facts["violation_witness"] = report.violation_witness.empty()
                                         ? json(nullptr)
                                         : vector_json(report.violation_witness);
    } else {
        facts["violation"] = nullptr;
        facts["violation_witness"] = nullptr;
    }
    facts["iota_matrix"] = matrix_json(report.m_iota);
    facts["pi_matrix"] = matrix_json(report.m_pi);
    return facts;
}

json corpus_list_facts() {
    json facts;
    facts["command"] = "corpus-list";
    json entries = json::array();
    for (const auto& entry : corpus()) {
        json e;
        e["name"] = entry.name;
        e["description"] = entry.description;
        json parts = json::array();
        for (const auto& [part, text] : entry.parts) parts.push_back(part);
        e["parts"] = std::move(parts);
        entries.push_back(std::move(e));
    }
    facts["entries"] = std::move(entries);
    return facts;
}

} // namespace difftan
