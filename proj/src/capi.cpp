#include "difftan.h"

#include <cstring>
#include <memory>
#include <string>

#include "bundle.hpp"
#include "colimit.hpp"
#include "corpus.hpp"
#include "parse.hpp"
#include "report.hpp"

using namespace difftan;

struct difftan_diagram {
    std::shared_ptr<const TangentDiagram> diagram;
};

struct difftan_functor {
    DiagramMorphism functor;
    std::shared_ptr<const TangentDiagram> src;
    std::shared_ptr<const TangentDiagram> dst;
};

struct difftan_space {
    TangentSpace space;
    std::shared_ptr<const TangentDiagram> diagram;
};

namespace {

thread_local std::string g_last_error = "no error";

difftan_status status_of(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::Parse:
        return DIFFTAN_ERR_PARSE;
    case ErrorKind::UnknownEntry:
        return DIFFTAN_ERR_UNKNOWN_NAME;
    case ErrorKind::BadArgument:
        return DIFFTAN_ERR_ARGUMENT;
    default:
        return DIFFTAN_ERR_VALIDATE;
    }
}

difftan_status fail(const std::exception& e, difftan_status status) {
    g_last_error = e.what();
    return status;
}

difftan_status fail_arg(const char* message) {
    g_last_error = message;
    return DIFFTAN_ERR_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
difftan_status guarded(Fn&& fn) {
    try {
        fn();
        return DIFFTAN_OK;
    } catch (const Error& e) {
        return fail(e, status_of(e));
    } catch (const std::exception& e) {
        return fail(e, DIFFTAN_ERR_INTERNAL);
    }
}

} // namespace

extern "C" {

const char* difftan_version(void) {
    return "0.1.0";
}

const char* difftan_last_error(void) {
    return g_last_error.c_str();
}

void difftan_string_free(char* s) {
    std::free(s);
}

difftan_status difftan_diagram_parse(const char* text, difftan_diagram** out) {
    if (!text || !out) return fail_arg("difftan_diagram_parse: null argument");
    return guarded([&] {
        auto diagram = std::make_shared<TangentDiagram>(TangentDiagram::validate(parse_presentation(text)));
        *out = new difftan_diagram{std::move(diagram)};
    });
}

void difftan_diagram_free(difftan_diagram* d) {
    delete d;
}

const char* difftan_diagram_name(const difftan_diagram* d) {
    return d ? d->diagram->name().c_str() : nullptr;
}

char* difftan_diagram_serialize(const difftan_diagram* d) {
    if (!d) return nullptr;
    return dup_string(serialize(*d->diagram));
}

difftan_status difftan_validate_json(const difftan_diagram* d, char** json_out) {
    if (!d || !json_out) return fail_arg("difftan_validate_json: null argument");
    return guarded([&] { *json_out = dup_string(validate_facts(*d->diagram).dump()); });
}

int difftan_diagram_is_weakly_filtered(const difftan_diagram* d) {
    return d && is_weakly_filtered(d->diagram->cat()).weakly_filtered ? 1 : 0;
}

int difftan_diagram_is_filtered(const difftan_diagram* d) {
    return d && is_filtered(d->diagram->cat()).filtered ? 1 : 0;
}

difftan_status difftan_filtered_json(const difftan_diagram* d, char** json_out) {
    if (!d || !json_out) return fail_arg("difftan_filtered_json: null argument");
    return guarded([&] { *json_out = dup_string(filtered_facts(*d->diagram).dump()); });
}

difftan_status difftan_product(const difftan_diagram* a, const difftan_diagram* b,
                               difftan_diagram** out) {
    if (!a || !b || !out) return fail_arg("difftan_product: null argument");
    return guarded([&] {
        auto product = std::make_shared<TangentDiagram>(product_diagram(*a->diagram, *b->diagram));
        *out = new difftan_diagram{std::move(product)};
    });
}

difftan_status difftan_functor_parse(const char* text, const difftan_diagram* src,
                                     const difftan_diagram* dst, difftan_functor** out) {
    if (!text || !src || !dst || !out) return fail_arg("difftan_functor_parse: null argument");
    return guarded([&] {
        DiagramMorphism f = DiagramMorphism::validate(parse_functor(text), *src->diagram, *dst->diagram);
        *out = new difftan_functor{std::move(f), src->diagram, dst->diagram};
    });
}

void difftan_functor_free(difftan_functor* f) {
    delete f;
}

difftan_status difftan_space_compute(const difftan_diagram* d, difftan_space** out) {
    if (!d || !out) return fail_arg("difftan_space_compute: null argument");
    return guarded([&] { *out = new difftan_space{tangent_space(*d->diagram), d->diagram}; });
}

void difftan_space_free(difftan_space* s) {
    delete s;
}

int difftan_space_dimension(const difftan_space* s) {
    return s ? s->space.dimension : -1;
}

difftan_status difftan_tangent_json(const difftan_space* s, char** json_out) {
    if (!s || !json_out) return fail_arg("difftan_tangent_json: null argument");
    return guarded([&] { *json_out = dup_string(tangent_facts(*s->diagram, s->space).dump()); });
}

int difftan_space_is_one_representable(const difftan_space* s) {
    return s && is_one_representable(s->space).one_representable ? 1 : 0;
}

difftan_status difftan_onerep_json(const difftan_space* s, char** json_out) {
    if (!s || !json_out) return fail_arg("difftan_onerep_json: null argument");
    return guarded([&] { *json_out = dup_string(onerep_facts(*s->diagram, s->space).dump()); });
}

difftan_status difftan_zero_json(const difftan_diagram* d, const char* vec, char** json_out) {
    if (!d || !vec || !json_out) return fail_arg("difftan_zero_json: null argument");
    return guarded([&] {
        FormalVector w = parse_vector(vec, *d->diagram);
        ZeroDecision decision = is_zero(*d->diagram, w);
        *json_out = dup_string(zero_facts(*d->diagram, w, decision).dump());
    });
}

difftan_status difftan_witness_json(const difftan_diagram* d, const char* vec, char** json_out) {
    if (!d || !vec || !json_out) return fail_arg("difftan_witness_json: null argument");
    return guarded([&] {
        FormalVector w = parse_vector(vec, *d->diagram);
        auto witness = single_plot_witness(*d->diagram, w);
        *json_out = dup_string(witness_facts(*d->diagram, w, witness).dump());
    });
}

difftan_status difftan_bundle_json(const difftan_diagram* fiber, const difftan_diagram* total,
                                   const difftan_diagram* base, const difftan_functor* iota,
                                   const difftan_functor* pi, int group_quotient, char** json_out) {
    if (!fiber || !total || !base || !iota || !pi || !json_out) {
        return fail_arg("difftan_bundle_json: null argument");
    }
    if (iota->src != fiber->diagram || iota->dst != total->diagram) {
        return fail_arg("difftan_bundle_json: iota does not map fiber to total");
    }
    if (pi->src != total->diagram || pi->dst != base->diagram) {
        return fail_arg("difftan_bundle_json: pi does not map total to base");
    }
    return guarded([&] {
        ExactnessReport report = verify_bundle(*fiber->diagram, *total->diagram, *base->diagram,
                                               iota->functor, pi->functor);
        *json_out = dup_string(
            bundle_facts(*fiber->diagram, *total->diagram, *base->diagram, report, group_quotient != 0)
                .dump());
    });
}

difftan_status difftan_corpus_list_json(char** json_out) {
    if (!json_out) return fail_arg("difftan_corpus_list_json: null argument");
    return guarded([&] { *json_out = dup_string(corpus_list_facts().dump()); });
}

difftan_status difftan_corpus_emit(const char* name, const char* part, char** text_out) {
    if (!name || !text_out) return fail_arg("difftan_corpus_emit: null argument");
    return guarded([&] {
        std::string part_name;
        if (part) {
            part_name = part;
        } else {
            const CorpusEntry* entry = corpus_find(name);
            if (!entry) throw Error(ErrorKind::UnknownEntry, "no corpus entry '" + std::string(name) + "'");
            if (entry->parts.size() != 1) {
                throw Error(ErrorKind::UnknownEntry,
                            "entry '" + std::string(name) + "' is multi-part; name the part");
            }
            part_name = entry->parts.front().first;
        }
        *text_out = dup_string(corpus_part(name, part_name));
    });
}

} // extern "C"
