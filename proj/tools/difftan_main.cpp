// Command-line front end. Everything flows through the C API: presentations
// are parsed into handles, each command asks the library for its JSON facts,
// and the text report is rendered from those same facts, so the two output
// modes cannot drift apart.
//
// Exit codes: 0 success / property holds, 1 property fails (not filtered,
// vector nonzero, no witness, exactness violation), 2 input error.

#include <difftan.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFalse = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void fail_input(const std::string& message) {
    throw InputError(message);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail_input("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

using DiagramPtr = std::unique_ptr<difftan_diagram, decltype(&difftan_diagram_free)>;
using FunctorPtr = std::unique_ptr<difftan_functor, decltype(&difftan_functor_free)>;
using SpacePtr = std::unique_ptr<difftan_space, decltype(&difftan_space_free)>;

DiagramPtr load_diagram(const std::string& path) {
    const std::string text = read_file(path);
    difftan_diagram* d = nullptr;
    if (difftan_diagram_parse(text.c_str(), &d) != DIFFTAN_OK) {
        fail_input(path + ": " + difftan_last_error());
    }
    return DiagramPtr(d, difftan_diagram_free);
}

FunctorPtr load_functor(const std::string& path, const difftan_diagram* src,
                        const difftan_diagram* dst) {
    const std::string text = read_file(path);
    difftan_functor* f = nullptr;
    if (difftan_functor_parse(text.c_str(), src, dst, &f) != DIFFTAN_OK) {
        fail_input(path + ": " + difftan_last_error());
    }
    return FunctorPtr(f, difftan_functor_free);
}

SpacePtr compute_space(const difftan_diagram* d) {
    difftan_space* s = nullptr;
    if (difftan_space_compute(d, &s) != DIFFTAN_OK) {
        fail_input(difftan_last_error());
    }
    return SpacePtr(s, difftan_space_free);
}

// Runs a fact-producing C API call and takes ownership of the returned
// JSON document.
template <typename Fn>
json fetch_json(Fn&& fn) {
    char* text = nullptr;
    if (fn(&text) != DIFFTAN_OK) fail_input(difftan_last_error());
    json facts = json::parse(text);
    difftan_string_free(text);
    return facts;
}

std::string yes_no(bool b) {
    return b ? "yes" : "no";
}

std::string fmt_matrix(const json& rows) {
    if (rows.empty() || rows[0].empty()) return "[]";
    std::string out = "[";
    for (size_t r = 0; r < rows.size(); ++r) {
        out += (r == 0) ? "[" : ",[";
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0) out += ",";
            out += rows[r][c].get<std::string>();
        }
        out += "]";
    }
    return out + "]";
}

std::string fmt_vector(const json& entries) {
    std::string out = "[";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) out += ",";
        out += entries[i].get<std::string>();
    }
    return out + "]";
}

void emit(const json& facts, bool as_json, const std::string& text) {
    if (as_json) {
        std::cout << facts.dump() << "\n";
    } else {
        std::cout << text;
    }
}

int cmd_validate(const std::string& file, bool as_json) {
    auto d = load_diagram(file);
    json facts = fetch_json([&](char** out) { return difftan_validate_json(d.get(), out); });

    std::string text = "space " + facts["space"].get<std::string>() + "\n";
    text += "objects: " + std::to_string(facts["objects"].size()) + "\n";
    text += "morphisms: " + std::to_string(facts["morphisms"].size()) + "\n";
    text += "valid: yes\n";
    if (!facts["injectively_generated"].is_null()) {
        std::string separated;
        for (const auto& obj : facts["objects"]) {
            if (obj["separated"].get<bool>()) {
                if (!separated.empty()) separated += ", ";
                separated += obj["name"].get<std::string>();
            }
        }
        text += "separated objects: " + separated + "\n";
        text += "injectively generated: " + yes_no(facts["injectively_generated"].get<bool>()) + "\n";
        text += "derived filtered: " + yes_no(facts["derived_filtered"].get<bool>()) + "\n";
    }
    emit(facts, as_json, text);
    return kExitOk;
}

int cmd_tangent(const std::string& file, bool as_json) {
    auto d = load_diagram(file);
    auto s = compute_space(d.get());
    json facts = fetch_json([&](char** out) { return difftan_tangent_json(s.get(), out); });

    std::string text = "space " + facts["space"].get<std::string>() + "\n";
    text += "tangent dimension: " + std::to_string(facts["dimension"].get<int>()) + "\n";
    for (const auto& p : facts["projections"]) {
        text += "projection " + p["object"].get<std::string>() + ": " + fmt_matrix(p["matrix"]) + "\n";
    }
    emit(facts, as_json, text);
    return kExitOk;
}

int cmd_filtered(const std::string& file, bool as_json) {
    auto d = load_diagram(file);
    json facts = fetch_json([&](char** out) { return difftan_filtered_json(d.get(), out); });

    std::string text = "space " + facts["space"].get<std::string>() + "\n";
    text += "weakly filtered: " + yes_no(facts["weakly_filtered"].get<bool>()) + "\n";
    text += "filtered: " + yes_no(facts["filtered"].get<bool>()) + "\n";
    const json& witness = facts["witness"];
    if (witness.is_null()) {
        text += "witness: none\n";
    } else if (witness["kind"] == "empty") {
        text += "witness: empty category\n";
    } else if (witness["kind"] == "object-pair") {
        text += "witness: object pair (" + witness["objects"][0].get<std::string>() + ", " +
                witness["objects"][1].get<std::string>() + ") has no cocone\n";
    } else {
        text += "witness: parallel pair (" + witness["morphisms"][0].get<std::string>() + ", " +
                witness["morphisms"][1].get<std::string>() + ") has no coequalizing morphism\n";
    }
    emit(facts, as_json, text);
    return facts["filtered"].get<bool>() ? kExitOk : kExitPropertyFalse;
}

int cmd_onerep(const std::string& file, bool as_json) {
    auto d = load_diagram(file);
    auto s = compute_space(d.get());
    json facts = fetch_json([&](char** out) { return difftan_onerep_json(s.get(), out); });

    std::string text = "space " + facts["space"].get<std::string>() + "\n";
    text += "tangent dimension: " + std::to_string(facts["dimension"].get<int>()) + "\n";
    text += "1-representable: " + yes_no(facts["one_representable"].get<bool>()) + "\n";
    text += "witness object: " +
            (facts["witness"].is_null() ? std::string("none") : facts["witness"].get<std::string>()) +
            "\n";
    emit(facts, as_json, text);
    return facts["one_representable"].get<bool>() ? kExitOk : kExitPropertyFalse;
}

int cmd_zero(const std::string& file, const std::string& vec, bool as_json) {
    auto d = load_diagram(file);
    json facts =
        fetch_json([&](char** out) { return difftan_zero_json(d.get(), vec.c_str(), out); });

    std::string text = "space " + facts["space"].get<std::string>() + "\n";
    text += "vector: " + facts["vector"].get<std::string>() + "\n";
    text += "zero in tangent space: " + yes_no(facts["zero"].get<bool>()) + "\n";
    if (facts["zero"].get<bool>()) {
        if (facts["decomposition"].empty()) {
            text += "decomposition: empty\n";
        } else {
            text += "decomposition:\n";
            for (const auto& s : facts["decomposition"]) {
                text += "  " + s["morphism"].get<std::string>() + ": " + fmt_vector(s["vector"]) + "\n";
            }
        }
    } else {
        text += "class: " + fmt_vector(facts["class"]) + "\n";
    }
    emit(facts, as_json, text);
    return facts["zero"].get<bool>() ? kExitOk : kExitPropertyFalse;
}

int cmd_witness(const std::string& file, const std::string& vec, bool as_json) {
    auto d = load_diagram(file);
    json facts =
        fetch_json([&](char** out) { return difftan_witness_json(d.get(), vec.c_str(), out); });

    std::string text = "space " + facts["space"].get<std::string>() + "\n";
    text += "vector: " + facts["vector"].get<std::string>() + "\n";
    if (facts["witness"].is_null()) {
        text += "witness: none\n";
    } else {
        text += "witness target: " + facts["witness"]["target"].get<std::string>() + "\n";
        for (const auto& g : facts["witness"]["germs"]) {
            text += "  " + g["from"].get<std::string>() + " -> " +
                    facts["witness"]["target"].get<std::string>() + " via " +
                    g["germ"].get<std::string>() + "\n";
        }
    }
    emit(facts, as_json, text);
    return facts["witness"].is_null() ? kExitPropertyFalse : kExitOk;
}

int cmd_product(const std::string& file_a, const std::string& file_b, const std::string& out_path,
                bool as_json) {
    auto a = load_diagram(file_a);
    auto b = load_diagram(file_b);
    difftan_diagram* raw = nullptr;
    if (difftan_product(a.get(), b.get(), &raw) != DIFFTAN_OK) {
        fail_input(difftan_last_error());
    }
    DiagramPtr product(raw, difftan_diagram_free);

    char* serialized = difftan_diagram_serialize(product.get());
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        difftan_string_free(serialized);
        fail_input("cannot write '" + out_path + "'");
    }
    out << serialized;
    difftan_string_free(serialized);

    auto space = compute_space(product.get());
    json tangent = fetch_json([&](char** out) { return difftan_tangent_json(space.get(), out); });

    json facts;
    facts["command"] = "product";
    facts["space"] = tangent["space"];
    facts["dimension"] = tangent["dimension"];
    facts["output"] = out_path;

    std::string text = "product space: " + facts["space"].get<std::string>() + "\n";
    text += "tangent dimension: " + std::to_string(facts["dimension"].get<int>()) + "\n";
    text += "wrote: " + out_path + "\n";
    emit(facts, as_json, text);
    return kExitOk;
}

int cmd_bundle(const std::string& fiber_file, const std::string& total_file,
               const std::string& base_file, const std::string& iota_file,
               const std::string& pi_file, bool group_quotient, bool as_json) {
    auto fiber = load_diagram(fiber_file);
    auto total = load_diagram(total_file);
    auto base = load_diagram(base_file);
    auto iota = load_functor(iota_file, fiber.get(), total.get());
    auto pi = load_functor(pi_file, total.get(), base.get());

    json facts = fetch_json([&](char** out) {
        return difftan_bundle_json(fiber.get(), total.get(), base.get(), iota.get(), pi.get(),
                                   group_quotient ? 1 : 0, out);
    });

    std::string text = facts["kind"].get<std::string>() == "group-quotient" ? "group quotient report\n"
                                                                            : "bundle report\n";
    text += "fiber " + facts["fiber"].get<std::string>() + ": tangent dimension " +
            std::to_string(facts["dimensions"]["fiber"].get<int>()) + "\n";
    text += "total " + facts["total"].get<std::string>() + ": tangent dimension " +
            std::to_string(facts["dimensions"]["total"].get<int>()) + "\n";
    text += "base " + facts["base"].get<std::string>() + ": tangent dimension " +
            std::to_string(facts["dimensions"]["base"].get<int>()) + "\n";
    text += "iota matrix: " + fmt_matrix(facts["iota_matrix"]) + "\n";
    text += "pi matrix: " + fmt_matrix(facts["pi_matrix"]) + "\n";
    text += "pi surjective: " + yes_no(facts["pi_surjective"].get<bool>()) + "\n";
    text += "image(iota) = kernel(pi): " + yes_no(facts["image_iota_equals_kernel_pi"].get<bool>()) + "\n";
    text += "iota injective: " + yes_no(facts["iota_injective"].get<bool>()) + "\n";
    text += "total filtered: " + yes_no(facts["filtered_total"].get<bool>()) + "\n";
    text += "base filtered: " + yes_no(facts["filtered_base"].get<bool>()) + "\n";
    text += "exactness: " + facts["exactness"].get<std::string>() + "\n";
    if (!facts["violation"].is_null()) {
        text += "violation: " + facts["violation"].get<std::string>() + "\n";
        if (!facts["violation_witness"].is_null()) {
            text += "violation witness: " + fmt_vector(facts["violation_witness"]) + "\n";
        }
    }
    emit(facts, as_json, text);
    return facts["exactness"].get<std::string>() == "Violation" ? kExitPropertyFalse : kExitOk;
}

int cmd_corpus_list(bool as_json) {
    json facts = fetch_json([](char** out) { return difftan_corpus_list_json(out); });

    std::string text;
    for (const auto& entry : facts["entries"]) {
        std::string parts;
        for (const auto& p : entry["parts"]) {
            if (!parts.empty()) parts += ", ";
            parts += p.get<std::string>();
        }
        text += entry["name"].get<std::string>() + " (parts: " + parts + ")\n";
        text += "  " + entry["description"].get<std::string>() + "\n";
    }
    emit(facts, as_json, text);
    return kExitOk;
}

int cmd_corpus_emit(const std::string& name, const std::string& part, bool as_json) {
    char* out = nullptr;
    difftan_status status = difftan_corpus_emit(name.c_str(), part.empty() ? nullptr : part.c_str(), &out);
    if (status != DIFFTAN_OK) fail_input(difftan_last_error());
    std::string text(out);
    difftan_string_free(out);

    if (as_json) {
        json facts;
        facts["command"] = "corpus-emit";
        facts["name"] = name;
        facts["part"] = part.empty() ? json(nullptr) : json(part);
        facts["text"] = text;
        std::cout << facts.dump() << "\n";
    } else {
        std::cout << text;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"internal tangent spaces of diffeological spaces from finite germ presentations"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string file, file_b, vec, out_path;
    std::string fiber_file, total_file, base_file, iota_file, pi_file;
    bool group_quotient = false;
    std::string corpus_name, corpus_part;

    auto* validate = app.add_subcommand("validate", "validate a presentation");
    validate->add_option("file", file)->required();

    auto* tangent = app.add_subcommand("tangent", "compute the tangent space");
    tangent->add_option("file", file)->required();

    auto* filtered = app.add_subcommand("filtered", "decide (weak) filteredness");
    filtered->add_option("file", file)->required();

    auto* onerep = app.add_subcommand("onerep", "decide 1-representability");
    onerep->add_option("file", file)->required();

    auto* zero = app.add_subcommand("zero", "decide whether a formal vector is zero");
    zero->add_option("file", file)->required();
    zero->add_option("--vec", vec)->required();

    auto* witness = app.add_subcommand("witness", "search for a single-plot witness");
    witness->add_option("file", file)->required();
    witness->add_option("--vec", vec)->required();

    auto* product = app.add_subcommand("product", "build the product of two presentations");
    product->add_option("file_a", file)->required();
    product->add_option("file_b", file_b)->required();
    product->add_option("-o,--output", out_path)->required();

    auto* bundle = app.add_subcommand("bundle", "verify the exact sequence of a bundle presentation");
    bundle->add_option("--fiber", fiber_file)->required();
    bundle->add_option("--total", total_file)->required();
    bundle->add_option("--base", base_file)->required();
    bundle->add_option("--iota", iota_file)->required();
    bundle->add_option("--pi", pi_file)->required();
    bundle->add_flag("--group-quotient", group_quotient, "report as a group quotient");

    auto* corpus = app.add_subcommand("corpus", "built-in example presentations");
    auto* corpus_list = corpus->add_subcommand("list", "list corpus entries");
    auto* corpus_emit = corpus->add_subcommand("emit", "emit a corpus presentation");
    corpus_emit->add_option("name", corpus_name)->required();
    corpus_emit->add_option("part", corpus_part);
    corpus->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (validate->parsed()) return cmd_validate(file, as_json);
        if (tangent->parsed()) return cmd_tangent(file, as_json);
        if (filtered->parsed()) return cmd_filtered(file, as_json);
        if (onerep->parsed()) return cmd_onerep(file, as_json);
        if (zero->parsed()) return cmd_zero(file, vec, as_json);
        if (witness->parsed()) return cmd_witness(file, vec, as_json);
        if (product->parsed()) return cmd_product(file, file_b, out_path, as_json);
        if (bundle->parsed()) {
            return cmd_bundle(fiber_file, total_file, base_file, iota_file, pi_file, group_quotient,
                              as_json);
        }
        if (corpus->parsed()) {
            if (corpus_list->parsed()) return cmd_corpus_list(as_json);
            if (corpus_emit->parsed()) return cmd_corpus_emit(corpus_name, corpus_part, as_json);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
