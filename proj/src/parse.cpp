#include "parse.hpp"

#include <sstream>

namespace difftan {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
    std::string jac_tail; // raw text after a "jac" keyword, comments stripped
};

[[noreturn]] void fail(int line, const std::string& message) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + message);
}

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw = raw.substr(0, hash);
        }
        Line line;
        line.number = number;
        std::istringstream tokens(raw);
        std::string tok;
        while (tokens >> tok) {
            if (tok == "jac") {
                std::getline(tokens, line.jac_tail);
                line.tokens.push_back(tok);
                break;
            }
            line.tokens.push_back(tok);
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

// Bracket syntax [[r,...],[...]]; [] and [[]] denote zero-extent matrices.
std::vector<std::vector<Rational>> parse_jac_literal(const std::string& tail, int line) {
    std::string s;
    for (char c : tail) {
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) fail(line, "missing Jacobian literal after 'jac'");
    if (s.front() != '[' || s.back() != ']') fail(line, "Jacobian literal must be bracketed");
    std::string body = s.substr(1, s.size() - 2);
    std::vector<std::vector<Rational>> rows;
    if (body.empty()) return rows; // "[]"
    if (body.front() != '[') fail(line, "Jacobian rows must be bracketed");

    size_t pos = 0;
    while (pos < body.size()) {
        if (body[pos] != '[') fail(line, "expected '[' in Jacobian literal");
        size_t close = body.find(']', pos);
        if (close == std::string::npos) fail(line, "unbalanced ']' in Jacobian literal");
        std::string row_text = body.substr(pos + 1, close - pos - 1);
        std::vector<Rational> row;
        if (!row_text.empty()) {
            size_t start = 0;
            while (true) {
                size_t comma = row_text.find(',', start);
                std::string entry = row_text.substr(start, comma - start);
                if (entry.empty()) fail(line, "empty entry in Jacobian row");
                try {
                    row.push_back(rat_from_string(entry));
                } catch (const Error& e) {
                    fail(line, e.what());
                }
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
        pos = close + 1;
        if (pos < body.size()) {
            if (body[pos] != ',') fail(line, "expected ',' between Jacobian rows");
            ++pos;
        }
    }
    return rows;
}

} // namespace

RawPresentation parse_presentation(const std::string& text) {
    RawPresentation raw;
    bool seen_space = false;
    for (const Line& line : split_lines(text)) {
        const auto& t = line.tokens;
        if (t[0] == "space") {
            if (seen_space) fail(line.number, "duplicate 'space' line");
            if (t.size() != 2) fail(line.number, "expected: space <name>");
            raw.space = t[1];
            seen_space = true;
        } else if (t[0] == "object") {
            if (!seen_space) fail(line.number, "'space' line must come first");
            bool separated = t.size() == 5 && t[4] == "separated";
            if (!(t.size() == 4 || separated) || t[2] != "dim") {
                fail(line.number, "expected: object <name> dim <n> [separated]");
            }
            int dim = 0;
            try {
                size_t used = 0;
                dim = std::stoi(t[3], &used);
                if (used != t[3].size() || dim < 0) throw std::invalid_argument("");
            } catch (...) {
                fail(line.number, "bad dimension '" + t[3] + "'");
            }
            raw.objects.push_back(RawObject{t[1], dim, separated});
        } else if (t[0] == "morphism") {
            if (!seen_space) fail(line.number, "'space' line must come first");
            if (t.size() != 7 || t[2] != ":" || t[4] != "->" || t[6] != "jac") {
                fail(line.number, "expected: morphism <name> : <src> -> <dst> jac <matrix>");
            }
            raw.morphisms.push_back(
                RawDiagramMorphism{t[1], t[3], t[5], parse_jac_literal(line.jac_tail, line.number)});
        } else if (t[0] == "compose") {
            if (!seen_space) fail(line.number, "'space' line must come first");
            if (t.size() != 5 || t[3] != "=") {
                fail(line.number, "expected: compose <g> <f> = <h>");
            }
            raw.composition.push_back(RawCompose{t[1], t[2], t[4]});
        } else {
            fail(line.number, "unknown directive '" + t[0] + "'");
        }
    }
    if (!seen_space) {
        throw Error(ErrorKind::Parse, "missing 'space' line");
    }
    return raw;
}

RawFunctor parse_functor(const std::string& text) {
    RawFunctor raw;
    bool seen_header = false;
    for (const Line& line : split_lines(text)) {
        const auto& t = line.tokens;
        if (t[0] == "functor") {
            if (seen_header) fail(line.number, "duplicate 'functor' line");
            if (t.size() != 6 || t[2] != ":" || t[4] != "->") {
                fail(line.number, "expected: functor <name> : <space> -> <space>");
            }
            raw.name = t[1];
            raw.src_space = t[3];
            raw.dst_space = t[5];
            seen_header = true;
        } else if (t[0] == "objmap") {
            if (!seen_header) fail(line.number, "'functor' line must come first");
            if (t.size() != 4 || t[2] != "->") fail(line.number, "expected: objmap <oid> -> <oid>");
            raw.obj_map.emplace_back(t[1], t[3]);
        } else if (t[0] == "mormap") {
            if (!seen_header) fail(line.number, "'functor' line must come first");
            if (t.size() != 4 || t[2] != "->") fail(line.number, "expected: mormap <mid> -> <mid>");
            raw.mor_map.emplace_back(t[1], t[3]);
        } else {
            fail(line.number, "unknown directive '" + t[0] + "'");
        }
    }
    if (!seen_header) {
        throw Error(ErrorKind::Parse, "missing 'functor' line");
    }
    return raw;
}

FormalVector parse_vector(const std::string& text, const TangentDiagram& d) {
    FormalVector w;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t semi = text.find(';', pos);
        std::string term = text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        // Trim surrounding whitespace.
        size_t a = term.find_first_not_of(" \t");
        size_t b = term.find_last_not_of(" \t");
        term = (a == std::string::npos) ? "" : term.substr(a, b - a + 1);
        if (!term.empty()) {
            size_t colon = term.find(':');
            if (colon == std::string::npos) {
                throw Error(ErrorKind::Parse, "vector term '" + term + "' has no ':'");
            }
            std::string obj_name = term.substr(0, colon);
            int obj = d.cat().object_index(obj_name);
            if (obj < 0) {
                throw Error(ErrorKind::UnknownObject, "vector references '" + obj_name + "'");
            }
            std::vector<Rational> coords;
            std::string rest = term.substr(colon + 1);
            if (!rest.empty()) {
                size_t start = 0;
                while (true) {
                    size_t comma = rest.find(',', start);
                    coords.push_back(rat_from_string(rest.substr(start, comma - start)));
                    if (comma == std::string::npos) break;
                    start = comma + 1;
                }
            }
            if (static_cast<int>(coords.size()) != d.dim(obj)) {
                throw Error(ErrorKind::LengthMismatch,
                            "term for '" + obj_name + "' has " + std::to_string(coords.size()) +
                                " coordinates, dim is " + std::to_string(d.dim(obj)));
            }
            w.terms.emplace_back(obj, std::move(coords));
        }
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return w;
}

std::string serialize(const TangentDiagram& d) {
    std::string out = "space " + d.name() + "\n";
    for (int i = 0; i < d.cat().object_count(); ++i) {
        out += "object " + d.cat().object_name(i) + " dim " + std::to_string(d.dim(i));
        if (d.separated(i)) out += " separated";
        out += "\n";
    }
    for (int i = 0; i < d.cat().morphism_count(); ++i) {
        const Morphism& m = d.cat().morphism(i);
        out += "morphism " + m.id + " : " + d.cat().object_name(m.src) + " -> " +
               d.cat().object_name(m.dst) + " jac " + d.declared_jac(i).to_string() + "\n";
    }
    const int count = d.cat().morphism_count();
    for (int g = 0; g < count; ++g) {
        for (int f = 0; f < count; ++f) {
            if (d.cat().morphism(f).dst != d.cat().morphism(g).src) continue;
            MorRef h = d.cat().compose(MorRef::declared(g), MorRef::declared(f));
            out += "compose " + d.cat().morphism(g).id + " " + d.cat().morphism(f).id + " = " +
                   d.cat().ref_name(h) + "\n";
        }
    }
    return out;
}

std::string serialize_vector(const TangentDiagram& d, const FormalVector& w) {
    std::string out;
    for (size_t i = 0; i < w.terms.size(); ++i) {
        if (i > 0) out += ";";
        out += d.cat().object_name(w.terms[i].first) + ":";
        const auto& coords = w.terms[i].second;
        for (size_t c = 0; c < coords.size(); ++c) {
            if (c > 0) out += ",";
            out += rat_to_string(coords[c]);
        }
    }
    return out;
}

} // namespace difftan
