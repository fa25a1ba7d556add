#include "generators.hpp"

#include <algorithm>

namespace difftan::gen {

namespace {

std::vector<std::vector<Rational>> rows_of(const Matrix& m) {
    std::vector<std::vector<Rational>> rows(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        rows[r].resize(m.cols());
        for (int c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
    }
    return rows;
}

Rational random_entry(Rng& rng) {
    switch (rng.next(0, 9)) {
    case 0: return rat(2);
    case 1: return rat(-1);
    case 2: return rat(1, 2);
    case 3:
    case 4: return rat(1);
    default: return rat(0);
    }
}

Matrix random_matrix(Rng& rng, int rows, int cols) {
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = random_entry(rng);
    return m;
}

} // namespace

RawPresentation to_raw(const TangentDiagram& d, const std::string& suffix) {
    RawPresentation raw;
    raw.space = d.name() + suffix;
    for (int i = 0; i < d.cat().object_count(); ++i) {
        raw.objects.push_back(RawObject{d.cat().object_name(i) + suffix, d.dim(i), d.separated(i)});
    }
    for (int i = 0; i < d.cat().morphism_count(); ++i) {
        const Morphism& m = d.cat().morphism(i);
        raw.morphisms.push_back(RawDiagramMorphism{m.id + suffix, d.cat().object_name(m.src) + suffix,
                                                   d.cat().object_name(m.dst) + suffix,
                                                   rows_of(d.declared_jac(i))});
    }
    auto suffixed_ref = [&](MorRef h) {
        return h.identity ? "id:" + d.cat().object_name(h.index) + suffix
                          : d.cat().morphism(h.index).id + suffix;
    };
    for (int g = 0; g < d.cat().morphism_count(); ++g) {
        for (int f = 0; f < d.cat().morphism_count(); ++f) {
            if (d.cat().morphism(f).dst != d.cat().morphism(g).src) continue;
            MorRef h = d.cat().compose(MorRef::declared(g), MorRef::declared(f));
            raw.composition.push_back(RawCompose{d.cat().morphism(g).id + suffix,
                                                 d.cat().morphism(f).id + suffix, suffixed_ref(h)});
        }
    }
    return raw;
}

std::optional<TangentDiagram> random_matrix_category(Rng& rng, int max_objects, int max_dim,
                                                     int max_morphisms) {
    const int objects = rng.next(1, max_objects);
    std::vector<int> dims(objects);
    for (auto& d : dims) d = rng.next(0, max_dim);

    struct Arrow {
        int src, dst;
        Matrix mat;
    };
    std::vector<Arrow> arrows;
    auto find_arrow = [&](int src, int dst, const Matrix& mat) {
        for (size_t i = 0; i < arrows.size(); ++i) {
            if (arrows[i].src == src && arrows[i].dst == dst && arrows[i].mat == mat) {
                return static_cast<int>(i);
            }
        }
        return -1;
    };
    auto is_identity_arrow = [&](int src, int dst, const Matrix& mat) {
        return src == dst && mat == Matrix::identity(dims[src]);
    };

    const int generators = rng.next(1, 3);
    for (int i = 0; i < generators; ++i) {
        int src = rng.next(0, objects - 1);
        int dst = rng.next(0, objects - 1);
        Matrix mat = random_matrix(rng, dims[dst], dims[src]);
        if (is_identity_arrow(src, dst, mat) || find_arrow(src, dst, mat) >= 0) continue;
        arrows.push_back(Arrow{src, dst, mat});
    }

    // Close under composition; a composite is the identity exactly when its
    // matrix is the identity.
    for (bool changed = true; changed;) {
        changed = false;
        const size_t count = arrows.size();
        for (size_t g = 0; g < count; ++g) {
            for (size_t f = 0; f < count; ++f) {
                if (arrows[f].dst != arrows[g].src) continue;
                Matrix prod = arrows[g].mat * arrows[f].mat;
                if (is_identity_arrow(arrows[f].src, arrows[g].dst, prod)) continue;
                if (find_arrow(arrows[f].src, arrows[g].dst, prod) >= 0) continue;
                if (static_cast<int>(arrows.size()) >= max_morphisms) return std::nullopt;
                arrows.push_back(Arrow{arrows[f].src, arrows[g].dst, prod});
                changed = true;
            }
        }
    }

    RawPresentation raw;
    raw.space = "mcat";
    for (int i = 0; i < objects; ++i) {
        raw.objects.push_back(RawObject{"o" + std::to_string(i), dims[i], false});
    }
    for (size_t i = 0; i < arrows.size(); ++i) {
        raw.morphisms.push_back(RawDiagramMorphism{"m" + std::to_string(i),
                                                   "o" + std::to_string(arrows[i].src),
                                                   "o" + std::to_string(arrows[i].dst),
                                                   rows_of(arrows[i].mat)});
    }
    for (size_t g = 0; g < arrows.size(); ++g) {
        for (size_t f = 0; f < arrows.size(); ++f) {
            if (arrows[f].dst != arrows[g].src) continue;
            Matrix prod = arrows[g].mat * arrows[f].mat;
            std::string h = is_identity_arrow(arrows[f].src, arrows[g].dst, prod)
                                ? "id:o" + std::to_string(arrows[f].src)
                                : "m" + std::to_string(find_arrow(arrows[f].src, arrows[g].dst, prod));
            raw.composition.push_back(RawCompose{"m" + std::to_string(g), "m" + std::to_string(f), h});
        }
    }
    return TangentDiagram::validate(raw);
}

TangentDiagram random_tree_diagram(Rng& rng, int max_objects, int max_dim) {
    const int objects = rng.next(1, max_objects);
    std::vector<int> dims(objects);
    for (auto& d : dims) d = rng.next(0, max_dim);
    std::vector<int> parent(objects, -1);
    std::vector<Matrix> edge(objects);
    for (int i = 1; i < objects; ++i) {
        parent[i] = rng.next(0, i - 1);
        edge[i] = random_matrix(rng, dims[parent[i]], dims[i]);
    }

    // Optional endomorphism on the root: an idempotent keeps the category
    // filtered, an involution usually breaks coequalization.
    Matrix root_endo;
    bool endo_idempotent = false;
    if (dims[0] > 0 && rng.chance(50)) {
        Matrix m(dims[0], dims[0]);
        if (rng.chance(60)) {
            for (int i = 0; i < dims[0]; ++i) m.at(i, i) = rng.chance(50) ? 1 : 0;
            if (m != Matrix::identity(dims[0])) {
                root_endo = m;
                endo_idempotent = true;
            }
        } else {
            bool nontrivial = false;
            for (int i = 0; i < dims[0]; ++i) {
                bool flip = rng.chance(50);
                m.at(i, i) = flip ? -1 : 1;
                nontrivial = nontrivial || flip;
            }
            if (nontrivial) root_endo = m;
        }
    }
    const bool has_endo = root_endo.rows() > 0;

    // Path matrices node -> proper ancestor.
    std::vector<std::vector<std::pair<int, Matrix>>> ancestors(objects);
    for (int i = 1; i < objects; ++i) {
        Matrix acc = edge[i];
        int a = parent[i];
        ancestors[i].emplace_back(a, acc);
        while (parent[a] >= 0) {
            acc = edge[a] * acc;
            a = parent[a];
            ancestors[i].emplace_back(a, acc);
        }
    }

    RawPresentation raw;
    raw.space = "tree";
    for (int i = 0; i < objects; ++i) {
        raw.objects.push_back(RawObject{"o" + std::to_string(i), dims[i], false});
    }
    auto path_name = [](int i, int a) { return "p" + std::to_string(i) + "_" + std::to_string(a); };
    auto twisted_name = [](int i) { return "t" + std::to_string(i); };
    auto obj_name = [](int i) { return "o" + std::to_string(i); };

    for (int i = 1; i < objects; ++i) {
        for (const auto& [a, mat] : ancestors[i]) {
            raw.morphisms.push_back(RawDiagramMorphism{path_name(i, a), obj_name(i), obj_name(a), rows_of(mat)});
        }
    }
    if (has_endo) {
        raw.morphisms.push_back(RawDiagramMorphism{"e0", obj_name(0), obj_name(0), rows_of(root_endo)});
        for (int i = 1; i < objects; ++i) {
            raw.morphisms.push_back(RawDiagramMorphism{
                twisted_name(i), obj_name(i), obj_name(0), rows_of(root_endo * ancestors[i].back().second)});
        }
    }

    // Table: path concatenation, then absorption into the root endomorphism.
    for (int i = 1; i < objects; ++i) {
        for (const auto& ib : ancestors[i]) {
            const int b = ib.first;
            for (const auto& bc : ancestors[b]) {
                raw.composition.push_back(RawCompose{path_name(b, bc.first), path_name(i, b), path_name(i, bc.first)});
            }
            if (has_endo) {
                raw.composition.push_back(
                    RawCompose{b == 0 ? "e0" : twisted_name(b), path_name(i, b), twisted_name(i)});
            }
        }
    }
    if (has_endo) {
        raw.composition.push_back(RawCompose{"e0", "e0", endo_idempotent ? "e0" : "id:o0"});
        for (int i = 1; i < objects; ++i) {
            raw.composition.push_back(
                RawCompose{"e0", twisted_name(i), endo_idempotent ? twisted_name(i) : path_name(i, 0)});
        }
    }
    return TangentDiagram::validate(raw);
}

std::optional<TangentDiagram> random_monoid_diagram(Rng& rng, int max_dim) {
    return random_matrix_category(rng, 1, max_dim, 8);
}

TangentDiagram disjoint_union(const TangentDiagram& a, const TangentDiagram& b) {
    RawPresentation left = to_raw(a, "_l");
    RawPresentation right = to_raw(b, "_r");
    RawPresentation raw;
    raw.space = a.name() + "_u_" + b.name();
    raw.objects = left.objects;
    raw.objects.insert(raw.objects.end(), right.objects.begin(), right.objects.end());
    raw.morphisms = left.morphisms;
    raw.morphisms.insert(raw.morphisms.end(), right.morphisms.begin(), right.morphisms.end());
    raw.composition = left.composition;
    raw.composition.insert(raw.composition.end(), right.composition.begin(), right.composition.end());
    return TangentDiagram::validate(raw);
}

TangentDiagram with_terminal_object(const TangentDiagram& d) {
    RawPresentation raw = to_raw(d);
    raw.space += "_term";

    // Fresh names even when the input was itself terminal-augmented.
    auto taken = [&](const std::string& name) {
        for (const auto& o : raw.objects) {
            if (o.name == name) return true;
        }
        for (const auto& m : raw.morphisms) {
            if (m.id == name) return true;
        }
        return false;
    };
    std::string prefix = "zz";
    while (taken(prefix) || taken(prefix + "t0")) prefix += "z";

    raw.objects.push_back(RawObject{prefix, 0, false});
    const int count = d.cat().object_count();
    for (int i = 0; i < count; ++i) {
        raw.morphisms.push_back(
            RawDiagramMorphism{prefix + "t" + std::to_string(i), d.cat().object_name(i), prefix, {}});
    }
    for (int m = 0; m < d.cat().morphism_count(); ++m) {
        const Morphism& mor = d.cat().morphism(m);
        raw.composition.push_back(RawCompose{prefix + "t" + std::to_string(mor.dst), mor.id,
                                             prefix + "t" + std::to_string(mor.src)});
    }
    return TangentDiagram::validate(raw);
}

TangentDiagram random_diagram(Rng& rng, int max_objects, int max_dim) {
    const int kind = rng.next(0, 99);
    if (kind < 35) {
        for (int attempt = 0; attempt < 16; ++attempt) {
            auto d = random_matrix_category(rng, max_objects, max_dim, 12);
            if (d) return *d;
        }
        return random_tree_diagram(rng, max_objects, max_dim);
    }
    if (kind < 60) {
        return random_tree_diagram(rng, max_objects, max_dim);
    }
    if (kind < 70) {
        for (int attempt = 0; attempt < 16; ++attempt) {
            auto d = random_monoid_diagram(rng, max_dim);
            if (d) return *d;
        }
        return random_tree_diagram(rng, 1, max_dim);
    }
    if (kind < 80) {
        for (int attempt = 0; attempt < 16; ++attempt) {
            auto d = random_matrix_category(rng, std::max(1, max_objects - 1), max_dim, 8);
            if (d) return with_terminal_object(*d);
        }
        return with_terminal_object(random_tree_diagram(rng, std::max(1, max_objects - 1), max_dim));
    }
    if (kind < 90) {
        TangentDiagram left = random_tree_diagram(rng, std::max(1, max_objects / 2), max_dim);
        TangentDiagram right = random_tree_diagram(rng, std::max(1, max_objects / 2), max_dim);
        return disjoint_union(left, right);
    }
    RawPresentation raw;
    raw.space = "euclid";
    raw.objects.push_back(RawObject{"u", rng.next(0, max_dim), false});
    return TangentDiagram::validate(raw);
}

TangentDiagram random_weakly_filtered_diagram(Rng& rng, int max_objects, int max_dim) {
    const int kind = rng.next(0, 99);
    if (kind < 45) {
        return random_tree_diagram(rng, max_objects, max_dim);
    }
    if (kind < 70) {
        for (int attempt = 0; attempt < 16; ++attempt) {
            auto d = random_monoid_diagram(rng, max_dim);
            if (d) return *d;
        }
        return random_tree_diagram(rng, 1, max_dim);
    }
    if (kind < 90) {
        for (int attempt = 0; attempt < 16; ++attempt) {
            auto d = random_matrix_category(rng, std::max(1, max_objects - 1), max_dim, 8);
            if (d) return with_terminal_object(*d);
        }
        return with_terminal_object(random_tree_diagram(rng, std::max(1, max_objects - 1), max_dim));
    }
    RawPresentation raw;
    raw.space = "euclid";
    raw.objects.push_back(RawObject{"u", rng.next(0, max_dim), false});
    return TangentDiagram::validate(raw);
}

FormalVector random_zero_vector(Rng& rng, const TangentDiagram& d) {
    FormalVector w;
    if (d.cat().morphism_count() == 0 || rng.chance(10)) {
        return w; // the zero of F
    }
    const int atoms = rng.chance(60) ? 1 : 2;
    int first_mor = rng.next(0, d.cat().morphism_count() - 1);
    for (int a = 0; a < atoms; ++a) {
        int mor = first_mor;
        if (a > 0) {
            // Keep the support small: the second atom reuses endpoints of the
            // first where possible.
            const Morphism& m0 = d.cat().morphism(first_mor);
            std::vector<int> candidates;
            for (int i = 0; i < d.cat().morphism_count(); ++i) {
                const Morphism& mi = d.cat().morphism(i);
                bool src_ok = mi.src == m0.src || mi.src == m0.dst;
                bool dst_ok = mi.dst == m0.src || mi.dst == m0.dst;
                if (src_ok && dst_ok) candidates.push_back(i);
            }
            if (candidates.empty()) break;
            mor = candidates[rng.next(0, static_cast<int>(candidates.size()) - 1)];
        }
        const Morphism& m = d.cat().morphism(mor);
        std::vector<Rational> v(d.dim(m.src));
        for (auto& e : v) e = rat(rng.next(-2, 2));
        auto jv = d.declared_jac(mor).apply(v);
        for (auto& e : jv) e = -e;
        w.terms.emplace_back(m.src, std::move(v));
        w.terms.emplace_back(m.dst, std::move(jv));
    }
    return w;
}

} // namespace difftan::gen
