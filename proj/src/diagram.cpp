#include "diagram.hpp"

#include <unordered_set>

namespace difftan {

TangentDiagram TangentDiagram::validate(const RawPresentation& raw) {
    TangentDiagram d;
    d.name_ = raw.space;

    RawCategoryData cat_data;
    for (const auto& obj : raw.objects) {
        if (obj.dim < 0) {
            throw Error(ErrorKind::BadArgument, "object '" + obj.name + "' has negative dimension");
        }
        cat_data.objects.push_back(obj.name);
    }
    for (const auto& mor : raw.morphisms) {
        cat_data.morphisms.push_back(RawMorphism{mor.id, mor.src, mor.dst});
    }
    cat_data.composition = raw.composition;
    d.cat_ = FiniteCategory::validate(cat_data);

    for (const auto& obj : raw.objects) {
        d.dims_.push_back(obj.dim);
        d.separated_.push_back(obj.separated);
    }

    for (size_t i = 0; i < raw.morphisms.size(); ++i) {
        const auto& mor = raw.morphisms[i];
        const Morphism& m = d.cat_.morphism(static_cast<int>(i));
        const int rows = d.dims_[m.dst];
        const int cols = d.dims_[m.src];
        const auto& given = mor.jac_rows;

        size_t total = 0;
        for (const auto& row : given) total += row.size();
        Matrix jac(rows, cols);
        if (total == 0) {
            // Zero-extent literal ([], [[]], ...); the endpoints must agree.
            if (rows != 0 && cols != 0) {
                throw Error(ErrorKind::ShapeMismatch,
                            "morphism '" + mor.id + "': empty Jacobian but shape is " +
                                std::to_string(rows) + "x" + std::to_string(cols));
            }
        } else {
            if (static_cast<int>(given.size()) != rows) {
                throw Error(ErrorKind::ShapeMismatch,
                            "morphism '" + mor.id + "': " + std::to_string(given.size()) +
                                " rows given, " + std::to_string(rows) + " required");
            }
            for (int r = 0; r < rows; ++r) {
                if (static_cast<int>(given[r].size()) != cols) {
                    throw Error(ErrorKind::ShapeMismatch,
                                "morphism '" + mor.id + "': row " + std::to_string(r + 1) + " has " +
                                    std::to_string(given[r].size()) + " entries, " +
                                    std::to_string(cols) + " required");
                }
                for (int c = 0; c < cols; ++c) jac.at(r, c) = given[r][c];
            }
        }
        d.jacs_.push_back(std::move(jac));
    }

    // Functoriality: the Jacobian of a table composite equals the product of
    // the Jacobians, exactly.
    const int m = d.cat_.morphism_count();
    for (int g = 0; g < m; ++g) {
        for (int f = 0; f < m; ++f) {
            if (d.cat_.morphism(f).dst != d.cat_.morphism(g).src) continue;
            MorRef h = d.cat_.compose(MorRef::declared(g), MorRef::declared(f));
            Matrix product = d.jacs_[g] * d.jacs_[f];
            Matrix assigned = d.jac(h);
            if (product != assigned) {
                throw Error(ErrorKind::NonFunctorialJacobian,
                            "jac(" + d.cat_.ref_name(h) + ") = " + assigned.to_string() +
                                " but jac(" + d.cat_.morphism(g).id + ")*jac(" + d.cat_.morphism(f).id +
                                ") = " + product.to_string());
            }
        }
    }

    return d;
}

std::vector<int> TangentDiagram::separated_objects() const {
    std::vector<int> out;
    for (int i = 0; i < cat_.object_count(); ++i) {
        if (separated_[i]) out.push_back(i);
    }
    return out;
}

DiagramMorphism DiagramMorphism::validate(const RawFunctor& raw, const TangentDiagram& src,
                                          const TangentDiagram& dst) {
    if (!raw.src_space.empty() && raw.src_space != src.name()) {
        throw Error(ErrorKind::BadArgument, "functor '" + raw.name + "' declares source space '" +
                                                raw.src_space + "' but was given '" + src.name() + "'");
    }
    if (!raw.dst_space.empty() && raw.dst_space != dst.name()) {
        throw Error(ErrorKind::BadArgument, "functor '" + raw.name + "' declares target space '" +
                                                raw.dst_space + "' but was given '" + dst.name() + "'");
    }

    DiagramMorphism f;
    f.name_ = raw.name;
    f.obj_map_.assign(src.cat().object_count(), -1);
    f.mor_map_.assign(src.cat().morphism_count(), MorRef{});

    for (const auto& [from, to] : raw.obj_map) {
        int a = src.cat().object_index(from);
        int b = dst.cat().object_index(to);
        if (a < 0) throw Error(ErrorKind::UnknownObject, "objmap source '" + from + "'");
        if (b < 0) throw Error(ErrorKind::UnknownObject, "objmap target '" + to + "'");
        if (f.obj_map_[a] >= 0) throw Error(ErrorKind::DuplicateId, "objmap assigns '" + from + "' twice");
        f.obj_map_[a] = b;
    }
    for (int i = 0; i < src.cat().object_count(); ++i) {
        if (f.obj_map_[i] < 0) {
            throw Error(ErrorKind::MissingAssignment,
                        "objmap misses object '" + src.cat().object_name(i) + "'");
        }
    }

    std::vector<bool> mapped(src.cat().morphism_count(), false);
    for (const auto& [from, to] : raw.mor_map) {
        auto a = src.cat().morphism_ref(from);
        if (!a) throw Error(ErrorKind::UnknownMorphism, "mormap source '" + from + "'");
        if (a->identity) {
            throw Error(ErrorKind::RedundantCompose,
                        "mormap for identity '" + from + "'; identities map implicitly");
        }
        auto b = dst.cat().morphism_ref(to);
        if (!b) throw Error(ErrorKind::UnknownMorphism, "mormap target '" + to + "'");
        if (mapped[a->index]) throw Error(ErrorKind::DuplicateId, "mormap assigns '" + from + "' twice");
        mapped[a->index] = true;
        f.mor_map_[a->index] = *b;
    }
    for (int i = 0; i < src.cat().morphism_count(); ++i) {
        if (!mapped[i]) {
            throw Error(ErrorKind::MissingAssignment,
                        "mormap misses morphism '" + src.cat().morphism(i).id + "'");
        }
    }

    // Functor laws plus the two preservation invariants.
    for (int i = 0; i < src.cat().object_count(); ++i) {
        if (dst.dim(f.obj_map_[i]) != src.dim(i)) {
            throw Error(ErrorKind::DimensionChanged,
                        "object '" + src.cat().object_name(i) + "' (dim " + std::to_string(src.dim(i)) +
                            ") maps to '" + dst.cat().object_name(f.obj_map_[i]) + "' (dim " +
                            std::to_string(dst.dim(f.obj_map_[i])) + ")");
        }
    }
    for (int i = 0; i < src.cat().morphism_count(); ++i) {
        const Morphism& m = src.cat().morphism(i);
        MorRef image = f.mor_map_[i];
        if (dst.cat().ref_src(image) != f.obj_map_[m.src] ||
            dst.cat().ref_dst(image) != f.obj_map_[m.dst]) {
            throw Error(ErrorKind::NotAFunctor,
                        "morphism '" + m.id + "' maps to '" + dst.cat().ref_name(image) +
                            "' with mismatched endpoints");
        }
        if (dst.jac(image) != src.declared_jac(i)) {
            throw Error(ErrorKind::JacobianChanged,
                        "morphism '" + m.id + "': Jacobian " + src.declared_jac(i).to_string() +
                            " maps to " + dst.jac(image).to_string());
        }
    }
    const int m = src.cat().morphism_count();
    for (int g = 0; g < m; ++g) {
        for (int ff = 0; ff < m; ++ff) {
            if (src.cat().morphism(ff).dst != src.cat().morphism(g).src) continue;
            MorRef h = src.cat().compose(MorRef::declared(g), MorRef::declared(ff));
            MorRef lhs = f.map_ref(h);
            MorRef rhs = dst.cat().compose(f.mor_map_[g], f.mor_map_[ff]);
            if (lhs != rhs) {
                throw Error(ErrorKind::NotAFunctor,
                            "composition not preserved on (" + src.cat().morphism(g).id + ", " +
                                src.cat().morphism(ff).id + ")");
            }
        }
    }

    return f;
}

DiagramMorphism DiagramMorphism::identity(const TangentDiagram& d) {
    DiagramMorphism f;
    f.name_ = "identity";
    f.obj_map_.resize(d.cat().object_count());
    for (int i = 0; i < d.cat().object_count(); ++i) f.obj_map_[i] = i;
    f.mor_map_.resize(d.cat().morphism_count());
    for (int i = 0; i < d.cat().morphism_count(); ++i) f.mor_map_[i] = MorRef::declared(i);
    return f;
}

namespace {

// Pair names stay inside the token alphabet; identity components use the
// "id-" spelling since ':' is not a token character. Collisions get a
// numeric suffix so the product always validates.
std::string pair_name(const std::string& a, const std::string& b,
                      std::unordered_set<std::string>& used) {
    auto sanitize = [](std::string s) {
        for (auto& c : s) {
            if (c == ':') c = '-';
        }
        return s;
    };
    std::string base = sanitize(a) + "__" + sanitize(b);
    std::string name = base;
    int suffix = 2;
    while (!used.insert(name).second) {
        name = base + "_" + std::to_string(suffix++);
    }
    return name;
}

} // namespace

TangentDiagram product_diagram(const TangentDiagram& a, const TangentDiagram& b) {
    RawPresentation raw;
    raw.space = a.name() + "_x_" + b.name();

    const int na = a.cat().object_count();
    const int nb = b.cat().object_count();
    std::unordered_set<std::string> used_objects;
    std::vector<std::vector<std::string>> obj_name(na, std::vector<std::string>(nb));
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < nb; ++j) {
            obj_name[i][j] = pair_name(a.cat().object_name(i), b.cat().object_name(j), used_objects);
            raw.objects.push_back(RawObject{obj_name[i][j], a.dim(i) + b.dim(j), false});
        }
    }

    const auto mors_a = a.cat().all_morphisms();
    const auto mors_b = b.cat().all_morphisms();
    std::unordered_set<std::string> used_morphisms;
    std::vector<std::vector<std::string>> mor_name(mors_a.size(), std::vector<std::string>(mors_b.size()));
    auto is_identity_pair = [&](size_t i, size_t j) { return mors_a[i].identity && mors_b[j].identity; };

    auto jac_rows_of = [](const Matrix& m) {
        std::vector<std::vector<Rational>> rows(m.rows());
        for (int r = 0; r < m.rows(); ++r) {
            rows[r].resize(m.cols());
            for (int c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
        }
        return rows;
    };

    for (size_t i = 0; i < mors_a.size(); ++i) {
        for (size_t j = 0; j < mors_b.size(); ++j) {
            if (is_identity_pair(i, j)) continue;
            mor_name[i][j] =
                pair_name(a.cat().ref_name(mors_a[i]), b.cat().ref_name(mors_b[j]), used_morphisms);
            Matrix jac = Matrix::block_diag(a.jac(mors_a[i]), b.jac(mors_b[j]));
            raw.morphisms.push_back(RawDiagramMorphism{
                mor_name[i][j],
                obj_name[a.cat().ref_src(mors_a[i])][b.cat().ref_src(mors_b[j])],
                obj_name[a.cat().ref_dst(mors_a[i])][b.cat().ref_dst(mors_b[j])],
                jac_rows_of(jac)});
        }
    }

    auto name_of_pair = [&](MorRef ma, MorRef mb) -> std::string {
        if (ma.identity && mb.identity) {
            return "id:" + obj_name[ma.index][mb.index];
        }
        for (size_t i = 0; i < mors_a.size(); ++i) {
            for (size_t j = 0; j < mors_b.size(); ++j) {
                if (mors_a[i] == ma && mors_b[j] == mb) return mor_name[i][j];
            }
        }
        return {};
    };

    for (size_t gi = 0; gi < mors_a.size(); ++gi) {
        for (size_t gj = 0; gj < mors_b.size(); ++gj) {
            if (is_identity_pair(gi, gj)) continue;
            for (size_t fi = 0; fi < mors_a.size(); ++fi) {
                for (size_t fj = 0; fj < mors_b.size(); ++fj) {
                    if (is_identity_pair(fi, fj)) continue;
                    if (a.cat().ref_dst(mors_a[fi]) != a.cat().ref_src(mors_a[gi])) continue;
                    if (b.cat().ref_dst(mors_b[fj]) != b.cat().ref_src(mors_b[gj])) continue;
                    MorRef ha = a.cat().compose(mors_a[gi], mors_a[fi]);
                    MorRef hb = b.cat().compose(mors_b[gj], mors_b[fj]);
                    raw.composition.push_back(
                        RawCompose{mor_name[gi][gj], mor_name[fi][fj], name_of_pair(ha, hb)});
                }
            }
        }
    }

    return TangentDiagram::validate(raw);
}

} // namespace difftan
