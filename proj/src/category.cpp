#include "category.hpp"

#include <algorithm>

namespace difftan {

namespace {

bool valid_token(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '_' || c == '-';
        if (!ok) return false;
    }
    return true;
}

} // namespace

FiniteCategory FiniteCategory::validate(const RawCategoryData& raw) {
    FiniteCategory cat;

    for (const auto& name : raw.objects) {
        if (!valid_token(name)) {
            throw Error(ErrorKind::InvalidName, "object name '" + name + "'");
        }
        if (cat.object_index_.count(name)) {
            throw Error(ErrorKind::DuplicateId, "object '" + name + "' declared twice");
        }
        cat.object_index_[name] = static_cast<int>(cat.objects_.size());
        cat.objects_.push_back(name);
    }

    for (const auto& rm : raw.morphisms) {
        if (!valid_token(rm.id)) {
            throw Error(ErrorKind::InvalidName, "morphism name '" + rm.id + "'");
        }
        if (cat.morphism_index_.count(rm.id)) {
            throw Error(ErrorKind::DuplicateId, "morphism '" + rm.id + "' declared twice");
        }
        auto src = cat.object_index_.find(rm.src);
        auto dst = cat.object_index_.find(rm.dst);
        if (src == cat.object_index_.end()) {
            throw Error(ErrorKind::UnknownObject, "morphism '" + rm.id + "' source '" + rm.src + "'");
        }
        if (dst == cat.object_index_.end()) {
            throw Error(ErrorKind::UnknownObject, "morphism '" + rm.id + "' target '" + rm.dst + "'");
        }
        cat.morphism_index_[rm.id] = static_cast<int>(cat.morphisms_.size());
        cat.morphisms_.push_back(Morphism{rm.id, src->second, dst->second});
    }

    const int m = cat.morphism_count();
    cat.table_.assign(m, std::vector<MorRef>(m));
    std::vector<std::vector<bool>> assigned(m, std::vector<bool>(m, false));

    for (const auto& rc : raw.composition) {
        auto g = cat.morphism_ref(rc.g);
        auto f = cat.morphism_ref(rc.f);
        auto h = cat.morphism_ref(rc.h);
        if (!g) throw Error(ErrorKind::UnknownMorphism, "compose references '" + rc.g + "'");
        if (!f) throw Error(ErrorKind::UnknownMorphism, "compose references '" + rc.f + "'");
        if (!h) throw Error(ErrorKind::UnknownMorphism, "compose references '" + rc.h + "'");
        if (g->identity || f->identity) {
            throw Error(ErrorKind::RedundantCompose,
                        "compose " + rc.g + " " + rc.f + " involves an identity; identity composition is implicit");
        }
        if (cat.ref_dst(*f) != cat.ref_src(*g)) {
            throw Error(ErrorKind::BadComposite,
                        "compose " + rc.g + " " + rc.f + ": pair is not composable");
        }
        if (cat.ref_src(*h) != cat.ref_src(*f) || cat.ref_dst(*h) != cat.ref_dst(*g)) {
            throw Error(ErrorKind::BadComposite,
                        "compose " + rc.g + " " + rc.f + " = " + rc.h + ": endpoints do not match");
        }
        if (assigned[g->index][f->index]) {
            throw Error(ErrorKind::DuplicateId,
                        "compose " + rc.g + " " + rc.f + " assigned twice");
        }
        assigned[g->index][f->index] = true;
        cat.table_[g->index][f->index] = *h;
    }

    // Totality on composable non-identity pairs.
    for (int g = 0; g < m; ++g) {
        for (int f = 0; f < m; ++f) {
            if (cat.morphisms_[f].dst != cat.morphisms_[g].src) continue;
            if (!assigned[g][f]) {
                throw Error(ErrorKind::MissingComposite,
                            "no table entry for " + cat.morphisms_[g].id + " o " + cat.morphisms_[f].id);
            }
        }
    }

    // Associativity on every composable triple; identity laws hold by the
    // definition of compose.
    for (int f = 0; f < m; ++f) {
        for (int g = 0; g < m; ++g) {
            if (cat.morphisms_[f].dst != cat.morphisms_[g].src) continue;
            for (int h = 0; h < m; ++h) {
                if (cat.morphisms_[g].dst != cat.morphisms_[h].src) continue;
                MorRef left = cat.compose(MorRef::declared(h),
                                          cat.compose(MorRef::declared(g), MorRef::declared(f)));
                MorRef right = cat.compose(cat.compose(MorRef::declared(h), MorRef::declared(g)),
                                           MorRef::declared(f));
                if (left != right) {
                    throw Error(ErrorKind::NonAssociative,
                                "(" + cat.morphisms_[h].id + " o " + cat.morphisms_[g].id + ") o " +
                                    cat.morphisms_[f].id + " differs from " + cat.morphisms_[h].id +
                                    " o (" + cat.morphisms_[g].id + " o " + cat.morphisms_[f].id + ")");
                }
            }
        }
    }

    return cat;
}

int FiniteCategory::object_index(const std::string& name) const {
    auto it = object_index_.find(name);
    return it == object_index_.end() ? -1 : it->second;
}

std::optional<MorRef> FiniteCategory::morphism_ref(const std::string& name) const {
    if (name.rfind("id:", 0) == 0) {
        int obj = object_index(name.substr(3));
        if (obj < 0) return std::nullopt;
        return MorRef::id_of(obj);
    }
    auto it = morphism_index_.find(name);
    if (it == morphism_index_.end()) return std::nullopt;
    return MorRef::declared(it->second);
}

std::string FiniteCategory::ref_name(MorRef m) const {
    return m.identity ? "id:" + objects_[m.index] : morphisms_[m.index].id;
}

MorRef FiniteCategory::compose(MorRef g, MorRef f) const {
    if (f.identity) return g;
    if (g.identity) return f;
    return table_[g.index][f.index];
}

std::vector<MorRef> FiniteCategory::all_morphisms() const {
    std::vector<MorRef> out;
    out.reserve(objects_.size() + morphisms_.size());
    for (int i = 0; i < object_count(); ++i) out.push_back(MorRef::id_of(i));
    for (int i = 0; i < morphism_count(); ++i) out.push_back(MorRef::declared(i));
    return out;
}

std::vector<MorRef> FiniteCategory::hom(int src, int dst) const {
    std::vector<MorRef> out;
    if (src == dst) out.push_back(MorRef::id_of(src));
    for (int i = 0; i < morphism_count(); ++i) {
        if (morphisms_[i].src == src && morphisms_[i].dst == dst) {
            out.push_back(MorRef::declared(i));
        }
    }
    return out;
}

WeakFilteredness is_weakly_filtered(const FiniteCategory& cat) {
    WeakFilteredness result;
    const int n = cat.object_count();
    if (n == 0) {
        result.empty = true;
        return result;
    }
    std::vector<std::vector<bool>> reaches(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) reaches[i][i] = true;
    for (int m = 0; m < cat.morphism_count(); ++m) {
        reaches[cat.morphism(m).src][cat.morphism(m).dst] = true;
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            bool found = false;
            for (int e = 0; e < n && !found; ++e) {
                found = reaches[a][e] && reaches[b][e];
            }
            if (!found) {
                result.witness_pair = {a, b};
                return result;
            }
        }
    }
    result.weakly_filtered = true;
    return result;
}

FilterednessReport is_filtered(const FiniteCategory& cat) {
    FilterednessReport report;
    WeakFilteredness weak = is_weakly_filtered(cat);
    report.weakly_filtered = weak.weakly_filtered;
    if (!weak.weakly_filtered) {
        if (weak.empty) {
            report.witness = FilterednessReport::Witness::Empty;
        } else {
            report.witness = FilterednessReport::Witness::ObjectPair;
            report.object_pair = *weak.witness_pair;
        }
        return report;
    }

    const auto all = cat.all_morphisms();
    for (size_t i = 0; i < all.size(); ++i) {
        for (size_t j = i + 1; j < all.size(); ++j) {
            MorRef f = all[i];
            MorRef g = all[j];
            if (cat.ref_src(f) != cat.ref_src(g) || cat.ref_dst(f) != cat.ref_dst(g)) continue;
            const int d = cat.ref_dst(f);
            bool coequalized = false;
            for (MorRef h : all) {
                if (cat.ref_src(h) != d) continue;
                if (cat.compose(h, f) == cat.compose(h, g)) {
                    coequalized = true;
                    break;
                }
            }
            if (!coequalized) {
                report.witness = FilterednessReport::Witness::ParallelPair;
                report.parallel_pair = {f, g};
                return report;
            }
        }
    }
    report.filtered = true;
    return report;
}

std::vector<MorRef> monomorphisms(const FiniteCategory& cat) {
    std::vector<MorRef> out;
    const auto all = cat.all_morphisms();
    for (MorRef m : all) {
        const int src = cat.ref_src(m);
        bool monic = true;
        for (size_t i = 0; i < all.size() && monic; ++i) {
            MorRef f = all[i];
            if (cat.ref_dst(f) != src) continue;
            for (size_t j = i + 1; j < all.size() && monic; ++j) {
                MorRef g = all[j];
                if (cat.ref_dst(g) != src || cat.ref_src(f) != cat.ref_src(g)) continue;
                if (cat.compose(m, f) == cat.compose(m, g)) monic = false;
            }
        }
        if (monic) out.push_back(m);
    }
    return out;
}

InjectiveGenerationReport check_injective_generation(const FiniteCategory& cat,
                                                     const std::vector<int>& separated) {
    std::vector<bool> is_separated(cat.object_count(), false);
    for (int obj : separated) {
        if (obj < 0 || obj >= cat.object_count()) {
            throw Error(ErrorKind::UnknownObject, "separated object index out of range");
        }
        is_separated[obj] = true;
    }

    // Surrogate separation condition: hom-sets into a separated object never
    // contain two distinct parallel morphisms.
    const auto all = cat.all_morphisms();
    for (size_t i = 0; i < all.size(); ++i) {
        for (size_t j = i + 1; j < all.size(); ++j) {
            MorRef f = all[i];
            MorRef g = all[j];
            if (cat.ref_src(f) != cat.ref_src(g) || cat.ref_dst(f) != cat.ref_dst(g)) continue;
            if (is_separated[cat.ref_dst(f)]) {
                throw Error(ErrorKind::SeparationViolation,
                            "distinct parallel morphisms " + cat.ref_name(f) + ", " + cat.ref_name(g) +
                                " into separated object '" + cat.object_name(cat.ref_dst(f)) + "'");
            }
        }
    }

    InjectiveGenerationReport report;
    bool generated = cat.object_count() > 0;
    for (int obj = 0; obj < cat.object_count() && generated; ++obj) {
        bool covered = is_separated[obj];
        for (int m = 0; m < cat.morphism_count() && !covered; ++m) {
            covered = cat.morphism(m).src == obj && is_separated[cat.morphism(m).dst];
        }
        generated = covered;
    }
    report.injectively_generated = generated;

    FilterednessReport direct = is_filtered(cat);
    report.derived_filtered = direct.weakly_filtered && generated;
    if (report.derived_filtered && !direct.filtered) {
        throw Error(ErrorKind::Inconsistent,
                    "separated flags imply filteredness but a parallel pair has no coequalizer");
    }
    return report;
}

} // namespace difftan
