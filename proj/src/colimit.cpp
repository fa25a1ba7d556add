#include "colimit.hpp"

#include <algorithm>
#include <map>

namespace difftan {

namespace {

std::vector<int> object_offsets(const TangentDiagram& d) {
    std::vector<int> offsets(d.cat().object_count() + 1, 0);
    for (int i = 0; i < d.cat().object_count(); ++i) {
        offsets[i + 1] = offsets[i] + d.dim(i);
    }
    return offsets;
}

// Relation columns: one block per non-identity morphism f: r -> q, one
// column per basis vector e of T_0(U_r), holding ι_r(e) - ι_q(jac(f)·e).
// Identity morphisms contribute only zero columns and are omitted.
Matrix relation_matrix(const TangentDiagram& d, const std::vector<int>& offsets) {
    const int total = offsets.back();
    int cols = 0;
    for (int m = 0; m < d.cat().morphism_count(); ++m) {
        cols += d.dim(d.cat().morphism(m).src);
    }
    Matrix r(total, cols);
    int col = 0;
    for (int m = 0; m < d.cat().morphism_count(); ++m) {
        const Morphism& mor = d.cat().morphism(m);
        const Matrix& jac = d.declared_jac(m);
        for (int e = 0; e < d.dim(mor.src); ++e, ++col) {
            r.at(offsets[mor.src] + e, col) += 1;
            for (int row = 0; row < d.dim(mor.dst); ++row) {
                r.at(offsets[mor.dst] + row, col) -= jac.at(row, e);
            }
        }
    }
    return r;
}

std::vector<Rational> flatten(const std::vector<int>& offsets, const FormalVector& w) {
    std::vector<Rational> v(offsets.back(), Rational(0));
    for (const auto& [obj, coords] : w.terms) {
        for (size_t i = 0; i < coords.size(); ++i) {
            v[offsets[obj] + i] += coords[i];
        }
    }
    return v;
}

} // namespace

FormalVector normalize(const TangentDiagram& d, const FormalVector& w) {
    std::map<int, std::vector<Rational>> acc;
    for (const auto& [obj, coords] : w.terms) {
        if (obj < 0 || obj >= d.cat().object_count()) {
            throw Error(ErrorKind::UnknownObject, "formal vector references object index " +
                                                      std::to_string(obj));
        }
        if (static_cast<int>(coords.size()) != d.dim(obj)) {
            throw Error(ErrorKind::LengthMismatch,
                        "term for object '" + d.cat().object_name(obj) + "' has " +
                            std::to_string(coords.size()) + " coordinates, dim is " +
                            std::to_string(d.dim(obj)));
        }
        auto [it, fresh] = acc.emplace(obj, coords);
        if (!fresh) {
            for (size_t i = 0; i < coords.size(); ++i) it->second[i] += coords[i];
        }
    }
    FormalVector out;
    for (auto& [obj, coords] : acc) {
        out.terms.emplace_back(obj, std::move(coords));
    }
    return out;
}

TangentSpace tangent_space(const TangentDiagram& d) {
    const auto offsets = object_offsets(d);
    const int total = offsets.back();

    // Row-reduce the transposed relation matrix; the RREF rows span R and the
    // non-pivot coordinates of F index a basis of the quotient.
    Matrix relations = relation_matrix(d, offsets);
    Matrix rows(relations.cols(), total);
    for (int i = 0; i < relations.cols(); ++i) {
        for (int j = 0; j < total; ++j) rows.at(i, j) = relations.at(j, i);
    }
    RrefResult red = rref(rows);

    std::vector<bool> is_pivot(total, false);
    for (int p : red.pivot_cols) is_pivot[p] = true;
    std::vector<int> quotient_coord(total, -1);
    int dim = 0;
    for (int j = 0; j < total; ++j) {
        if (!is_pivot[j]) quotient_coord[j] = dim++;
    }

    // Class coordinates of a basis vector e_j: reduce modulo the RREF rows,
    // then read off the non-pivot coordinates.
    auto classify = [&](int j) {
        std::vector<Rational> v(total, Rational(0));
        v[j] = 1;
        for (int r = 0; r < red.rank; ++r) {
            const int p = red.pivot_cols[r];
            if (v[p] == 0) continue;
            Rational factor = v[p];
            for (int c = p; c < total; ++c) {
                v[c] -= factor * red.reduced.at(r, c);
            }
        }
        std::vector<Rational> cls(dim, Rational(0));
        for (int c = 0; c < total; ++c) {
            if (quotient_coord[c] >= 0) cls[quotient_coord[c]] = v[c];
        }
        return cls;
    };

    TangentSpace t;
    t.dimension = dim;
    for (int obj = 0; obj < d.cat().object_count(); ++obj) {
        Matrix p(dim, d.dim(obj));
        for (int e = 0; e < d.dim(obj); ++e) {
            auto cls = classify(offsets[obj] + e);
            for (int r = 0; r < dim; ++r) p.at(r, e) = cls[r];
        }
        t.projections.push_back(std::move(p));
    }
    return t;
}

std::vector<Rational> push_class(const TangentDiagram& d, const TangentSpace& t,
                                 const FormalVector& w) {
    FormalVector nw = normalize(d, w);
    std::vector<Rational> out(t.dimension, Rational(0));
    for (const auto& [obj, coords] : nw.terms) {
        auto part = t.projections[obj].apply(coords);
        for (int i = 0; i < t.dimension; ++i) out[i] += part[i];
    }
    return out;
}

ZeroDecision is_zero(const TangentDiagram& d, const FormalVector& w) {
    const auto offsets = object_offsets(d);
    FormalVector nw = normalize(d, w);
    std::vector<Rational> target = flatten(offsets, nw);

    Matrix relations = relation_matrix(d, offsets);
    ZeroDecision decision;
    auto coeffs = solve(relations, target);
    if (!coeffs) {
        decision.zero = false;
        TangentSpace t = tangent_space(d);
        decision.class_coords = push_class(d, t, nw);
        return decision;
    }
    decision.zero = true;
    RelationDecomposition decomp;
    int col = 0;
    for (int m = 0; m < d.cat().morphism_count(); ++m) {
        const int n = d.dim(d.cat().morphism(m).src);
        std::vector<Rational> v(coeffs->begin() + col, coeffs->begin() + col + n);
        col += n;
        if (!all_zero(v)) decomp.summands.emplace_back(m, std::move(v));
    }
    decision.decomposition = std::move(decomp);
    return decision;
}

std::optional<SinglePlotWitness> single_plot_witness(const TangentDiagram& d, const FormalVector& w) {
    FormalVector nw = normalize(d, w);
    const int k = static_cast<int>(nw.terms.size());

    for (int target = 0; target < d.cat().object_count(); ++target) {
        std::vector<std::vector<MorRef>> homs(k);
        bool feasible = true;
        for (int i = 0; i < k && feasible; ++i) {
            homs[i] = d.cat().hom(nw.terms[i].first, target);
            feasible = !homs[i].empty();
        }
        if (!feasible) continue;

        std::vector<size_t> choice(k, 0);
        while (true) {
            std::vector<Rational> sum(d.dim(target), Rational(0));
            for (int i = 0; i < k; ++i) {
                auto part = d.jac(homs[i][choice[i]]).apply(nw.terms[i].second);
                for (size_t c = 0; c < part.size(); ++c) sum[c] += part[c];
            }
            if (all_zero(sum)) {
                SinglePlotWitness witness;
                witness.target = target;
                for (int i = 0; i < k; ++i) {
                    witness.term_objects.push_back(nw.terms[i].first);
                    witness.germs.push_back(homs[i][choice[i]]);
                }
                return witness;
            }
            int pos = k - 1;
            while (pos >= 0 && ++choice[pos] == homs[pos].size()) {
                choice[pos--] = 0;
            }
            if (pos < 0) break;
        }
    }
    return std::nullopt;
}

Matrix induced_map(const DiagramMorphism& phi, const TangentDiagram& src, const TangentSpace& t_src,
                   const TangentDiagram& /*dst*/, const TangentSpace& t_dst) {
    // Each quotient basis class of the source is hit by some projection
    // column (the stacked projections contain, per construction, a basis of
    // standard vectors); its image class gives the corresponding column of M.
    Matrix m(t_dst.dimension, t_src.dimension);
    std::vector<bool> determined(t_src.dimension, false);
    int found = 0;
    for (int obj = 0; obj < src.cat().object_count() && found < t_src.dimension; ++obj) {
        const Matrix& p = t_src.projections[obj];
        for (int e = 0; e < p.cols() && found < t_src.dimension; ++e) {
            int hit = -1;
            for (int r = 0; r < p.rows(); ++r) {
                if (p.at(r, e) == 0) continue;
                if (hit >= 0 || p.at(r, e) != 1) {
                    hit = -2;
                    break;
                }
                hit = r;
            }
            if (hit < 0 || determined[hit]) continue;
            auto image = t_dst.projections[phi.map_object(obj)].column(e);
            for (int r = 0; r < t_dst.dimension; ++r) m.at(r, hit) = image[r];
            determined[hit] = true;
            ++found;
        }
    }
    if (found < t_src.dimension) {
        throw Error(ErrorKind::Inconsistent, "source projections do not exhibit a quotient basis");
    }
    for (int obj = 0; obj < src.cat().object_count(); ++obj) {
        if (m * t_src.projections[obj] != t_dst.projections[phi.map_object(obj)]) {
            throw Error(ErrorKind::Inconsistent,
                        "no linear map is compatible with the projections at object '" +
                            src.cat().object_name(obj) + "'");
        }
    }
    return m;
}

OneRepResult is_one_representable(const TangentSpace& t) {
    OneRepResult result;
    for (size_t obj = 0; obj < t.projections.size(); ++obj) {
        if (rank(t.projections[obj]) == t.dimension) {
            result.one_representable = true;
            result.witness_object = static_cast<int>(obj);
            return result;
        }
    }
    return result;
}

} // namespace difftan
