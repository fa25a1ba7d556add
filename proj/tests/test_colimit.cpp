#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "oracle.hpp"
#include "parse.hpp"

using namespace difftan;

namespace {

TangentDiagram load(const std::string& text) {
    return TangentDiagram::validate(parse_presentation(text));
}

const char* kOrbifold =
    "space orbifold\n"
    "object q dim 1\n"
    "morphism s : q -> q jac [[-1]]\n"
    "compose s s = id:q\n";

const char* kTorusTotal =
    "space torus-total\n"
    "object u dim 1\n"
    "object c dim 1\n"
    "morphism j : c -> u jac [[0]]\n"
    "morphism z : c -> c jac [[0]]\n"
    "compose j z = j\n"
    "compose z z = z\n";

const char* kAxes =
    "space axes-cross\n"
    "object a1 dim 1\n"
    "object a2 dim 1\n";

// Re-sums a decomposition by plain coordinate arithmetic and compares with
// the normalized input.
bool decomposition_resums(const TangentDiagram& d, const RelationDecomposition& decomp,
                          const FormalVector& w) {
    std::vector<int> offset(d.cat().object_count() + 1, 0);
    for (int i = 0; i < d.cat().object_count(); ++i) offset[i + 1] = offset[i] + d.dim(i);
    std::vector<Rational> sum(offset.back(), Rational(0));
    for (const auto& [mor, v] : decomp.summands) {
        const Morphism& m = d.cat().morphism(mor);
        for (size_t i = 0; i < v.size(); ++i) sum[offset[m.src] + i] += v[i];
        auto jv = d.declared_jac(mor).apply(v);
        for (size_t i = 0; i < jv.size(); ++i) sum[offset[m.dst] + i] -= jv[i];
    }
    for (const auto& [obj, coords] : w.terms) {
        for (size_t i = 0; i < coords.size(); ++i) sum[offset[obj] + i] -= coords[i];
    }
    return all_zero(sum);
}

void check_cocone_compatibility(const TangentDiagram& d, const TangentSpace& t) {
    for (MorRef m : d.cat().all_morphisms()) {
        CHECK(t.projections[d.cat().ref_dst(m)] * d.jac(m) == t.projections[d.cat().ref_src(m)]);
    }
}

} // namespace

TEST_CASE("euclidean models have identity projections") {
    for (int n = 0; n <= 4; ++n) {
        TangentDiagram d = load("space e\nobject u dim " + std::to_string(n) + "\n");
        TangentSpace t = tangent_space(d);
        CHECK(t.dimension == n);
        CHECK(t.projections[0] == Matrix::identity(n));
    }
}

TEST_CASE("orbifold tangent space is zero") {
    TangentDiagram d = load(kOrbifold);
    TangentSpace t = tangent_space(d);
    CHECK(t.dimension == 0);
    CHECK(push_class(d, t, FormalVector{{{0, {rat(5)}}}}).empty());
}

TEST_CASE("axes cross keeps both generators") {
    TangentDiagram d = load(kAxes);
    TangentSpace t = tangent_space(d);
    CHECK(t.dimension == 2);
    CHECK(t.projections[0].to_string() == "[[1],[0]]");
    CHECK(t.projections[1].to_string() == "[[0],[1]]");
    auto onerep = is_one_representable(t);
    CHECK_FALSE(onerep.one_representable);
}

TEST_CASE("irrational torus total space has tangent dimension 1") {
    TangentDiagram d = load(kTorusTotal);
    TangentSpace t = tangent_space(d);
    CHECK(t.dimension == 1);
    CHECK(t.projections[0].to_string() == "[[1]]"); // identity chart u
    CHECK(t.projections[1].to_string() == "[[0]]"); // constant plot c
    check_cocone_compatibility(d, t);
}

TEST_CASE("empty diagram yields the zero space") {
    TangentDiagram d = load("space empty\n");
    TangentSpace t = tangent_space(d);
    CHECK(t.dimension == 0);
    CHECK_FALSE(is_one_representable(t).one_representable);
}

TEST_CASE("push_class is linear and identity on the euclidean model") {
    TangentDiagram d = load("space e\nobject u dim 2\n");
    TangentSpace t = tangent_space(d);
    auto cls = push_class(d, t, FormalVector{{{0, {rat(1), rat(0)}}}});
    CHECK(cls == std::vector<Rational>{rat(1), rat(0)});
    CHECK(all_zero(push_class(d, t, FormalVector{})));
}

TEST_CASE("is_zero on the orbifold produces the halved decomposition") {
    TangentDiagram d = load(kOrbifold);
    FormalVector w{{{0, {rat(1)}}}};
    ZeroDecision decision = is_zero(d, w);
    REQUIRE(decision.zero);
    REQUIRE(decision.decomposition->summands.size() == 1);
    CHECK(decision.decomposition->summands[0].first == 0);
    CHECK(decision.decomposition->summands[0].second == std::vector<Rational>{rat(1, 2)});
    CHECK(decomposition_resums(d, *decision.decomposition, normalize(d, w)));
}

TEST_CASE("is_zero is false on a faithful summand") {
    TangentDiagram d = load("space e\nobject u dim 2\n");
    ZeroDecision decision = is_zero(d, FormalVector{{{0, {rat(1), rat(0)}}}});
    CHECK_FALSE(decision.zero);
    CHECK(decision.class_coords == std::vector<Rational>{rat(1), rat(0)});
}

TEST_CASE("is_zero on the torus constant object uses the zero-Jacobian arrow") {
    TangentDiagram d = load(kTorusTotal);
    FormalVector w{{{1, {rat(3)}}}}; // (c, [3])
    ZeroDecision decision = is_zero(d, w);
    REQUIRE(decision.zero);
    REQUIRE(decision.decomposition->summands.size() == 1);
    CHECK(d.cat().morphism(decision.decomposition->summands[0].first).id == "j");
    CHECK(decision.decomposition->summands[0].second == std::vector<Rational>{rat(3)});
    CHECK(decomposition_resums(d, *decision.decomposition, normalize(d, w)));
}

TEST_CASE("duplicate terms are summed during normalization") {
    TangentDiagram d = load(kOrbifold);
    FormalVector w{{{0, {rat(1)}}, {0, {rat(-1)}}}};
    FormalVector n = normalize(d, w);
    REQUIRE(n.terms.size() == 1);
    CHECK(n.terms[0].second == std::vector<Rational>{rat(0)});
    CHECK(is_zero(d, w).zero);
}

TEST_CASE("formal vector validation") {
    TangentDiagram d = load(kOrbifold);
    CHECK_THROWS_AS(normalize(d, FormalVector{{{3, {rat(1)}}}}), Error);
    CHECK_THROWS_AS(normalize(d, FormalVector{{{0, {rat(1), rat(2)}}}}), Error);
}

TEST_CASE("single plot witness on the torus model") {
    TangentDiagram d = load(kTorusTotal);
    auto witness = single_plot_witness(d, FormalVector{{{1, {rat(3)}}}});
    REQUIRE(witness.has_value());
    CHECK(d.cat().object_name(witness->target) == "u");
    REQUIRE(witness->germs.size() == 1);
    CHECK(d.cat().ref_name(witness->germs[0]) == "j");
}

TEST_CASE("nonzero classes have no witness") {
    TangentDiagram d = load("space e\nobject u dim 1\n");
    CHECK_FALSE(single_plot_witness(d, FormalVector{{{0, {rat(1)}}}}).has_value());
}

TEST_CASE("the orbifold breaks the witness correspondence") {
    // (q, [1]) is zero in the tangent space, but neither endomorphism kills
    // it: the diagram is not filtered and the Set-level colimit differs.
    TangentDiagram d = load(kOrbifold);
    FormalVector w{{{0, {rat(1)}}}};
    CHECK(is_zero(d, w).zero);
    CHECK_FALSE(single_plot_witness(d, w).has_value());
}

TEST_CASE("empty vector witness lands on the first object") {
    TangentDiagram d = load(kTorusTotal);
    auto witness = single_plot_witness(d, FormalVector{});
    REQUIRE(witness.has_value());
    CHECK(witness->target == 0);
    CHECK(witness->germs.empty());
    CHECK_FALSE(single_plot_witness(load("space empty\n"), FormalVector{}).has_value());
}

TEST_CASE("induced map of the identity is the identity") {
    gen::Rng rng(61803);
    for (int i = 0; i < 20; ++i) {
        TangentDiagram d = gen::random_diagram(rng, 4, 2);
        TangentSpace t = tangent_space(d);
        Matrix m = induced_map(DiagramMorphism::identity(d), d, t, d, t);
        CHECK(m == Matrix::identity(t.dimension));
    }
}

TEST_CASE("induced maps compose: fold after inclusion is the identity") {
    gen::Rng rng(14142);
    for (int i = 0; i < 15; ++i) {
        TangentDiagram d = gen::random_weakly_filtered_diagram(rng, 3, 2);
        TangentDiagram doubled = gen::disjoint_union(d, d);

        auto make = [&](const std::string& suffix, const TangentDiagram& from,
                        const TangentDiagram& to, bool forward) {
            RawFunctor raw;
            raw.name = "f";
            for (int o = 0; o < from.cat().object_count(); ++o) {
                std::string name = from.cat().object_name(o);
                raw.obj_map.emplace_back(name, forward ? name + suffix
                                                       : name.substr(0, name.size() - suffix.size()));
            }
            for (int m = 0; m < from.cat().morphism_count(); ++m) {
                std::string name = from.cat().morphism(m).id;
                raw.mor_map.emplace_back(name, forward ? name + suffix
                                                       : name.substr(0, name.size() - suffix.size()));
            }
            return DiagramMorphism::validate(raw, from, to);
        };

        DiagramMorphism include_left = make("_l", d, doubled, true);
        TangentSpace t = tangent_space(d);
        TangentSpace t2 = tangent_space(doubled);
        Matrix m_in = induced_map(include_left, d, t, doubled, t2);

        // Fold both copies back onto d.
        RawFunctor fold_raw;
        fold_raw.name = "fold";
        for (int o = 0; o < doubled.cat().object_count(); ++o) {
            std::string name = doubled.cat().object_name(o);
            fold_raw.obj_map.emplace_back(name, name.substr(0, name.size() - 2));
        }
        for (int m = 0; m < doubled.cat().morphism_count(); ++m) {
            std::string name = doubled.cat().morphism(m).id;
            fold_raw.mor_map.emplace_back(name, name.substr(0, name.size() - 2));
        }
        DiagramMorphism fold = DiagramMorphism::validate(fold_raw, doubled, d);
        Matrix m_fold = induced_map(fold, doubled, t2, d, t);

        CHECK(m_fold * m_in == Matrix::identity(t.dimension));

        // The other composite, include-after-fold, is an endofunctor of the
        // doubled diagram; its induced map must also factor.
        RawFunctor retract_raw;
        retract_raw.name = "retract";
        for (int o = 0; o < doubled.cat().object_count(); ++o) {
            std::string name = doubled.cat().object_name(o);
            retract_raw.obj_map.emplace_back(name, name.substr(0, name.size() - 2) + "_l");
        }
        for (int m = 0; m < doubled.cat().morphism_count(); ++m) {
            std::string name = doubled.cat().morphism(m).id;
            retract_raw.mor_map.emplace_back(name, name.substr(0, name.size() - 2) + "_l");
        }
        DiagramMorphism retract = DiagramMorphism::validate(retract_raw, doubled, doubled);
        CHECK(induced_map(retract, doubled, t2, doubled, t2) == m_in * m_fold);
    }
}

TEST_CASE("one-representability witnesses") {
    TangentDiagram e2 = load("space e\nobject u dim 2\n");
    auto r = is_one_representable(tangent_space(e2));
    CHECK(r.one_representable);
    CHECK(*r.witness_object == 0);

    TangentDiagram orbifold = load(kOrbifold);
    auto r0 = is_one_representable(tangent_space(orbifold));
    CHECK(r0.one_representable); // zero space, projection of rank 0 suffices
}

TEST_CASE("engine invariants on random diagrams") {
    gen::Rng rng(8675309);
    for (int i = 0; i < 60; ++i) {
        TangentDiagram d = gen::random_diagram(rng, 4, 3);
        TangentSpace t = tangent_space(d);
        check_cocone_compatibility(d, t);

        // Rank-nullity against the independent oracle.
        CHECK(t.dimension == oracle::tangent_dimension(d));

        // Jointly surjective projections: the stacked matrix has full rank.
        int total = 0;
        for (int o = 0; o < d.cat().object_count(); ++o) total += d.dim(o);
        Matrix stacked(t.dimension, total);
        int col = 0;
        for (int o = 0; o < d.cat().object_count(); ++o) {
            for (int c = 0; c < d.dim(o); ++c, ++col) {
                for (int r = 0; r < t.dimension; ++r) stacked.at(r, col) = t.projections[o].at(r, c);
            }
        }
        CHECK(rank(stacked) == t.dimension);

        // is_zero agrees with push_class and with the oracle; decompositions
        // re-sum.
        FormalVector w = gen::random_zero_vector(rng, d);
        ZeroDecision decision = is_zero(d, w);
        CHECK(decision.zero);
        CHECK(all_zero(push_class(d, t, w)));
        CHECK(oracle::vector_is_zero(d, w));
        CHECK(decomposition_resums(d, *decision.decomposition, normalize(d, w)));
    }
}

TEST_CASE("is_zero agrees with push_class on nonzero vectors") {
    gen::Rng rng(24601);
    int nonzero_seen = 0;
    for (int i = 0; i < 60; ++i) {
        TangentDiagram d = gen::random_diagram(rng, 4, 2);
        if (d.cat().object_count() == 0) continue;
        TangentSpace t = tangent_space(d);
        FormalVector w;
        int obj = rng.next(0, d.cat().object_count() - 1);
        std::vector<Rational> v(d.dim(obj));
        for (auto& e : v) e = rat(rng.next(-2, 2));
        w.terms.emplace_back(obj, v);
        ZeroDecision decision = is_zero(d, w);
        CHECK(decision.zero == all_zero(push_class(d, t, w)));
        CHECK(decision.zero == oracle::vector_is_zero(d, w));
        if (!decision.zero) ++nonzero_seen;
    }
    CHECK(nonzero_seen > 5);
}
