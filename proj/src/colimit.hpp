#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagram.hpp"

namespace difftan {

// Element of F = ⊕_r T_0(U_r): finitely many (object, coordinate vector)
// terms. Normalization sums duplicate objects and orders terms by object
// declaration order.
struct FormalVector {
    std::vector<std::pair<int, std::vector<Rational>>> terms;
};

FormalVector normalize(const TangentDiagram& d, const FormalVector& w);

// The computed colimit of a tangent diagram: the tangent space T = F/R as an
// explicit quotient. `projections[r]` realizes the structure map
// T_0(U_r) -> T; the family is jointly surjective and compatible with every
// Jacobian, and its entries are deterministic for a fixed presentation.
struct TangentSpace {
    int dimension = 0;
    std::vector<Matrix> projections; // per object: dimension x dim(object)
};

TangentSpace tangent_space(const TangentDiagram& d);

std::vector<Rational> push_class(const TangentDiagram& d, const TangentSpace& t,
                                 const FormalVector& w);

// One summand per morphism f: r -> q with coefficient vector v in T_0(U_r);
// the represented relation is (r, v) - (q, jac(f)·v).
struct RelationDecomposition {
    std::vector<std::pair<int, std::vector<Rational>>> summands; // (morphism index, v)
};

struct ZeroDecision {
    bool zero = false;
    std::optional<RelationDecomposition> decomposition; // present iff zero
    std::vector<Rational> class_coords;                 // nonzero class iff !zero
};

// Decides membership of w in span(R) by solving against the relation columns
// directly; this route is independent of the projection construction.
ZeroDecision is_zero(const TangentDiagram& d, const FormalVector& w);

// Target plot q and germs f_i: p_i -> q, aligned with the normalized terms of
// the input, with Σ jac(f_i)·u_i = 0. Exhaustive search in presentation
// order; the tuple space is exponential in the number of input terms.
struct SinglePlotWitness {
    int target = -1;
    std::vector<int> term_objects;
    std::vector<MorRef> germs;
};

std::optional<SinglePlotWitness> single_plot_witness(const TangentDiagram& d, const FormalVector& w);

// The unique matrix M with M·proj_src(r) = proj_dst(φ(r)) for every object r.
// Built on the quotient basis and then verified against every projection;
// a failure indicts the inputs and raises Inconsistent.
Matrix induced_map(const DiagramMorphism& phi, const TangentDiagram& src, const TangentSpace& t_src,
                   const TangentDiagram& dst, const TangentSpace& t_dst);

struct OneRepResult {
    bool one_representable = false;
    std::optional<int> witness_object;
};

// Some single projection is surjective. Over an infinite field a finite
// union of proper subspaces cannot cover the space, so this is equivalent to
// every class being hit by a single plot.
OneRepResult is_one_representable(const TangentSpace& t);

} // namespace difftan
