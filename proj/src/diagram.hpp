#pragma once

#include <string>
#include <vector>

#include "category.hpp"
#include "rational.hpp"

namespace difftan {

struct RawObject {
    std::string name;
    int dim = 0;
    bool separated = false;
};

struct RawDiagramMorphism {
    std::string id;
    std::string src;
    std::string dst;
    // Entry rows as written; an empty list defers the shape to the endpoint
    // dimensions (zero-extent Jacobians).
    std::vector<std::vector<Rational>> jac_rows;
};

struct RawPresentation {
    std::string space;
    std::vector<RawObject> objects;
    std::vector<RawDiagramMorphism> morphisms;
    std::vector<RawCompose> composition;
};

// A finite category together with a plot-domain dimension per object and an
// exact Jacobian per morphism. Identities carry identity Jacobians and the
// Jacobian of a composite is the product of the Jacobians; both facts are
// verified exactly during validation, so every value of this type is a
// functor into finite-dimensional rational vector spaces.
class TangentDiagram {
public:
    static TangentDiagram validate(const RawPresentation& raw);

    const std::string& name() const { return name_; }
    const FiniteCategory& cat() const { return cat_; }

    int dim(int obj) const { return dims_[obj]; }
    bool separated(int obj) const { return separated_[obj]; }
    std::vector<int> separated_objects() const;

    Matrix jac(MorRef m) const {
        return m.identity ? Matrix::identity(dims_[m.index]) : jacs_[m.index];
    }
    const Matrix& declared_jac(int mor) const { return jacs_[mor]; }

private:
    std::string name_;
    FiniteCategory cat_;
    std::vector<int> dims_;
    std::vector<Matrix> jacs_;
    std::vector<bool> separated_;
};

struct RawFunctor {
    std::string name;
    std::string src_space;
    std::string dst_space;
    std::vector<std::pair<std::string, std::string>> obj_map;
    std::vector<std::pair<std::string, std::string>> mor_map; // rhs may be "id:<object>"
};

// A dimension- and Jacobian-preserving functor between tangent diagrams; the
// shape of map induced on germ categories by postcomposition with a smooth
// map. Identities map to identities implicitly.
class DiagramMorphism {
public:
    static DiagramMorphism validate(const RawFunctor& raw, const TangentDiagram& src,
                                    const TangentDiagram& dst);
    static DiagramMorphism identity(const TangentDiagram& d);

    const std::string& name() const { return name_; }
    int map_object(int obj) const { return obj_map_[obj]; }
    MorRef map_ref(MorRef m) const {
        return m.identity ? MorRef::id_of(obj_map_[m.index]) : mor_map_[m.index];
    }

private:
    std::string name_;
    std::vector<int> obj_map_;
    std::vector<MorRef> mor_map_;
};

// Product of two diagrams: objects are pairs with added dimensions,
// morphisms are pairs with block-diagonal Jacobians, composition is
// componentwise. The result is fed back through validation.
TangentDiagram product_diagram(const TangentDiagram& a, const TangentDiagram& b);

} // namespace difftan
