#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace difftan {

// Reference to a morphism of a validated category. Identities are never
// stored; they are addressed as the identity of an object index.
struct MorRef {
    bool identity = false;
    int index = -1; // object index when identity, declared morphism index otherwise

    static MorRef id_of(int obj) { return MorRef{true, obj}; }
    static MorRef declared(int mor) { return MorRef{false, mor}; }

    bool operator==(const MorRef& o) const { return identity == o.identity && index == o.index; }
    bool operator!=(const MorRef& o) const { return !(*this == o); }
};

struct Morphism {
    std::string id;
    int src = -1;
    int dst = -1;
};

struct RawMorphism {
    std::string id;
    std::string src;
    std::string dst;
};

struct RawCompose {
    std::string g;
    std::string f;
    std::string h; // may be "id:<object>"
};

struct RawCategoryData {
    std::vector<std::string> objects;
    std::vector<RawMorphism> morphisms;
    std::vector<RawCompose> composition;
};

// A finite category presented by objects, non-identity morphisms and a total
// composition table on composable non-identity pairs. Identity morphisms are
// implicit and carry the reserved names "id:<object>". Validation checks
// totality, closure of the table and associativity on every composable
// triple; a validated category is an immutable value.
class FiniteCategory {
public:
    static FiniteCategory validate(const RawCategoryData& raw);

    int object_count() const { return static_cast<int>(objects_.size()); }
    int morphism_count() const { return static_cast<int>(morphisms_.size()); }

    const std::string& object_name(int obj) const { return objects_[obj]; }
    const Morphism& morphism(int mor) const { return morphisms_[mor]; }

    int object_index(const std::string& name) const; // -1 when absent

    // Resolves a declared name or "id:<object>"; nullopt when unknown.
    std::optional<MorRef> morphism_ref(const std::string& name) const;

    std::string ref_name(MorRef m) const;
    int ref_src(MorRef m) const { return m.identity ? m.index : morphisms_[m.index].src; }
    int ref_dst(MorRef m) const { return m.identity ? m.index : morphisms_[m.index].dst; }

    // Total on composable pairs; identity operands resolve implicitly.
    MorRef compose(MorRef g, MorRef f) const;

    // Enumeration order used everywhere a deterministic scan is required:
    // identities in object declaration order, then declared morphisms.
    std::vector<MorRef> all_morphisms() const;
    std::vector<MorRef> hom(int src, int dst) const;

private:
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<std::vector<MorRef>> table_; // [g][f], meaningful iff composable
    std::unordered_map<std::string, int> object_index_;
    std::unordered_map<std::string, int> morphism_index_;
};

struct WeakFilteredness {
    bool weakly_filtered = false;
    bool empty = false;                              // no objects
    std::optional<std::pair<int, int>> witness_pair; // objects with no cocone
};

// Full filteredness report. The witness describes the first failure found in
// deterministic scan order; it is present exactly when the corresponding flag
// is false.
struct FilterednessReport {
    bool weakly_filtered = false;
    bool filtered = false;

    enum class Witness { None, Empty, ObjectPair, ParallelPair };
    Witness witness = Witness::None;
    std::pair<int, int> object_pair{-1, -1};
    std::pair<MorRef, MorRef> parallel_pair;
};

WeakFilteredness is_weakly_filtered(const FiniteCategory& cat);
FilterednessReport is_filtered(const FiniteCategory& cat);

// Every m such that m∘f = m∘g forces f = g. Identities always qualify.
std::vector<MorRef> monomorphisms(const FiniteCategory& cat);

struct InjectiveGenerationReport {
    bool injectively_generated = false; // every object maps into some separated object
    bool derived_filtered = false;      // weakly filtered and injectively generated
};

// `separated` lists the objects modelling injective plots. The checkable
// surrogate for injectivity is that parallel pairs into a separated object
// coincide; a violating pair raises SeparationViolation. When the derived
// filteredness conclusion disagrees with the direct check the separated flag
// set is inconsistent with the category and Inconsistent is raised.
InjectiveGenerationReport check_injective_generation(const FiniteCategory& cat,
                                                     const std::vector<int>& separated);

} // namespace difftan
