#include "corpus.hpp"

namespace difftan {

namespace {

ExpectedDiagramFacts facts(std::string part, int dim, bool weakly, bool filtered, bool onerep) {
    return ExpectedDiagramFacts{std::move(part), dim, weakly, filtered, onerep};
}

CorpusEntry euclidean(int n) {
    CorpusEntry e;
    e.name = "euclidean-" + std::to_string(n);
    e.description =
        "Open neighbourhood of a point in R^" + std::to_string(n) +
        ". The germ category of (R^n, 0) has the identity chart as a terminal object; the model "
        "keeps only that chart, so the tangent space is R^" + std::to_string(n) +
        ", the category is filtered, and the identity projection witnesses 1-representability.";
    e.parts = {{"diagram", "space euclidean-" + std::to_string(n) + "\nobject u dim " +
                               std::to_string(n) + "\n"}};
    e.diagram_facts = {facts("diagram", n, true, true, true)};
    return e;
}

std::vector<CorpusEntry> build() {
    std::vector<CorpusEntry> entries;

    for (int n = 0; n <= 4; ++n) entries.push_back(euclidean(n));

    {
        CorpusEntry e;
        e.name = "axes-cross";
        e.description =
            "The union of the coordinate axes in R^2 at the origin, modelled by the two axis "
            "charts only. No plot receives germs from both charts, so the model is not weakly "
            "filtered; the tangent space is 2-dimensional while each projection has rank 1, so it "
            "is not 1-representable. Higher-dimensional plots into the cross are omitted; the "
            "recorded facts do not depend on them.";
        e.parts = {{"diagram",
                    "space axes-cross\n"
                    "object a1 dim 1\n"
                    "object a2 dim 1\n"}};
        e.diagram_facts = {facts("diagram", 2, false, false, false)};
        entries.push_back(e);
    }

    {
        CorpusEntry e;
        e.name = "orbifold-halfline-O1";
        e.description =
            "The half-line orbifold R/O(1) at the cone point. The quotient plot R -> R/O(1) "
            "carries the two endomorphisms +1 and -1, presented as the reflection s with "
            "s s = id. The relation v - (-v) kills the 1-dimensional fibre, so the tangent space "
            "is 0; the parallel pair (id:q, s) admits no coequalizing morphism, so the model is "
            "weakly filtered but not filtered. Constant plots are omitted: adding one changes "
            "none of the recorded facts.";
        e.parts = {{"diagram",
                    "space orbifold-halfline-O1\n"
                    "object q dim 1\n"
                    "morphism s : q -> q jac [[-1]]\n"
                    "compose s s = id:q\n"}};
        e.diagram_facts = {facts("diagram", 0, true, false, true)};
        entries.push_back(e);
    }

    {
        CorpusEntry e;
        e.name = "weak-not-filtered";
        e.description =
            "Two parallel morphisms with Jacobians 1 and -1 and nothing but the identity out of "
            "their target: weakly filtered but not filtered. The relation columns e_A - e_B and "
            "e_A + e_B have rank 2, so the tangent space is 0.";
        e.parts = {{"diagram",
                    "space weak-not-filtered\n"
                    "object A dim 1\n"
                    "object B dim 1\n"
                    "morphism f : A -> B jac [[1]]\n"
                    "morphism g : A -> B jac [[-1]]\n"}};
        e.diagram_facts = {facts("diagram", 0, true, false, true)};
        entries.push_back(e);
    }

    auto lattice_fiber = [](const std::string& space) {
        return "space " + space +
               "\n"
               "object w dim 1\n"
               "morphism n : w -> w jac [[0]]\n"
               "compose n n = n\n";
    };
    auto line_model = [](const std::string& space) {
        return "space " + space +
               "\n"
               "object u dim 1\n"
               "object c dim 1\n"
               "morphism j : c -> u jac [[0]]\n"
               "morphism z : c -> c jac [[0]]\n"
               "compose j z = j\n"
               "compose z z = z\n";
    };

    {
        CorpusEntry e;
        e.name = "irrational-torus-bundle";
        e.description =
            "The quotient bundle R -> R/(Z+tZ) for irrational t, with fibre the lattice Z+tZ. "
            "The lattice is discrete, so its pointed plots are germwise constant: one object w "
            "with the zero germ n, n n = n, tangent dimension 0. Total space and base each keep "
            "the identity chart u and the constant plot c, with the zero germ j : c -> u and the "
            "zero endomorphism z; unique germ lifting along the quotient makes the base model "
            "faithful, and the irrational rotation never enters a Jacobian. Tangent spaces are "
            "(0, R, R) and the sequence is exact with injective iota.";
        e.parts = {
            {"fiber", lattice_fiber("torus-fiber")},
            {"total", line_model("torus-total")},
            {"base", line_model("torus-base")},
            {"iota",
             "functor torus-iota : torus-fiber -> torus-total\n"
             "objmap w -> c\n"
             "mormap n -> z\n"},
            {"pi",
             "functor torus-pi : torus-total -> torus-base\n"
             "objmap u -> u\n"
             "objmap c -> c\n"
             "mormap j -> j\n"
             "mormap z -> z\n"},
        };
        e.diagram_facts = {
            facts("fiber", 0, true, true, true),
            facts("total", 1, true, true, true),
            facts("base", 1, true, true, true),
        };
        e.is_bundle = true;
        e.bundle_dims = {0, 1, 1};
        e.bundle_verdict = Verdict::ExactFourTerm;
        entries.push_back(e);
    }

    {
        CorpusEntry e;
        e.name = "circle-bundle";
        e.description =
            "The covering R -> R/Z of the circle with fibre the subgroup Z, the integer-lattice "
            "sibling of the irrational torus: the same germ models apply verbatim since only the "
            "discreteness of the fibre and unique germ lifting enter. Tangent spaces are "
            "(0, R, R) and the sequence is exact with injective iota.";
        e.parts = {
            {"fiber", lattice_fiber("circle-fiber")},
            {"total", line_model("circle-total")},
            {"base", line_model("circle-base")},
            {"iota",
             "functor circle-iota : circle-fiber -> circle-total\n"
             "objmap w -> c\n"
             "mormap n -> z\n"},
            {"pi",
             "functor circle-pi : circle-total -> circle-base\n"
             "objmap u -> u\n"
             "objmap c -> c\n"
             "mormap j -> j\n"
             "mormap z -> z\n"},
        };
        e.diagram_facts = {
            facts("fiber", 0, true, true, true),
            facts("total", 1, true, true, true),
            facts("base", 1, true, true, true),
        };
        e.is_bundle = true;
        e.bundle_dims = {0, 1, 1};
        e.bundle_verdict = Verdict::ExactFourTerm;
        entries.push_back(e);
    }

    {
        CorpusEntry e;
        e.name = "trivial-bundle-1x1";
        e.description =
            "The product bundle R x R -> R with fibre R. The total model keeps the product chart "
            "P of the two factor charts together with the inclusion plots cf = (const, id) and "
            "cb = (id, const) and their germs into P. The base model keeps the identity chart u, "
            "the constant plot k and the 2-dimensional plot u2 = chart after first projection, "
            "closed under the projection germ pr and the idempotent ep : (x,y) -> (x,0); that "
            "closure is what makes the base model filtered. Tangent dimensions are (1, 2, 1) and "
            "the sequence is exact.";
        e.parts = {
            {"fiber",
             "space trivial-fiber\n"
             "object f1 dim 1\n"},
            {"total",
             "space trivial-total\n"
             "object cf dim 1\n"
             "object cb dim 1\n"
             "object P dim 2\n"
             "morphism mf : cf -> P jac [[0],[1]]\n"
             "morphism mb : cb -> P jac [[1],[0]]\n"},
            {"base",
             "space trivial-base\n"
             "object u dim 1\n"
             "object k dim 1\n"
             "object u2 dim 2\n"
             "morphism jk : k -> u jac [[0]]\n"
             "morphism nz : k -> u2 jac [[0],[0]]\n"
             "morphism nf : k -> u2 jac [[0],[1]]\n"
             "morphism nb : u -> u2 jac [[1],[0]]\n"
             "morphism pr : u2 -> u jac [[1,0]]\n"
             "morphism ep : u2 -> u2 jac [[1,0],[0,0]]\n"
             "compose nb jk = nz\n"
             "compose nb pr = ep\n"
             "compose pr nz = jk\n"
             "compose pr nf = jk\n"
             "compose pr nb = id:u\n"
             "compose pr ep = pr\n"
             "compose ep nz = nz\n"
             "compose ep nf = nz\n"
             "compose ep nb = nb\n"
             "compose ep ep = ep\n"},
            {"iota",
             "functor trivial-iota : trivial-fiber -> trivial-total\n"
             "objmap f1 -> cf\n"},
            {"pi",
             "functor trivial-pi : trivial-total -> trivial-base\n"
             "objmap cf -> k\n"
             "objmap cb -> u\n"
             "objmap P -> u2\n"
             "mormap mf -> nf\n"
             "mormap mb -> nb\n"},
        };
        e.diagram_facts = {
            facts("fiber", 1, true, true, true),
            facts("total", 2, true, true, true),
            facts("base", 1, true, true, true),
        };
        e.is_bundle = true;
        e.bundle_dims = {1, 2, 1};
        e.bundle_verdict = Verdict::ExactFourTerm;
        entries.push_back(e);
    }

    return entries;
}

} // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build();
    return entries;
}

const CorpusEntry* corpus_find(const std::string& name) {
    for (const auto& entry : corpus()) {
        if (entry.name == name) return &entry;
    }
    return nullptr;
}

const std::string& corpus_part(const std::string& name, const std::string& part) {
    const CorpusEntry* entry = corpus_find(name);
    if (!entry) {
        throw Error(ErrorKind::UnknownEntry, "no corpus entry '" + name + "'");
    }
    for (const auto& [part_name, text] : entry->parts) {
        if (part_name == part) return text;
    }
    std::string available;
    for (const auto& [part_name, text] : entry->parts) {
        if (!available.empty()) available += ", ";
        available += part_name;
    }
    throw Error(ErrorKind::UnknownEntry,
                "entry '" + name + "' has no part '" + part + "' (parts: " + available + ")");
}

} // namespace difftan
