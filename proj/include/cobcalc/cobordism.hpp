#pragma once

#include <string>
#include <vector>

#include "cobcalc/abelian_group.hpp"
#include "cobcalc/arc_system.hpp"
#include "cobcalc/cell_complex.hpp"
#include "cobcalc/decomposition.hpp"
#include "cobcalc/surface.hpp"

namespace cobcalc {

// Ends of a cobordism: one preferred end and the remaining ends in
// counterclockwise order, with their induced grading shifts.
struct CobordismDatum {
    GradedObject preferred;
    std::vector<GradedObject> ends;

    int n() const { return static_cast<int>(ends.size()); }
};

enum class RelationKind { Cobordism, Isotopy, Surgery, ZeroObject };
std::string relation_kind_name(RelationKind k);
RelationKind relation_kind_from_name(const std::string& s);

struct Relation {
    RelationKind kind = RelationKind::Cobordism;
    std::map<std::string, long long> row;
    std::string note;
};

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Relation> relations;

    void add_generator(const std::string& label);
    bool has_generator(const std::string& label) const;
    // Throws std::invalid_argument when the row names an undeclared label.
    void add_relation(Relation r);

    IntMatrix relation_matrix() const;
    std::string to_json() const;
    static GroupPresentation from_json(const std::string& text);
};

// L0 ~= [Ln[-1] -> [... -> [L2[-1] -> L1]...]] with declared shifts on the
// leaves; n >= 1 (one-ended data are zero-object relations instead).
IteratedDecomposition cone_from_cobordism(const CobordismDatum& d);

// The row L0 - L1 - ... - Ln in K0 (with shift signs); identically equal to
// class(L0) - k0_class(cone_from_cobordism(d)).
K0Class k0_relation(const CobordismDatum& d);

// New preferred end Ln with ends (L_{n-1}, .., L1, L0); the relation row of
// the result is minus the input row.
CobordismDatum rotate_preferred_end(const CobordismDatum& d);

// Splices the inner ends into slot j0; inner.preferred must equal the outer
// end at j0 exactly. The composed cone equals
// compose_decompositions(outer cone, j0, inner cone).
CobordismDatum concatenate(const CobordismDatum& outer, int j0, const CobordismDatum& inner);

Relation cobordism_relation(const GroupPresentation& p, const CobordismDatum& d);
Relation surgery_relation(const GroupPresentation& p, const std::string& l, const std::string& l1,
                          const std::string& l2);
Relation isotopy_relation(const GroupPresentation& p, const std::string& l, const std::string& l_prime);
Relation zero_relation(const GroupPresentation& p, const std::string& l);

AbelianGroup present_group(const GroupPresentation& p);

// One connected component's side of the theorem check: the minimal arc
// system presentation against relative homology, with the arc classes.
struct ComponentVerification {
    ConnectedSurface component;
    bool stop_added = false;  // component had no stops; one was added first
    ArcSystem system;
    GroupPresentation presentation;
    AbelianGroup presented;
    AbelianGroup homology;
    std::vector<std::string> generator_names;
    std::vector<RelativeH1::Coords> generator_images;
    bool relations_vanish = false;
    bool images_generate = false;
    bool groups_match = false;
    bool ok = false;
};

struct TheoremReport {
    std::vector<ComponentVerification> components;
    AbelianGroup presented_total;
    AbelianGroup homology_total;
    bool ok = false;

    std::string text() const;
};

// Builds generators from a minimal full arc system and one relation per
// complementary disk, presents the group, and checks it against
// H1(surface, boundary minus stops). Mismatches are reported, never silent.
TheoremReport verify_theorem(const StoppedSurface& surface);

}  // namespace cobcalc
