#include "cobcalc/cobordism.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "cobcalc/presentation.hpp"

namespace cobcalc {

std::string relation_kind_name(RelationKind k) {
    switch (k) {
        case RelationKind::Cobordism: return "cobordism";
        case RelationKind::Isotopy: return "isotopy";
        case RelationKind::Surgery: return "surgery";
        case RelationKind::ZeroObject: return "zero_object";
    }
    return "?";
}

RelationKind relation_kind_from_name(const std::string& s) {
    if (s == "cobordism") return RelationKind::Cobordism;
    if (s == "isotopy") return RelationKind::Isotopy;
    if (s == "surgery") return RelationKind::Surgery;
    if (s == "zero_object") return RelationKind::ZeroObject;
    throw std::invalid_argument("unknown relation kind '" + s + "'");
}

void GroupPresentation::add_generator(const std::string& label) {
    if (has_generator(label)) throw std::invalid_argument("presentation: duplicate generator '" + label + "'");
    generators.push_back(label);
}

bool GroupPresentation::has_generator(const std::string& label) const {
    return std::find(generators.begin(), generators.end(), label) != generators.end();
}

void GroupPresentation::add_relation(Relation r) {
    for (const auto& [label, coeff] : r.row) {
        (void)coeff;
        if (!has_generator(label))
            throw std::invalid_argument("presentation: relation uses undeclared label '" + label + "'");
    }
    relations.push_back(std::move(r));
}

IntMatrix GroupPresentation::relation_matrix() const {
    IntMatrix m(static_cast<int>(relations.size()), static_cast<int>(generators.size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            auto it = relations[i].row.find(generators[j]);
            m.at(i, j) = it == relations[i].row.end() ? 0 : it->second;
        }
    return m;
}

std::string GroupPresentation::to_json() const {
    nlohmann::ordered_json j;
    j["generators"] = generators;
    j["relations"] = nlohmann::ordered_json::array();
    for (const auto& r : relations) {
        nlohmann::ordered_json jr;
        jr["kind"] = relation_kind_name(r.kind);
        jr["row"] = nlohmann::ordered_json::object();
        for (const auto& [label, coeff] : r.row) jr["row"][label] = coeff;
        if (!r.note.empty()) jr["note"] = r.note;
        j["relations"].push_back(jr);
    }
    return j.dump(2);
}

GroupPresentation GroupPresentation::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("relations: bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("generators") || !j.contains("relations"))
        throw std::invalid_argument("relations: expected {\"generators\", \"relations\"}");
    GroupPresentation p;
    for (const auto& g : j["generators"]) p.add_generator(g.get<std::string>());
    for (const auto& jr : j["relations"]) {
        Relation r;
        r.kind = relation_kind_from_name(jr.at("kind").get<std::string>());
        for (const auto& [label, coeff] : jr.at("row").items()) r.row[label] = coeff.get<long long>();
        if (jr.contains("note")) r.note = jr["note"].get<std::string>();
        p.add_relation(std::move(r));
    }
    return p;
}

IteratedDecomposition cone_from_cobordism(const CobordismDatum& d) {
    if (d.n() < 1)
        throw std::invalid_argument("cone_from_cobordism: a one-ended cobordism is a zero-object relation");
    return standard_decomposition(d.preferred, d.ends);
}

K0Class k0_relation(const CobordismDatum& d) {
    K0Class row = k0_class(ConeExpr::leaf(d.preferred));
    for (const auto& end : d.ends) row = row - k0_class(ConeExpr::leaf(end));
    return row;
}

CobordismDatum rotate_preferred_end(const CobordismDatum& d) {
    if (d.n() < 1) throw std::invalid_argument("rotate_preferred_end: no other end");
    // The rotated decomposition Ln ~= [L_{n-1} -> [... -> [L1 -> L0]...]]
    // is the standard cone on ends (L0, L1[1], .., L_{n-1}[1]): rotating the
    // preferred end bumps the middle ends' induced gradings by one.
    CobordismDatum out;
    out.preferred = d.ends.back();
    out.ends.push_back(d.preferred);
    for (int j = 0; j + 1 < d.n(); ++j) out.ends.push_back(d.ends[j].shifted(1));
    return out;
}

CobordismDatum concatenate(const CobordismDatum& outer, int j0, const CobordismDatum& inner) {
    if (j0 < 0 || j0 >= outer.n()) throw std::invalid_argument("concatenate: slot out of range");
    if (!(inner.preferred == outer.ends[j0]))
        throw std::invalid_argument("concatenate: inner preferred end '" + inner.preferred.str() +
                                    "' does not match outer end '" + outer.ends[j0].str() + "'");
    CobordismDatum out;
    out.preferred = outer.preferred;
    for (int j = 0; j < outer.n(); ++j) {
        if (j == j0)
            out.ends.insert(out.ends.end(), inner.ends.begin(), inner.ends.end());
        else
            out.ends.push_back(outer.ends[j]);
    }
    return out;
}

namespace {

Relation row_relation(const GroupPresentation& p, RelationKind kind, std::map<std::string, long long> row,
                      std::string note) {
    Relation r;
    r.kind = kind;
    r.row = std::move(row);
    r.note = std::move(note);
    for (const auto& [label, coeff] : r.row) {
        (void)coeff;
        if (!p.has_generator(label))
            throw std::invalid_argument("relation uses undeclared label '" + label + "'");
    }
    return r;
}

}  // namespace

Relation cobordism_relation(const GroupPresentation& p, const CobordismDatum& d) {
    K0Class k = k0_relation(d);
    std::map<std::string, long long> row(k.coeffs().begin(), k.coeffs().end());
    return row_relation(p, RelationKind::Cobordism, std::move(row), "ends of a cobordism");
}

Relation surgery_relation(const GroupPresentation& p, const std::string& l, const std::string& l1,
                          const std::string& l2) {
    std::map<std::string, long long> row;
    row[l] += 1;
    row[l1] -= 1;
    row[l2] -= 1;
    return row_relation(p, RelationKind::Surgery, std::move(row), "one-point surgery");
}

Relation isotopy_relation(const GroupPresentation& p, const std::string& l, const std::string& l_prime) {
    std::map<std::string, long long> row;
    row[l] += 1;
    row[l_prime] -= 1;
    return row_relation(p, RelationKind::Isotopy, std::move(row), "exact isotopy");
}

Relation zero_relation(const GroupPresentation& p, const std::string& l) {
    return row_relation(p, RelationKind::ZeroObject, {{l, 1}}, "escapes to the boundary");
}

AbelianGroup present_group(const GroupPresentation& p) {
    return cokernel(p.relation_matrix(), static_cast<int>(p.generators.size()));
}

namespace {

ComponentVerification verify_component(const ConnectedSurface& comp) {
    ComponentVerification v;
    v.component = comp;

    StoppedSurface original;
    original.components.push_back(comp);

    StoppedSurface stopped = original;
    if (comp.total_stops() == 0) {
        stopped.components[0].boundary[0].stops = 1;
        v.stop_added = true;
    }

    PolygonPresentation p = canonical_presentation(stopped);
    v.system = minimal_full_arc_system(stopped);

    for (const Arc& arc : v.system.arcs) v.presentation.add_generator(arc.name);
    v.generator_names = v.presentation.generators;

    // The boundary of a complementary disk runs over the cut banks and, when
    // the disk holds a stop, once through that stop; crossing a stop is the
    // class of its linking arc. The one stop without a linking arc makes its
    // disk's relation define that class instead of relating the generators
    // (a Tietze elimination, leaving the zero row).
    std::map<int, std::string> arc_of_stop;
    for (const Arc& arc : v.system.arcs)
        if (arc.kind == Arc::Kind::Linking) arc_of_stop[arc.stop_corner] = arc.name;
    for (const CutPiece& piece : v.system.complement) {
        Relation r;
        r.kind = RelationKind::Cobordism;
        r.note = "boundary of a complementary disk";
        for (const auto& [name, coeff] : piece.arc_coefficients) r.row[name] = coeff;
        bool defines_leftover = false;
        for (int corner : piece.stop_corners) {
            auto it = arc_of_stop.find(corner);
            if (it != arc_of_stop.end())
                r.row[it->second] += 1;
            else
                defines_leftover = true;
        }
        if (defines_leftover) {
            r.row.clear();
            r.note = "boundary of the disk holding the remaining stop (defines its class)";
        }
        v.presentation.add_relation(std::move(r));
    }
    v.presented = present_group(v.presentation);

    v.homology = surface_h1(original);

    // The arc classes live in the homology of the stopped model; adding a
    // stop to an empty stop set does not change the group.
    CellComplex cells = build_cell_complex(p);
    RelativeH1 h1(cells);
    if (!(h1.group() == v.homology))
        throw std::logic_error("verify: stop insertion changed the homology group");

    std::vector<std::vector<long long>> chains;
    for (const Arc& arc : v.system.arcs) {
        chains.push_back(arc_image_chain(arc, p, cells));
        v.generator_images.push_back(h1.coordinates(chains.back()));
    }

    v.relations_vanish = true;
    for (const Relation& rel : v.presentation.relations) {
        std::vector<long long> combo(cells.num_edges, 0);
        for (size_t a = 0; a < v.system.arcs.size(); ++a) {
            auto it = rel.row.find(v.system.arcs[a].name);
            if (it == rel.row.end() || it->second == 0) continue;
            for (int e = 0; e < cells.num_edges; ++e) combo[e] += it->second * chains[a][e];
        }
        RelativeH1::Coords c = h1.coordinates(combo);
        for (long long x : c.free_part)
            if (x != 0) v.relations_vanish = false;
        for (long long x : c.torsion_part)
            if (x != 0) v.relations_vanish = false;
    }

    // The arc classes generate: the coordinate matrix has full rank with unit
    // invariant factors.
    int rank = h1.group().rank;
    IntMatrix images(rank, static_cast<int>(v.system.arcs.size()));
    for (int a = 0; a < images.cols(); ++a)
        for (int i = 0; i < rank; ++i) images.at(i, a) = v.generator_images[a].free_part[i];
    SmithResult snf = smith_normal_form(images);
    v.images_generate = (snf.rank == rank);
    for (int i = 0; i < snf.rank; ++i)
        if (snf.d.at(i, i) != 1) v.images_generate = false;

    v.groups_match = (v.presented == v.homology);
    v.ok = v.groups_match && v.relations_vanish && v.images_generate;
    return v;
}

std::string coords_str(const RelativeH1::Coords& c) {
    std::string s = "(";
    for (size_t i = 0; i < c.free_part.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c.free_part[i]);
    }
    s += ")";
    return s;
}

}  // namespace

std::string TheoremReport::text() const {
    std::string s;
    for (size_t i = 0; i < components.size(); ++i) {
        const ComponentVerification& v = components[i];
        s += "component " + std::to_string(i) + ": genus " + std::to_string(v.component.genus) + ", circles " +
             std::to_string(v.component.num_circles()) + ", stops " + std::to_string(v.component.total_stops());
        if (v.stop_added) s += " (one stop added)";
        s += "\n";
        s += "  generators " + std::to_string(v.system.size()) + ":";
        for (size_t a = 0; a < v.generator_names.size(); ++a)
            s += " " + v.generator_names[a] + "->" + coords_str(v.generator_images[a]);
        s += "\n";
        s += "  presentation group: " + v.presented.str() + "\n";
        s += "  homology group:     " + v.homology.str() + "\n";
        s += std::string("  relations vanish in homology: ") + (v.relations_vanish ? "yes" : "NO") + "\n";
        s += std::string("  arc classes generate:         ") + (v.images_generate ? "yes" : "NO") + "\n";
    }
    s += "total presentation group: " + presented_total.str() + "\n";
    s += "total homology group:     " + homology_total.str() + "\n";
    s += std::string("verdict: ") + (ok ? "MATCH" : "MISMATCH") + "\n";
    return s;
}

TheoremReport verify_theorem(const StoppedSurface& surface) {
    surface.validate();
    TheoremReport report;
    report.ok = true;
    for (const auto& comp : surface.components) {
        report.components.push_back(verify_component(comp));
        const ComponentVerification& v = report.components.back();
        report.presented_total = report.presented_total.direct_sum(v.presented);
        report.homology_total = report.homology_total.direct_sum(v.homology);
        report.ok = report.ok && v.ok;
    }
    return report;
}

}  // namespace cobcalc
