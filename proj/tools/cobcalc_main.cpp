#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cobcalc/arc_system.hpp"
#include "cobcalc/cell_complex.hpp"
#include "cobcalc/cobordism.hpp"
#include "cobcalc/disk_category.hpp"
#include "cobcalc/gluing.hpp"
#include "cobcalc/presentation.hpp"
#include "cobcalc/rational.hpp"
#include "cobcalc/surface.hpp"
#include "cobcalc/triangulation.hpp"

using namespace cobcalc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

StoppedSurface load_surface(const std::string& path) { return StoppedSurface::from_json(read_file(path)); }

GradedObject parse_end(const std::string& token) {
    ConeExpr::Ptr e = parse_expr(token);
    if (!e->is_leaf()) throw std::invalid_argument("end '" + token + "' must be a plain object");
    return e->object();
}

Rational parse_rational(const std::string& token) {
    size_t slash = token.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(token));
    return Rational(std::stoll(token.substr(0, slash)), std::stoll(token.substr(slash + 1)));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

// Presentation of a whole surface; generator names get a component prefix
// when the surface is disconnected.
GroupPresentation merged_presentation(const TheoremReport& report) {
    GroupPresentation all;
    bool prefix = report.components.size() > 1;
    for (size_t i = 0; i < report.components.size(); ++i) {
        const ComponentVerification& v = report.components[i];
        std::string head = prefix ? "c" + std::to_string(i) + "." : "";
        for (const std::string& g : v.presentation.generators) all.add_generator(head + g);
        for (const Relation& r : v.presentation.relations) {
            Relation moved;
            moved.kind = r.kind;
            moved.note = r.note;
            for (const auto& [label, coeff] : r.row) moved.row[head + label] = coeff;
            all.add_relation(std::move(moved));
        }
    }
    return all;
}

int cmd_homology(const std::string& file) {
    StoppedSurface s = load_surface(file);
    std::cout << surface_h1(s).str() << "\n";
    return kExitOk;
}

int cmd_cobgroup(const std::string& file, const std::string& via, const std::string& relations_out) {
    StoppedSurface s = load_surface(file);
    if (via == "homology") {
        std::cout << surface_h1(s).str() << "\n";
        return kExitOk;
    }
    TheoremReport report = verify_theorem(s);
    if (!relations_out.empty()) {
        std::ofstream out(relations_out);
        if (!out) throw std::invalid_argument("cannot write '" + relations_out + "'");
        out << merged_presentation(report).to_json() << "\n";
    }
    if (via == "presentation") {
        std::cout << report.presented_total.str() << "\n";
        return report.ok ? kExitOk : kExitMismatch;
    }
    std::cout << report.text();
    return report.ok ? kExitOk : kExitMismatch;
}

int cmd_cone(const std::string& ends_csv, int rotate_count, const std::string& assoc) {
    std::vector<std::string> tokens = split(ends_csv, ',');
    if (tokens.empty()) throw std::invalid_argument("--ends needs at least the preferred end");
    CobordismDatum d;
    d.preferred = parse_end(tokens[0]);
    for (size_t i = 1; i < tokens.size(); ++i) d.ends.push_back(parse_end(tokens[i]));
    for (int i = 0; i < rotate_count; ++i) {
        if (d.n() == 0) throw std::invalid_argument("--rotate needs a cobordism with other ends");
        d = rotate_preferred_end(d);
    }
    if (d.n() == 0) {
        std::cout << d.preferred.str() << " is a zero object (one-ended cobordism)\n";
        std::cout << "relation: " << d.preferred.str() << " = 0\n";
        return kExitOk;
    }
    IteratedDecomposition deco = cone_from_cobordism(d);
    ConeExpr::Ptr expr = assoc == "left" ? left_associate(deco) : deco.expr;
    std::cout << "cone: " << deco.target.str() << " ~= " << print_expr(expr) << "\n";
    std::cout << "relation: " << deco.target.str() << " = " << k0_class(expr).str() << "\n";
    return kExitOk;
}

int cmd_disk(int stops, const std::string& gradings) {
    if (stops < 2) throw std::invalid_argument("--stops must be at least 2");
    StoppedDisk disk(stops - 1);
    const int n = disk.n;
    GradingAssignment g;
    if (gradings == "standard") {
        g = standard_gradings(n);
    } else if (gradings == "triangle") {
        if (n != 2) throw std::invalid_argument("--gradings triangle needs exactly 3 stops");
        g = triangle_gradings_w2();
    } else {
        for (const std::string& tok : split(gradings, ',')) g.d.push_back(parse_rational(tok));
        if (g.n() != n) throw std::invalid_argument("need one grading per linking disk");
    }

    std::cout << "stops: " << stops << " (n = " << n << ")\n";
    std::cout << "gradings:";
    for (const Rational& r : g.d) std::cout << " " << r.str();
    std::cout << "\ndegrees:";
    long long sum = 0;
    for (long long v : degree_vector(g)) {
        std::cout << " " << v;
        sum += v;
    }
    std::cout << "\ndegree sum: " << sum << (sum == n - 1 ? " (= n-1)" : " (!= n-1)") << "\n";

    std::cout << "\nhom ranks (row j, column k):\n";
    if (n < 2) {
        std::cout << "  not stated for n < 2 (two stops); the rank table needs n >= 2\n";
    } else {
        for (int j = 0; j <= n; ++j) {
            std::cout << " ";
            for (int k = 0; k <= n; ++k) std::cout << " " << hom_rank(j, k, disk);
            std::cout << "\n";
        }
    }

    std::cout << "\nmu relations:\n";
    std::cout << "  mu^2(1, f) = f = mu^2(f, 1)   (strict units)\n";
    for (int j = 0; j <= n; ++j) {
        std::vector<MorphismGenerator> cycle;
        for (int i = n; i >= 0; --i) cycle.push_back(MorphismGenerator::chord(disk.mod(j + i)));
        auto r = mu(cycle, g, disk);
        std::cout << "  mu^" << n + 1 << "(";
        for (size_t i = 0; i < cycle.size(); ++i) std::cout << (i ? "," : "") << cycle[i].str();
        std::cout << ") = " << (r ? r->str() : "0") << "\n";
    }

    if (n == 2 && is_triangle_grading(g)) {
        UniversalTriangle t = universal_triangle();
        std::cout << "\nuniversal exact triangle:\n";
        std::cout << "  " << t.d0.str() << "\n";
        std::cout << "  " << t.d1_up.str() << "\n";
        std::cout << "  " << t.d2.str() << "\n";
    }

    UniversalDecomposition u = universal_decomposition(disk);
    std::cout << "\nuniversal decomposition (standard gradings):\n";
    std::cout << "  " << u.decomposition.str() << "\n";
    std::cout << "  left associated: " << print_expr(left_associate(u.decomposition)) << "\n";
    std::cout << "  K0: D0 = " << k0_class(u.decomposition.expr).str() << "\n";
    for (const ConeStatement& s : u.steps) std::cout << "  step: " << s.str() << "\n";
    return kExitOk;
}

int cmd_flipgraph(int polygon, const std::string& dot_path) {
    FlipGraph g = flip_graph(polygon);
    std::cout << "polygon: " << polygon << "\n";
    std::cout << "vertices: " << g.vertices.size() << " (Catalan C_" << polygon - 2 << " = "
              << catalan(polygon - 2) << ")\n";
    std::cout << "edges: " << g.edges.size() << "\n";
    std::cout << "connected: " << (g.connected() ? "yes" : "NO") << "\n";
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw std::invalid_argument("cannot write '" + dot_path + "'");
        out << g.to_dot();
        std::cout << "dot written to " << dot_path << "\n";
    }
    return g.connected() && static_cast<long long>(g.vertices.size()) == catalan(polygon - 2)
               ? kExitOk
               : kExitMismatch;
}

int run_glue(const GluingReport& r, bool as_json) {
    if (as_json)
        std::cout << r.to_json() << "\n";
    else
        std::cout << r.text();
    return r.verdict ? kExitOk : kExitMismatch;
}

StopRef parse_stop_ref(const std::string& token) {
    std::vector<std::string> parts = split(token, ',');
    if (parts.size() != 2) throw std::invalid_argument("stop reference must be CIRCLE,POSITION");
    return {std::stoi(parts[0]), std::stoi(parts[1])};
}

struct CheckOutcome {
    int checks = 0;
    std::vector<std::string> failures;
};

void check(CheckOutcome& out, bool ok, const std::string& what) {
    ++out.checks;
    if (!ok) out.failures.push_back(what);
}

void verify_surface(CheckOutcome& out, const StoppedSurface& s, const std::string& tag) {
    for (size_t i = 0; i < s.components.size(); ++i) {
        StoppedSurface one;
        one.components.push_back(s.components[i]);
        PolygonPresentation p = canonical_presentation(one);
        p.validate();
        CellComplex cells = build_cell_complex(p);
        check(out, cells.chi() == euler_characteristic(one), tag + ": cell complex chi");
        const ConnectedSurface& c = s.components[i];
        int stops = c.total_stops();
        AbelianGroup h = surface_h1(one);
        int expected = stops <= 1 ? 2 * c.genus + c.num_circles() - 1 : 2 * c.genus + c.num_circles() + stops - 2;
        check(out, h.rank == expected && h.torsion.empty(), tag + ": homology rank formula");
        if (stops >= 1) {
            ArcSystem sys = minimal_full_arc_system(one);
            check(out, sys.size() == stops - euler_characteristic(one), tag + ": minimal system size");
            check(out, sys.full, tag + ": minimal system is full");
        }
    }
    TheoremReport report = verify_theorem(s);
    check(out, report.ok, tag + ": presentation group equals homology");
    for (int circle = 0; circle < s.total_circles(); ++circle)
        check(out, add_stop(s, circle).verdict, tag + ": stop insertion claim");
}

int cmd_verify_file(const std::string& file, const std::string& relations_file) {
    StoppedSurface s = load_surface(file);
    CheckOutcome out;
    verify_surface(out, s, "surface");

    if (!relations_file.empty()) {
        GroupPresentation expected = GroupPresentation::from_json(read_file(relations_file));
        GroupPresentation actual = merged_presentation(verify_theorem(s));
        ++out.checks;
        if (!(expected.generators == actual.generators)) {
            out.failures.push_back("relations file: generator lists differ");
        } else {
            auto rows = [](const GroupPresentation& p) {
                std::vector<std::map<std::string, long long>> r;
                for (const auto& rel : p.relations) r.push_back(rel.row);
                std::sort(r.begin(), r.end());
                return r;
            };
            if (rows(expected) != rows(actual)) {
                out.failures.push_back("relations file: relation rows differ");
                std::cout << "expected relations:\n" << expected.to_json() << "\n";
                std::cout << "computed relations:\n" << actual.to_json() << "\n";
            }
        }
    }

    for (const std::string& f : out.failures) std::cout << "FAIL " << f << "\n";
    if (out.failures.empty()) {
        std::cout << "all " << out.checks << " checks passed\n";
        return kExitOk;
    }
    return kExitMismatch;
}

int cmd_verify_grid(int gmax, int bmax, int smax) {
    // COBCALC_SEED shuffles the execution order only; results are collected
    // and printed in sorted order either way.
    unsigned long long seed = 0;
    if (const char* env = std::getenv("COBCALC_SEED")) seed = std::strtoull(env, nullptr, 10);

    struct Task {
        int g, b, s;
        std::vector<int> stops;
        std::string tag;
    };
    std::vector<Task> tasks;
    std::function<void(int, int, int, std::vector<int>&)> spread = [&](int g, int b, int left,
                                                                       std::vector<int>& acc) {
        if (static_cast<int>(acc.size()) == b) {
            if (left == 0) {
                std::string tag = "g" + std::to_string(g) + " b" + std::to_string(b) + " stops(";
                for (size_t i = 0; i < acc.size(); ++i) tag += (i ? "," : "") + std::to_string(acc[i]);
                tag += ")";
                tasks.push_back({g, b, 0, acc, tag});
            }
            return;
        }
        int floor = acc.empty() ? 0 : acc.back();  // nondecreasing: one task per multiset
        for (int x = floor; x <= left; ++x) {
            acc.push_back(x);
            spread(g, b, left - x, acc);
            acc.pop_back();
        }
    };
    for (int g = 0; g <= gmax; ++g)
        for (int b = 1; b <= bmax; ++b)
            for (int s = 0; s <= smax; ++s) {
                std::vector<int> acc;
                spread(g, b, s, acc);
            }

    std::mt19937_64 rng(seed);
    std::shuffle(tasks.begin(), tasks.end(), rng);

    std::vector<std::pair<std::string, CheckOutcome>> results;
    for (const Task& t : tasks) {
        StoppedSurface s = StoppedSurface::connected(t.g, t.stops);
        CheckOutcome out;
        verify_surface(out, s, t.tag);
        results.push_back({t.tag, std::move(out)});
    }
    std::sort(results.begin(), results.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    int checks = 0;
    std::vector<std::string> failures;
    for (auto& [tag, out] : results) {
        checks += out.checks;
        failures.insert(failures.end(), out.failures.begin(), out.failures.end());
    }
    for (const std::string& f : failures) std::cout << "FAIL " << f << "\n";
    if (failures.empty()) {
        std::cout << "all " << checks << " checks passed (" << results.size() << " surfaces)\n";
        return kExitOk;
    }
    return kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial cobordism group and cone calculus tool"};
    app.require_subcommand(1);

    std::string file, via = "both", relations_out, relations_file, ends, assoc = "right", gradings = "standard",
                dot_path, stop_ref_minus, stop_ref_plus;
    int rotate_count = 0, stops = 3, polygon = 5, circle = 0, c_minus = 0, c_plus = 1;
    int grid_g = -1, grid_b = -1, grid_s = -1;
    bool as_json = false;

    CLI::App* homology = app.add_subcommand("homology", "H1 of the surface relative to its stop-free boundary");
    homology->add_option("file", file)->required();

    CLI::App* cobgroup = app.add_subcommand("cobgroup", "cobordism group via arc presentation and homology");
    cobgroup->add_option("file", file)->required();
    cobgroup->add_option("--via", via)->check(CLI::IsMember({"presentation", "homology", "both"}));
    cobgroup->add_option("--relations-out", relations_out);

    CLI::App* cone = app.add_subcommand("cone", "cone decomposition and K0 row of a cobordism's ends");
    cone->add_option("--ends", ends)->required();
    cone->add_option("--rotate", rotate_count);
    cone->add_option("--assoc", assoc)->check(CLI::IsMember({"left", "right"}));

    CLI::App* disk = app.add_subcommand("disk", "tables for the stopped disk category");
    disk->add_option("--stops", stops)->required();
    disk->add_option("--gradings", gradings);

    CLI::App* glue = app.add_subcommand("glue", "surface surgeries and their group claims");
    glue->require_subcommand(1);
    CLI::App* glue_stop = glue->add_subcommand("stop", "insert a stop");
    glue_stop->add_option("file", file)->required();
    glue_stop->add_option("--circle", circle)->required();
    glue_stop->add_flag("--json", as_json);
    CLI::App* glue_handle = glue->add_subcommand("handle", "attach a one-handle at two stops");
    glue_handle->add_option("file", file)->required();
    glue_handle->add_option("--q-minus", stop_ref_minus)->required();
    glue_handle->add_option("--q-plus", stop_ref_plus)->required();
    glue_handle->add_flag("--json", as_json);
    CLI::App* glue_disk_cmd = glue->add_subcommand("disk", "cap a stopless circle with a disk");
    glue_disk_cmd->add_option("file", file)->required();
    glue_disk_cmd->add_option("--circle", circle)->required();
    glue_disk_cmd->add_flag("--json", as_json);
    CLI::App* glue_circle = glue->add_subcommand("circle", "identify two stopless circles");
    glue_circle->add_option("file", file)->required();
    glue_circle->add_option("--c-minus", c_minus)->required();
    glue_circle->add_option("--c-plus", c_plus)->required();
    glue_circle->add_flag("--json", as_json);

    CLI::App* flip = app.add_subcommand("flipgraph", "flip graph of polygon triangulations");
    flip->add_option("--polygon", polygon)->required();
    flip->add_option("--dot", dot_path);

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_option("file", file);
    verify->add_option("--grid", [&grid_g, &grid_b, &grid_s](const std::vector<std::string>& vals) {
        if (vals.size() != 3) return false;
        grid_g = std::stoi(vals[0]);
        grid_b = std::stoi(vals[1]);
        grid_s = std::stoi(vals[2]);
        return true;
    })->expected(3);
    verify->add_option("--relations", relations_file);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (homology->parsed()) return cmd_homology(file);
        if (cobgroup->parsed()) return cmd_cobgroup(file, via, relations_out);
        if (cone->parsed()) return cmd_cone(ends, rotate_count, assoc);
        if (disk->parsed()) return cmd_disk(stops, gradings);
        if (flip->parsed()) return cmd_flipgraph(polygon, dot_path);
        if (glue->parsed()) {
            if (glue_stop->parsed()) return run_glue(add_stop(load_surface(file), circle), as_json);
            if (glue_handle->parsed())
                return run_glue(attach_handle(load_surface(file), parse_stop_ref(stop_ref_minus),
                                              parse_stop_ref(stop_ref_plus)),
                                as_json);
            if (glue_disk_cmd->parsed()) return run_glue(glue_disk(load_surface(file), circle), as_json);
            if (glue_circle->parsed())
                return run_glue(circular_glue(load_surface(file), c_minus, c_plus), as_json);
        }
        if (verify->parsed()) {
            if (grid_g >= 0) return cmd_verify_grid(grid_g, grid_b, grid_s);
            if (file.empty()) throw std::invalid_argument("verify needs a file or --grid");
            return cmd_verify_file(file, relations_file);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
