// Command-line front end: graph generation, enumeration, catalogs, hulls,
// verification, the extended formulation, projection, and separation.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 limit
// exceeded.

#include "totmatch/balas.hpp"
#include "totmatch/catalog.hpp"
#include "totmatch/chordal.hpp"
#include "totmatch/dd.hpp"
#include "totmatch/enumerate.hpp"
#include "totmatch/errors.hpp"
#include "totmatch/simplex.hpp"
#include "totmatch/solver.hpp"
#include "totmatch/trees.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace totmatch;

namespace {

struct InstanceFlags {
    std::vector<int> complete_bipartite;
    std::string graph_file;
    std::string tree_spec;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& flags) {
    cmd->add_option("--complete-bipartite", flags.complete_bipartite, "Biclique sides R S")
        ->expected(2);
    cmd->add_option("--graph", flags.graph_file, "Graph file");
    cmd->add_option("--tree", flags.tree_spec, "Named tree shape (pathN, starN)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph resolve_instance(const InstanceFlags& flags) {
    int given = !flags.complete_bipartite.empty();
    given += !flags.graph_file.empty();
    given += !flags.tree_spec.empty();
    if (given != 1)
        throw std::invalid_argument(
            "exactly one of --complete-bipartite, --graph, --tree is required");
    if (!flags.complete_bipartite.empty())
        return make_complete_bipartite(flags.complete_bipartite[0], flags.complete_bipartite[1]);
    if (!flags.graph_file.empty()) return parse_graph(read_file(flags.graph_file));
    return tree_from_spec(flags.tree_spec);
}

std::pair<int, int> biclique_sides(const Graph& g) {
    if (!is_complete_bipartite(g))
        throw std::invalid_argument("this subcommand needs a complete bipartite instance");
    return {static_cast<int>(g.bipartition->side_a.size()),
            static_cast<int>(g.bipartition->side_b.size())};
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    out << content;
}

std::string format_matching(const Graph& g, const TotalMatching& t) {
    if (t.empty()) return "-";
    auto elems = elements(g);
    std::string line;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) line += " ";
        line += element_id(elems[t[i]]);
    }
    return line;
}

// Weights drawn as p/q with p in [-20, 20], q in [1, 10]; plain modulo keeps
// runs identical across platforms.
QVec random_weights(std::mt19937_64& rng, int count) {
    QVec w(count);
    for (int i = 0; i < count; ++i) {
        long long p = static_cast<long long>(rng() % 41) - 20;
        long long q = static_cast<long long>(rng() % 10) + 1;
        w[i] = make_rational(p, q);
    }
    return w;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact rational toolkit for total matching polytopes"};
    app.require_subcommand(1);

    InstanceFlags inst;
    std::string weights_file, point_file, rows_file, catalog_file, lift_file, out_file;
    std::string mode = "all";
    int separation_size = 0;
    int limit_elements = kDefaultElementLimit;
    int limit_dim = kDefaultDimensionLimit;
    int trials = 0;
    unsigned long long seed = 1;
    bool brute = false, emit = false, rays_flag = false, project_flag = false;

    auto* gen = app.add_subcommand("gen", "Emit a graph file");
    add_instance_flags(gen, inst);
    gen->add_option("--out", out_file, "Output file");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List total matchings");
    add_instance_flags(enumerate_cmd, inst);
    enumerate_cmd->add_option("--mode", mode, "all | maximal | maximum");
    enumerate_cmd->add_option("--limit-elements", limit_elements, "Enumeration bound");
    enumerate_cmd->add_option("--out", out_file, "Output file");

    auto* nut = app.add_subcommand("nut", "Maximum total matching size");
    add_instance_flags(nut, inst);
    nut->add_option("--limit-elements", limit_elements, "Enumeration bound");

    auto* solve = app.add_subcommand("solve", "Max-weight total matching");
    add_instance_flags(solve, inst);
    solve->add_option("--weights", weights_file, "Weight file");
    solve->add_flag("--brute", brute, "Force exhaustive search");
    solve->add_option("--trials", trials, "Random weight vectors to solve and cross-check");
    solve->add_option("--seed", seed, "Random seed");
    solve->add_option("--limit-elements", limit_elements, "Enumeration bound");

    auto* describe = app.add_subcommand("describe", "Inequality catalog of the instance");
    add_instance_flags(describe, inst);
    describe->add_option("--out", out_file, "Output file");

    auto* hull = app.add_subcommand("hull", "Facets of the total matching polytope");
    add_instance_flags(hull, inst);
    hull->add_option("--limit-elements", limit_elements, "Enumeration bound");
    hull->add_option("--limit-dim", limit_dim, "Hull dimension bound");
    hull->add_option("--out", out_file, "Output file");

    auto* verify = app.add_subcommand("verify", "Check a description against the hull");
    add_instance_flags(verify, inst);
    verify->add_option("--catalog", catalog_file, "Row file to verify instead of the built-in one");
    verify->add_option("--limit-elements", limit_elements, "Enumeration bound");
    verify->add_option("--limit-dim", limit_dim, "Hull dimension bound");

    auto* facet = app.add_subcommand("facet", "Validity and facet test for a row file");
    add_instance_flags(facet, inst);
    facet->add_option("--rows", rows_file, "Inequality file")->required();
    facet->add_option("--limit-elements", limit_elements, "Enumeration bound");

    auto* ef = app.add_subcommand("ef", "Extended formulation: build, solve, lift");
    add_instance_flags(ef, inst);
    ef->add_flag("--emit", emit, "Print the formulation");
    ef->add_option("--weights", weights_file, "Objective over the elements");
    ef->add_option("--lift", lift_file, "Point file to lift");
    ef->add_option("--out", out_file, "Output file");

    auto* cone = app.add_subcommand("cone", "Projection cone and projected rows");
    add_instance_flags(cone, inst);
    cone->add_flag("--emit", emit, "Print the cone");
    cone->add_flag("--rays", rays_flag, "Print its extreme rays");
    cone->add_flag("--project", project_flag, "Print the projected description");
    cone->add_option("--limit-dim", limit_dim, "Ray enumeration dimension bound");
    cone->add_option("--out", out_file, "Output file");

    auto* separate = app.add_subcommand("separate", "Most violated row at a point");
    add_instance_flags(separate, inst);
    separate->add_option("--point", point_file, "Point file")->required();
    separate->add_option("--r", separation_size, "Balanced subset size (omit: full catalog)");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        write_output(out_file, write_graph(resolve_instance(inst)));
        return 0;
    }

    if (enumerate_cmd->parsed()) {
        Graph g = resolve_instance(inst);
        EnumerationMode m;
        if (mode == "all")
            m = EnumerationMode::All;
        else if (mode == "maximal")
            m = EnumerationMode::Maximal;
        else if (mode == "maximum")
            m = EnumerationMode::Maximum;
        else
            throw std::invalid_argument("bad --mode '" + mode + "'");
        std::ostringstream out;
        for (const auto& t : enumerate_total_matchings(g, m, limit_elements))
            out << format_matching(g, t) << "\n";
        write_output(out_file, out.str());
        return 0;
    }

    if (nut->parsed()) {
        std::cout << nu_t(resolve_instance(inst), limit_elements) << "\n";
        return 0;
    }

    if (solve->parsed()) {
        Graph g = resolve_instance(inst);
        if (trials > 0) {
            if (!is_complete_bipartite(g))
                throw std::invalid_argument("--trials needs a complete bipartite instance");
            std::mt19937_64 rng(seed);
            for (int t = 0; t < trials; ++t) {
                QVec w = random_weights(rng, g.vertex_count + g.edge_count());
                auto fast = solve_complete_bipartite(g, w);
                auto slow = max_weight_total_matching_bruteforce(g, w, limit_elements);
                std::cout << "trial " << t << " value " << fast.first << "\n";
                if (fast.first != slow.value) {
                    std::cerr << "mismatch against exhaustive search on trial " << t << "\n";
                    return 1;
                }
            }
            return 0;
        }
        if (weights_file.empty()) throw std::invalid_argument("--weights or --trials is required");
        QVec w = parse_element_vector(g, read_file(weights_file));
        Rational value;
        TotalMatching witness;
        if (!brute && is_complete_bipartite(g)) {
            std::tie(value, witness) = solve_complete_bipartite(g, w);
        } else {
            auto res = max_weight_total_matching_bruteforce(g, w, limit_elements);
            value = res.value;
            witness = res.witness;
        }
        std::cout << "value: " << value << "\n"
                  << "witness: " << format_matching(g, witness) << "\n";
        return 0;
    }

    if (describe->parsed()) {
        Graph g = resolve_instance(inst);
        HPolytope d;
        if (is_complete_bipartite(g)) {
            auto [r, s] = biclique_sides(g);
            d = complete_bipartite_description(r, s);
        } else {
            d = tree_description(g);
        }
        write_output(out_file, write_hpolytope(d));
        return 0;
    }

    if (hull->parsed()) {
        Graph g = resolve_instance(inst);
        VPolytope v;
        v.space = element_space(g);
        for (const auto& t : enumerate_total_matchings(g, EnumerationMode::All, limit_elements))
            v.vertices.push_back(characteristic_vector(g, t));
        write_output(out_file, write_hpolytope(dd_hull(v, limit_dim), false));
        return 0;
    }

    if (verify->parsed()) {
        Graph g = resolve_instance(inst);
        HPolytope description;
        if (!catalog_file.empty()) {
            description = parse_hpolytope(read_file(catalog_file));
            if (!(description.space == element_space(g)))
                throw std::invalid_argument("catalog coordinate space does not match the instance");
        } else if (is_complete_bipartite(g)) {
            auto [r, s] = biclique_sides(g);
            description = complete_bipartite_description(r, s);
        } else {
            description = tree_description(g);
        }
        auto report = verify_description(g, description, limit_elements, limit_dim);
        auto yesno = [](bool b) { return b ? "yes" : "no"; };
        std::cout << "complete: " << yesno(report.complete) << ", sound: " << yesno(report.sound)
                  << ", irredundant: " << yesno(report.irredundant)
                  << ", facets: " << report.hull_facets << "\n";
        for (const auto& row : report.missing)
            std::cout << "missing: " << write_row(row, false) << "\n";
        for (const auto& row : report.extra)
            std::cout << "extra: " << write_row(row, false) << "\n";
        return report.all() ? 0 : 1;
    }

    if (facet->parsed()) {
        Graph g = resolve_instance(inst);
        HPolytope rows = parse_hpolytope(read_file(rows_file));
        if (!(rows.space == element_space(g)))
            throw std::invalid_argument("row file coordinate space does not match the instance");
        bool all_valid = true;
        for (const auto& row : rows.rows) {
            auto validity = is_valid(g, row, limit_elements);
            if (!validity.valid) {
                all_valid = false;
                std::cout << "invalid (violated by " << format_matching(g, validity.counterexample)
                          << "): " << write_row(row, false) << "\n";
                continue;
            }
            auto fr = is_facet(g, row, limit_elements);
            std::cout << (fr.facet ? "facet" : "valid non-facet") << " (tight rank "
                      << fr.tight_rank << "): " << write_row(row, false) << "\n";
        }
        return all_valid ? 0 : 1;
    }

    if (ef->parsed()) {
        auto [r, s] = biclique_sides(resolve_instance(inst));
        Graph g = make_complete_bipartite(r, s);
        if (emit) {
            write_output(out_file, write_hpolytope(build_Q(r, s)));
            return 0;
        }
        if (!weights_file.empty()) {
            QVec w = parse_element_vector(g, read_file(weights_file));
            auto sol = solve_over_Q(r, s, w);
            std::cout << "value: " << sol.value << "\n"
                      << "witness: " << to_string(sol.projected) << "\n";
            return 0;
        }
        if (!lift_file.empty()) {
            QVec z = parse_element_vector(g, read_file(lift_file));
            auto lifted = lift_point(z, r, s);
            if (!lifted) {
                std::cout << "no certificate: point is outside the polytope\n";
                return 1;
            }
            std::cout << "lift: " << to_string(*lifted) << "\n";
            return 0;
        }
        throw std::invalid_argument("ef needs one of --emit, --weights, --lift");
    }

    if (cone->parsed()) {
        auto [r, s] = biclique_sides(resolve_instance(inst));
        std::ostringstream out;
        HPolytope cp = projection_cone(r, s);
        if (emit) out << write_hpolytope(cp);
        if (rays_flag)
            for (const auto& ray : dd_rays(cp, limit_dim)) out << to_string(ray) << "\n";
        if (project_flag) out << write_hpolytope(project_Q(r, s, limit_dim));
        if (!emit && !rays_flag && !project_flag)
            throw std::invalid_argument("cone needs one of --emit, --rays, --project");
        write_output(out_file, out.str());
        return 0;
    }

    if (separate->parsed()) {
        Graph g = resolve_instance(inst);
        auto [r, s] = biclique_sides(g);
        QVec point = parse_element_vector(g, read_file(point_file));
        SeparationResult result = separation_size > 0
                                      ? separate_balanced(g, point, separation_size)
                                      : separate_catalog(r, s, point);
        if (!result.violated) {
            std::cout << "violated: no\n";
        } else {
            std::cout << "violated: yes\n"
                      << write_row(*result.inequality) << "\n"
                      << "violation: " << result.violation << "\n";
        }
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const LimitError& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
