#include "pushgame/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pushgame/analysis.hpp"
#include "pushgame/core.hpp"
#include "pushgame/error.hpp"
#include "pushgame/generators.hpp"
#include "pushgame/invariant.hpp"
#include "pushgame/io.hpp"
#include "pushgame/oracle.hpp"
#include "pushgame/solver.hpp"

namespace pushgame::cli {

namespace {

GraphFile load(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return parse_graph_file(in);
    std::ifstream file(path);
    if (!file) throw GameError(ErrorKind::ParseError, "cannot open '" + path + "'");
    return parse_graph_file(file);
}

int required_modulus(const GraphFile& file, int flag) {
    if (flag != 0) return flag;
    if (file.modulus) return *file.modulus;
    throw GameError(ErrorKind::DomainError, "no modulus: add a 'modulus' line or pass --m");
}

std::string first_labeling_name(const GraphFile& file) {
    if (file.labelings.empty())
        throw GameError(ErrorKind::DomainError, "file contains no labelings");
    return file.labelings.front().first;
}

void print_joined(std::ostream& out, const std::string& head, const std::vector<int>& values) {
    out << head;
    for (int v : values) out << ' ' << v;
    out << "\n";
}

void print_conflict(std::ostream& out, const ColorConflict& conflict) {
    out << "conflict\n";
    out << "vertex " << conflict.vertex << "\n";
    print_joined(out, "forced " + std::to_string(conflict.forced_color_a) + " via",
                 conflict.witness_a);
    print_joined(out, "forced " + std::to_string(conflict.forced_color_b) + " via",
                 conflict.witness_b);
}

Coloring require_coloring(const SimplexGraph& g) {
    ColoringResult result = propagate_coloring(g);
    if (!colored(result))
        throw GameError(ErrorKind::HypothesisViolation,
                        "graph has no proper coloring with n+1 colors");
    return std::get<Coloring>(result);
}

int cmd_validate(const std::string& path, std::istream& in, std::ostream& out) {
    GraphFile file = load(path, in);
    out << "valid\n";
    out << "n = " << file.graph.n << "\n";
    out << "vertices = " << file.graph.vertex_count << "\n";
    out << "regions = " << file.graph.region_count() << "\n";
    return 0;
}

int cmd_color(const std::string& path, std::istream& in, std::ostream& out) {
    GraphFile file = load(path, in);
    ColoringResult result = propagate_coloring(file.graph);
    if (colored(result)) {
        out << "colorable\n";
        print_joined(out, "colors", std::get<Coloring>(result).colors);
        return 0;
    }
    print_conflict(out, std::get<ColorConflict>(result));
    return 1;
}

int cmd_invariant(const std::string& path, std::istream& in, std::ostream& out, int m_flag,
                  std::string name) {
    GraphFile file = load(path, in);
    int modulus = required_modulus(file, m_flag);
    if (name.empty()) name = first_labeling_name(file);
    Labeling labeling = resolve_labeling(file, name, modulus);
    Coloring coloring = require_coloring(file.graph);
    InvariantValue value = compute_invariant(file.graph, coloring, labeling);
    out << "P = (";
    for (std::size_t k = 0; k < value.coords.size(); ++k) {
        if (k > 0) out << ", ";
        out << value.coords[k];
    }
    out << ") mod " << value.modulus << "\n";
    return 0;
}

int cmd_solve(const std::string& path, std::istream& in, std::ostream& out, int m_flag,
              const std::string& from_name, const std::string& to_name,
              const std::string& backend) {
    GraphFile file = load(path, in);
    int modulus = required_modulus(file, m_flag);
    Labeling from = resolve_labeling(file, from_name, modulus);
    Labeling to = resolve_labeling(file, to_name, modulus);

    bool feasible = true;
    if (backend == "linear" || backend == "both") {
        SolutionSet solution = solve_linear(file.graph, from, to);
        feasible = solution.feasible;
        out << (feasible ? "feasible" : "infeasible") << "\n";
        if (feasible) {
            print_joined(out, "particular", solution.particular->exponents);
            for (const auto& basis : solution.kernel_basis)
                print_joined(out, "kernel", basis.exponents);
        }
        out << "solutions = " << solution.solution_count.str() << "\n";
    }
    if (backend == "paths" || backend == "both") {
        Coloring coloring = require_coloring(file.graph);
        auto sequence = solve_region_paths(file.graph, coloring, from, to);
        if (backend == "paths") {
            feasible = sequence.has_value();
            out << (feasible ? "feasible" : "infeasible") << "\n";
        }
        if (sequence) {
            for (const auto& step : sequence->steps)
                out << "push " << step.region << " " << step.exponent << "\n";
            print_joined(out, "collapsed",
                         collapse(*sequence, file.graph.region_count(), modulus).exponents);
        }
    }
    return feasible ? 0 : 1;
}

int cmd_count(const std::string& path, std::istream& in, std::ostream& out, int m_flag) {
    GraphFile file = load(path, in);
    int modulus = required_modulus(file, m_flag);
    ClassReport report = class_report(file.graph, modulus);
    out << "predicted classes = " << report.predicted_class_count.str() << "\n";
    out << "predicted class size = " << report.predicted_class_size.str() << "\n";
    out << "predicted solutions = " << report.predicted_solution_count.str() << "\n";
    out << "measured classes = " << report.measured_class_count.str() << "\n";
    out << "measured orbit = " << report.measured_orbit_size.str() << "\n";
    out << "measured solutions = " << report.measured_solution_count.str() << "\n";
    out << "hypotheses hold = " << (report.hypotheses_hold ? "true" : "false") << "\n";
    return 0;
}

int cmd_probe(const std::string& path, std::istream& in, std::ostream& out, int m_flag,
              bool decomposed) {
    GraphFile file = load(path, in);
    int modulus = required_modulus(file, m_flag);
    ColorabilityVerdict verdict = decomposed ? probe_colorability_decomposed(file.graph, modulus)
                                             : probe_colorability(file.graph, modulus);
    out << (verdict.verdict == Verdict::Colorable ? "Colorable" : "NotColorable") << "\n";
    out << "classes = " << verdict.class_count.str() << "\n";
    out << "bound = " << verdict.bound_moves.str() << "\n";
    if (colored(verdict.certificate))
        print_joined(out, "colors", std::get<Coloring>(verdict.certificate).colors);
    else
        print_conflict(out, std::get<ColorConflict>(verdict.certificate));
    return verdict.verdict == Verdict::Colorable ? 0 : 1;
}

int cmd_decompose(const std::string& path, std::istream& in, std::ostream& out) {
    GraphFile file = load(path, in);
    Decomposition decomposition = decompose(file.graph);
    out << "components = " << decomposition.components.count << "\n";
    for (int id = 0; id < decomposition.components.count; ++id) {
        out << "component " << id << " regions";
        for (int r = 0; r < file.graph.region_count(); ++r)
            if (decomposition.components.component[r] == id) out << ' ' << r;
        out << "\n";
    }
    for (const auto& [i, j] : decomposition.association_edges)
        out << "edge " << i << " " << j << "\n";
    out << "acyclic = " << (decomposition.acyclic ? "true" : "false") << "\n";
    return 0;
}

int cmd_gen(std::ostream& out, const std::string& family, const std::vector<int>& params) {
    SimplexGraph g;
    if (family == "triangular" && params.size() == 1) {
        g = triangular_board(params[0]);
    } else if (family == "strip" && params.size() == 2) {
        g = simplex_strip(params[0], params[1]);
    } else if (family == "kplus" && params.size() == 1) {
        g = complete_plus(params[0]);
    } else if (family == "chain" && params.size() == 1) {
        g = shared_vertex_chain(params[0]);
    } else {
        throw GameError(ErrorKind::DomainError,
                        "usage: gen triangular <rows> | strip <n> <t> | kplus <n> | chain <count>");
    }
    out << serialize_graph(g);
    return 0;
}

int cmd_oracle(const std::string& path, std::istream& in, std::ostream& out,
               const std::string& mode, int m_flag, std::string name,
               const std::string& from_name, const std::string& to_name) {
    GraphFile file = load(path, in);
    int modulus = required_modulus(file, m_flag);
    if (mode == "orbit") {
        if (name.empty()) name = first_labeling_name(file);
        OrbitReport report = enumerate_orbit(file.graph, resolve_labeling(file, name, modulus));
        out << "orbit = " << report.orbit_size << "\n";
        char hex[32];
        std::snprintf(hex, sizeof hex, "%016llx", report.reachable_set_hash);
        out << "hash = " << hex << "\n";
    } else if (mode == "solutions") {
        Labeling from = resolve_labeling(file, from_name, modulus);
        Labeling to = resolve_labeling(file, to_name, modulus);
        out << "solutions = " << count_solutions_brute(file.graph, from, to) << "\n";
    } else if (mode == "partition") {
        OrbitReport report = partition_all_labelings(file.graph, modulus);
        out << "classes = " << report.class_partition_sizes.size() << "\n";
        out << "sizes";
        for (auto size : report.class_partition_sizes) out << ' ' << size;
        out << "\n";
    } else {
        throw GameError(ErrorKind::DomainError, "oracle mode must be orbit|solutions|partition");
    }
    return 0;
}

int cmd_bounds(std::ostream& out, long long r, long long n, long long m, long long v) {
    bool printed = false;
    if (r != 0 || n != 0 || m != 0) {
        out << "moves bound = " << moves_bound(r, n, m).str() << "\n";
        printed = true;
    }
    if (v != 0) {
        out << "planar bound = " << planar_moves_bound(v).str() << "\n";
        printed = true;
    }
    if (!printed)
        throw GameError(ErrorKind::DomainError, "pass --r/--n/--m for the push bound or --v for the planar bound");
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"push games on n-simplex boards"};
    app.require_subcommand(1);

    std::string path;
    int m_flag = 0;
    std::string labeling_name;
    std::string from_name, to_name;
    std::string backend = "linear";
    bool decomposed = false;
    std::string family;
    std::vector<int> params;
    std::string oracle_mode;
    long long bound_r = 0, bound_n = 0, bound_m = 0, bound_v = 0;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", path, "board file ('-' or absent reads standard input)");
    };

    auto* validate = app.add_subcommand("validate", "check a board file");
    add_file(validate);

    auto* color = app.add_subcommand("color", "propagate a coloring or report a conflict");
    add_file(color);

    auto* invariant = app.add_subcommand("invariant", "print the push invariant of a labeling");
    add_file(invariant);
    invariant->add_option("--m", m_flag, "modulus (overrides the file)");
    invariant->add_option("--labeling", labeling_name, "labeling name (default: first in file)");

    auto* solve = app.add_subcommand("solve", "decide reachability and construct pushes");
    add_file(solve);
    solve->add_option("--m", m_flag, "modulus (overrides the file)");
    solve->add_option("--from", from_name, "start labeling name")->required();
    solve->add_option("--to", to_name, "target labeling name")->required();
    solve->add_option("--backend", backend, "linear|paths|both")
        ->check(CLI::IsMember({"linear", "paths", "both"}));

    auto* count = app.add_subcommand("count", "class and solution counts");
    add_file(count);
    count->add_option("--m", m_flag, "modulus (overrides the file)");

    auto* probe = app.add_subcommand("probe", "class-count colorability probe");
    add_file(probe);
    probe->add_option("--m", m_flag, "modulus (overrides the file)");
    probe->add_flag("--decomposed", decomposed, "probe per component across an acyclic association");

    auto* decomp = app.add_subcommand("decompose", "components and association graph");
    add_file(decomp);

    auto* gen = app.add_subcommand("gen", "emit a generated board");
    gen->add_option("family", family, "triangular|strip|kplus|chain")->required();
    gen->add_option("params", params, "family parameters");

    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth (guarded)");
    oracle->add_option("mode", oracle_mode, "orbit|solutions|partition")->required();
    add_file(oracle);
    oracle->add_option("--m", m_flag, "modulus (overrides the file)");
    oracle->add_option("--labeling", labeling_name, "labeling name (orbit mode)");
    oracle->add_option("--from", from_name, "start labeling name (solutions mode)");
    oracle->add_option("--to", to_name, "target labeling name (solutions mode)");

    auto* bounds = app.add_subcommand("bounds", "sufficient move-count bounds");
    bounds->add_option("--r", bound_r, "region count");
    bounds->add_option("--n", bound_n, "simplex dimension");
    bounds->add_option("--m", bound_m, "modulus");
    bounds->add_option("--v", bound_v, "vertex count (planar bound)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(path, in, out);
        if (color->parsed()) return cmd_color(path, in, out);
        if (invariant->parsed()) return cmd_invariant(path, in, out, m_flag, labeling_name);
        if (solve->parsed()) return cmd_solve(path, in, out, m_flag, from_name, to_name, backend);
        if (count->parsed()) return cmd_count(path, in, out, m_flag);
        if (probe->parsed()) return cmd_probe(path, in, out, m_flag, decomposed);
        if (decomp->parsed()) return cmd_decompose(path, in, out);
        if (gen->parsed()) return cmd_gen(out, family, params);
        if (oracle->parsed())
            return cmd_oracle(path, in, out, oracle_mode, m_flag, labeling_name, from_name,
                              to_name);
        if (bounds->parsed()) return cmd_bounds(out, bound_r, bound_n, bound_m, bound_v);
    } catch (const GameError& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::TooLarge ? 3 : 2;
    }
    return 2;
}

}  // namespace pushgame::cli
