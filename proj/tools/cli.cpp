#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "polydiag/ciralg.hpp"
#include "polydiag/io.hpp"
#include "polydiag/lattice.hpp"
#include "polydiag/quotient.hpp"
#include "polydiag/solver.hpp"
#include "polydiag/symmetry.hpp"

namespace polydiag::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputOptions {
    std::string matrix_path;
    std::string graph_path;
    bool laplacian = false;
    bool adjacency = false;
    std::size_t size = 0;

    void attach(CLI::App* app) {
        app->add_option("--matrix", matrix_path, "Integer (or p/q) matrix file");
        app->add_option("--graph", graph_path, "Edge list file, 1-based \"u v\" per line");
        app->add_flag("--laplacian", laplacian, "Use the graph Laplacian");
        app->add_flag("--adjacency", adjacency, "Use the adjacency matrix");
        app->add_option("--size", size, "Use the n x n zero matrix (every coloring is invariant)");
    }

    IntegerMatrix load(std::ostream& err) const {
        int sources = !matrix_path.empty() + !graph_path.empty() + (size > 0);
        if (sources != 1) throw UsageError("give exactly one of --matrix, --graph or --size");
        if (!graph_path.empty()) {
            if (laplacian == adjacency) throw UsageError("--graph needs exactly one of --laplacian or --adjacency");
            auto parsed = parse_graph_file(graph_path, laplacian ? GraphMatrixKind::laplacian : GraphMatrixKind::adjacency);
            for (const auto& w : parsed.warnings) err << "warning: " << w << "\n";
            return parsed.matrix;
        }
        if (laplacian || adjacency) throw UsageError("--laplacian/--adjacency only apply to --graph");
        if (size > 0) return IntegerMatrix(size);
        auto parsed = parse_matrix_file(matrix_path);
        if (parsed.scale != 1) err << "note: matrix scaled by " << to_string(parsed.scale) << " to clear denominators\n";
        return parsed.matrix;
    }
};

void print_line(std::ostream& out, std::span<const int> c) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << "\n";
}

EnumerationMode mode_from(const std::string& name) {
    try {
        return parse_mode(name);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
}

struct EnumerateCommand {
    InputOptions input;
    std::string mode = "polydiagonal";
    std::string format = "lines";
    bool count_only = false;
    int threads = 1;
    std::size_t split_depth = 4;

    void attach(CLI::App* app) {
        input.attach(app);
        app->add_option("--mode", mode, "polydiagonal | synchrony | anti-synchrony | colorings");
        app->add_option("--format", format, "lines | json")->check(CLI::IsMember({"lines", "json"}));
        app->add_flag("--count-only", count_only, "Print only the number of solutions");
        app->add_option("--threads", threads, "Worker threads (1 = serial search)")->check(CLI::PositiveNumber);
        app->add_option("--split-depth", split_depth, "Prefix depth at which work is split between threads")
            ->check(CLI::PositiveNumber);
    }

    void operator()(std::ostream& out, std::ostream& err) const {
        auto m_mode = mode_from(mode);
        auto m = input.load(err);
        SolveConfig config{threads, split_depth};
        if (count_only && format == "lines") {
            out << count(m, m_mode, config) << "\n";
            return;
        }
        if (format == "lines" && threads == 1) {
            enumerate(m, m_mode, config, [&](std::span<const int> c) { print_line(out, c); });
            return;
        }
        auto solutions = enumerate_all(m, m_mode, config);
        std::sort(solutions.begin(), solutions.end());
        if (format == "lines") {
            for (const auto& c : solutions) print_line(out, c.entries());
            return;
        }
        nlohmann::json doc;
        doc["n"] = m.size();
        doc["mode"] = std::string(mode_name(m_mode));
        doc["count"] = solutions.size();
        doc["solutions"] = nlohmann::json::array();
        if (!count_only)
            for (const auto& c : solutions) doc["solutions"].push_back(c.vec());
        out << doc.dump() << "\n";
    }
};

struct CirCommand {
    InputOptions input;
    std::string order = "sequential";

    void attach(CLI::App* app) {
        input.attach(app);
        app->add_option("--order", order, "sequential | simultaneous")
            ->check(CLI::IsMember({"sequential", "simultaneous"}));
    }

    void operator()(std::ostream& out, std::ostream& err) const {
        auto m = input.load(err);
        auto refine = order == "sequential" ? RefinementOrder::sequential : RefinementOrder::simultaneous;
        std::vector<ColoringVector> found;
        for (const auto& p : split_and_cir(m, refine)) found.push_back(p.coloring());
        std::sort(found.begin(), found.end());
        for (const auto& c : found) print_line(out, c.entries());
    }
};

struct HasseCommand {
    InputOptions input;
    std::string mode = "polydiagonal";
    std::string output;
    bool plain = false;

    void attach(CLI::App* app) {
        input.attach(app);
        app->add_option("--mode", mode, "polydiagonal | synchrony | anti-synchrony | colorings");
        app->add_option("--output,-o", output, "Write DOT to this file instead of standard output");
        app->add_flag("--no-shade", plain, "Do not shade synchrony nodes");
    }

    void operator()(std::ostream& out, std::ostream& err) const {
        auto m_mode = mode_from(mode);
        auto m = input.load(err);
        auto family = enumerate_all(m, m_mode);
        DotOptions options;
        options.shade_synchrony = !plain;
        auto dot = to_dot(build_poset(family), options);
        if (output.empty()) {
            out << dot;
            return;
        }
        std::ofstream file(output);
        if (!file) throw InvalidArgument("cannot write '" + output + "'");
        file << dot;
    }
};

struct OrbitsCommand {
    InputOptions input;
    std::string generators_path;
    bool auto_aut = false;
    bool no_negation = false;

    void attach(CLI::App* app) {
        input.attach(app);
        app->add_option("--generators", generators_path, "Signed permutation generators, one per line");
        app->add_flag("--auto-aut", auto_aut, "Use the automorphisms of the matrix together with -I");
        app->add_flag("--no-negation", no_negation, "With --auto-aut, leave out -I");
    }

    void operator()(std::ostream& out, std::ostream& err) const {
        if (auto_aut == !generators_path.empty()) throw UsageError("give exactly one of --generators or --auto-aut");
        if (no_negation && !auto_aut) throw UsageError("--no-negation only applies to --auto-aut");
        auto m = input.load(err);
        SymmetryGroup group = auto_aut ? signed_symmetry_group(m, !no_negation)
                                       : group_closure(m.size(), parse_generators_file(generators_path, m.size()));
        auto family = enumerate_all(m, EnumerationMode::polydiagonal);
        auto orbit_list = orbits(group, family);
        auto report = classify_ais(m, group, family);
        for (const auto& w : report.warnings) err << "warning: " << w << "\n";

        std::size_t ais = 0;
        out << "group order " << group.order() << "\n";
        out << "subspaces " << family.size() << "\n";
        out << "orbits " << orbit_list.size() << "\n";
        out << std::left << std::setw(6) << "orbit" << std::setw(6) << "size" << std::setw(6) << "stab"
            << std::setw(13) << "label" << "representative\n";
        for (std::size_t k = 0; k < orbit_list.size(); ++k) {
            const auto& o = orbit_list[k];
            auto idx = std::find(family.begin(), family.end(), o.representative) - family.begin();
            bool is_ais = report.labels[static_cast<std::size_t>(idx)] == AisLabel::ais;
            ais += is_ais;
            out << std::setw(6) << k + 1 << std::setw(6) << o.members.size() << std::setw(6)
                << report.stabilizer_orders[static_cast<std::size_t>(idx)] << std::setw(13)
                << (is_ais ? "AIS" : "fixed-point") << o.representative.str() << "\n";
        }
        out << "AIS orbits " << ais << "\n";
    }
};

struct QuotientCommand {
    InputOptions input;
    std::string coloring;
    bool nested = false;
    std::string mode = "polydiagonal";

    void attach(CLI::App* app) {
        input.attach(app);
        app->add_option("--coloring", coloring, "Invariant coloring vector, e.g. \"1 2 1\"")->required();
        app->add_flag("--nested", nested, "Also list the invariant subspaces nested inside it");
        app->add_option("--mode", mode, "Enumeration mode for --nested");
    }

    void operator()(std::ostream& out, std::ostream& err) const {
        auto m_mode = mode_from(mode);
        auto m = input.load(err);
        auto c = parse_coloring(coloring);
        if (c.size() != m.size())
            throw InvalidArgument("coloring has " + std::to_string(c.size()) + " entries, matrix has size " +
                                  std::to_string(m.size()));
        if (dimension(c) == 0) throw InvalidArgument("the zero subspace has no quotient");
        auto mc = quotient_matrix(m, c);
        for (std::size_t i = 0; i < mc.rows(); ++i) {
            for (std::size_t j = 0; j < mc.cols(); ++j) out << (j ? " " : "") << mc(i, j).str();
            out << "\n";
        }
        if (!nested) return;
        out << "\n";
        for (const auto& e : nested_invariants(m, c, m_mode)) out << e.str() << " -> " << lift(c, e).str() << "\n";
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariant polydiagonal subspaces of integer matrices", "polydiag"};
    app.require_subcommand(1);

    EnumerateCommand enumerate_cmd;
    CirCommand cir_cmd;
    HasseCommand hasse_cmd;
    OrbitsCommand orbits_cmd;
    QuotientCommand quotient_cmd;
    auto* enumerate_app = app.add_subcommand("enumerate", "List invariant coloring vectors");
    auto* cir_app = app.add_subcommand("cir", "Synchrony subspaces by split-and-cir refinement");
    auto* hasse_app = app.add_subcommand("hasse", "Hasse diagram of the invariant lattice in DOT");
    auto* orbits_app = app.add_subcommand("orbits", "Orbits and AIS classification under a signed symmetry group");
    auto* quotient_app = app.add_subcommand("quotient", "Quotient matrix of an invariant coloring");
    enumerate_cmd.attach(enumerate_app);
    cir_cmd.attach(cir_app);
    hasse_cmd.attach(hasse_app);
    orbits_cmd.attach(orbits_app);
    quotient_cmd.attach(quotient_app);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*enumerate_app)
            enumerate_cmd(out, err);
        else if (*cir_app)
            cir_cmd(out, err);
        else if (*hasse_app)
            hasse_cmd(out, err);
        else if (*orbits_app)
            orbits_cmd(out, err);
        else
            quotient_cmd(out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    } catch (const OverflowError& e) {
        err << "overflow: " << e.what() << "\n";
        return overflow_error;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return data_error;
    }
    return ok;
}

}  // namespace polydiag::cli
