// Command-line front end: classify | poly | reduce | gen | fuzz.
//
// Exit codes: 0 success, 1 fuzz counterexample, 2 parse error or invalid
// generator spec, 3 input is not a tree, 4 vertex budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "indtree/errors.hpp"
#include "indtree/graph_io.hpp"
#include "indtree/ind_poly.hpp"
#include "indtree/oracle.hpp"
#include "indtree/reduction.hpp"
#include "indtree/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFuzzFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotATree = 3;
constexpr int kExitBudget = 4;

struct Options {
    std::string input = "-";
    std::string format = "auto"; // edgelist | graph6 | auto
    std::string output = "text"; // text | json
    bool trace = false;
    int budget = 25;
    std::uint64_t seed = 0;
    std::uint64_t count = 100;
    int max_n = 20;
    int gen_n = 0;
    std::string gen_shape = "uniform_prufer";
};

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file)
            throw indtree::ParseError("cannot open input file '" + path + "'");
        buf << file.rdbuf();
    }
    return buf.str();
}

indtree::Graph load_graph(const Options& opt) {
    std::string text = read_input(opt.input);
    indtree::GraphFormat fmt;
    if (opt.format == "edgelist")
        fmt = indtree::GraphFormat::edgelist;
    else if (opt.format == "graph6")
        fmt = indtree::GraphFormat::graph6;
    else
        fmt = indtree::detect_format(text);
    return fmt == indtree::GraphFormat::edgelist ? indtree::parse_edge_list(text)
                                                 : indtree::parse_graph6(text);
}

int cmd_classify(const Options& opt) {
    indtree::Graph g = load_graph(opt);
    if (!indtree::is_tree(g)) {
        std::cerr << "error: input is not a tree\n";
        return kExitNotATree;
    }
    indtree::Classification c = indtree::classify(g);
    if (opt.output == "json")
        std::cout << indtree::to_json(c).dump(2) << "\n";
    else
        std::cout << indtree::classification_to_text(c, opt.trace);
    return kExitOk;
}

int cmd_poly(const Options& opt) {
    indtree::Graph g = load_graph(opt);
    indtree::Polynomial p;
    if (indtree::is_tree(g)) {
        p = indtree::tree_ind_poly(g);
    } else {
        if (g.vertex_count() > static_cast<std::size_t>(opt.budget)) {
            std::cerr << "error: " << g.vertex_count() << " vertices exceed the budget of "
                      << opt.budget << " for non-tree inputs (use --budget)\n";
            return kExitBudget;
        }
        p = indtree::graph_ind_poly(g);
    }
    if (opt.output == "json")
        std::cout << indtree::to_json(p).dump(2) << "\n";
    else
        std::cout << p.to_text() << "; I(-1)=" << p.eval(-1) << "\n";
    return kExitOk;
}

int cmd_reduce(const Options& opt) {
    indtree::Graph g = load_graph(opt);
    if (!indtree::is_tree(g)) {
        std::cerr << "error: input is not a tree\n";
        return kExitNotATree;
    }
    indtree::ReductionTrace t = indtree::reduce(g);
    if (opt.output == "json")
        std::cout << indtree::to_json(t).dump(2) << "\n";
    else
        std::cout << indtree::trace_to_text(t);
    return kExitOk;
}

int cmd_gen(const Options& opt) {
    auto shape = indtree::tree_shape_from_name(opt.gen_shape);
    if (opt.gen_n < 1 || !shape) {
        std::cerr << "error: invalid generator spec (need --n >= 1 and a known --shape)\n";
        return kExitParse;
    }
    indtree::TreeGenSpec spec{opt.gen_n, opt.seed, *shape};
    indtree::Graph g = indtree::random_tree(spec);
    if (opt.format == "graph6")
        std::cout << indtree::emit_graph6(g) << "\n";
    else
        std::cout << indtree::emit_edge_list(g);
    return kExitOk;
}

int cmd_fuzz(const Options& opt) {
    indtree::FuzzOptions fuzz;
    fuzz.count = opt.count;
    fuzz.max_n = opt.max_n;
    fuzz.seed = opt.seed;
    indtree::FuzzReport report = indtree::fuzz_equivalence(fuzz);
    if (opt.output == "json")
        std::cout << indtree::to_json(report).dump(2) << "\n";
    else
        std::cout << indtree::fuzz_report_to_text(report);
    return report.ok() ? kExitOk : kExitFuzzFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classify the independence complex of a tree via branch truncation"};
    app.require_subcommand(1);

    Options opt;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("input", opt.input, "input file, or '-' for stdin")->capture_default_str();
        cmd->add_option("--format", opt.format, "edgelist | graph6 | auto")
            ->check(CLI::IsMember({"edgelist", "graph6", "auto"}))
            ->capture_default_str();
        cmd->add_option("--output", opt.output, "text | json")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* classify = app.add_subcommand("classify", "I(G;-1), contractibility, sphere parity");
    add_io(classify);
    classify->add_flag("--trace", opt.trace, "append the full move log");

    CLI::App* poly = app.add_subcommand("poly", "exact independence polynomial and I(G;-1)");
    add_io(poly);
    poly->add_option("--budget", opt.budget, "max vertices for non-tree inputs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* reduce = app.add_subcommand("reduce", "branch-truncation move log");
    add_io(reduce);

    CLI::App* gen = app.add_subcommand("gen", "generate a seeded random tree");
    gen->add_option("--n", opt.gen_n, "vertex count (required, >= 1)");
    gen->add_option("--shape", opt.gen_shape, "uniform_prufer | spider | caterpillar")
        ->capture_default_str();
    gen->add_option("--seed", opt.seed, "generator seed")->capture_default_str();
    gen->add_option("--format", opt.format, "edgelist | graph6")
        ->check(CLI::IsMember({"edgelist", "graph6", "auto"}))
        ->capture_default_str();

    CLI::App* fuzz = app.add_subcommand("fuzz", "equivalence-fuzz classify against the oracles");
    fuzz->add_option("--count", opt.count, "number of trees")->capture_default_str();
    fuzz->add_option("--max-n", opt.max_n, "maximum vertex count")->capture_default_str();
    fuzz->add_option("--seed", opt.seed, "run seed")->capture_default_str();
    fuzz->add_option("--output", opt.output, "text | json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed())
            return cmd_classify(opt);
        if (poly->parsed())
            return cmd_poly(opt);
        if (reduce->parsed())
            return cmd_reduce(opt);
        if (gen->parsed())
            return cmd_gen(opt);
        if (fuzz->parsed())
            return cmd_fuzz(opt);
    } catch (const indtree::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const indtree::NotATreeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotATree;
    } catch (const indtree::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    }
    return kExitOk;
}
