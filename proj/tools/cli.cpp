#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "splitdel/analysis.hpp"
#include "splitdel/edge_list.hpp"
#include "splitdel/errors.hpp"
#include "splitdel/generator.hpp"
#include "splitdel/oracle.hpp"
#include "splitdel/recognition.hpp"
#include "splitdel/sbvd.hpp"
#include "splitdel/stvd.hpp"

namespace splitdel::cli {

namespace {

constexpr int kVerifyOracleLimit = 12;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string join(const VertexSet& s) {
    std::string out;
    for (Vertex v : s) {
        if (!out.empty()) {
            out += " ";
        }
        out += std::to_string(v);
    }
    return out;
}

std::string fixed6(double x) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << x;
    return os.str();
}

TargetProperty property_for(const std::string& problem) {
    return problem == "sbvd" ? TargetProperty::BlockSplit : TargetProperty::ThresholdSplit;
}

struct SolveArgs {
    std::string problem;
    int k = 0;
    std::string file;
    std::string trace;
    bool verify = false;
};

int do_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    if (a.k < 0) {
        throw UsageError("--k must be non-negative");
    }
    if (!a.trace.empty() && a.problem != "stvd") {
        throw UsageError("--trace is only available for stvd");
    }
    const Graph g = parse_edge_list(read_file(a.file));
    const SplitPartition p = split_partition(g);

    std::optional<VertexSet> solution;
    std::vector<TraceRecord> trace;
    if (a.problem == "sbvd") {
        solution = solve_sbvd(g, p, a.k);
    } else {
        StvdOptions options;
        if (!a.trace.empty()) {
            options.trace = &trace;
        }
        solution = solve_stvd(g, p, a.k, options);
    }

    if (!a.trace.empty()) {
        std::ofstream tf(a.trace, std::ios::binary);
        if (!tf) {
            throw UsageError("cannot write " + a.trace);
        }
        for (const auto& record : trace) {
            tf << format_trace_line(record) << "\n";
        }
    }

    if (solution) {
        out << "YES\n" << solution->size() << "\n" << join(*solution) << "\n";
    } else {
        out << "NO\n";
    }

    if (a.verify) {
        const TargetProperty prop = property_for(a.problem);
        if (solution && (solution->size() > a.k || !satisfies(g.without(*solution), prop))) {
            err << "verify: witness " << solution->to_string() << " is invalid\n";
            return kExitInternal;
        }
        if (g.live_count() <= kVerifyOracleLimit) {
            const bool oracle_yes = min_deletion(g, prop, a.k).has_value();
            if (oracle_yes != solution.has_value()) {
                err << "verify: solver says " << (solution ? "YES" : "NO") << ", oracle says "
                    << (oracle_yes ? "YES" : "NO") << "\n";
                return kExitInternal;
            }
            err << "verify: ok (witness checked, oracle agrees)\n";
        } else {
            err << "verify: ok (witness checked, oracle skipped above " << kVerifyOracleLimit << " vertices)\n";
        }
    }
    return kExitOk;
}

int do_recognize(const std::string& file, std::ostream& out) {
    const Graph g = parse_edge_list(read_file(file));
    SplitPartition p;
    try {
        p = split_partition(g);
    } catch (const NotSplitError&) {
        out << "split: no\n";
        return kExitNotSplit;
    }
    out << "split: yes C=" << p.clique.to_string() << " I=" << p.independent.to_string() << "\n";
    if (auto w = find_induced_p4(g, p)) {
        out << "threshold: no P4=" << w->u << "," << w->a << "," << w->b << "," << w->v << "\n";
    } else {
        out << "threshold: yes\n";
    }
    if (is_block_split(g, p)) {
        out << "block: yes\n";
    } else {
        auto d = find_induced_diamond(g);
        if (!d) {
            throw InvariantViolation("block characterization failed without a diamond");
        }
        auto q = d->vertices();
        out << "block: no diamond=" << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << "\n";
    }
    return kExitOk;
}

int do_oracle(const std::string& problem, int kmax, const std::string& file, std::ostream& out) {
    if (kmax < 0) {
        throw UsageError("--kmax must be non-negative");
    }
    const Graph g = parse_edge_list(read_file(file));
    split_partition(g);
    std::optional<DeletionResult> best;
    try {
        best = min_deletion(g, property_for(problem), kmax);
    } catch (const TooLargeError& e) {
        throw UsageError(e.what());
    }
    if (best) {
        out << "MIN " << best->size << "\n" << join(best->witness) << "\n";
    } else {
        out << "NONE\n";
    }
    return kExitOk;
}

struct GenArgs {
    int nc = 0;
    int ni = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::string out;
};

int do_gen(const GenArgs& a, std::ostream& out) {
    GeneratorConfig cfg{a.nc, a.ni, a.p, a.seed};
    Graph g;
    try {
        g = gen_split(cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const std::string text = render_edge_list(g);
    if (a.out.empty()) {
        out << text;
    } else {
        std::ofstream f(a.out, std::ios::binary);
        if (!f) {
            throw UsageError("cannot write " + a.out);
        }
        f << text;
    }
    return kExitOk;
}

BranchingVector parse_vector(const std::string& text) {
    BranchingVector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int c = std::stoi(item, &used);
            if (used != item.size()) {
                throw UsageError("bad vector entry '" + item + "'");
            }
            v.push_back(c);
        } catch (const std::logic_error&) {
            throw UsageError("bad vector entry '" + item + "'");
        }
    }
    return v;
}

int do_analyze(const std::string& vector, std::ostream& out) {
    if (!vector.empty()) {
        double gamma = 0.0;
        try {
            gamma = branching_number(parse_vector(vector));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        out << fixed6(gamma) << "\n";
        return kExitOk;
    }
    for (const auto& entry : rule_vector_table()) {
        out << entry.rule << " " << format_vector(entry.minimum) << " " << fixed6(entry.number) << "\n";
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solvers for split-to-block and split-to-threshold vertex deletion", "splitdel"};
    app.require_subcommand(1);

    const std::vector<std::string> problems{"sbvd", "stvd"};

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Decide whether at most k deletions suffice");
    solve_cmd->add_option("--problem", solve.problem, "sbvd or stvd")->required()->check(CLI::IsMember(problems));
    solve_cmd->add_option("--k", solve.k, "Deletion budget")->required();
    solve_cmd->add_option("--trace", solve.trace, "Write the stvd recursion trace to this file");
    solve_cmd->add_flag("--verify", solve.verify, "Re-check the witness and compare with the oracle");
    solve_cmd->add_option("file", solve.file, "Edge list")->required();

    std::string recognize_file;
    auto* recognize_cmd = app.add_subcommand("recognize", "Report split / threshold / block status");
    recognize_cmd->add_option("file", recognize_file, "Edge list")->required();

    std::string oracle_problem;
    int kmax = 0;
    std::string oracle_file;
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force minimum deletion set");
    oracle_cmd->add_option("--problem", oracle_problem, "sbvd or stvd")->required()->check(CLI::IsMember(problems));
    oracle_cmd->add_option("--kmax", kmax, "Largest deletion size to try")->required();
    oracle_cmd->add_option("file", oracle_file, "Edge list")->required();

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random split graph");
    gen_cmd->add_option("--nc", gen.nc, "Clique size")->required();
    gen_cmd->add_option("--ni", gen.ni, "Independent side size")->required();
    gen_cmd->add_option("--p", gen.p, "Edge probability between sides")->required();
    gen_cmd->add_option("--seed", gen.seed, "splitmix64 seed")->required();
    gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

    std::string vector;
    auto* analyze_cmd = app.add_subcommand("analyze", "Branching numbers");
    analyze_cmd->add_option("--vector", vector, "Comma-separated branching vector");

    std::vector<std::string> argv_storage{"splitdel"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_storage) {
        argv.push_back(s.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve_cmd) {
            return do_solve(solve, out, err);
        }
        if (*recognize_cmd) {
            return do_recognize(recognize_file, out);
        }
        if (*oracle_cmd) {
            return do_oracle(oracle_problem, kmax, oracle_file, out);
        }
        if (*gen_cmd) {
            return do_gen(gen, out);
        }
        if (*analyze_cmd) {
            return do_analyze(vector, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const EdgeListError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotSplitError& e) {
        err << "error: " << e.what() << "\n";
        return kExitNotSplit;
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

} // namespace splitdel::cli
