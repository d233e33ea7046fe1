// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "splitdel/analysis.hpp"
#include "splitdel/errors.hpp"
#include "splitdel/hitting_set.hpp"
#include "splitdel/oracle.hpp"
#include "splitdel/recognition.hpp"
#include "splitdel/sbvd.hpp"
#include "splitdel/stvd.hpp"
#include "support.hpp"

using namespace splitdel;
using namespace splitdel::testing;

namespace {

constexpr int kMaxBudget = 4;
constexpr int kRandomGraphs = 600;
constexpr int kRandomMaxN = 10;
constexpr int kHarvestPerRule = 40;
constexpr int kHittingSetInstances = 600;
constexpr double kLeafBase = 2.7321;
constexpr double kLeafSlack = 5.0;

// Bisection values, cross-checked against numpy polynomial roots.
constexpr double kGoldenB5 = 2.579841583716;
constexpr double kGoldenB7 = 2.677993483398;

struct Criterion {
    int id;
    std::string title;
    double time_limit_s;
    bool passed = true;
    std::string detail;
    double seconds = 0.0;
};

class Report {
public:
    void add(Criterion c) { items_.push_back(std::move(c)); }

    int finish() const {
        int failures = 0;
        for (const auto& c : items_) {
            const bool in_time = c.seconds <= c.time_limit_s;
            const bool ok = c.passed && in_time;
            failures += ok ? 0 : 1;
            std::printf("[%s] criterion %d: %s (%.2fs, limit %.0fs)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                        c.title.c_str(), c.seconds, c.time_limit_s, c.detail.empty() ? "" : " - ",
                        c.detail.c_str());
        }
        std::printf("%d/%zu criteria passed\n", static_cast<int>(items_.size()) - failures, items_.size());
        return failures == 0 ? 0 : 1;
    }

private:
    std::vector<Criterion> items_;
};

template <class Body>
Criterion timed(int id, std::string title, double limit, Body&& body) {
    Criterion c{id, std::move(title), limit};
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.passed = false;
        c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return c;
}

void fail(Criterion& c, const std::string& why) {
    if (c.passed) {
        c.detail = why;
    }
    c.passed = false;
}

std::vector<SplitCase> corpus() {
    std::vector<SplitCase> all;
    for_each_small_split(3, 3, [&](const SplitCase& c) { all.push_back(c); });
    for (auto& c : random_splits(kRandomGraphs, kRandomMaxN, 20250101)) {
        all.push_back(std::move(c));
    }
    for (auto rule : {Rule::B5, Rule::B7}) {
        for (auto& c : harvest_firing(rule, kHarvestPerRule, kRandomMaxN, 20250102 + static_cast<std::uint64_t>(rule))) {
            all.push_back(std::move(c));
        }
    }
    return all;
}

Criterion branching_numbers() {
    return timed(1, "branching-number table", 1.0, [](Criterion& c) {
        auto near = [&](const std::vector<int>& v, double expected, double tol, const char* name) {
            const double got = branching_number(v);
            if (std::abs(got - expected) > tol) {
                fail(c, std::string(name) + " = " + std::to_string(got));
            }
        };
        near({1, 1, 2, 2}, 1.0 + std::sqrt(3.0), 1e-6, "(1,1,2,2)");
        near({1, 1, 2, 2}, 2.732051, 1e-6, "(1,1,2,2) vs 2.732051");
        near({1, 1}, 2.0, 1e-9, "(1,1)");
        near({1, 2, 2}, 2.0, 1e-9, "(1,2,2)");
        near({1, 1, 2}, 1.0 + std::sqrt(2.0), 1e-6, "(1,1,2)");
        near({1, 2, 2, 4, 3, 2, 4, 3}, kGoldenB5, 1e-9, "B5 vector");
        near({1, 2, 2, 2, 3, 3, 3, 3}, kGoldenB7, 1e-9, "B7 vector");
        if (!(branching_number(std::vector<int>{1, 2, 2, 4, 3, 2, 4, 3}) < 2.732052) ||
            !(branching_number(std::vector<int>{1, 2, 2, 2, 3, 3, 3, 3}) < 2.732052)) {
            fail(c, "B5/B7 not below 2.732052");
        }
        const auto& table = rule_vector_table();
        for (const auto& e : table) {
            if (e.number > 1.0 + std::sqrt(3.0) + 1e-6) {
                fail(c, e.rule + " exceeds 1+sqrt(3)");
            }
        }
        c.detail = "B3 = " + std::to_string(table[2].number);
    });
}

struct StvdFindings {
    long long runs = 0;
    long long mismatches = 0;
    long long bad_witnesses = 0;
    long long violations = 0;
    long long undominated = 0;
    long long leaf_excess = 0;
    double worst_leaf_ratio = 0.0;
    std::string first_problem;
    double seconds = 0.0;
    std::vector<long long> fired = std::vector<long long>(10, 0);
};

StvdFindings run_stvd_corpus(const std::vector<SplitCase>& cases) {
    StvdFindings f;
    const auto start = std::chrono::steady_clock::now();
    auto note = [&](const std::string& what) {
        if (f.first_problem.empty()) f.first_problem = what;
    };
    for (std::size_t idx = 0; idx < cases.size(); ++idx) {
        const auto& g = cases[idx].graph;
        const auto p = split_partition(g);
        const auto best = min_deletion(g, TargetProperty::ThresholdSplit, kMaxBudget);
        for (int k = 0; k <= kMaxBudget; ++k) {
            ++f.runs;
            std::vector<TraceRecord> trace;
            StvdOptions opts;
            opts.trace = &trace;
            std::optional<VertexSet> sol;
            try {
                sol = solve_stvd(g, p, k, opts);
            } catch (const InvariantViolation& e) {
                ++f.violations;
                note("case " + std::to_string(idx) + " k=" + std::to_string(k) + ": " + e.what());
                continue;
            }
            const bool expected = best.has_value() && best->size <= k;
            if (sol.has_value() != expected) {
                ++f.mismatches;
                note("case " + std::to_string(idx) + " k=" + std::to_string(k) + ": decision mismatch");
            }
            if (sol && (sol->size() > k || !satisfies(g.without(*sol), TargetProperty::ThresholdSplit))) {
                ++f.bad_witnesses;
                note("case " + std::to_string(idx) + " k=" + std::to_string(k) + ": bad witness");
            }
            std::vector<TraceLine> lines;
            for (const auto& r : trace) {
                ++f.fired[static_cast<std::size_t>(r.rule)];
                const auto minimum = minimum_vector(rule_name(r.rule));
                if (!minimum.empty() && !dominates(r.sizes, minimum)) {
                    ++f.undominated;
                }
                lines.push_back(parse_trace_line(format_trace_line(r), static_cast<int>(lines.size()) + 1));
            }
            const auto stats = stats_from_trace(lines);
            const double bound = kLeafSlack * std::pow(kLeafBase, k);
            f.worst_leaf_ratio = std::max(f.worst_leaf_ratio, static_cast<double>(stats.leaves) / bound);
            if (static_cast<double>(stats.leaves) > bound) {
                ++f.leaf_excess;
            }
        }
    }
    f.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return f;
}

Criterion sbvd_equivalence(const std::vector<SplitCase>& cases) {
    return timed(3, "SBVD oracle equivalence", 300.0, [&](Criterion& c) {
        long long runs = 0;
        for (std::size_t idx = 0; idx < cases.size(); ++idx) {
            const auto& g = cases[idx].graph;
            const auto p = split_partition(g);
            const auto best = min_deletion(g, TargetProperty::BlockSplit, kMaxBudget);
            for (int k = 0; k <= kMaxBudget; ++k) {
                ++runs;
                const auto sol = solve_sbvd(g, p, k);
                if (sol.has_value() != (best.has_value() && best->size <= k)) {
                    fail(c, "case " + std::to_string(idx) + " k=" + std::to_string(k) + ": decision mismatch");
                }
                if (sol && (sol->size() > k || !satisfies(g.without(*sol), TargetProperty::BlockSplit))) {
                    fail(c, "case " + std::to_string(idx) + " k=" + std::to_string(k) + ": bad witness");
                }
            }
        }
        if (c.passed) {
            c.detail = std::to_string(cases.size()) + " graphs, " + std::to_string(runs) + " runs";
        }
    });
}

Criterion hitting_set_equivalence() {
    return timed(4, "3-hitting-set solver equivalence", 60.0, [](Criterion& c) {
        SplitMix64 rng(424242);
        int yes = 0;
        for (int t = 0; t < kHittingSetInstances; ++t) {
            HittingSetInstance inst;
            const int universe = 1 + static_cast<int>(rng.next() % 12);
            const int sets = 1 + static_cast<int>(rng.next() % 25);
            inst.budget = static_cast<int>(rng.next() % 6);
            for (int s = 0; s < sets; ++s) {
                const int size = 1 + static_cast<int>(rng.next() % std::min<std::uint64_t>(3, universe));
                ElementSet set;
                while (static_cast<int>(set.size()) < size) {
                    auto x = static_cast<Element>(rng.next() % static_cast<std::uint64_t>(universe));
                    if (std::find(set.begin(), set.end(), x) == set.end()) set.push_back(x);
                }
                inst.family.push_back(set);
            }
            const auto got = solve_3hs(inst);
            const auto expected = brute_force_3hs(inst);
            if (got.has_value() != expected.has_value()) {
                fail(c, "instance " + std::to_string(t) + ": decision mismatch");
            }
            if (got && (static_cast<int>(got->size()) > inst.budget || !hits_all(inst.family, *got))) {
                fail(c, "instance " + std::to_string(t) + ": bad witness");
            }
            yes += got ? 1 : 0;
        }
        if (c.passed) {
            c.detail = std::to_string(kHittingSetInstances) + " instances, " + std::to_string(yes) + " yes";
        }
    });
}

Criterion block_recognition_equivalence() {
    return timed(7, "block recognition equals diamond-freeness", 60.0, [](Criterion& c) {
        long long graphs = 0;
        for_each_small_split(3, 4, [&](const SplitCase& sc) {
            ++graphs;
            for (const auto& p : {layout_partition(sc.nc, sc.ni), split_partition(sc.graph)}) {
                const bool block = is_block_split(sc.graph, p);
                if (block != !find_induced_diamond(sc.graph).has_value() ||
                    block != satisfies(sc.graph, TargetProperty::DiamondFree) ||
                    block != satisfies(sc.graph, TargetProperty::BlockSplit)) {
                    fail(c, "disagreement on |C|=" + std::to_string(sc.nc) + " |I|=" + std::to_string(sc.ni));
                }
            }
        });
        if (c.passed) {
            c.detail = std::to_string(graphs) + " graphs";
        }
    });
}

Criterion cli_goldens() {
    return timed(8, "CLI goldens and generator reproducibility", 10.0, [](Criterion& c) {
        auto run = [](const std::vector<std::string>& args, int& code) {
            std::ostringstream out, err;
            code = splitdel::cli::run(args, out, err);
            return out.str();
        };
        const std::string dir = SPLITDEL_TEST_DATA;
        int code = 0;
        if (run({"solve", "--problem", "stvd", "--k", "1", dir + "/p4.txt"}, code) != "YES\n1\n1\n" || code != 0) {
            fail(c, "stvd P4 golden");
        }
        if (run({"solve", "--problem", "sbvd", "--k", "0", dir + "/diamond.txt"}, code) != "NO\n" || code != 0) {
            fail(c, "sbvd diamond golden");
        }
        if (run({"analyze", "--vector", "1,1,2,2"}, code) != "2.732051\n" || code != 0) {
            fail(c, "analyze golden");
        }
        const std::vector<std::string> gen{"gen", "--nc", "5", "--ni", "5", "--p", "0.4", "--seed", "2024"};
        const auto first = run(gen, code);
        const auto second = run(gen, code);
        if (first.empty() || first != second) {
            fail(c, "generator output differs between runs");
        }
    });
}

} // namespace

int main() {
    Report report;
    report.add(branching_numbers());

    const auto cases = corpus();
    const auto stvd = run_stvd_corpus(cases);
    const std::string scope = std::to_string(cases.size()) + " graphs, " + std::to_string(stvd.runs) + " runs";

    Criterion c2{2, "STVD oracle equivalence", 300.0};
    c2.seconds = stvd.seconds;
    if (stvd.mismatches + stvd.bad_witnesses + stvd.violations > 0) {
        fail(c2, std::to_string(stvd.mismatches) + " mismatches, " + std::to_string(stvd.bad_witnesses) +
                     " bad witnesses; " + stvd.first_problem);
    } else {
        c2.detail = scope;
    }
    report.add(c2);

    report.add(sbvd_equivalence(cases));
    report.add(hitting_set_equivalence());

    Criterion c5{5, "rule invariants and vector domination", 300.0};
    c5.seconds = stvd.seconds;
    if (stvd.violations + stvd.undominated > 0) {
        fail(c5, std::to_string(stvd.violations) + " invariant violations, " + std::to_string(stvd.undominated) +
                     " undominated nodes; " + stvd.first_problem);
    } else {
        c5.detail = scope + "; fired";
        for (auto rule : {Rule::B4, Rule::B5, Rule::B6, Rule::B7}) {
            c5.detail += " " + std::string(rule_name(rule)) + "=" + std::to_string(stvd.fired[static_cast<std::size_t>(rule)]);
        }
    }
    report.add(c5);

    Criterion c6{6, "recursion leaves <= 5 * 2.7321^k", 300.0};
    c6.seconds = stvd.seconds;
    if (stvd.leaf_excess > 0) {
        fail(c6, std::to_string(stvd.leaf_excess) + " runs over the bound");
    } else {
        c6.detail = "worst leaves/bound = " + std::to_string(stvd.worst_leaf_ratio);
    }
    report.add(c6);

    report.add(block_recognition_equivalence());
    report.add(cli_goldens());
    return report.finish();
}
