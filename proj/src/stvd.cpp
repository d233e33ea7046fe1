#include "splitdel/stvd.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "splitdel/analysis.hpp"
#include "splitdel/errors.hpp"
#include "splitdel/recognition.hpp"

namespace splitdel {

namespace {

void require(bool condition, const std::string& what) {
    if (!condition) {
        throw InvariantViolation(what);
    }
}

class RuleSelector {
public:
    RuleSelector(const SearchState& state, bool check)
        : g_(state.graph), p_(state.partition), budget_(state.budget), check_(check),
          independent_(state.partition.independent.to_vector()) {}

    RuleDecision select() {
        const bool has_p4 = find_induced_p4(g_, p_).has_value();
        if (budget_ < 0 || (budget_ <= 0 && has_p4)) {
            return verdict(Rule::R1, false);
        }
        if (g_.empty()) {
            return verdict(Rule::R2, true);
        }
        VertexSet free = p4_free_vertices(g_, p_);
        if (!free.empty()) {
            RuleDecision d;
            d.rule = Rule::R3;
            d.reduced = std::move(free);
            return d;
        }
        require(has_p4, "every vertex lies on a P4 but no P4 was found");

        if (auto d = degree_one_pair()) {
            return *d;
        }
        if (auto d = degree_one()) {
            return *d;
        }
        if (auto d = two_two()) {
            return *d;
        }
        if (check_) {
            check_small_differences();
        }

        min_degree_ = min_degree_set(g_, p_);
        const VertexSet& first_class = nbr(*min_degree_.first());
        const bool all_twins =
            std::all_of(min_degree_.begin(), min_degree_.end(), [&](Vertex u) { return nbr(u) == first_class; });
        return all_twins ? case_one() : case_two();
    }

private:
    const VertexSet& nbr(Vertex v) const { return g_.neighbors(v); }
    VertexSet single(Vertex v) const { return VertexSet(g_.order(), {v}); }
    VertexSet pair(Vertex a, Vertex b) const { return VertexSet(g_.order(), {a, b}); }

    static RuleDecision verdict(Rule rule, bool answer) {
        RuleDecision d;
        d.rule = rule;
        d.answer = answer;
        return d;
    }

    static RuleDecision branch(Rule rule, std::vector<VertexSet> sets) {
        RuleDecision d;
        d.rule = rule;
        for (auto& s : sets) {
            if (std::find(d.branches.begin(), d.branches.end(), s) == d.branches.end()) {
                d.branches.push_back(std::move(s));
            }
        }
        return d;
    }

    std::optional<RuleDecision> degree_one_pair() const {
        for (std::size_t i = 0; i < independent_.size(); ++i) {
            Vertex u = independent_[i];
            if (g_.degree(u) != 1) {
                continue;
            }
            for (std::size_t j = i + 1; j < independent_.size(); ++j) {
                Vertex v = independent_[j];
                if (g_.degree(v) == 1 && nbr(u) != nbr(v)) {
                    return branch(Rule::B1, {nbr(u), nbr(v)});
                }
            }
        }
        return std::nullopt;
    }

    std::optional<RuleDecision> degree_one() const {
        for (Vertex u : independent_) {
            if (g_.degree(u) != 1) {
                continue;
            }
            for (Vertex v : independent_) {
                if (!nbr(u).is_subset_of(nbr(v))) {
                    require(g_.degree(v) >= 2, "B2 partner has degree below 2");
                    return branch(Rule::B2, {single(v), nbr(u), nbr(v)});
                }
            }
            throw InvariantViolation("B2: no independent vertex misses the neighbor of a degree-1 vertex");
        }
        return std::nullopt;
    }

    std::optional<RuleDecision> two_two() const {
        for (std::size_t i = 0; i < independent_.size(); ++i) {
            Vertex u = independent_[i];
            for (std::size_t j = i + 1; j < independent_.size(); ++j) {
                Vertex v = independent_[j];
                auto only_u = nbr(u) - nbr(v);
                auto only_v = nbr(v) - nbr(u);
                if (only_u.size() >= 2 && only_v.size() >= 2) {
                    return branch(Rule::B3, {single(u), single(v), only_u, only_v});
                }
            }
        }
        return std::nullopt;
    }

    void check_small_differences() const {
        for (Vertex u : independent_) {
            for (Vertex v : independent_) {
                if (u != v && g_.degree(u) <= g_.degree(v)) {
                    require((nbr(u) - nbr(v)).size() <= 1, "lower-degree vertex misses two neighbors of another");
                }
            }
        }
    }

    std::optional<Vertex> first_missing(Vertex c, const VertexSet& among) const {
        for (Vertex v : among) {
            if (!nbr(v).contains(c)) {
                return v;
            }
        }
        return std::nullopt;
    }

    RuleDecision case_one() const {
        const Vertex u = *min_degree_.first();
        const auto nu = nbr(u).to_vector();
        require(nu.size() >= 2, "case 1: minimum-degree vertex has fewer than two neighbors");
        Vertex a1 = nu[0];
        Vertex a2 = nu[1];

        const auto v1_found = first_missing(a1, p_.independent);
        const auto v2_found = first_missing(a2, p_.independent);
        require(v1_found && v2_found, "case 1: a neighbor of u is adjacent to every independent vertex");
        Vertex v1 = *v1_found;
        Vertex v2 = *v2_found;
        require(v1 != v2, "case 1: v1 == v2");
        require(nbr(v1).contains(a2) && nbr(v2).contains(a1), "case 1: v1 / v2 miss more than one neighbor of u");

        const VertexSet shared = (nbr(v1) & nbr(v2)) - nbr(u);
        require(shared.size() >= 2, "case 1: N(v1) & N(v2) outside N(u) has fewer than two vertices");

        const VertexSet rest = p_.independent - pair(v1, v2);
        std::optional<Vertex> w;
        for (Vertex x : rest) {
            if (!nbr(x).contains(a1) || !nbr(x).contains(a2)) {
                w = x;
                break;
            }
        }
        if (!w) {
            return branch(Rule::B4, {single(u), shared, pair(v1, v2)});
        }

        if (nbr(*w).contains(a1)) {
            std::swap(a1, a2);
            std::swap(v1, v2);
        }
        const VertexSet extra = nbr(*w) - nbr(u);
        require(extra.size() >= 2, "case 1: N(w) outside N(u) has fewer than two vertices");

        const std::vector<VertexSet> left = {single(a1), single(v1) | extra, pair(v1, *w)};
        const std::vector<VertexSet> right = {single(a2), single(v2)};
        std::vector<VertexSet> sets = {single(u), shared};
        for (const auto& r : right) {
            for (const auto& l : left) {
                sets.push_back(l | r);
            }
        }
        return branch(Rule::B5, std::move(sets));
    }

    std::pair<Vertex, Vertex> private_neighbors(Vertex u1, Vertex u2) const {
        auto only1 = nbr(u1) - nbr(u2);
        auto only2 = nbr(u2) - nbr(u1);
        require(only1.size() == 1 && only2.size() == 1, "non-twin minimum-degree vertices differ in more than one neighbor");
        return {*only1.first(), *only2.first()};
    }

    RuleDecision case_two() const {
        std::vector<Vertex> reps;
        for (Vertex u : min_degree_) {
            bool fresh = std::none_of(reps.begin(), reps.end(), [&](Vertex r) { return nbr(r) == nbr(u); });
            if (fresh) {
                reps.push_back(u);
            }
        }
        require(reps.size() >= 2, "case 2 without two twin classes");

        const VertexSet outside = p_.independent - min_degree_;

        for (std::size_t i = 0; i < reps.size(); ++i) {
            for (std::size_t j = i + 1; j < reps.size(); ++j) {
                auto [a1, a2] = private_neighbors(reps[i], reps[j]);
                bool seen_by_all = std::all_of(outside.begin(), outside.end(), [&](Vertex w) {
                    return nbr(w).contains(a1) && nbr(w).contains(a2);
                });
                if (!seen_by_all) {
                    continue;
                }
                Vertex u1 = reps[i];
                Vertex u2 = reps[j];
                VertexSet t1 = twin_class(g_, p_, u1);
                VertexSet t2 = twin_class(g_, p_, u2);
                if (t1.size() > t2.size()) {
                    std::swap(u1, u2);
                    std::swap(t1, t2);
                    std::swap(a1, a2);
                }
                return branch(Rule::B6, {t1, single(a1)});
            }
        }

        const Case2Context ctx = classify_sunflower(g_, p_, reps[0], reps[1]);
        Vertex u1 = ctx.u1;
        Vertex u2 = ctx.u2;
        Vertex a = -1;
        Vertex v = -1;
        if (ctx.sunflower) {
            auto common = nbr(u1) & nbr(u2);
            require(!common.empty(), "sunflower pair has no common neighbor");
            a = *common.first();
            auto missing = first_missing(a, p_.independent);
            require(missing.has_value(), "sunflower center is adjacent to every independent vertex");
            require(outside.contains(*missing), "vertex missing the sunflower center has minimum degree");
            v = *missing;
        } else {
            VertexSet covered = g_.empty_set();
            for (Vertex u : min_degree_) {
                covered |= nbr(u);
            }
            auto it = std::find_if(outside.begin(), outside.end(),
                                   [&](Vertex x) { return !covered.is_subset_of(nbr(x)); });
            require(it != outside.end(), "every higher-degree vertex sees all minimum-degree neighborhoods");
            v = *it;
            a = *(covered - nbr(v)).first();
            bool found = false;
            for (std::size_t i = 0; i < reps.size() && !found; ++i) {
                for (std::size_t j = i + 1; j < reps.size() && !found; ++j) {
                    if (nbr(reps[i]).contains(a) && nbr(reps[j]).contains(a)) {
                        u1 = reps[i];
                        u2 = reps[j];
                        found = true;
                    }
                }
            }
            require(found, "no non-twin minimum-degree pair shares the chosen neighbor");
        }

        auto [a1, a2] = private_neighbors(u1, u2);
        auto w_it = std::find_if(outside.begin(), outside.end(),
                                 [&](Vertex x) { return !nbr(x).contains(a1) || !nbr(x).contains(a2); });
        require(w_it != outside.end(), "B6 inapplicable but every higher-degree vertex sees a1 and a2");
        const Vertex w = *w_it;
        if (nbr(w).contains(a1)) {
            std::swap(u1, u2);
            std::swap(a1, a2);
        }
        require(a != a1 && a != a2, "chosen neighbor coincides with a private neighbor");
        require(v != w, "v == w");
        require(nbr(w).contains(a), "w misses the chosen neighbor");

        const VertexSet shared = (nbr(v) & nbr(w)) - nbr(u1);
        require(shared.size() >= 2, "N(v) & N(w) outside N(u1) has fewer than two vertices");

        const std::vector<VertexSet> left = {single(a), single(v)};
        const std::vector<VertexSet> right = {single(a1), pair(w, a2), pair(w, u2)};
        std::vector<VertexSet> sets = {single(u1), shared};
        for (const auto& r : right) {
            for (const auto& l : left) {
                sets.push_back(l | r);
            }
        }
        return branch(Rule::B7, std::move(sets));
    }

    const Graph& g_;
    const SplitPartition& p_;
    int budget_;
    bool check_;
    std::vector<Vertex> independent_;
    VertexSet min_degree_;
};

void check_decision(const SearchState& state, const RuleDecision& d) {
    if (d.rule == Rule::R3) {
        require(d.reduced.is_subset_of(state.graph.live()), "R3 removes a dead vertex");
        return;
    }
    if (d.branches.empty()) {
        return;
    }
    for (const auto& s : d.branches) {
        require(!s.empty(), std::string(rule_name(d.rule)) + ": empty branch set");
        require(s.is_subset_of(state.graph.live()), std::string(rule_name(d.rule)) + ": branch set not live");
    }
    const auto sizes = d.sizes();
    const auto minimum = minimum_vector(rule_name(d.rule));
    require(dominates(sizes, minimum), std::string(rule_name(d.rule)) + ": realized vector " + format_vector(sizes) +
                                           " does not dominate " + format_vector(minimum));
}

bool search(SearchState state, int depth, const StvdOptions& options, VertexSet& solution) {
    RuleDecision d = select_rule(state, options.check_invariants);
    if (options.check_invariants) {
        check_decision(state, d);
    }
    if (options.trace) {
        options.trace->push_back({depth, d.rule, state.budget, d.sizes()});
    }

    switch (d.rule) {
    case Rule::R1:
    case Rule::R2:
        if (d.answer) {
            solution = state.deleted;
        }
        return d.answer;
    case Rule::R3:
        state.graph.remove(d.reduced);
        state.partition = state.partition.without(d.reduced);
        return search(std::move(state), depth + 1, options, solution);
    default:
        break;
    }

    for (const auto& s : d.branches) {
        if (s.size() > state.budget) {
            continue;
        }
        SearchState child{state.graph.without(s), state.partition.without(s), state.budget - s.size(),
                          state.deleted | s};
        if (search(std::move(child), depth + 1, options, solution)) {
            return true;
        }
    }
    return false;
}

} // namespace

std::string_view rule_name(Rule rule) {
    switch (rule) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::B1: return "B1";
    case Rule::B2: return "B2";
    case Rule::B3: return "B3";
    case Rule::B4: return "B4";
    case Rule::B5: return "B5";
    case Rule::B6: return "B6";
    case Rule::B7: return "B7";
    }
    return "?";
}

std::vector<int> RuleDecision::sizes() const {
    std::vector<int> out;
    out.reserve(branches.size());
    for (const auto& s : branches) {
        out.push_back(s.size());
    }
    return out;
}

SearchState initial_state(const Graph& g, const SplitPartition& p, int k) {
    return {g, p, k, g.empty_set()};
}

Case2Context classify_sunflower(const Graph& g, const SplitPartition& p, Vertex u1, Vertex u2) {
    const VertexSet lowest = min_degree_set(g, p);
    require(lowest.contains(u1) && lowest.contains(u2), "sunflower pair is not of minimum degree");
    require(g.neighbors(u1) != g.neighbors(u2), "sunflower pair are twins");

    Case2Context ctx;
    ctx.u1 = u1;
    ctx.u2 = u2;
    auto only1 = g.neighbors(u1) - g.neighbors(u2);
    auto only2 = g.neighbors(u2) - g.neighbors(u1);
    require(only1.size() == 1 && only2.size() == 1, "sunflower pair differ in more than one neighbor");
    ctx.a1 = *only1.first();
    ctx.a2 = *only2.first();
    ctx.others = lowest - twin_class(g, p, u1) - twin_class(g, p, u2);

    const VertexSet common = g.neighbors(u1) & g.neighbors(u2);
    const VertexSet privates(g.order(), {ctx.a1, ctx.a2});
    int petals = 0;
    int crossed = 0;
    for (Vertex u : ctx.others) {
        const VertexSet& nu = g.neighbors(u);
        const VertexSet beyond = nu - common;
        if (common.is_subset_of(nu) && beyond.size() == 1 && !beyond.intersects(privates)) {
            ++petals;
        } else if (privates.is_subset_of(nu) && nu.is_subset_of(common | privates) && (common - nu).size() == 1) {
            ++crossed;
        }
    }
    const int n = ctx.others.size();
    require(petals == n || crossed == n, "minimum-degree classes match neither sunflower shape");
    ctx.sunflower = petals == n;
    return ctx;
}

RuleDecision select_rule(const SearchState& state, bool check_invariants) {
    if (check_invariants) {
        require(is_valid_partition(state.graph, state.partition), "partition invalid for live graph");
        require(!state.deleted.intersects(state.graph.live()), "deleted vertices still live");
    }
    return RuleSelector(state, check_invariants).select();
}

std::string format_trace_line(const TraceRecord& record) {
    std::string out = "node " + std::to_string(record.depth) + " " + std::string(rule_name(record.rule)) +
                      " k=" + std::to_string(record.budget) + " sizes=";
    for (std::size_t i = 0; i < record.sizes.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(record.sizes[i]);
    }
    return out;
}

std::optional<VertexSet> solve_stvd(const Graph& g, const SplitPartition& p, int k, const StvdOptions& options) {
    if (k < 0) {
        throw std::invalid_argument("budget must be non-negative");
    }
    VertexSet solution = g.empty_set();
    if (!search(initial_state(g, p, k), 0, options, solution)) {
        return std::nullopt;
    }
    if (solution.size() > k || !is_threshold_split(g.without(solution), p.without(solution))) {
        throw std::logic_error("split-to-threshold witness failed verification");
    }
    return solution;
}

} // namespace splitdel
