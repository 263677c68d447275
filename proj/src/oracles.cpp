#include "cnf2tsp/oracles.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cnf2tsp {

SatResult sat_brute(const CnfFormula& f, const OracleBudget& budget) {
    const int n = f.num_variables;
    const bool bounded = n < 63;
    const unsigned long long total = bounded ? (1ull << n) : 0;

    Assignment a(n);
    for (unsigned long long c = 0; !bounded || c < total; ++c) {
        if (c >= static_cast<unsigned long long>(std::max(0L, budget.max_nodes_explored))) {
            return {OracleStatus::BudgetExceeded, {}};
        }
        for (int i = 0; i < n; ++i) a.values[static_cast<size_t>(i)] = ((c >> i) & 1ull) != 0;
        if (evaluate(f, a)) return {OracleStatus::Found, a};
    }
    return {OracleStatus::Exhausted, {}};
}

namespace {

struct DirectedHamSearcher {
    explicit DirectedHamSearcher(const Digraph& graph) : g(graph) {}

    const Digraph& g;
    std::vector<std::pair<int, int>> forbidden;  // sorted
    long cap = 0;
    long explored = 0;
    bool exceeded = false;
    std::vector<char> visited;
    std::vector<int> path;

    bool is_forbidden(int u, int v) const {
        return std::binary_search(forbidden.begin(), forbidden.end(), std::pair<int, int>{u, v});
    }

    bool push(int v) {
        if (++explored > cap) {
            exceeded = true;
            return false;
        }
        visited[static_cast<size_t>(v)] = 1;
        path.push_back(v);
        return true;
    }

    bool dfs() {
        if (static_cast<int>(path.size()) == g.num_nodes) {
            int last = path.back();
            return g.has_edge(last, path.front()) && !is_forbidden(last, path.front());
        }
        int u = path.back();
        for (int v : g.out[static_cast<size_t>(u)]) {
            if (visited[static_cast<size_t>(v)] || is_forbidden(u, v)) continue;
            if (!push(v)) return false;
            if (dfs()) return true;
            path.pop_back();
            visited[static_cast<size_t>(v)] = 0;
            if (exceeded) return false;
        }
        return false;
    }
};

struct UndirectedHamSearcher {
    explicit UndirectedHamSearcher(const UndirectedGraph& graph) : g(graph) {}

    const UndirectedGraph& g;
    long cap = 0;
    long explored = 0;
    bool exceeded = false;
    std::vector<char> visited;
    std::vector<int> path;

    bool push(int v) {
        if (++explored > cap) {
            exceeded = true;
            return false;
        }
        visited[static_cast<size_t>(v)] = 1;
        path.push_back(v);
        return true;
    }

    bool dfs() {
        if (static_cast<int>(path.size()) == g.num_nodes) {
            return g.has_edge(path.back(), path.front());
        }
        int u = path.back();
        for (int v : g.adj[static_cast<size_t>(u)]) {
            if (visited[static_cast<size_t>(v)]) continue;
            if (!push(v)) return false;
            if (dfs()) return true;
            path.pop_back();
            visited[static_cast<size_t>(v)] = 0;
            if (exceeded) return false;
        }
        return false;
    }
};

}  // namespace

CycleResult ham_cycle_search(const Digraph& g, const std::vector<std::pair<int, int>>& forbidden,
                             const OracleBudget& budget) {
    if (g.num_nodes == 0) return {OracleStatus::Exhausted, {}};
    DirectedHamSearcher s(g);
    s.forbidden = forbidden;
    std::sort(s.forbidden.begin(), s.forbidden.end());
    s.cap = budget.max_nodes_explored;
    s.visited.assign(static_cast<size_t>(g.num_nodes), 0);
    if (!s.push(0)) return {OracleStatus::BudgetExceeded, {}};
    if (s.dfs()) return {OracleStatus::Found, s.path};
    return {s.exceeded ? OracleStatus::BudgetExceeded : OracleStatus::Exhausted, {}};
}

CycleResult ham_cycle_search_undirected(const UndirectedGraph& g, const OracleBudget& budget) {
    if (g.num_nodes < 3) return {OracleStatus::Exhausted, {}};
    UndirectedHamSearcher s(g);
    s.cap = budget.max_nodes_explored;
    s.visited.assign(static_cast<size_t>(g.num_nodes), 0);
    if (!s.push(0)) return {OracleStatus::BudgetExceeded, {}};
    if (s.dfs()) return {OracleStatus::Found, s.path};
    return {s.exceeded ? OracleStatus::BudgetExceeded : OracleStatus::Exhausted, {}};
}

TspOptimum tsp_exact_held_karp(const TspInstance& instance, const OracleBudget& budget) {
    const int d = instance.dimension;
    if (d > 18) {
        throw std::invalid_argument("dimension " + std::to_string(d) +
                                    " exceeds the Held-Karp cap of 18");
    }
    if (d < 1) throw std::invalid_argument("empty instance");
    if (d == 1) return {OracleStatus::Found, 0, Tour{{1}}};

    // Slot k represents city k+2.  table[mask][k] is the cheapest way to start
    // at city k+2, visit exactly the slots in mask, and finish with the edge
    // back to city 1.
    const int slots = d - 1;
    const size_t full = (size_t{1} << slots) - 1;
    const long long inf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> table((full + 1) * static_cast<size_t>(slots), inf);
    auto cell = [&](size_t mask, int k) -> long long& {
        return table[mask * static_cast<size_t>(slots) + static_cast<size_t>(k)];
    };

    long transitions = 0;
    for (int k = 0; k < slots; ++k) cell(0, k) = instance.weight(k + 2, 1);
    for (size_t mask = 1; mask <= full; ++mask) {
        for (int k = 0; k < slots; ++k) {
            if (mask & (size_t{1} << k)) continue;
            long long best = inf;
            for (int t = 0; t < slots; ++t) {
                if (!(mask & (size_t{1} << t))) continue;
                if (++transitions > budget.max_nodes_explored) {
                    return {OracleStatus::BudgetExceeded, 0, {}};
                }
                long long cand = instance.weight(k + 2, t + 2) + cell(mask ^ (size_t{1} << t), t);
                if (cand < best) best = cand;
            }
            cell(mask, k) = best;
        }
    }

    // Greedy reconstruction: from the current city, take the smallest next
    // city that still completes at the optimal cost.  This matches the
    // lexicographic tie-break of the brute-force enumeration.
    Tour tour;
    tour.cities.push_back(1);
    size_t mask = full;
    int current = 1;  // city
    long long remaining = inf;
    {
        long long best = inf;
        for (int t = 0; t < slots; ++t) {
            best = std::min(best, instance.weight(1, t + 2) + cell(mask ^ (size_t{1} << t), t));
        }
        remaining = best;
    }
    const long long optimum = remaining;
    while (mask != 0) {
        int chosen = -1;
        for (int t = 0; t < slots; ++t) {
            if (!(mask & (size_t{1} << t))) continue;
            if (instance.weight(current, t + 2) + cell(mask ^ (size_t{1} << t), t) == remaining) {
                chosen = t;
                break;  // slots ascend with city ids, so the first hit is smallest
            }
        }
        if (chosen < 0) throw std::logic_error("Held-Karp reconstruction lost the optimum");
        remaining -= instance.weight(current, chosen + 2);
        current = chosen + 2;
        tour.cities.push_back(current);
        mask ^= size_t{1} << chosen;
    }

    return {OracleStatus::Found, static_cast<long>(optimum), tour};
}

TspOptimum tsp_brute(const TspInstance& instance) {
    const int d = instance.dimension;
    if (d > 10) {
        throw std::invalid_argument("dimension " + std::to_string(d) +
                                    " exceeds the brute-force cap of 10");
    }
    if (d < 1) throw std::invalid_argument("empty instance");

    std::vector<int> rest(static_cast<size_t>(d - 1));
    std::iota(rest.begin(), rest.end(), 2);
    long best_length = std::numeric_limits<long>::max();
    Tour best;
    do {
        long length = 0;
        int prev = 1;
        for (int city : rest) {
            length += instance.weight(prev, city);
            prev = city;
        }
        length += instance.weight(prev, 1);
        if (length < best_length) {  // strict: keeps the lexicographically first optimum
            best_length = length;
            best.cities.clear();
            best.cities.push_back(1);
            best.cities.insert(best.cities.end(), rest.begin(), rest.end());
        }
    } while (std::next_permutation(rest.begin(), rest.end()));

    return {OracleStatus::Found, best_length, best};
}

AnotherTourResult decide_another_tour(const ReductionArtifact& art, const OracleBudget& budget) {
    CycleResult found =
        ham_cycle_search(art.gadget.graph, {art.gadget.penalty_edge}, budget);
    if (found.status != OracleStatus::Found) return {found.status, {}};

    std::vector<int> nodes = expand_cycle(found.cycle);
    Tour t;
    t.cities.reserve(nodes.size());
    for (int node : nodes) t.cities.push_back(node + 1);
    if (tour_length(art.instance, t) != art.instance.dimension) {
        throw std::logic_error("expanded penalty-free cycle is not a length-dimension tour");
    }
    return {OracleStatus::Found, t};
}

}  // namespace cnf2tsp
