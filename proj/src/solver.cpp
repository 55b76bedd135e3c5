#include "quadforest/solver.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "quadforest/inequality.hpp"

namespace qf {

namespace {

enum class St : char { Free, In, Out };

struct Searcher {
    const Graph& g;
    uint64_t budget;
    uint64_t nodes = 0;
    std::vector<St> st;
    int best = -1;

    Searcher(const Graph& g_, uint64_t budget_) : g(g_), budget(budget_), st(g_.n(), St::Free) {}

    int remaining_degree(int v) const {
        int d = 0;
        for (int w : g.neighbors(v))
            if (st[w] != St::Out) ++d;
        return d;
    }

    bool in_forest_acyclic() const {
        VertexSet s;
        for (int v = 0; v < g.n(); ++v)
            if (st[v] == St::In) s.ids.push_back(v);
        return induces_forest(g, s);
    }

    // Shortest cycle in the graph induced on non-Out vertices, restricted to
    // `alive`; empty when acyclic.
    std::vector<int> shortest_cycle(const std::vector<char>& alive) const {
        std::vector<int> best_cycle;
        std::vector<int> dist(g.n()), par(g.n());
        for (int s = 0; s < g.n(); ++s) {
            if (!alive[s] || st[s] == St::Out) continue;
            std::fill(dist.begin(), dist.end(), -1);
            dist[s] = 0;
            par[s] = -1;
            std::deque<int> q{s};
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                if (!best_cycle.empty() &&
                    dist[u] + 1 >= static_cast<int>(best_cycle.size())) break;
                for (int w : g.neighbors(u)) {
                    if (!alive[w] || st[w] == St::Out || w == par[u]) continue;
                    if (dist[w] == -1) {
                        dist[w] = dist[u] + 1;
                        par[w] = u;
                        q.push_back(w);
                    } else if (dist[w] >= dist[u]) {
                        // cycle through s of length dist[u]+dist[w]+1
                        std::vector<int> cyc;
                        for (int x = u; x != -1; x = par[x]) cyc.push_back(x);
                        std::reverse(cyc.begin(), cyc.end());
                        std::vector<int> half;
                        for (int x = w; x != -1; x = par[x]) half.push_back(x);
                        // merge at the common prefix root s
                        for (int x : half)
                            if (std::find(cyc.begin(), cyc.end(), x) == cyc.end())
                                cyc.push_back(x);
                        if (best_cycle.empty() || cyc.size() < best_cycle.size())
                            best_cycle = cyc;
                    }
                }
            }
        }
        return best_cycle;
    }

    // Upper bound: every vertex-disjoint cycle costs one deletion. Degree
    // <= 1 vertices are peeled before each cycle probe.
    int upper_bound(int in_count, int free_count) const {
        std::vector<char> alive(g.n(), 1);
        std::vector<int> deg(g.n(), 0);
        for (int v = 0; v < g.n(); ++v) {
            if (st[v] == St::Out) {
                alive[v] = 0;
                continue;
            }
            deg[v] = remaining_degree(v);
        }
        int cycles = 0;
        std::deque<int> peel;
        for (int v = 0; v < g.n(); ++v)
            if (alive[v] && st[v] != St::Out && deg[v] <= 1) peel.push_back(v);
        while (true) {
            while (!peel.empty()) {
                int v = peel.front();
                peel.pop_front();
                if (!alive[v]) continue;
                alive[v] = 0;
                for (int w : g.neighbors(v))
                    if (alive[w] && st[w] != St::Out && --deg[w] <= 1) peel.push_back(w);
            }
            auto cyc = shortest_cycle(alive);
            if (cyc.empty()) break;
            ++cycles;
            for (int v : cyc) {
                alive[v] = 0;
                for (int w : g.neighbors(v))
                    if (alive[w] && st[w] != St::Out && --deg[w] <= 1) peel.push_back(w);
            }
        }
        return in_count + free_count - cycles;
    }

    void search() {
        if (++nodes > budget) throw BudgetExceeded(budget);
        // reduce: free vertices of remaining degree <= 1 join the forest
        std::vector<int> forced;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < g.n(); ++v)
                if (st[v] == St::Free && remaining_degree(v) <= 1) {
                    st[v] = St::In;
                    forced.push_back(v);
                    changed = true;
                }
        }
        int in_count = 0, free_count = 0;
        for (int v = 0; v < g.n(); ++v) {
            if (st[v] == St::In) ++in_count;
            if (st[v] == St::Free) ++free_count;
        }
        auto undo = [&]() {
            for (int v : forced) st[v] = St::Free;
        };
        if (upper_bound(in_count, free_count) <= best) {
            undo();
            return;
        }
        std::vector<char> alive(g.n(), 1);
        auto cyc = shortest_cycle(alive);
        if (cyc.empty()) {
            if (in_forest_acyclic()) best = std::max(best, in_count + free_count);
            undo();
            return;
        }
        // all-In cycle is infeasible down this branch
        int pick = -1, pick_deg = -1;
        bool has_free = false;
        for (int v : cyc)
            if (st[v] == St::Free) {
                has_free = true;
                int d = remaining_degree(v);
                if (d > pick_deg || (d == pick_deg && v < pick)) {
                    pick = v;
                    pick_deg = d;
                }
            }
        if (!has_free) {
            undo();
            return;
        }
        st[pick] = St::Out;
        search();
        st[pick] = St::In;
        // only descend when the In side stays acyclic
        if (in_forest_acyclic()) search();
        st[pick] = St::Free;
        undo();
    }
};

// Size of the optimum over states extending the forced-In set; -1 if the
// forced set is already cyclic.
int solve_size(const Graph& g, const VertexSet& forced_in, uint64_t budget, uint64_t& nodes_used) {
    if (!induces_forest(g, forced_in)) return -1;
    Searcher s(g, budget);
    for (int v : forced_in.ids) s.st[v] = St::In;
    s.search();
    nodes_used += s.nodes;
    return s.best;
}

ForestCertificate lex_optimum(const Graph& g, int opt_size, const VertexSet& seed,
                              uint64_t budget, uint64_t& nodes_used) {
    VertexSet chosen = seed;
    for (int v = 0; v < g.n(); ++v) {
        if (chosen.contains(v)) continue;
        VertexSet trial = chosen;
        trial.insert(v);
        if (solve_size(g, trial, budget, nodes_used) == opt_size) chosen = trial;
    }
    ForestCertificate cert;
    cert.vertices = chosen;
    cert.size = chosen.size();
    cert.bound_target = g.n() > 0 ? bound(g.n()) : 0;
    return cert;
}

}  // namespace

ForestCertificate a_exact(const Graph& g, const SolverOptions& opt) {
    if (g.n() == 0) return {};
    uint64_t used = 0;
    int size = solve_size(g, {}, opt.node_budget, used);
    auto cert = lex_optimum(g, size, {}, opt.node_budget, used);
    if (cert.size != size) throw GraphError("a_exact: lex phase lost the optimum");
    return cert;
}

ForestCertificate a_bruteforce(const Graph& g) {
    if (g.n() > 20) throw GraphError("a_bruteforce: n > 20 rejected");
    if (g.n() == 0) return {};
    int n = g.n();
    auto edges = g.edges();
    uint32_t best_mask = 0;
    int best_size = -1;
    std::vector<int> parent(n);
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
        int size = std::popcount(mask);
        if (size < best_size) continue;
        for (int i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        bool forest = true;
        for (auto [u, v] : edges) {
            if (!((mask >> u) & 1) || !((mask >> v) & 1)) continue;
            int a = find(u), b = find(v);
            if (a == b) {
                forest = false;
                break;
            }
            parent[a] = b;
        }
        if (!forest) continue;
        if (size > best_size) {
            best_size = size;
            best_mask = mask;
        } else if (size == best_size) {
            uint32_t diff = mask ^ best_mask;
            uint32_t low = diff & (~diff + 1);
            if (mask & low) best_mask = mask;  // holds the smaller element
        }
    }
    ForestCertificate cert;
    for (int v = 0; v < n; ++v)
        if ((best_mask >> v) & 1) cert.vertices.ids.push_back(v);
    cert.size = best_size;
    cert.bound_target = bound(n);
    return cert;
}

ForestCertificate a_with_forced_vertex(const Graph& g, int v, const SolverOptions& opt) {
    if (v < 0 || v >= g.n()) throw GraphError("a_with_forced_vertex: vertex out of range");
    if (g.degree(v) > 3)
        throw GraphError("a_with_forced_vertex: degree(v) = " + std::to_string(g.degree(v)) +
                         " > 3, no guarantee applies");
    uint64_t used = 0;
    int whole = solve_size(g, {}, opt.node_budget, used);
    VertexSet seed;
    seed.insert(v);
    int forced = solve_size(g, seed, opt.node_budget, used);
    if (forced != whole)
        throw GraphError("a_with_forced_vertex: optimum drops when forcing v; low-degree swap "
                         "property violated");
    return lex_optimum(g, whole, seed, opt.node_budget, used);
}

BoundReport bound_holds(const Graph& g, const SolverOptions& opt) {
    BoundReport r;
    r.n = g.n();
    r.bipartite = g.bipartition().has_value();
    auto cert = a_exact(g, opt);
    r.a = cert.size;
    r.target = g.n() > 0 ? bound(g.n()) : 0;
    r.ok = r.a >= r.target;
    return r;
}

std::optional<VertexSet> force_into_forest(const Graph& g, const VertexSet& f, int v) {
    if (g.degree(v) > 3) return std::nullopt;
    if (f.contains(v)) return f;
    VertexSet with_v = f;
    with_v.insert(v);
    if (induces_forest(g, with_v)) return with_v;
    for (int w : f.ids) {
        VertexSet trial = with_v;
        trial.erase(w);
        if (induces_forest(g, trial)) return trial;
    }
    return std::nullopt;
}

}  // namespace qf
