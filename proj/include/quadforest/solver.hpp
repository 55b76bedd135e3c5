#ifndef QUADFOREST_SOLVER_HPP
#define QUADFOREST_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "quadforest/graph.hpp"

namespace qf {

struct BudgetExceeded : GraphError {
    explicit BudgetExceeded(uint64_t budget)
        : GraphError("solver node budget exceeded (" + std::to_string(budget) + " nodes)") {}
};

/// A vertex set claimed to induce a forest, with the size target it is
/// measured against.
struct ForestCertificate {
    VertexSet vertices;
    int size = 0;
    int bound_target = 0;  // ceil((4n+3)/7) of the host graph
};

struct SolverOptions {
    uint64_t node_budget = 10'000'000;
};

/// Maximum induced forest by branch and bound on the complementary feedback
/// vertex set: degree <= 1 vertices are forced into the forest, bounding
/// packs vertex-disjoint cycles (degree-2 chains peeled), branching picks a
/// maximum-degree vertex on a shortest cycle. Deterministic certificate:
/// lexicographically least optimal set under vertex order.
ForestCertificate a_exact(const Graph& g, const SolverOptions& opt = {});

/// Exhaustive subset enumeration, n <= 20. Same tie-break as a_exact.
ForestCertificate a_bruteforce(const Graph& g);

/// Optimal certificate forced to contain v; requires degree(v) <= 3. The
/// returned size always equals a_exact's (asserted, not assumed).
ForestCertificate a_with_forced_vertex(const Graph& g, int v, const SolverOptions& opt = {});

struct BoundReport {
    int n = 0;
    int a = 0;
    int target = 0;
    bool ok = false;
    bool bipartite = false;  // false marks the report out-of-hypothesis
};

/// Evaluates a_exact(G) >= ceil((4n+3)/7). Planarity is caller-attested.
BoundReport bound_holds(const Graph& g, const SolverOptions& opt = {});

/// Rewrites F into an equal-size forest containing v (degree(v) <= 3);
/// nullopt when the degree precondition fails.
std::optional<VertexSet> force_into_forest(const Graph& g, const VertexSet& f, int v);

}  // namespace qf

#endif
