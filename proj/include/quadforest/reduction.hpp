#ifndef QUADFOREST_REDUCTION_HPP
#define QUADFOREST_REDUCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "quadforest/plane.hpp"
#include "quadforest/solver.hpp"

namespace qf {

/// The family R_{v,U}: degree <= 2 neighbors of v outside U as singletons,
/// plus cofacial degree-3 neighbor pairs outside U.
struct RSet {
    int center = -1;
    VertexSet excluded;
    std::vector<int> singles;
    std::vector<std::pair<int, int>> pairs;

    bool empty() const { return singles.empty() && pairs.empty(); }
    int element_count() const { return static_cast<int>(singles.size() + pairs.size()); }
};

struct LiftFailed : GraphError {
    std::vector<int> cycle;
    explicit LiftFailed(std::vector<int> cyc)
        : GraphError("forest lift produced a cycle"), cycle(std::move(cyc)) {}
    explicit LiftFailed(const std::string& what) : GraphError(what) {}
};

/// One reduction recipe on a parent graph: delete `removed`, identify each
/// group, insert `added_edges`, then re-insert `lift_add` into the child
/// forest. `credit` is the claimed size gain of the lift; for single-target
/// reductions credit == |lift_add|, for pair identifications the merged
/// vertex is swapped out so the net gain is |group| - 1 per group.
struct ReductionStep {
    std::string kind;
    VertexSet removed;
    std::vector<VertexSet> identified;
    std::vector<Edge> added_edges;
    VertexSet lift_add;
    int credit = 0;
};

RSet compute_R(const PlaneGraph& pg, int v, const VertexSet& u);

/// Convenience: one element of an RSet.
struct RElement {
    std::vector<int> vertices;  // size 1 or 2
    bool is_pair() const { return vertices.size() == 2; }
};

/// G*R: G - {v, r} for a singleton, (G - v)/r1r2 for a cofacial pair.
/// Returns the reduced embedding and the old->new map (both pair members map
/// to the merged id).
std::pair<PlaneGraph, std::vector<int>> star_reduce(const PlaneGraph& pg, int v,
                                                    const RElement& r);

/// The ReductionStep equivalent of star_reduce, for lift_forest/certify.
ReductionStep star_reduce_step(const PlaneGraph& pg, int v, const RElement& r);

/// Apply a step to the parent; returns the child embedding and old->new map.
std::pair<PlaneGraph, std::vector<int>> apply_step(const PlaneGraph& parent,
                                                   const ReductionStep& step);

/// F*R lift: map the child forest back into the parent, swap identified
/// vertices for their groups, add lift_add, and verify acyclicity at
/// runtime. Throws LiftFailed when the result is cyclic or the identified
/// vertex is missing from the child forest.
ForestCertificate lift_forest(const PlaneGraph& parent, const ReductionStep& step,
                              const ForestCertificate& childF);

struct CertifyReport {
    int a_parent = 0;
    int a_child = 0;
    int credit = 0;
    bool ok = false;
};

/// ok = a(parent) >= a(child) + credit, both sides exact.
CertifyReport certify_reduction(const PlaneGraph& pg, const ReductionStep& step,
                                const SolverOptions& opt = {});

struct BuildReport {
    ForestCertificate certificate;
    std::vector<std::string> rules;  // rule chain that fired, outermost first
    bool meets_bound = false;
    bool used_fallback = false;
};

/// Constructive forest builder: exact below 19 vertices, component/pendant/
/// chord rules, catalog reductions with runtime-verified lifts, greedy
/// cycle-breaking as the last resort.
BuildReport build_forest(const PlaneGraph& pg, const SolverOptions& opt = {});

}  // namespace qf

#endif
