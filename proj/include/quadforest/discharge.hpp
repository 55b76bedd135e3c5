#ifndef QUADFOREST_DISCHARGE_HPP
#define QUADFOREST_DISCHARGE_HPP

#include <string>
#include <vector>

#include "quadforest/catalog.hpp"
#include "quadforest/plane.hpp"

namespace qf {

/// One charge movement in quarter units.
struct Transfer {
    int from = -1;
    int to = -1;
    int amount_q = 0;    // quarter units
    int rule = 0;        // 1, 2, 3
    int context = -1;    // rule 1/2: the R target or the 3-vertex; rule 3: face id
};

/// Exact per-vertex and per-face charges, quarter units throughout. The
/// initial total is -8 (in quarters, -32) for every connected plane graph
/// and every transfer conserves it.
struct ChargeLedger {
    std::vector<int> vertex_q;
    std::vector<int> face_q;
    std::vector<Transfer> transfers;

    long long total_q() const;
    std::vector<int> final_vertex_q() const;
    long long final_total_q() const;
};

/// ch(v) = deg(v) - 4, ch(f) = len(f) - 4; no transfers.
ChargeLedger initial_charges(const PlaneGraph& pg);

/// Totals per connected component (quarter units); each edged component of
/// a plane graph totals -32 on its own.
std::vector<long long> component_totals_q(const PlaneGraph& pg, const ChargeLedger& ledger);

/// The three discharging rules, senders of degree >= 5 in vertex-id order.
/// A sender with a nonempty R-set discharges by rule 1 alone; the others
/// evaluate rules 2 and 3.
ChargeLedger apply_rules(const PlaneGraph& pg, const ChargeLedger& ledger);

struct AuditReport {
    MinimalShapeReport shape;
    long long initial_total_q = 0;
    long long final_total_q = 0;
    bool conserved = false;
    std::vector<int> negative_vertices;  // ch'(v) < 0 after rules
    std::vector<ConfigHit> hits;
    bool hits_present = false;
};

/// Initial charges, rules, totals, negative vertices, and the catalog
/// cross-check in one pass. Meta-claims are only made when the minimal
/// shape preconditions hold.
AuditReport audit(const PlaneGraph& pg);

/// ch'(v) for vertices of degree 5 or 6 whose closed 2-neighborhood meets no
/// hit witness must be >= 0; returns the violating vertices (empty == pass).
std::vector<int> discharging_case_violations(const PlaneGraph& pg);

}  // namespace qf

#endif
