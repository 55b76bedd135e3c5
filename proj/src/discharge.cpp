#include "quadforest/discharge.hpp"

#include <algorithm>

namespace qf {

long long ChargeLedger::total_q() const {
    long long t = 0;
    for (int q : vertex_q) t += q;
    for (int q : face_q) t += q;
    return t;
}

std::vector<int> ChargeLedger::final_vertex_q() const {
    std::vector<int> out = vertex_q;
    for (const auto& t : transfers) {
        out[t.from] -= t.amount_q;
        out[t.to] += t.amount_q;
    }
    return out;
}

long long ChargeLedger::final_total_q() const {
    long long t = 0;
    for (int q : final_vertex_q()) t += q;
    for (int q : face_q) t += q;
    return t;
}

ChargeLedger initial_charges(const PlaneGraph& pg) {
    ChargeLedger led;
    led.vertex_q.resize(pg.n());
    for (int v = 0; v < pg.n(); ++v) led.vertex_q[v] = 4 * (pg.degree(v) - 4);
    for (const auto& f : trace_faces(pg)) led.face_q.push_back(4 * (f.length() - 4));
    return led;
}

std::vector<long long> component_totals_q(const PlaneGraph& pg, const ChargeLedger& ledger) {
    auto comp = pg.graph().components();
    int c = 0;
    for (int x : comp) c = std::max(c, x + 1);
    std::vector<long long> totals(c, 0);
    auto fin = ledger.final_vertex_q();
    for (int v = 0; v < pg.n(); ++v) totals[comp[v]] += fin[v];
    auto faces = trace_faces(pg);
    for (size_t i = 0; i < faces.size(); ++i) {
        int anchor = faces[i].arcs.empty() ? -1 : faces[i].arcs[0].first;
        if (anchor >= 0 && i < ledger.face_q.size()) totals[comp[anchor]] += ledger.face_q[i];
    }
    return totals;
}

namespace {

// Rule 1 target: the unique common vertex of all R-elements. Every pairwise
// intersecting family at a sender of degree >= 5 is a star, so the common
// vertex exists whenever no two elements are disjoint.
struct RuleOneTargets {
    std::vector<std::pair<int, int>> sends;  // (vertex, quarter amount)
};

RuleOneTargets rule_one(const RSet& rs, int deg) {
    RuleOneTargets out;
    int full = 4 * (deg - 4);
    if (rs.element_count() == 1) {
        if (!rs.singles.empty()) {
            out.sends.emplace_back(rs.singles[0], full);
        } else {
            out.sends.emplace_back(rs.pairs[0].first, full / 2);
            out.sends.emplace_back(rs.pairs[0].second, full / 2);
        }
        return out;
    }
    std::vector<std::vector<int>> els;
    for (int s : rs.singles) els.push_back({s});
    for (auto [a, b] : rs.pairs) els.push_back({a, b});
    std::vector<int> common = els[0];
    for (size_t i = 1; i < els.size(); ++i) {
        std::vector<int> next;
        for (int x : common)
            if (std::find(els[i].begin(), els[i].end(), x) != els[i].end()) next.push_back(x);
        common = next;
    }
    if (!common.empty()) {
        out.sends.emplace_back(common[0], full);
        return out;
    }
    // Disjoint elements present: outside the rule's hypotheses (the catalog
    // flags this graph). Discharge the canonical first element.
    if (els[0].size() == 1) {
        out.sends.emplace_back(els[0][0], full);
    } else {
        out.sends.emplace_back(els[0][0], full / 2);
        out.sends.emplace_back(els[0][1], full / 2);
    }
    return out;
}

}  // namespace

ChargeLedger apply_rules(const PlaneGraph& pg, const ChargeLedger& ledger) {
    ChargeLedger led = ledger;
    const Graph& g = pg.graph();
    auto faces = trace_faces(pg);
    auto corners = face_corners(pg, faces);

    for (int v = 0; v < g.n(); ++v) {
        int deg = g.degree(v);
        if (deg < 5) continue;
        RSet rs = compute_R(pg, v, {});
        if (!rs.empty()) {
            for (auto [to, amt] : rule_one(rs, deg).sends)
                led.transfers.push_back({v, to, amt, 1, to});
            continue;  // rule 1 senders send nothing else
        }
        // rule 2: each adjacent 3-vertex u; the premise R_{v,{u}} = empty
        // holds because R_{v,empty} is already empty
        for (int u : g.neighbors(v)) {
            if (g.degree(u) != 3) continue;
            bool some_open = false;
            for (int w : g.neighbors(u)) {
                if (w == v) continue;
                if (g.degree(w) >= 5 && compute_R(pg, w, VertexSet{u}).empty())
                    some_open = true;
            }
            led.transfers.push_back({v, u, some_open ? 2 : 4, 2, u});
        }
        // rule 3: faces v-x-w-y with deg(x) >= 5, deg(w) = 3, deg(y) = 4
        bool v_is_52C = classify_vertex(pg, v).label == VertexType::T5_2_C;
        for (const auto& c : corners[v]) {
            if (c.opposite == -1) continue;
            int w = c.opposite;
            if (g.degree(w) != 3) continue;
            for (auto [x, y] : {std::pair{c.entry, c.exit}, std::pair{c.exit, c.entry}}) {
                if (g.degree(x) < 5 || g.degree(y) != 4) continue;
                if (v_is_52C) continue;
                if (classify_vertex(pg, x).label == VertexType::T5_2_C) continue;
                led.transfers.push_back({v, x, 1, 3, c.face});
            }
        }
    }
    return led;
}

AuditReport audit(const PlaneGraph& pg) {
    AuditReport rep;
    rep.shape = assert_minimal_shape(pg);
    ChargeLedger initial = initial_charges(pg);
    rep.initial_total_q = initial.total_q();
    ChargeLedger after = apply_rules(pg, initial);
    rep.final_total_q = after.final_total_q();
    rep.conserved = rep.initial_total_q == rep.final_total_q;
    auto fin = after.final_vertex_q();
    for (int v = 0; v < pg.n(); ++v)
        if (fin[v] < 0) rep.negative_vertices.push_back(v);
    rep.hits = detect(pg);
    rep.hits_present = !rep.hits.empty();
    return rep;
}

std::vector<int> discharging_case_violations(const PlaneGraph& pg) {
    const Graph& g = pg.graph();
    ChargeLedger led = apply_rules(pg, initial_charges(pg));
    auto fin = led.final_vertex_q();
    auto hits = detect(pg);
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        if (d != 5 && d != 6) continue;
        if (fin[v] >= 0) continue;
        // closed 2-neighborhood of v
        VertexSet ball{v};
        for (int w : g.neighbors(v)) {
            ball.insert(w);
            for (int t : g.neighbors(w)) ball.insert(t);
        }
        bool touched = false;
        for (const auto& h : hits)
            if (!VertexSet::intersect(ball, h.witness).empty()) touched = true;
        if (!touched) out.push_back(v);
    }
    return out;
}

}  // namespace qf
