#include "quadforest/reduction.hpp"

#include <algorithm>
#include <map>

#include "quadforest/inequality.hpp"

namespace qf {

RSet compute_R(const PlaneGraph& pg, int v, const VertexSet& u) {
    RSet r;
    r.center = v;
    r.excluded = u;
    for (int w : pg.graph().neighbors(v))
        if (!u.contains(w) && pg.degree(w) <= 2) r.singles.push_back(w);
    for (auto [r1, r2] : cofacial_pairs(pg, v))
        if (!u.contains(r1) && !u.contains(r2) && pg.degree(r1) == 3 && pg.degree(r2) == 3)
            r.pairs.emplace_back(r1, r2);
    return r;
}

ReductionStep star_reduce_step(const PlaneGraph&, int v, const RElement& r) {
    ReductionStep step;
    if (!r.is_pair()) {
        step.kind = "star-single";
        step.removed = VertexSet{v, r.vertices[0]};
        step.lift_add = VertexSet{r.vertices[0]};
        step.credit = 1;
    } else {
        step.kind = "star-pair";
        step.removed = VertexSet{v};
        step.identified.push_back(VertexSet{r.vertices[0], r.vertices[1]});
        step.lift_add = VertexSet{r.vertices[0], r.vertices[1]};
        step.credit = 1;
    }
    return step;
}

std::pair<PlaneGraph, std::vector<int>> apply_step(const PlaneGraph& parent,
                                                   const ReductionStep& step) {
    auto [cur, map] = delete_vertices_plane(parent, step.removed);
    for (const auto& group : step.identified) {
        VertexSet translated;
        for (int v : group.ids) {
            if (map[v] == -1) throw GraphError("apply_step: identified vertex was removed");
            translated.insert(map[v]);
        }
        auto faces = trace_faces(cur);
        const FaceWalk* host = nullptr;
        for (const auto& f : faces) {
            bool all = true;
            for (int v : translated.ids)
                if (!f.touches(v)) all = false;
            if (all) {
                host = &f;
                break;
            }
        }
        if (!host) throw GraphError("apply_step: identified group shares no face");
        auto [next, m2] = identify_in_face(cur, *host, translated);
        cur = std::move(next);
        for (int v = 0; v < static_cast<int>(map.size()); ++v)
            if (map[v] != -1) map[v] = m2[map[v]];
    }
    for (auto [u, w] : step.added_edges) {
        if (map[u] == -1 || map[w] == -1)
            throw GraphError("apply_step: added edge endpoint was removed");
        cur = plane_with_edge(cur, map[u], map[w]);
    }
    return {std::move(cur), std::move(map)};
}

std::pair<PlaneGraph, std::vector<int>> star_reduce(const PlaneGraph& pg, int v,
                                                    const RElement& r) {
    return apply_step(pg, star_reduce_step(pg, v, r));
}

ForestCertificate lift_forest(const PlaneGraph& parent, const ReductionStep& step,
                              const ForestCertificate& childF) {
    auto [child, map] = apply_step(parent, step);
    (void)child;
    VertexSet lifted;
    std::vector<char> in_group(parent.n(), 0);
    for (const auto& g : step.identified)
        for (int v : g.ids) in_group[v] = 1;
    for (int v = 0; v < parent.n(); ++v) {
        if (map[v] == -1 || in_group[v]) continue;
        if (childF.vertices.contains(map[v])) lifted.insert(v);
    }
    for (const auto& g : step.identified) {
        int merged = map[g.ids[0]];
        if (!childF.vertices.contains(merged))
            throw LiftFailed("identified vertex missing from the child forest");
        for (int v : g.ids) lifted.insert(v);
    }
    for (int v : step.lift_add.ids) lifted.insert(v);
    if (auto cyc = find_cycle_in_subset(parent.graph(), lifted)) throw LiftFailed(*cyc);
    ForestCertificate cert;
    cert.vertices = lifted;
    cert.size = lifted.size();
    cert.bound_target = parent.n() > 0 ? bound(parent.n()) : 0;
    if (cert.size != childF.size + step.credit)
        throw LiftFailed("lift size " + std::to_string(cert.size) + " != child " +
                         std::to_string(childF.size) + " + credit " +
                         std::to_string(step.credit));
    return cert;
}

CertifyReport certify_reduction(const PlaneGraph& pg, const ReductionStep& step,
                                const SolverOptions& opt) {
    CertifyReport rep;
    rep.credit = step.credit;
    rep.a_parent = a_exact(pg.graph(), opt).size;
    auto [child, map] = apply_step(pg, step);
    (void)map;
    rep.a_child = a_exact(child.graph(), opt).size;
    rep.ok = rep.a_parent >= rep.a_child + rep.credit;
    return rep;
}

namespace {

// Greedy cycle breaking: drop a maximum-degree vertex of a shortest cycle
// until acyclic.
ForestCertificate greedy_forest(const Graph& g) {
    VertexSet s;
    for (int v = 0; v < g.n(); ++v) s.ids.push_back(v);
    while (auto cyc = find_cycle_in_subset(g, s)) {
        int pick = -1, best_deg = -1;
        for (int v : *cyc) {
            int d = g.degree(v);
            if (d > best_deg || (d == best_deg && v < pick)) {
                pick = v;
                best_deg = d;
            }
        }
        s.erase(pick);
    }
    ForestCertificate cert;
    cert.vertices = s;
    cert.size = s.size();
    cert.bound_target = g.n() > 0 ? bound(g.n()) : 0;
    return cert;
}

struct Builder {
    const SolverOptions& opt;
    std::vector<std::string> rules;
    bool used_fallback = false;

    explicit Builder(const SolverOptions& o) : opt(o) {}

    void tag(const std::string& r) {
        if (rules.empty() || rules.back() != r) rules.push_back(r);
    }

    VertexSet run(const PlaneGraph& pg, int depth) {
        const Graph& g = pg.graph();
        int n = g.n();
        if (n == 0) return {};
        // Structural guard: shrinking rules fire at most n times and chord
        // insertions at most 2n-4 times before quadrangulation saturates.
        if (depth > 3 * n + 16) {
            tag("fallback");
            used_fallback = true;
            return greedy_forest(g).vertices;
        }
        // (1) exact at desk scale
        if (n <= 18) {
            tag("exact");
            return a_exact(g, opt).vertices;
        }
        // (2) per-component recursion
        if (!g.connected()) {
            tag("components");
            auto comp = g.components();
            int c = *std::max_element(comp.begin(), comp.end()) + 1;
            VertexSet out;
            for (int ci = 0; ci < c; ++ci) {
                std::vector<int> verts;
                for (int v = 0; v < n; ++v)
                    if (comp[v] == ci) verts.push_back(v);
                auto [sub, old2new] = plane_component(pg, verts);
                VertexSet sf = run(sub, depth + 1);
                for (int v : verts)
                    if (sf.contains(old2new[v])) out.insert(v);
            }
            return out;
        }
        // (3) pendant / isolated vertices join the forest
        for (int v = 0; v < n; ++v)
            if (g.degree(v) <= 1) {
                tag("pendant");
                auto [child, map] = delete_vertices_plane(pg, VertexSet{v});
                VertexSet cf = run(child, depth + 1);
                VertexSet out;
                for (int u = 0; u < n; ++u)
                    if (u != v && cf.contains(map[u])) out.insert(u);
                out.insert(v);
                return out;
            }
        // (4) long faces take a chord
        {
            auto faces = trace_faces(pg);
            for (const auto& f : faces) {
                if (f.length() < 6) continue;
                try {
                    PlaneGraph chorded = add_chord(pg, f);
                    tag("chord");
                    return run(chorded, depth + 1);
                } catch (const PlaneError&) {
                    // no drawable chord on this face; try the next one
                }
            }
        }
        // (5) catalog reductions with implemented lifts
        if (auto out = try_reductions(pg, depth)) return *out;
        // (6) last resort
        tag("greedy");
        used_fallback = true;
        return greedy_forest(g).vertices;
    }

    // Ordered by how much bound slack the lift preserves.
    std::optional<VertexSet> try_reductions(const PlaneGraph& pg, int depth) {
        const Graph& g = pg.graph();
        int n = g.n();
        // two disjoint pair-elements: remove 7, credit 4 (bound-exact)
        std::vector<RSet> rsets(n);
        for (int v = 0; v < n; ++v) rsets[v] = compute_R(pg, v, {});
        for (int v = 0; v < n; ++v) {
            const auto& rs = rsets[v];
            for (size_t i = 0; i < rs.pairs.size(); ++i)
                for (size_t j = i + 1; j < rs.pairs.size(); ++j) {
                    auto [a1, a2] = rs.pairs[i];
                    auto [b1, b2] = rs.pairs[j];
                    if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) continue;
                    auto step = two_disjoint_pairs_step(pg, v, rs.pairs[i], rs.pairs[j]);
                    if (auto out = attempt(pg, step, depth, "two-disjoint-R")) return out;
                }
        }
        // degree-2 chain from the low-degree-path lemma: remove 3, credit 2
        for (int x = 0; x < n; ++x) {
            if (g.degree(x) != 2) continue;
            for (int y : g.neighbors(x)) {
                if (g.degree(y) != 2) continue;
                int z = -1;
                for (int w : g.neighbors(y))
                    if (w != x) z = w;
                ReductionStep step;
                step.kind = "deg2-chain";
                step.removed = VertexSet{x, y};
                if (z != -1) step.removed.insert(z);
                step.lift_add = VertexSet{x, y};
                step.credit = 2;
                if (auto out = attempt(pg, step, depth, "deg2-chain")) return out;
            }
        }
        // disjoint single+single / single+pair at one center
        for (int v = 0; v < n; ++v) {
            const auto& rs = rsets[v];
            if (rs.singles.size() >= 2) {
                ReductionStep step;
                step.kind = "two-disjoint-R";
                step.removed = VertexSet{v, rs.singles[0], rs.singles[1]};
                step.lift_add = VertexSet{rs.singles[0], rs.singles[1]};
                step.credit = 2;
                if (auto out = attempt(pg, step, depth, "two-disjoint-R")) return out;
            }
            if (!rs.singles.empty() && !rs.pairs.empty()) {
                auto step = single_plus_pair_step(pg, v, rs.singles[0], rs.pairs[0]);
                if (auto out = attempt(pg, step, depth, "two-disjoint-R")) return out;
            }
        }
        // plain R-reduction, singles first
        for (int v = 0; v < n; ++v) {
            const auto& rs = rsets[v];
            if (!rs.singles.empty()) {
                auto step = star_reduce_step(pg, v, RElement{{rs.singles[0]}});
                if (auto out = attempt(pg, step, depth, "star-single")) return out;
            }
        }
        for (int v = 0; v < n; ++v) {
            const auto& rs = rsets[v];
            if (!rs.pairs.empty()) {
                auto step = star_reduce_step(
                    pg, v, RElement{{rs.pairs[0].first, rs.pairs[0].second}});
                if (auto out = attempt(pg, step, depth, "star-pair")) return out;
            }
        }
        return std::nullopt;
    }

    ReductionStep two_disjoint_pairs_step(const PlaneGraph& pg, int v,
                                          std::pair<int, int> p1, std::pair<int, int> p2) {
        ReductionStep step;
        step.kind = "two-disjoint-R";
        step.removed = VertexSet{v, p1.first, p1.second, p2.first, p2.second};
        if (int w = opposite_on_4face(pg, v, p1); w != -1) step.removed.insert(w);
        if (int w = opposite_on_4face(pg, v, p2); w != -1) step.removed.insert(w);
        step.lift_add = VertexSet{p1.first, p1.second, p2.first, p2.second};
        step.credit = 4;
        return step;
    }

    ReductionStep single_plus_pair_step(const PlaneGraph& pg, int v, int s,
                                        std::pair<int, int> p) {
        ReductionStep step;
        step.kind = "two-disjoint-R";
        step.removed = VertexSet{v, s, p.first, p.second};
        if (int w = opposite_on_4face(pg, v, p); w != -1) step.removed.insert(w);
        step.lift_add = VertexSet{s, p.first, p.second};
        step.credit = 3;
        return step;
    }

    static int opposite_on_4face(const PlaneGraph& pg, int v, std::pair<int, int> pr) {
        auto faces = trace_faces(pg);
        for (const auto& f : faces) {
            if (f.length() != 4) continue;
            const auto& arcs = f.arcs;
            for (int i = 0; i < 4; ++i) {
                if (arcs[i].first != v) continue;
                int a = arcs[(i + 3) % 4].first, b = arcs[i].second;
                if ((a == pr.first && b == pr.second) || (a == pr.second && b == pr.first))
                    return arcs[(i + 2) % 4].first;
            }
        }
        return -1;
    }

    std::optional<VertexSet> attempt(const PlaneGraph& pg, const ReductionStep& step, int depth,
                                     const char* label) {
        try {
            auto [child, map] = apply_step(pg, step);
            VertexSet cf = run(child, depth + 1);
            // pair lifts need the merged vertex inside the child forest
            for (const auto& g : step.identified) {
                int merged = map[g.ids[0]];
                if (!cf.contains(merged)) {
                    auto fixed = force_into_forest(child.graph(), cf, merged);
                    if (!fixed) throw LiftFailed("cannot force merged vertex into child forest");
                    cf = *fixed;
                }
            }
            ForestCertificate childCert;
            childCert.vertices = cf;
            childCert.size = cf.size();
            childCert.bound_target = child.n() > 0 ? bound(child.n()) : 0;
            auto lifted = lift_forest(pg, step, childCert);
            tag(label);
            return lifted.vertices;
        } catch (const LiftFailed&) {
            return std::nullopt;
        } catch (const GraphError&) {
            return std::nullopt;
        }
    }
};

}  // namespace

BuildReport build_forest(const PlaneGraph& pg, const SolverOptions& opt) {
    Builder b(opt);
    BuildReport rep;
    VertexSet f = b.run(pg, 0);
    if (!induces_forest(pg.graph(), f)) throw GraphError("build_forest: internal lift error");
    rep.certificate.vertices = f;
    rep.certificate.size = f.size();
    rep.certificate.bound_target = pg.n() > 0 ? bound(pg.n()) : 0;
    rep.rules = b.rules;
    rep.used_fallback = b.used_fallback;
    rep.meets_bound = rep.certificate.size >= rep.certificate.bound_target;
    return rep;
}

}  // namespace qf
