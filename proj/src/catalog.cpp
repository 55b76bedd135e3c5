#include "quadforest/catalog.hpp"

#include <algorithm>
#include <set>

namespace qf {

std::string to_string(LemmaTag t) {
    switch (t) {
        case LemmaTag::TwoDisjointR: return "TwoDisjointR";
        case LemmaTag::Deg2Profile: return "Deg2Profile";
        case LemmaTag::Edge434: return "Edge434";
        case LemmaTag::LowDegPath: return "LowDegPath";
        case LemmaTag::DoubleRAt3: return "DoubleRAt3";
        case LemmaTag::WeakPlusR: return "WeakPlusR";
        case LemmaTag::AllWeak3: return "AllWeak3";
        case LemmaTag::FiveTwoBFace: return "FiveTwoBFace";
        case LemmaTag::Mixed345: return "Mixed345";
        case LemmaTag::FiveTwoBLadder: return "FiveTwoBLadder";
        case LemmaTag::FiveOneBWheel: return "FiveOneBWheel";
        case LemmaTag::SixTwoATwin: return "SixTwoATwin";
        case LemmaTag::CCadjB: return "CCadjB";
        case LemmaTag::CCadjA: return "CCadjA";
        case LemmaTag::CCadjB2: return "CCadjB2";
    }
    return "?";
}

std::string to_string(VertexType t) {
    switch (t) {
        case VertexType::T5_2_A: return "5-2-A";
        case VertexType::T5_2_B: return "5-2-B";
        case VertexType::T5_2_C: return "5-2-C";
        case VertexType::T5_1_A: return "5-1-A";
        case VertexType::T5_1_B: return "5-1-B";
        case VertexType::T5_0: return "5-0";
        case VertexType::T6_3: return "6-3";
        case VertexType::T6_2_A: return "6-2-A";
        case VertexType::T6_2_B: return "6-2-B";
        case VertexType::T6_1: return "6-1";
        case VertexType::T6_0: return "6-0";
        case VertexType::Other: return "other";
    }
    return "?";
}

namespace {

// A neighbor w of the 3-vertex x is "blocked" when w in V<=4 or R_{w,{x}}
// is nonempty; the complementary "open" neighbors are the V>=5 ones whose
// R-set (excluding x) vanished. The type definitions split on these.
bool blocked(const PlaneGraph& pg, int w, int x) {
    if (pg.degree(w) <= 4) return true;
    return !compute_R(pg, w, VertexSet{x}).empty();
}

bool open_nbr(const PlaneGraph& pg, int w, int x) { return !blocked(pg, w, x); }

// Outer neighbors of a degree-3 vertex seen from v.
std::vector<int> others(const PlaneGraph& pg, int u, int v) {
    std::vector<int> out;
    for (int w : pg.graph().neighbors(u))
        if (w != v) out.push_back(w);
    return out;
}

// All cyclic rotations and reflections of the rotation at v.
std::vector<std::vector<int>> orientations(const std::vector<int>& rot) {
    std::vector<std::vector<int>> out;
    int n = static_cast<int>(rot.size());
    for (int dir : {+1, -1})
        for (int s = 0; s < n; ++s) {
            std::vector<int> o;
            for (int i = 0; i < n; ++i) o.push_back(rot[((s + dir * i) % n + n) % n]);
            out.push_back(std::move(o));
        }
    return out;
}

struct FaceIndex {
    std::vector<FaceWalk> faces;
    std::vector<std::vector<Corner>> corners;

    explicit FaceIndex(const PlaneGraph& pg)
        : faces(trace_faces(pg)), corners(face_corners(pg, faces)) {}

    // Opposite vertex of the 4-face at v whose flanks are {a, b}; -1 if the
    // face between a and b at v is not a quadrilateral.
    int quad_opposite(int v, int a, int b) const {
        for (const auto& c : corners[v])
            if (c.opposite != -1 &&
                ((c.entry == a && c.exit == b) || (c.entry == b && c.exit == a)))
                return c.opposite;
        return -1;
    }
};

}  // namespace

VertexTypeLabel classify_vertex(const PlaneGraph& pg, int v) {
    VertexTypeLabel out{v, VertexType::Other};
    int d = pg.degree(v);
    if (d != 5 && d != 6) return out;
    const auto& rot = pg.rotation(v);
    auto deg = [&](int w) { return pg.degree(w); };
    auto at_least4 = [&](std::initializer_list<int> idxs, const std::vector<int>& o) {
        for (int i : idxs)
            if (deg(o[i]) < 4) return false;
        return true;
    };
    // side property of a degree-3 neighbor u: open = some outer neighbor of u
    // is a 5^+-vertex with empty R (excluding u)
    auto side_open = [&](int u) {
        for (int w : others(pg, u, v))
            if (open_nbr(pg, w, u)) return true;
        return false;
    };
    auto side_all_blocked = [&](int u) {
        for (int w : others(pg, u, v))
            if (!blocked(pg, w, u)) return false;
        return true;
    };

    if (d == 5) {
        for (const auto& o : orientations(rot)) {
            bool two3 = deg(o[0]) == 3 && deg(o[2]) == 3 && at_least4({1, 3, 4}, o);
            if (two3) {
                if (side_all_blocked(o[0]) && side_all_blocked(o[2]))
                    return {v, VertexType::T5_2_A};
            }
        }
        for (const auto& o : orientations(rot)) {
            bool two3 = deg(o[0]) == 3 && deg(o[2]) == 3 && at_least4({1, 3, 4}, o);
            if (two3 && side_open(o[0]) && side_all_blocked(o[2]))
                return {v, VertexType::T5_2_B};
        }
        for (const auto& o : orientations(rot)) {
            bool two3 = deg(o[0]) == 3 && deg(o[2]) == 3 && at_least4({1, 3, 4}, o);
            if (two3 && side_open(o[0]) && side_open(o[2]))
                return {v, VertexType::T5_2_C};
        }
        for (const auto& o : orientations(rot)) {
            bool one3 = deg(o[0]) == 3 && at_least4({1, 2, 3, 4}, o);
            if (one3 && side_all_blocked(o[0])) return {v, VertexType::T5_1_A};
        }
        for (const auto& o : orientations(rot)) {
            bool one3 = deg(o[0]) == 3 && at_least4({1, 2, 3, 4}, o);
            if (one3 && side_open(o[0])) return {v, VertexType::T5_1_B};
        }
        bool all4 = true;
        for (int w : rot)
            if (deg(w) < 4) all4 = false;
        if (all4) return {v, VertexType::T5_0};
        return out;
    }

    // d == 6
    for (const auto& o : orientations(rot))
        if (deg(o[0]) == 3 && deg(o[2]) == 3 && deg(o[4]) == 3 && at_least4({1, 3, 5}, o))
            return {v, VertexType::T6_3};
    for (const auto& o : orientations(rot))
        if (deg(o[0]) == 3 && deg(o[2]) == 3 && at_least4({1, 3, 4, 5}, o))
            return {v, VertexType::T6_2_A};
    for (const auto& o : orientations(rot))
        if (deg(o[0]) == 3 && deg(o[3]) == 3 && at_least4({1, 2, 4, 5}, o))
            return {v, VertexType::T6_2_B};
    for (const auto& o : orientations(rot))
        if (deg(o[0]) == 3 && at_least4({1, 2, 3, 4, 5}, o)) return {v, VertexType::T6_1};
    {
        bool all4 = true;
        for (int w : rot)
            if (deg(w) < 4) all4 = false;
        if (all4) return {v, VertexType::T6_0};
    }
    return out;
}

namespace {

struct Detector {
    const PlaneGraph& pg;
    const Graph& g;
    FaceIndex fi;
    std::set<ConfigHit> hits;

    explicit Detector(const PlaneGraph& pg_) : pg(pg_), g(pg_.graph()), fi(pg_) {}

    void add(LemmaTag tag, std::vector<int> witness,
             std::optional<ReductionStep> step = std::nullopt) {
        ConfigHit h;
        h.tag = tag;
        h.witness = VertexSet(std::move(witness));
        h.suggested_step = std::move(step);
        hits.insert(std::move(h));
    }

    std::vector<RElement> r_elements(const RSet& rs) const {
        std::vector<RElement> out;
        for (int s : rs.singles) out.push_back(RElement{{s}});
        for (auto [a, b] : rs.pairs) out.push_back(RElement{{a, b}});
        return out;
    }

    void two_disjoint_r() {
        for (int v = 0; v < g.n(); ++v) {
            RSet rs = compute_R(pg, v, {});
            auto els = r_elements(rs);
            for (size_t i = 0; i < els.size(); ++i)
                for (size_t j = i + 1; j < els.size(); ++j) {
                    bool disjoint = true;
                    for (int a : els[i].vertices)
                        for (int b : els[j].vertices)
                            if (a == b) disjoint = false;
                    if (!disjoint) continue;
                    std::vector<int> w{v};
                    for (int a : els[i].vertices) w.push_back(a);
                    for (int b : els[j].vertices) w.push_back(b);
                    add(LemmaTag::TwoDisjointR, w, disjoint_step(v, els[i], els[j]));
                }
        }
    }

    ReductionStep disjoint_step(int v, const RElement& e1, const RElement& e2) {
        ReductionStep step;
        step.kind = "two-disjoint-R";
        step.removed.insert(v);
        for (const RElement* e : {&e1, &e2}) {
            for (int x : e->vertices) {
                step.removed.insert(x);
                step.lift_add.insert(x);
            }
            if (e->is_pair()) {
                int opp = fi.quad_opposite(v, e->vertices[0], e->vertices[1]);
                if (opp != -1) step.removed.insert(opp);
            }
        }
        step.credit = step.lift_add.size();
        return step;
    }

    void deg2_profile() {
        for (int x = 0; x < g.n(); ++x) {
            if (g.degree(x) != 2) continue;
            auto nb = g.neighbors(x);
            int a = nb[0], b = nb[1];
            int da = g.degree(a), db = g.degree(b);
            bool ok = (da >= 5 && db >= 5) || (da <= 4 && db >= 6) || (db <= 4 && da >= 6);
            if (ok) continue;
            ReductionStep step;
            step.kind = "deg2-single-R";
            step.removed = VertexSet{std::min(a, b), x};
            step.lift_add = VertexSet{x};
            step.credit = 1;
            add(LemmaTag::Deg2Profile, {x, a, b}, step);
        }
    }

    void edge434() {
        for (int x1 = 0; x1 < g.n(); ++x1) {
            if (g.degree(x1) != 3) continue;
            auto nb = g.neighbors(x1);
            for (int y1 : nb) {
                if (g.degree(y1) != 4) continue;
                for (int z1 : nb) {
                    if (z1 == y1 || g.degree(z1) != 4) continue;
                    int x = -1;
                    for (int t : nb)
                        if (t != y1 && t != z1) x = t;
                    if (x == -1) continue;
                    int x2 = fi.quad_opposite(x1, x, y1);
                    if (x2 == -1) continue;
                    if (g.adjacent(z1, x2))
                        add(LemmaTag::Edge434, {x1, x, y1, z1, x2});
                }
            }
        }
    }

    void low_deg_path() {
        for (int x = 0; x < g.n(); ++x) {
            if (g.degree(x) > 3) continue;
            std::vector<int> low;
            for (int w : g.neighbors(x))
                if (g.degree(w) <= 3) low.push_back(w);
            if (low.size() < 2) continue;
            add(LemmaTag::LowDegPath, {low[0], x, low[1]}, low_deg_step(x));
        }
    }

    ReductionStep low_deg_step(int x) {
        // the degree-2 chain recipe when one applies, closed-neighborhood
        // deletion otherwise
        if (g.degree(x) == 2) {
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
                return step;
            }
        }
        ReductionStep step;
        step.kind = "closed-neighborhood";
        step.removed.insert(x);
        for (int w : g.neighbors(x)) step.removed.insert(w);
        step.lift_add = VertexSet{x};
        step.credit = 1;
        return step;
    }

    void double_r_at_3() {
        for (int x = 0; x < g.n(); ++x) {
            if (g.degree(x) != 3) continue;
            std::vector<int> with_r;
            for (int y : g.neighbors(x))
                if (!compute_R(pg, y, VertexSet{x}).empty()) with_r.push_back(y);
            if (with_r.size() >= 2)
                add(LemmaTag::DoubleRAt3, {x, with_r[0], with_r[1]});
        }
    }

    void weak_plus_r() {
        for (int x = 0; x < g.n(); ++x) {
            if (g.degree(x) != 3) continue;
            auto nb = g.neighbors(x);
            for (int y : nb) {
                if (g.degree(y) > 4) continue;
                for (int z : nb) {
                    if (z == y) continue;
                    if (!compute_R(pg, z, VertexSet{x}).empty())
                        add(LemmaTag::WeakPlusR, {x, y, z});
                }
            }
        }
    }

    void all_weak3() {
        for (int x = 0; x < g.n(); ++x) {
            if (g.degree(x) != 3) continue;
            auto nb = g.neighbors(x);
            if (std::all_of(nb.begin(), nb.end(), [&](int w) { return g.degree(w) <= 4; }))
                add(LemmaTag::AllWeak3, {x, nb[0], nb[1], nb[2]});
        }
    }

    void five_two_b_face() {
        for (int x = 0; x < g.n(); ++x) {
            if (g.degree(x) != 3) continue;
            auto nb = g.neighbors(x);
            for (const auto& c : fi.corners[x]) {
                if (c.opposite == -1) continue;
                for (auto [z, w] : {std::pair{c.entry, c.exit}, std::pair{c.exit, c.entry}}) {
                    if (g.degree(w) != 5 || g.degree(z) > 4) continue;
                    int y = -1;
                    for (int t : nb)
                        if (t != z && t != w) y = t;
                    if (y == -1 || g.degree(y) > 4) continue;
                    int v = c.opposite;
                    bool violated =
                        g.degree(v) <= 4 || !compute_R(pg, v, VertexSet{w, z}).empty();
                    if (violated) add(LemmaTag::FiveTwoBFace, {x, w, y, z, v});
                }
            }
        }
    }

    void mixed345() {
        for (int x = 0; x < g.n(); ++x) {
            if (g.degree(x) != 3) continue;
            auto nb = g.neighbors(x);
            bool h3 = false, h4 = false, h5 = false;
            for (int w : nb) {
                h3 |= g.degree(w) == 3;
                h4 |= g.degree(w) == 4;
                h5 |= g.degree(w) == 5;
            }
            if (h3 && h4 && h5) add(LemmaTag::Mixed345, {x, nb[0], nb[1], nb[2]});
        }
    }

    void five_two_b_ladder() {
        for (int x = 0; x < g.n(); ++x) {
            if (g.degree(x) != 5) continue;
            if (classify_vertex(pg, x).label != VertexType::T5_2_B) continue;
            for (const auto& o : orientations(pg.rotation(x))) {
                int x1 = o[0], y = o[1], x3 = o[2], z = o[3], x2 = o[4];
                if (g.degree(y) != 3 || g.degree(z) != 3 || g.degree(x1) != 4) continue;
                auto zo = others(pg, z, x);
                if (zo.size() != 2) continue;
                for (int flip = 0; flip < 2; ++flip) {
                    int z1 = zo[flip], z2 = zo[1 - flip];
                    if (!g.adjacent(z1, x2) || !g.adjacent(z2, x3)) continue;
                    if (g.degree(z1) != 4 || g.degree(z2) != 4) continue;
                    int w = fi.quad_opposite(x, x2, x1);
                    if (w == -1 || g.degree(w) != 3) continue;
                    add(LemmaTag::FiveTwoBLadder, {x, x1, y, x3, z, x2, z1, z2, w});
                }
            }
        }
    }

    void five_one_b_wheel() {
        for (int x = 0; x < g.n(); ++x) {
            if (g.degree(x) != 5) continue;
            if (classify_vertex(pg, x).label != VertexType::T5_1_B) continue;
            for (const auto& o : orientations(pg.rotation(x))) {
                int y1 = o[0], y3 = o[1], y4 = o[2], y2 = o[3], y5 = o[4];
                if (g.degree(y1) != 4 || g.degree(y2) != 4 || g.degree(y4) != 3) continue;
                int y3p = fi.quad_opposite(x, y1, y3);
                int y4p = fi.quad_opposite(x, y4, y2);
                int z1 = fi.quad_opposite(x, y5, y1);
                int z2 = fi.quad_opposite(x, y2, y5);
                if (y3p == -1 || y4p == -1 || z1 == -1 || z2 == -1) continue;
                if (g.degree(y3p) != 3 || g.degree(z1) != 3 || g.degree(z2) != 3) continue;
                add(LemmaTag::FiveOneBWheel, {x, y1, y3, y4, y2, y5, y3p, y4p, z1, z2});
            }
        }
    }

    bool weak_for(int w, int u) const { return blocked(pg, w, u); }

    void six_two_a_twin() {
        for (int x = 0; x < g.n(); ++x) {
            int m = g.degree(x);
            if (m < 5) continue;
            const auto& rot = pg.rotation(x);
            for (int dir : {+1, -1})
                for (int i = 0; i < m; ++i)
                    for (int dj = 2; dj < m; ++dj) {
                        int j = ((i + dir * dj) % m + m) % m;
                        int x1 = rot[i], xk = rot[j];
                        if (g.degree(x1) != 3 || g.degree(xk) != 3) continue;
                        int x2 = rot[((i + dir) % m + m) % m];
                        int xkm1 = rot[((j - dir) % m + m) % m];
                        auto o1 = others(pg, x1, x);
                        auto o2 = others(pg, xk, x);
                        if (o1.size() != 2 || o2.size() != 2) continue;
                        for (int f1 = 0; f1 < 2; ++f1)
                            for (int f2 = 0; f2 < 2; ++f2) {
                                int y1 = o1[f1], z1 = o1[1 - f1];
                                int y2 = o2[f2], z2 = o2[1 - f2];
                                if (!g.adjacent(y1, x2) || !g.adjacent(y2, xkm1)) continue;
                                if (!weak_for(y1, x1) || !weak_for(z1, x1)) continue;
                                if (!weak_for(y2, xk) || !weak_for(z2, xk)) continue;
                                add(LemmaTag::SixTwoATwin,
                                    {x, x1, xk, x2, xkm1, y1, z1, y2, z2});
                            }
                    }
        }
    }

    // shared scaffolding for the two 5-2-C adjacency lemmas
    void cc_adjacent(LemmaTag tag, VertexType v4_type) {
        for (int v = 0; v < g.n(); ++v) {
            if (g.degree(v) != 5) continue;
            if (classify_vertex(pg, v).label != VertexType::T5_2_C) continue;
            for (const auto& o : orientations(pg.rotation(v))) {
                int v1 = o[0], v2 = o[1], v3 = o[2], v4 = o[3], v5 = o[4];
                if (g.degree(v1) != 3 || g.degree(v3) != 3) continue;
                if (g.degree(v5) != 4) continue;
                int x = fi.quad_opposite(v, v4, v5);
                if (x == -1 || g.degree(x) != 3) continue;
                if (g.degree(v4) != 5) continue;
                if (classify_vertex(pg, v4).label != v4_type) continue;
                // cyclic order at v4: x, v, v3', v4', v4''
                const auto& r4 = pg.rotation(v4);
                for (const auto& o4 : orientations(r4)) {
                    if (o4[0] != x || o4[1] != v) continue;
                    int v3p = o4[2], v4p = o4[3], v4pp = o4[4];
                    int y = fi.quad_opposite(v4, v3p, v4p);
                    int z = fi.quad_opposite(v4, v4p, v4pp);
                    int xp = fi.quad_opposite(v4, v4pp, x);
                    if (y == -1 || z == -1 || xp == -1) continue;
                    if (tag == LemmaTag::CCadjB) {
                        if (g.degree(v4p) != 3 || g.degree(xp) != 4) continue;
                    } else {  // CCadjA
                        if (g.degree(y) != 3 || g.degree(z) != 3 || g.degree(xp) > 4) continue;
                    }
                    add(tag, {v, v1, v2, v3, v4, v5, x, v3p, v4p, v4pp, xp});
                }
            }
        }
    }

    void cc_adj_b2() {
        for (int v = 0; v < g.n(); ++v) {
            if (g.degree(v) != 5) continue;
            if (classify_vertex(pg, v).label != VertexType::T5_2_B) continue;
            for (const auto& o : orientations(pg.rotation(v))) {
                int v1 = o[0], v2 = o[1], v3 = o[2], v4 = o[3], v5 = o[4];
                if (g.degree(v1) != 3 || g.degree(v3) != 3) continue;
                int v1p = fi.quad_opposite(v, v1, v2);
                int v3p = fi.quad_opposite(v, v2, v3);
                int v3pp = fi.quad_opposite(v, v3, v4);
                int v1pp = fi.quad_opposite(v, v5, v1);
                if (v1p == -1 || v3p == -1 || v3pp == -1 || v1pp == -1) continue;
                if (g.degree(v1pp) < 5) continue;
                if (g.degree(v3p) != 4 || g.degree(v3pp) != 4) continue;
                if (g.degree(v2) != 5) continue;
                if (classify_vertex(pg, v2).label != VertexType::T5_2_C) continue;
                const auto& r2 = pg.rotation(v2);
                for (const auto& o2 : orientations(r2)) {
                    if (o2[0] != v || o2[1] != v1p || o2[4] != v3p) continue;
                    int v2p = o2[2], v2pp = o2[3];
                    if (g.degree(v1p) != 3 || g.degree(v2pp) != 3) continue;
                    add(LemmaTag::CCadjB2,
                        {v, v1, v2, v3, v4, v5, v1p, v1pp, v3p, v3pp, v2p, v2pp});
                }
            }
        }
    }
};

}  // namespace

std::vector<ConfigHit> detect(const PlaneGraph& pg) {
    Detector d(pg);
    d.two_disjoint_r();
    d.deg2_profile();
    d.edge434();
    d.low_deg_path();
    d.double_r_at_3();
    d.weak_plus_r();
    d.all_weak3();
    d.five_two_b_face();
    d.mixed345();
    d.five_two_b_ladder();
    d.five_one_b_wheel();
    d.six_two_a_twin();
    d.cc_adjacent(LemmaTag::CCadjB, VertexType::T5_2_B);
    d.cc_adjacent(LemmaTag::CCadjA, VertexType::T5_1_A);
    d.cc_adj_b2();
    return {d.hits.begin(), d.hits.end()};
}

MinimalShapeReport assert_minimal_shape(const PlaneGraph& pg) {
    MinimalShapeReport r;
    r.connected = pg.graph().connected();
    r.quadrangulation = r.connected && is_quadrangulation(pg);
    r.min_degree_2 = pg.n() > 0 && pg.graph().min_degree() >= 2;
    r.bipartite = pg.graph().bipartition().has_value();
    return r;
}

}  // namespace qf
