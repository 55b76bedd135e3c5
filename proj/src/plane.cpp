#include "quadforest/plane.hpp"

#include <algorithm>
#include <map>

namespace qf {

std::vector<int> FaceWalk::vertices() const {
    std::vector<int> out;
    out.reserve(arcs.size());
    for (const auto& a : arcs) out.push_back(a.first);
    return out;
}

bool FaceWalk::touches(int v) const {
    for (const auto& a : arcs)
        if (a.first == v) return true;
    return false;
}

std::vector<Edge> FaceWalk::canonical() const {
    if (arcs.empty()) return {};
    std::vector<Edge> best = arcs;
    std::vector<Edge> rot = arcs;
    for (size_t i = 1; i < arcs.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

PlaneGraph::PlaneGraph(Graph g, std::vector<std::vector<int>> rotation)
    : graph_(std::move(g)), rotation_(std::move(rotation)) {
    if (static_cast<int>(rotation_.size()) != graph_.n())
        throw PlaneError("rotation size mismatch");
    for (int v = 0; v < graph_.n(); ++v) {
        auto sorted = rotation_[v];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw PlaneError("rotation has a repeated neighbor at vertex " + std::to_string(v));
        if (sorted != graph_.neighbors(v))
            throw PlaneError("rotation is not a permutation of adjacency at vertex " +
                             std::to_string(v));
    }
    trace_faces(*this);  // validates Euler
}

int PlaneGraph::succ(int v, int a) const {
    const auto& rot = rotation_[v];
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == a) return rot[(i + 1) % rot.size()];
    throw PlaneError("succ: not a neighbor");
}

std::vector<FaceWalk> trace_faces(const PlaneGraph& pg) {
    const Graph& g = pg.graph();
    // arc id = position in per-vertex rotation
    std::vector<int> offset(g.n() + 1, 0);
    for (int v = 0; v < g.n(); ++v) offset[v + 1] = offset[v] + pg.degree(v);
    int total_arcs = offset[g.n()];
    auto arc_id = [&](int u, int idx) { return offset[u] + idx; };
    std::vector<std::map<int, int>> index_of(g.n());
    for (int v = 0; v < g.n(); ++v) {
        const auto& rot = pg.rotation(v);
        for (size_t i = 0; i < rot.size(); ++i) index_of[v][rot[i]] = static_cast<int>(i);
    }

    std::vector<char> seen(total_arcs, 0);
    std::vector<FaceWalk> faces;
    for (int u = 0; u < g.n(); ++u) {
        const auto& rot = pg.rotation(u);
        for (size_t j = 0; j < rot.size(); ++j) {
            if (seen[arc_id(u, static_cast<int>(j))]) continue;
            FaceWalk fw;
            int cu = u, cv = rot[j];
            while (true) {
                int idx = index_of[cu].at(cv);
                if (seen[arc_id(cu, idx)]) break;
                seen[arc_id(cu, idx)] = 1;
                fw.arcs.emplace_back(cu, cv);
                int at = index_of[cv].at(cu);
                const auto& rv = pg.rotation(cv);
                int nxt = rv[(at + 1) % rv.size()];
                cu = cv;
                cv = nxt;
            }
            faces.push_back(std::move(fw));
        }
    }
    int V = g.n(), E = g.edge_count(), F = static_cast<int>(faces.size());
    // Per component, V - E + F = 2; edgeless components trace no arc cycle
    // and contribute 1 instead.
    auto comp = g.components();
    int C = 0;
    for (int x : comp) C = std::max(C, x + 1);
    std::vector<char> has_edge(C, 0);
    for (int v = 0; v < V; ++v)
        if (g.degree(v) > 0) has_edge[comp[v]] = 1;
    int expected = 0;
    for (int c = 0; c < C; ++c) expected += has_edge[c] ? 2 : 1;
    if (V > 0 && V - E + F != expected)
        throw PlaneError("Euler check failed: V-E+F=" + std::to_string(V - E + F) +
                         " expected " + std::to_string(expected));
    return faces;
}

std::vector<std::vector<Corner>> face_corners(const PlaneGraph& pg,
                                              const std::vector<FaceWalk>& faces) {
    std::vector<std::vector<Corner>> corners(pg.n());
    for (size_t fi = 0; fi < faces.size(); ++fi) {
        const auto& arcs = faces[fi].arcs;
        int L = static_cast<int>(arcs.size());
        for (int i = 0; i < L; ++i) {
            int v = arcs[i].first;
            Corner c;
            c.face = static_cast<int>(fi);
            c.entry = arcs[(i - 1 + L) % L].first;
            c.exit = arcs[i].second;
            c.opposite = (L == 4) ? arcs[(i + 2) % L].first : -1;
            corners[v].push_back(c);
        }
    }
    return corners;
}

bool is_quadrangulation(const PlaneGraph& pg) {
    if (!pg.graph().connected()) return false;
    for (const auto& f : trace_faces(pg))
        if (f.length() != 4) return false;
    return true;
}

namespace {

// Insert `nb` into v's rotation at the face corner whose entry neighbor is
// `entry` (successor of entry becomes nb).
std::vector<int> insert_at_corner(const std::vector<int>& rot, int entry, int nb) {
    std::vector<int> out;
    out.reserve(rot.size() + 1);
    for (int x : rot) {
        out.push_back(x);
        if (x == entry) out.push_back(nb);
    }
    return out;
}

}  // namespace

PlaneGraph add_chord(const PlaneGraph& pg, const FaceWalk& face) {
    int k = face.length();
    if (k == 4) throw PlaneError("NoChordNeeded: face already a quadrilateral");
    if (k < 6) throw PlaneError("add_chord: face shorter than 6");
    auto verts = face.vertices();
    for (int s = 0; s < k; ++s) {
        int u = verts[s], w = verts[(s + 3) % k];
        if (u == w || pg.graph().adjacent(u, w)) continue;
        // corners: at u the walk enters from verts[s-1]; at w from verts[s+2]
        int entry_u = verts[(s - 1 + k) % k];
        int entry_w = verts[(s + 2) % k];
        Graph g2 = graph_with_edge(pg.graph(), u, w);
        auto rots = pg.rotations();
        rots[u] = insert_at_corner(rots[u], entry_u, w);
        rots[w] = insert_at_corner(rots[w], entry_w, u);
        return PlaneGraph(std::move(g2), std::move(rots));
    }
    throw PlaneError("add_chord: no valid odd-distance chord on this face");
}

std::vector<std::pair<int, int>> cofacial_pairs(const PlaneGraph& pg, int v) {
    auto faces = trace_faces(pg);
    std::vector<std::pair<int, int>> out;
    for (const auto& f : faces) {
        if (f.length() != 4) continue;
        const auto& arcs = f.arcs;
        for (int i = 0; i < 4; ++i) {
            if (arcs[i].first != v) continue;
            int a = arcs[(i + 3) % 4].first;  // entry neighbor
            int b = arcs[i].second;           // exit neighbor
            if (a == b) continue;
            out.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::pair<PlaneGraph, std::vector<int>> delete_vertices_plane(const PlaneGraph& pg,
                                                              const VertexSet& s) {
    auto [g2, old2new] = delete_vertices(pg.graph(), s);
    std::vector<std::vector<int>> rots(g2.n());
    for (int v = 0; v < pg.n(); ++v) {
        if (old2new[v] == -1) continue;
        for (int w : pg.rotation(v))
            if (old2new[w] != -1) rots[old2new[v]].push_back(old2new[w]);
    }
    return {PlaneGraph(std::move(g2), std::move(rots)), old2new};
}

namespace {

struct CornerCut {
    int entry;  // walk predecessor at the occurrence
    int exit;   // walk successor
};

std::optional<CornerCut> corner_on_face(const FaceWalk& f, int v) {
    int L = f.length();
    for (int i = 0; i < L; ++i)
        if (f.arcs[i].first == v)
            return CornerCut{f.arcs[(i - 1 + L) % L].first, f.arcs[i].second};
    return std::nullopt;
}

// Open the cyclic rotation at the corner: linear order from exit around to entry.
std::vector<int> open_rotation(const std::vector<int>& rot, const CornerCut& cut) {
    int n = static_cast<int>(rot.size());
    int start = -1;
    for (int i = 0; i < n; ++i)
        if (rot[i] == cut.exit) start = i;
    std::vector<int> out;
    for (int i = 0; i < n; ++i) out.push_back(rot[(start + i) % n]);
    return out;
}

}  // namespace

std::pair<PlaneGraph, std::vector<int>> identify_in_face(const PlaneGraph& pg,
                                                         const FaceWalk& face,
                                                         const VertexSet& group) {
    for (int v : group.ids)
        if (!face.touches(v)) throw PlaneError("identify_in_face: vertex not on the face");
    for (int u : group.ids)
        for (int w : group.ids)
            if (u < w && pg.graph().adjacent(u, w)) throw LoopWouldForm(u, w);

    std::vector<int> total_map(pg.n());
    for (int v = 0; v < pg.n(); ++v) total_map[v] = v;
    if (group.size() <= 1) return {pg, total_map};

    PlaneGraph cur = pg;
    std::vector<int> pending = group.ids;  // current ids of not-yet-merged members
    while (pending.size() >= 2) {
        int u = pending[0], w = pending[1];
        if (cur.graph().adjacent(u, w)) throw LoopWouldForm(u, w);
        auto faces = trace_faces(cur);
        const FaceWalk* host = nullptr;
        for (const auto& f : faces)
            if (f.touches(u) && f.touches(w)) {
                host = &f;
                break;
            }
        if (!host) throw PlaneError("identify_in_face: vertices no longer share a face");
        auto cu = corner_on_face(*host, u);
        auto cw = corner_on_face(*host, w);
        auto lin_u = open_rotation(cur.rotation(u), *cu);
        auto lin_w = open_rotation(cur.rotation(w), *cw);

        // merged rotation; remember which entries came from w's side so that
        // parallel-edge removal drops matching occurrences
        std::vector<std::pair<int, bool>> merged;
        for (int x : lin_u) merged.emplace_back(x, false);
        for (int x : lin_w) merged.emplace_back(x, true);

        std::vector<char> drop(merged.size(), 0);
        std::vector<int> dup_at_side;  // neighbors whose w-side copy is removed
        for (size_t i = 0; i < merged.size(); ++i) {
            for (size_t j = i + 1; j < merged.size(); ++j) {
                if (!drop[j] && !drop[i] && merged[i].first == merged[j].first) {
                    drop[j] = 1;  // the later (w-side) copy goes
                    dup_at_side.push_back(merged[j].first);
                }
            }
        }

        // rebuild on compacted ids: merged vertex keeps u's slot, w vanishes
        std::vector<int> old2new(cur.n(), -1);
        int next = 0;
        for (int v = 0; v < cur.n(); ++v)
            if (v != w) old2new[v] = next++;
        old2new[w] = old2new[u];
        int m = old2new[u];

        std::vector<std::vector<int>> rots(next);
        for (int v = 0; v < cur.n(); ++v) {
            if (v == u || v == w) continue;
            bool dropped_w_copy = false;
            bool is_dup = std::find(dup_at_side.begin(), dup_at_side.end(), v) != dup_at_side.end();
            for (int x : cur.rotation(v)) {
                if (x == w && is_dup && !dropped_w_copy) {
                    dropped_w_copy = true;  // remove the copy pairing with w's side
                    continue;
                }
                rots[old2new[v]].push_back(old2new[x]);
            }
        }
        for (size_t i = 0; i < merged.size(); ++i)
            if (!drop[i]) rots[m].push_back(old2new[merged[i].first]);

        std::vector<Edge> edges;
        for (int v = 0; v < next; ++v)
            for (int x : rots[v])
                if (v < x) edges.emplace_back(v, x);
        Graph g2 = Graph::build(next, edges);
        cur = PlaneGraph(std::move(g2), std::move(rots));

        for (int v = 0; v < pg.n(); ++v)
            if (total_map[v] != -1) total_map[v] = old2new[total_map[v]];
        std::vector<int> np;
        np.push_back(m);
        for (size_t i = 2; i < pending.size(); ++i) np.push_back(old2new[pending[i]]);
        pending = np;
    }
    return {cur, total_map};
}

PlaneGraph plane_with_edge(const PlaneGraph& pg, int u, int v) {
    if (u == v) throw PlaneError("plane_with_edge: loop rejected");
    if (pg.graph().adjacent(u, v)) return pg;
    auto faces = trace_faces(pg);
    for (const auto& f : faces) {
        if (!f.touches(u) || !f.touches(v)) continue;
        auto verts = f.vertices();
        int L = f.length();
        for (int i = 0; i < L; ++i) {
            if (verts[i] != u) continue;
            for (int j = 0; j < L; ++j) {
                if (verts[j] != v) continue;
                int d = (j - i + L) % L;
                if (d % 2 == 0) continue;  // same color class; keep bipartite
                int entry_u = verts[(i - 1 + L) % L];
                int entry_v = verts[(j - 1 + L) % L];
                Graph g2 = graph_with_edge(pg.graph(), u, v);
                auto rots = pg.rotations();
                rots[u] = insert_at_corner(rots[u], entry_u, v);
                rots[v] = insert_at_corner(rots[v], entry_v, u);
                return PlaneGraph(std::move(g2), std::move(rots));
            }
        }
    }
    throw PlaneError("plane_with_edge: endpoints do not share a face at odd distance; unsupported");
}

std::pair<PlaneGraph, std::vector<int>> plane_component(const PlaneGraph& pg,
                                                        const std::vector<int>& comp_vertices) {
    VertexSet keep(comp_vertices);
    VertexSet drop;
    for (int v = 0; v < pg.n(); ++v)
        if (!keep.contains(v)) drop.insert(v);
    return delete_vertices_plane(pg, drop);
}

}  // namespace qf
