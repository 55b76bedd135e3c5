#include "quadforest/generators.hpp"

#include <algorithm>

namespace qf {

std::optional<Family> family_from_string(const std::string& s) {
    if (s == "even_cycles") return Family::EvenCycles;
    if (s == "grids") return Family::Grids;
    if (s == "prisms") return Family::Prisms;
    if (s == "cube_family") return Family::CubeFamily;
    if (s == "double_cube_matching") return Family::DoubleCubeMatching;
    if (s == "random_quadrangulations_by_face_expansion") return Family::RandomQuadrangulations;
    if (s == "trees") return Family::Trees;
    return std::nullopt;
}

std::string to_string(Family f) {
    switch (f) {
        case Family::EvenCycles: return "even_cycles";
        case Family::Grids: return "grids";
        case Family::Prisms: return "prisms";
        case Family::CubeFamily: return "cube_family";
        case Family::DoubleCubeMatching: return "double_cube_matching";
        case Family::RandomQuadrangulations: return "random_quadrangulations_by_face_expansion";
        case Family::Trees: return "trees";
    }
    return "?";
}

std::vector<Family> all_families() {
    return {Family::EvenCycles,         Family::Grids,      Family::Prisms,
            Family::CubeFamily,         Family::DoubleCubeMatching,
            Family::RandomQuadrangulations, Family::Trees};
}

PlaneGraph even_cycle(int k) {
    int n = 2 * k;
    if (n < 4) throw GraphError("even_cycle: need k >= 2");
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rots(n);
    for (int v = 0; v < n; ++v) {
        int prev = (v + n - 1) % n, next = (v + 1) % n;
        edges.emplace_back(std::min(v, next), std::max(v, next));
        rots[v] = {prev, next};
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return PlaneGraph(Graph::build(n, edges), rots);
}

PlaneGraph grid(int rows, int cols) {
    int n = rows * cols;
    auto id = [&](int r, int c) { return r * cols + c; };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rots(n);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            // clockwise: up, right, down, left
            if (r > 0) rots[id(r, c)].push_back(id(r - 1, c));
            if (c + 1 < cols) {
                rots[id(r, c)].push_back(id(r, c + 1));
                edges.emplace_back(id(r, c), id(r, c + 1));
            }
            if (r + 1 < rows) {
                rots[id(r, c)].push_back(id(r + 1, c));
                edges.emplace_back(id(r, c), id(r + 1, c));
            }
            if (c > 0) rots[id(r, c)].push_back(id(r, c - 1));
        }
    return PlaneGraph(Graph::build(n, edges), rots);
}

PlaneGraph prism(int k) {
    int m = 2 * k;
    if (m < 4) throw GraphError("prism: need k >= 2");
    int n = 2 * m;
    auto outer = [&](int j) { return (j % m + m) % m; };
    auto inner = [&](int j) { return m + (j % m + m) % m; };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rots(n);
    for (int j = 0; j < m; ++j) {
        edges.emplace_back(std::min(outer(j), outer(j + 1)), std::max(outer(j), outer(j + 1)));
        edges.emplace_back(std::min(inner(j), inner(j + 1)), std::max(inner(j), inner(j + 1)));
        edges.emplace_back(outer(j), inner(j));
        rots[outer(j)] = {outer(j - 1), inner(j), outer(j + 1)};
        rots[inner(j)] = {inner(j + 1), outer(j), inner(j - 1)};
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return PlaneGraph(Graph::build(n, edges), rots);
}

PlaneGraph cube_tube(int len) {
    if (len < 2) throw GraphError("cube_tube: need len >= 2");
    int n = 4 * len;
    auto id = [&](int r, int j) { return 4 * r + ((j % 4) + 4) % 4; };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rots(n);
    for (int r = 0; r < len; ++r)
        for (int j = 0; j < 4; ++j) {
            edges.emplace_back(std::min(id(r, j), id(r, j + 1)), std::max(id(r, j), id(r, j + 1)));
            if (r + 1 < len) edges.emplace_back(id(r, j), id(r + 1, j));
            // radial drawing: next, out, prev, in
            auto& rot = rots[id(r, j)];
            rot.push_back(id(r, j + 1));
            if (r + 1 < len) rot.push_back(id(r + 1, j));
            rot.push_back(id(r, j - 1));
            if (r > 0) rot.push_back(id(r - 1, j));
        }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return PlaneGraph(Graph::build(n, edges), rots);
}

PlaneGraph cube() { return cube_tube(2); }

namespace {

// Insert `nb` after `after` in the cyclic rotation.
void insert_after(std::vector<int>& rot, int after, int nb) {
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == after) {
            rot.insert(rot.begin() + i + 1, nb);
            return;
        }
    throw GraphError("insert_after: anchor not present");
}

}  // namespace

PlaneGraph double_cube_matching() {
    PlaneGraph a = cube();
    int nA = a.n();
    // combined rotations: cube B shifted by nA
    std::vector<std::vector<int>> rots(2 * nA);
    for (int v = 0; v < nA; ++v) {
        rots[v] = a.rotation(v);
        for (int w : a.rotation(v)) rots[nA + v].push_back(nA + w);
    }
    // outermost rings face each other; try alignments until the gluing is a
    // quadrangulation (orientation of the second cube is mirrored)
    std::vector<int> ringA = {0, 1, 2, 3};
    for (int off = 0; off < 4; ++off)
        for (int flip = 0; flip < 2; ++flip) {
            auto r = rots;
            std::vector<Edge> matching;
            for (int j = 0; j < 4; ++j) {
                int aj = ringA[j];
                int bj = nA + ((flip ? (off - j) : (off + j)) % 4 + 4) % 4;
                matching.emplace_back(aj, bj);
                // the bottom-ring face [0,1,2,3] enters vertex j from j-1;
                // open both cubes at that corner
                insert_after(r[aj], (aj + 3) % 4, bj);
                int bl = bj - nA;
                insert_after(r[bj], nA + (bl + 3) % 4, aj);
            }
            std::vector<Edge> edges;
            for (int v = 0; v < 2 * nA; ++v)
                for (int w : r[v])
                    if (v < w) edges.emplace_back(v, w);
            try {
                PlaneGraph pg(Graph::build(2 * nA, edges), r);
                if (is_quadrangulation(pg)) return pg;
            } catch (const GraphError&) {
                // alignment crosses; try the next one
            }
        }
    throw GraphError("double_cube_matching: no planar alignment found");
}

PlaneGraph random_tree(std::mt19937_64& rng, int n) {
    if (n < 1) throw GraphError("random_tree: n >= 1");
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rots(n);
    for (int v = 1; v < n; ++v) {
        int p = static_cast<int>(rng() % v);
        edges.emplace_back(p, v);
        rots[p].push_back(v);
        rots[v].push_back(p);
    }
    return PlaneGraph(Graph::build(n, edges), rots);
}

PlaneGraph random_quadrangulation(std::mt19937_64& rng, int target_n) {
    if (target_n < 4) throw GraphError("random_quadrangulation: target >= 4");
    PlaneGraph pg = even_cycle(2);  // C4
    while (pg.n() < target_n) {
        auto faces = trace_faces(pg);
        const FaceWalk& f = faces[rng() % faces.size()];
        auto vs = f.vertices();
        bool big_move = (rng() % 3 == 0) && pg.n() + 4 <= target_n;
        auto rots = pg.rotations();
        std::vector<Edge> edges = pg.graph().edges();
        int base = pg.n();
        if (!big_move) {
            // degree-2 vertex across one diagonal
            int pick = static_cast<int>(rng() % 2);
            int a = vs[pick], b = vs[pick + 1], c = vs[pick + 2], d = vs[(pick + 3) % 4];
            rots.push_back({a, c});
            insert_after(rots[a], d, base);
            insert_after(rots[c], b, base);
            edges.emplace_back(a, base);
            edges.emplace_back(c, base);
        } else {
            // inscribed quadrilateral with four spokes
            int a = vs[0], b = vs[1], c = vs[2], d = vs[3];
            int w = base, x = base + 1, y = base + 2, z = base + 3;
            rots.push_back({x, a, z});
            rots.push_back({y, b, w});
            rots.push_back({z, c, x});
            rots.push_back({w, d, y});
            insert_after(rots[a], d, w);
            insert_after(rots[b], a, x);
            insert_after(rots[c], b, y);
            insert_after(rots[d], c, z);
            edges.emplace_back(a, w);
            edges.emplace_back(b, x);
            edges.emplace_back(c, y);
            edges.emplace_back(d, z);
            edges.emplace_back(w, x);
            edges.emplace_back(x, y);
            edges.emplace_back(y, z);
            edges.emplace_back(z, w);
        }
        int n2 = base + (big_move ? 4 : 1);
        pg = PlaneGraph(Graph::build(n2, edges), rots);
    }
    return pg;
}

std::vector<CorpusEntry> generate_corpus(Family family, int size, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CorpusEntry> out;
    auto push = [&](const std::string& id, PlaneGraph pg) {
        CorpusEntry e;
        e.id = id;
        e.source = CorpusEntry::Source::Generator;
        e.graph = pg.graph();
        e.plane = std::move(pg);
        e.attested_planar = true;
        out.push_back(std::move(e));
    };
    switch (family) {
        case Family::EvenCycles:
            for (int i = 0; i < size; ++i)
                push("even_cycles-" + std::to_string(i), even_cycle(i + 2));
            break;
        case Family::Grids: {
            int r = 2, c = 2;
            for (int i = 0; i < size; ++i) {
                push("grids-" + std::to_string(i), grid(r, c));
                if (c > r) ++r;
                else ++c;
            }
            break;
        }
        case Family::Prisms:
            for (int i = 0; i < size; ++i)
                push("prisms-" + std::to_string(i), prism(i + 2));
            break;
        case Family::CubeFamily:
            for (int i = 0; i < size; ++i)
                push("cube_family-" + std::to_string(i), cube_tube(i + 2));
            break;
        case Family::DoubleCubeMatching:
            if (size >= 1) push("double_cube_matching-0", double_cube_matching());
            break;
        case Family::RandomQuadrangulations:
            for (int i = 0; i < size; ++i) {
                int target = 8 + static_cast<int>(rng() % 13);  // 8..20
                push("random_quad-" + std::to_string(i), random_quadrangulation(rng, target));
            }
            break;
        case Family::Trees:
            for (int i = 0; i < size; ++i) {
                int n = 2 + static_cast<int>(rng() % 17);
                push("trees-" + std::to_string(i), random_tree(rng, n));
            }
            break;
    }
    return out;
}

}  // namespace qf
