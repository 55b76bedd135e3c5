#include "doctest.h"

#include <random>

#include "quadforest/generators.hpp"
#include "quadforest/plane.hpp"
#include "test_helpers.hpp"

using namespace qf;

TEST_CASE("trace_faces on basic embeddings") {
    PlaneGraph c4 = even_cycle(2);
    auto f1 = trace_faces(c4);
    CHECK(f1.size() == 2);
    for (const auto& f : f1) CHECK(f.length() == 4);

    PlaneGraph q3 = cube();
    auto f2 = trace_faces(q3);
    CHECK(f2.size() == 6);
    for (const auto& f : f2) CHECK(f.length() == 4);

    // star: one face of length 2E
    PlaneGraph k13 = qft::star(3);
    auto f3 = trace_faces(k13);
    CHECK(f3.size() == 1);
    CHECK(f3[0].length() == 6);
}

TEST_CASE("face lengths sum to twice the edges") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 30; ++it) {
        PlaneGraph pg = random_quadrangulation(rng, 8 + static_cast<int>(rng() % 20));
        int total = 0;
        for (const auto& f : trace_faces(pg)) total += f.length();
        CHECK(total == 2 * pg.graph().edge_count());
    }
}

TEST_CASE("is_quadrangulation") {
    CHECK(is_quadrangulation(cube()));
    CHECK(!is_quadrangulation(even_cycle(3)));  // C6: two 6-faces

    // 4x4 grid: inner quads but an outer face of length 12
    PlaneGraph g44 = grid(4, 4);
    int longest = 0;
    for (const auto& f : trace_faces(g44)) longest = std::max(longest, f.length());
    CHECK(longest == 12);
    CHECK(!is_quadrangulation(g44));
}

TEST_CASE("add_chord splits a long face") {
    // C6 + chord: faces 4 and 4
    PlaneGraph c6 = even_cycle(3);
    auto faces = trace_faces(c6);
    PlaneGraph chorded = add_chord(c6, faces[0]);
    auto f2 = trace_faces(chorded);
    CHECK(f2.size() == 3);
    int quads = 0;
    for (const auto& f : f2)
        if (f.length() == 4) ++quads;
    CHECK(quads >= 2);

    // 8-face -> 4-face + 6-face
    PlaneGraph c8 = even_cycle(4);
    auto f8 = trace_faces(c8);
    PlaneGraph ch8 = add_chord(c8, f8[0]);
    std::vector<int> lens;
    for (const auto& f : trace_faces(ch8)) lens.push_back(f.length());
    std::sort(lens.begin(), lens.end());
    CHECK(lens == std::vector<int>{4, 6, 8});

    // face count grows by one and Euler still holds (constructor asserts)
    CHECK(trace_faces(ch8).size() == f8.size() + 1);
}

TEST_CASE("add_chord error paths") {
    PlaneGraph q3 = cube();
    CHECK_THROWS_WITH_AS(add_chord(q3, trace_faces(q3)[0]), doctest::Contains("NoChordNeeded"),
                         PlaneError);

    // K1,3: its 6-walk visits the hub at every second step, every candidate
    // chord endpoint pair is the hub or an existing edge
    PlaneGraph k13 = qft::star(3);
    CHECK_THROWS_AS(add_chord(k13, trace_faces(k13)[0]), PlaneError);
}

TEST_CASE("add_chord rotates past occupied chords") {
    // C8 embedded, with one chord already present at walk distance 3 from
    // vertex 0: the insertion must pick another start
    PlaneGraph c8 = even_cycle(4);
    auto faces = trace_faces(c8);
    PlaneGraph once = add_chord(c8, faces[0]);
    // find the 6-face and chord it again
    for (const auto& f : trace_faces(once))
        if (f.length() == 6) {
            PlaneGraph twice = add_chord(once, f);
            CHECK(trace_faces(twice).size() == trace_faces(once).size() + 1);
        }
}

TEST_CASE("cofacial_pairs") {
    PlaneGraph q3 = cube();
    for (int v = 0; v < 8; ++v) {
        auto pairs = cofacial_pairs(q3, v);
        CHECK(pairs.size() == 3);
        for (auto [a, b] : pairs) {
            CHECK(q3.graph().adjacent(v, a));
            CHECK(q3.graph().adjacent(v, b));
        }
    }

    PlaneGraph c4 = even_cycle(2);
    auto pairs = cofacial_pairs(c4, 0);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == std::pair<int, int>{1, 3});

    PlaneGraph k13 = qft::star(3);
    CHECK(cofacial_pairs(k13, 0).empty());
}

TEST_CASE("cofacial pairs witnessed by a traced 4-face") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 20; ++it) {
        PlaneGraph pg = random_quadrangulation(rng, 10 + static_cast<int>(rng() % 12));
        auto faces = trace_faces(pg);
        for (int v = 0; v < pg.n(); ++v)
            for (auto [a, b] : cofacial_pairs(pg, v)) {
                bool witnessed = false;
                for (const auto& f : faces) {
                    if (f.length() != 4) continue;
                    auto vs = f.vertices();
                    for (int i = 0; i < 4; ++i)
                        if (vs[i] == v && ((vs[(i + 1) % 4] == a && vs[(i + 3) % 4] == b) ||
                                           (vs[(i + 1) % 4] == b && vs[(i + 3) % 4] == a)))
                            witnessed = true;
                }
                CHECK(witnessed);
            }
    }
}

TEST_CASE("identify_in_face") {
    PlaneGraph c4 = even_cycle(2);
    auto faces = trace_faces(c4);
    auto [path, map] = identify_in_face(c4, faces[0], VertexSet{0, 2});
    CHECK(path.n() == 3);
    CHECK(path.graph().edge_count() == 2);
    CHECK(map[0] == map[2]);
    CHECK(trace_faces(path).size() == 1);

    // singleton group: unchanged
    auto [same, map1] = identify_in_face(c4, faces[0], VertexSet{0});
    CHECK(same == c4);
    (void)map1;

    // C6: Euler revalidated by the constructor inside
    PlaneGraph c6 = even_cycle(3);
    auto f6 = trace_faces(c6);
    auto [h, m] = identify_in_face(c6, f6[0], VertexSet{0, 2});
    CHECK(h.n() == 5);
    CHECK(m[0] == m[2]);
    int V = h.n(), E = h.graph().edge_count(), F = static_cast<int>(trace_faces(h).size());
    CHECK(V - E + F == 2);

    // intra-group edge
    CHECK_THROWS_AS(identify_in_face(c4, faces[0], VertexSet{0, 1}), LoopWouldForm);
}

TEST_CASE("delete_vertices_plane keeps a valid embedding") {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 25; ++it) {
        PlaneGraph pg = random_quadrangulation(rng, 9 + static_cast<int>(rng() % 12));
        VertexSet s;
        s.insert(static_cast<int>(rng() % pg.n()));
        s.insert(static_cast<int>(rng() % pg.n()));
        auto [h, map] = delete_vertices_plane(pg, s);
        (void)map;
        CHECK(h.n() == pg.n() - s.size());
        trace_faces(h);  // throws on Euler failure
    }
}

TEST_CASE("quadrangulation edge count") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 20; ++it) {
        PlaneGraph pg = random_quadrangulation(rng, 8 + static_cast<int>(rng() % 20));
        REQUIRE(is_quadrangulation(pg));
        CHECK(pg.graph().edge_count() == 2 * pg.n() - 4);
    }
}

TEST_CASE("face identity is stable under retraces") {
    PlaneGraph q3 = cube();
    auto f1 = trace_faces(q3);
    auto f2 = trace_faces(q3);
    REQUIRE(f1.size() == f2.size());
    for (size_t i = 0; i < f1.size(); ++i) CHECK(f1[i] == f2[i]);
}
