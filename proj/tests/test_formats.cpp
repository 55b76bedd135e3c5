#include "doctest.h"

#include <random>

#include "quadforest/formats.hpp"
#include "quadforest/generators.hpp"
#include "test_helpers.hpp"

using namespace qf;

namespace {

// Reference graph6 decoder, independent of the library implementation: read
// the size header, then consume upper-triangle bits column by column.
Graph reference_decode_g6(const std::string& s) {
    size_t pos = 0;
    auto val = [&](size_t i) { return static_cast<unsigned char>(s.at(i)) - 63; };
    long long n;
    if (val(0) != 63) {
        n = val(0);
        pos = 1;
    } else if (val(1) != 63) {
        n = (val(1) << 12) | (val(2) << 6) | val(3);
        pos = 4;
    } else {
        n = 0;
        for (int i = 0; i < 6; ++i) n = (n << 6) | val(2 + i);
        pos = 8;
    }
    std::vector<int> bits;
    for (size_t i = pos; i < s.size(); ++i)
        for (int b = 5; b >= 0; --b) bits.push_back((val(i) >> b) & 1);
    std::vector<Edge> edges;
    size_t k = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row)
            if (bits.at(k++)) edges.emplace_back(row, col);
    return Graph::build(static_cast<int>(n), edges);
}

}  // namespace

TEST_CASE("graph6 fixture table") {
    // 4-vertex graphs packed into one 6-bit group
    struct Fixture {
        std::string g6;
        int n;
        std::vector<Edge> edges;
    };
    std::vector<Fixture> fixtures = {
        {"C~", 4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}},  // K4
        {"Ch", 4, {{0, 1}, {1, 2}, {2, 3}}},                          // P4
        {"Cl", 4, {{0, 1}, {1, 2}, {0, 3}, {2, 3}}},                  // C4
        {"@", 1, {}},                                                 // K1
    };
    for (const auto& f : fixtures) {
        Graph parsed = parse_graph6(f.g6);
        Graph expect = Graph::build(f.n, f.edges);
        CHECK(parsed == expect);
        CHECK(parsed == reference_decode_g6(f.g6));
        CHECK(emit_graph6(expect) == f.g6);
    }
}

TEST_CASE("graph6 error paths") {
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);    // truncated bits
    CHECK_THROWS_AS(parse_graph6(""), ParseError);     // empty
    CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);  // trailing bytes
    CHECK_THROWS_AS(parse_graph6("C "), ParseError);   // out-of-range byte
    try {
        parse_graph6("C");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
}

TEST_CASE("graph6 round trips, including large-n header form") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 200; ++it) {
        int n = 1 + static_cast<int>(rng() % 16);
        Graph g = qft::random_graph(rng, n, 1, 3);
        std::string enc = emit_graph6(g);
        CHECK(parse_graph6(enc) == g);
        CHECK(emit_graph6(parse_graph6(enc)) == enc);
        CHECK(reference_decode_g6(enc) == g);
    }
    // multi-byte size header
    Graph big = qft::cycle(100);
    std::string enc = emit_graph6(big);
    CHECK(static_cast<unsigned char>(enc[0]) == 126);
    CHECK(parse_graph6(enc) == big);
}

TEST_CASE("graph6 header and stream") {
    Graph k4 = parse_graph6(">>graph6<<C~");
    CHECK(k4.edge_count() == 6);
    auto many = parse_graph6_stream(">>graph6<<C~\nCh\nCl\n");
    CHECK(many.size() == 3);
    CHECK(many[0].edge_count() == 6);
    CHECK(many[1].edge_count() == 3);
}

TEST_CASE("planar code round trip and validation") {
    PlaneGraph q3 = cube();
    std::string bytes = emit_planar_code({q3});
    auto back = parse_planar_code(bytes);
    REQUIRE(back.size() == 1);
    CHECK(back[0].graph() == q3.graph());
    CHECK(back[0].rotations() == q3.rotations());
    CHECK(emit_planar_code(back) == bytes);
    CHECK(trace_faces(back[0]).size() == 6);

    // empty stream
    CHECK(parse_planar_code("").empty());

    // non-embedding rotation: K4-minus-edge drawn with a crossing parity
    // fails Euler and is rejected
    std::string bad;
    bad.push_back(4);
    // vertex 1: 2 3 4 ; vertex 2: 1 3 4 ; vertex 3: 1 2 4 ; vertex 4: 1 2 3  (K4, bad rotation)
    for (auto row : {std::vector<int>{2, 3, 4}, std::vector<int>{1, 3, 4},
                     std::vector<int>{1, 2, 4}, std::vector<int>{1, 2, 3}}) {
        for (int x : row) bad.push_back(static_cast<char>(x));
        bad.push_back(0);
    }
    CHECK_THROWS_AS(parse_planar_code(bad), ParseError);
}

TEST_CASE("planar code multi-graph stream with header") {
    std::vector<PlaneGraph> graphs = {cube(), even_cycle(3), grid(2, 3)};
    std::string bytes = ">>planar_code<<" + emit_planar_code(graphs);
    auto back = parse_planar_code(bytes);
    REQUIRE(back.size() == 3);
    for (size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].graph() == graphs[i].graph());
        CHECK(back[i].rotations() == graphs[i].rotations());
    }
}

TEST_CASE("planar code error offsets") {
    std::string truncated;
    truncated.push_back(3);
    truncated.push_back(2);
    CHECK_THROWS_AS(parse_planar_code(truncated), ParseError);
}
