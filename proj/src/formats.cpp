#include "quadforest/formats.hpp"

#include <algorithm>

namespace qf {

namespace {

constexpr char kG6Header[] = ">>graph6<<";
constexpr char kPCHeader[] = ">>planar_code<<";

struct BitReader {
    const std::string& s;
    size_t byte = 0;
    int bit = 0;  // 0..5 within the current 6-bit group

    explicit BitReader(const std::string& s_, size_t start) : s(s_), byte(start) {}

    int next(size_t base_offset) {
        if (byte >= s.size())
            throw ParseError("graph6: truncated adjacency bits", base_offset + byte);
        unsigned char c = static_cast<unsigned char>(s[byte]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte outside printable range", base_offset + byte);
        int group = c - 63;
        int b = (group >> (5 - bit)) & 1;
        if (++bit == 6) {
            bit = 0;
            ++byte;
        }
        return b;
    }

    void expect_zero_padding(size_t base_offset) {
        while (bit != 0) {
            if (next(base_offset) != 0)
                throw ParseError("graph6: nonzero padding bits", base_offset + byte);
        }
    }
};

}  // namespace

Graph parse_graph6(const std::string& line_in) {
    std::string line = line_in;
    if (line.rfind(kG6Header, 0) == 0) line = line.substr(sizeof(kG6Header) - 1);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw ParseError("graph6: empty input", 0);

    size_t pos = 0;
    auto byte_at = [&](size_t i) -> int {
        if (i >= line.size()) throw ParseError("graph6: truncated header", i);
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte outside printable range", i);
        return c - 63;
    };

    long long n = 0;
    if (byte_at(0) != 63) {
        n = byte_at(0);
        pos = 1;
    } else if (line.size() >= 2 && byte_at(1) == 63) {
        for (int i = 0; i < 6; ++i) n = (n << 6) | byte_at(2 + i);
        pos = 8;
    } else {
        for (int i = 0; i < 3; ++i) n = (n << 6) | byte_at(1 + i);
        pos = 4;
    }
    if (n > 100000) throw ParseError("graph6: vertex count too large for this tool", 0);

    std::vector<Edge> edges;
    BitReader bits(line, pos);
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row)
            if (bits.next(0)) edges.emplace_back(row, col);
    bits.expect_zero_padding(0);
    if (bits.byte != line.size())
        throw ParseError("graph6: trailing bytes after adjacency", bits.byte);
    return Graph::build(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    std::string out;
    long long n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int i = 2; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int i = 5; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + 63));
    }
    int group = 0, filled = 0;
    for (int col = 1; col < g.n(); ++col)
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

std::vector<Graph> parse_graph6_stream(const std::string& bytes) {
    std::vector<Graph> out;
    size_t start = 0;
    bool first = true;
    while (start < bytes.size()) {
        size_t end = bytes.find('\n', start);
        if (end == std::string::npos) end = bytes.size();
        std::string line = bytes.substr(start, end - start);
        if (first && line.rfind(kG6Header, 0) == 0) line = line.substr(sizeof(kG6Header) - 1);
        first = false;
        if (!line.empty() && line != "\r") out.push_back(parse_graph6(line));
        start = end + 1;
    }
    return out;
}

std::vector<PlaneGraph> parse_planar_code(const std::string& bytes) {
    size_t pos = 0;
    if (bytes.rfind(kPCHeader, 0) == 0) pos = sizeof(kPCHeader) - 1;
    std::vector<PlaneGraph> out;
    while (pos < bytes.size()) {
        int n = static_cast<unsigned char>(bytes[pos]);
        size_t head = pos;
        ++pos;
        if (n == 0) throw ParseError("planar_code: zero vertex count", head);
        std::vector<std::vector<int>> rots(n);
        for (int v = 0; v < n; ++v) {
            while (true) {
                if (pos >= bytes.size())
                    throw ParseError("planar_code: truncated neighbor list", pos);
                int b = static_cast<unsigned char>(bytes[pos]);
                ++pos;
                if (b == 0) break;
                if (b > n)
                    throw ParseError("planar_code: neighbor id out of range", pos - 1);
                rots[v].push_back(b - 1);
            }
        }
        std::vector<Edge> edges;
        for (int v = 0; v < n; ++v)
            for (int w : rots[v]) {
                if (w == v) throw ParseError("planar_code: loop", head);
                if (v < w) edges.emplace_back(v, w);
            }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        Graph g = Graph::build(n, edges);
        try {
            out.emplace_back(std::move(g), std::move(rots));  // Euler-validated
        } catch (const PlaneError& e) {
            throw ParseError(std::string("planar_code: not an embedding: ") + e.what(), head);
        }
    }
    return out;
}

std::string emit_planar_code(const std::vector<PlaneGraph>& graphs) {
    std::string out;
    for (const auto& pg : graphs) {
        if (pg.n() > 255) throw GraphError("emit_planar_code: more than 255 vertices");
        out.push_back(static_cast<char>(pg.n()));
        for (int v = 0; v < pg.n(); ++v) {
            for (int w : pg.rotation(v)) out.push_back(static_cast<char>(w + 1));
            out.push_back(0);
        }
    }
    return out;
}

}  // namespace qf
