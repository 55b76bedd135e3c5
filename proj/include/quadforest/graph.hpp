#ifndef QUADFOREST_GRAPH_HPP
#define QUADFOREST_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qf {

using Edge = std::pair<int, int>;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by identifications that would create a self-loop.
struct LoopWouldForm : GraphError {
    int u, v;
    LoopWouldForm(int u_, int v_)
        : GraphError("identification would form a loop: edge " + std::to_string(u_) + "-" +
                     std::to_string(v_)),
          u(u_), v(v_) {}
};

/// Fixed-size bit row used for adjacency and vertex sets.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    int size() const { return nbits_; }

    int count() const;
    bool any() const;
    bool intersects(const BitRow& o) const;

    /// Ascending list of set positions.
    std::vector<int> to_vector() const;

    bool operator==(const BitRow& o) const = default;

private:
    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

/// Set of vertex ids inside [0, n) of some host graph. Kept sorted and unique.
struct VertexSet {
    std::vector<int> ids;

    VertexSet() = default;
    VertexSet(std::initializer_list<int> init);
    explicit VertexSet(std::vector<int> v);

    bool contains(int v) const;
    void insert(int v);
    void erase(int v);
    int size() const { return static_cast<int>(ids.size()); }
    bool empty() const { return ids.empty(); }

    bool operator==(const VertexSet& o) const = default;
    bool operator<(const VertexSet& o) const { return ids < o.ids; }

    static VertexSet unite(const VertexSet& a, const VertexSet& b);
    static VertexSet intersect(const VertexSet& a, const VertexSet& b);
};

/// Immutable simple undirected graph over dense vertex ids.
///
/// Surgeries return new values together with an old->new id map so forest
/// certificates can be translated back to the parent graph.
class Graph {
public:
    Graph() = default;

    /// Rejects loops and out-of-range endpoints; duplicate edges collapse.
    static Graph build(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    int edge_count() const;
    int degree(int v) const { return adj_[v].count(); }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const BitRow& row(int v) const { return adj_[v]; }
    std::vector<int> neighbors(int v) const { return adj_[v].to_vector(); }
    std::vector<Edge> edges() const;

    int min_degree() const;
    int max_degree() const;
    bool connected() const;
    int component_count() const;
    /// Component id per vertex, numbered by first occurrence.
    std::vector<int> components() const;

    /// 2-coloring when no odd cycle exists.
    std::optional<std::vector<int>> bipartition() const;

    bool operator==(const Graph& o) const = default;

private:
    int n_ = 0;
    std::vector<BitRow> adj_;

    friend Graph graph_with_edge(const Graph&, int, int);
    friend std::pair<Graph, std::vector<int>> delete_vertices(const Graph&, const VertexSet&);
    friend std::pair<Graph, std::vector<int>> identify(const Graph&, const std::vector<VertexSet>&);
};

/// G[V - S] with ids compacted; map[v] is the new id or -1 for removed.
std::pair<Graph, std::vector<int>> delete_vertices(const Graph& g, const VertexSet& s);

/// Collapse each group to one vertex, merging parallels. Groups must be
/// pairwise disjoint and edge-free inside (else LoopWouldForm).
std::pair<Graph, std::vector<int>> identify(const Graph& g, const std::vector<VertexSet>& groups);

/// G + uv; returns g unchanged when the edge exists. u == v is rejected.
Graph graph_with_edge(const Graph& g, int u, int v);

/// True iff G[S] is acyclic.
bool induces_forest(const Graph& g, const VertexSet& s);

/// A cycle inside G[S] as a vertex sequence, when one exists.
std::optional<std::vector<int>> find_cycle_in_subset(const Graph& g, const VertexSet& s);

}  // namespace qf

#endif
