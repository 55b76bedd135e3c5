#ifndef QUADFOREST_PLANE_HPP
#define QUADFOREST_PLANE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadforest/graph.hpp"

namespace qf {

struct PlaneError : GraphError {
    using GraphError::GraphError;
};

/// Closed walk of directed edges bounding one face.
struct FaceWalk {
    std::vector<Edge> arcs;

    int length() const { return static_cast<int>(arcs.size()); }
    /// Walk vertices in order (arc tails).
    std::vector<int> vertices() const;
    bool touches(int v) const;
    /// Lexicographically least rotation of the arc sequence; stable identity
    /// across retraces and serialization round-trips.
    std::vector<Edge> canonical() const;

    bool operator==(const FaceWalk& o) const { return canonical() == o.canonical(); }
};

/// Face-corner bookkeeping at one vertex: the walk enters from `entry` and
/// leaves toward `exit` (= rotation successor of entry). `opposite` is the
/// far vertex when the face is a quadrilateral.
struct Corner {
    int face = -1;
    int entry = -1;
    int exit = -1;
    int opposite = -1;  // -1 unless the face has length 4
};

/// Combinatorial embedding: a graph plus a cyclic neighbor order per vertex.
/// Faces are derived by successor tracing; Euler's relation is validated per
/// component at construction time.
class PlaneGraph {
public:
    PlaneGraph() = default;
    PlaneGraph(Graph g, std::vector<std::vector<int>> rotation);

    const Graph& graph() const { return graph_; }
    int n() const { return graph_.n(); }
    int degree(int v) const { return graph_.degree(v); }
    const std::vector<int>& rotation(int v) const { return rotation_[v]; }
    const std::vector<std::vector<int>>& rotations() const { return rotation_; }

    /// Rotation successor of neighbor `a` at vertex `v`.
    int succ(int v, int a) const;

    bool operator==(const PlaneGraph& o) const = default;

private:
    Graph graph_;
    std::vector<std::vector<int>> rotation_;
};

/// Every directed edge appears in exactly one returned walk. Works per
/// component; V - E + F = 2C is asserted.
std::vector<FaceWalk> trace_faces(const PlaneGraph& pg);

/// Corners of all faces, indexed per vertex in rotation order.
std::vector<std::vector<Corner>> face_corners(const PlaneGraph& pg,
                                              const std::vector<FaceWalk>& faces);

/// True iff connected and every face has length exactly 4.
bool is_quadrangulation(const PlaneGraph& pg);

/// Insert a chord joining two walk-distance-3 vertices of a face of length
/// >= 6, splitting it into a 4-face and a (k-2)-face. Rotates the walk start
/// until a valid non-edge chord is found.
PlaneGraph add_chord(const PlaneGraph& pg, const FaceWalk& face);

/// All pairs {r1, r2} of neighbors of v such that some 4-face reads
/// v r1 w r2 v; deduplicated.
std::vector<std::pair<int, int>> cofacial_pairs(const PlaneGraph& pg, int v);

/// Delete a vertex set from the embedding (always planarity-preserving).
std::pair<PlaneGraph, std::vector<int>> delete_vertices_plane(const PlaneGraph& pg,
                                                              const VertexSet& s);

/// Identify the vertices of `group`, all lying on `face`, by merging their
/// rotations at the face corners; parallel edges are removed. Size <= 1
/// groups return the input unchanged.
std::pair<PlaneGraph, std::vector<int>> identify_in_face(const PlaneGraph& pg,
                                                         const FaceWalk& face,
                                                         const VertexSet& group);

/// Edge insertion inside a common face of u and v (endpoints at odd walk
/// distance). Requests that cannot be drawn in one traced face are rejected.
PlaneGraph plane_with_edge(const PlaneGraph& pg, int u, int v);

/// Restriction of the embedding to one component (vertex list ascending);
/// returns the sub-embedding plus the old->new map.
std::pair<PlaneGraph, std::vector<int>> plane_component(const PlaneGraph& pg,
                                                        const std::vector<int>& comp_vertices);

}  // namespace qf

#endif
