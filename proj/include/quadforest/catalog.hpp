#ifndef QUADFOREST_CATALOG_HPP
#define QUADFOREST_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "quadforest/plane.hpp"
#include "quadforest/reduction.hpp"

namespace qf {

enum class LemmaTag {
    TwoDisjointR,
    Deg2Profile,
    Edge434,
    LowDegPath,
    DoubleRAt3,
    WeakPlusR,
    AllWeak3,
    FiveTwoBFace,
    Mixed345,
    FiveTwoBLadder,
    FiveOneBWheel,
    SixTwoATwin,
    CCadjB,
    CCadjA,
    CCadjB2,
};

std::string to_string(LemmaTag t);

/// One detected reducible configuration. The witness lists exactly the
/// vertices constrained by the lemma's pattern, sorted.
struct ConfigHit {
    LemmaTag tag;
    VertexSet witness;
    std::optional<ReductionStep> suggested_step;

    bool operator<(const ConfigHit& o) const {
        if (tag != o.tag) return tag < o.tag;
        return witness < o.witness;
    }
    bool operator==(const ConfigHit& o) const {
        return tag == o.tag && witness == o.witness;
    }
};

enum class VertexType {
    T5_2_A,
    T5_2_B,
    T5_2_C,
    T5_1_A,
    T5_1_B,
    T5_0,
    T6_3,
    T6_2_A,
    T6_2_B,
    T6_1,
    T6_0,
    Other,
};

std::string to_string(VertexType t);

struct VertexTypeLabel {
    int vertex = -1;
    VertexType label = VertexType::Other;
};

/// First matching label in definition order (5-2-A, 5-2-B, 5-2-C, 5-1-A,
/// 5-1-B, 5-0; then the 6-patterns). Degrees outside {5, 6} are Other.
VertexTypeLabel classify_vertex(const PlaneGraph& pg, int v);

/// All catalog hits, deduplicated by (tag, canonical witness) and sorted.
std::vector<ConfigHit> detect(const PlaneGraph& pg);

struct MinimalShapeReport {
    bool connected = false;
    bool quadrangulation = false;
    bool min_degree_2 = false;
    bool bipartite = false;
    bool all() const { return connected && quadrangulation && min_degree_2 && bipartite; }
};

/// Which minimum-counterexample preconditions hold for this input.
MinimalShapeReport assert_minimal_shape(const PlaneGraph& pg);

}  // namespace qf

#endif
