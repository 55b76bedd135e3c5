#ifndef QUADFOREST_GENERATORS_HPP
#define QUADFOREST_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quadforest/plane.hpp"

namespace qf {

enum class Family {
    EvenCycles,
    Grids,
    Prisms,
    CubeFamily,
    DoubleCubeMatching,
    RandomQuadrangulations,
    Trees,
};

std::optional<Family> family_from_string(const std::string& s);
std::string to_string(Family f);
std::vector<Family> all_families();

struct CorpusEntry {
    std::string id;
    enum class Source { File, Generator } source = Source::Generator;
    PlaneGraph plane;        // meaningful when attested_planar
    Graph graph;             // always set
    bool attested_planar = false;
};

/// Embedded C_{2k}.
PlaneGraph even_cycle(int k);
/// r x c grid with the natural embedding.
PlaneGraph grid(int rows, int cols);
/// Even prism C_{2k} x K2 (k = 2 is the cube).
PlaneGraph prism(int k);
/// C4 x P_len tube of stacked quadrilaterals; len = 2 is the cube.
PlaneGraph cube_tube(int len);
PlaneGraph cube() /* Q3 */;
/// Two cubes with a perfect matching between two of their 4-faces.
PlaneGraph double_cube_matching();
/// Random plane tree on n vertices.
PlaneGraph random_tree(std::mt19937_64& rng, int n);

/// Seeded face-expansion quadrangulation: grow C4 by degree-2 insertions and
/// inscribed-quadrilateral expansions until target_n is reached. Always a
/// connected simple bipartite quadrangulation with min degree 2.
PlaneGraph random_quadrangulation(std::mt19937_64& rng, int target_n);

std::vector<CorpusEntry> generate_corpus(Family family, int size, uint64_t seed);

}  // namespace qf

#endif
