#ifndef QUADFOREST_FORMATS_HPP
#define QUADFOREST_FORMATS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "quadforest/graph.hpp"
#include "quadforest/plane.hpp"

namespace qf {

struct ParseError : GraphError {
    size_t offset;
    ParseError(const std::string& what, size_t offset_)
        : GraphError(what + " (at byte " + std::to_string(offset_) + ")"), offset(offset_) {}
};

/// One graph6 line (without trailing newline). Strict: padding bits must be
/// zero so that emit(parse(x)) == x.
Graph parse_graph6(const std::string& line);
std::string emit_graph6(const Graph& g);

/// All graphs in a text stream, one graph6 value per line; the optional
/// >>graph6<< header is accepted.
std::vector<Graph> parse_graph6_stream(const std::string& bytes);

/// Binary planar code: per graph, vertex count then 1-based rotation lists,
/// each 0-terminated. The optional >>planar_code<< header is accepted.
/// Embeddings failing the Euler check are rejected as non-embeddings.
std::vector<PlaneGraph> parse_planar_code(const std::string& bytes);
std::string emit_planar_code(const std::vector<PlaneGraph>& graphs);

}  // namespace qf

#endif
