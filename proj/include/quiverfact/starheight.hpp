#pragma once

#include <cstddef>
#include <vector>

#include "quiverfact/quiver.hpp"
#include "quiverfact/walk.hpp"

namespace qf {

/// Star height of the factorized ensemble of cycles off μ: 0 without
/// non-trivial simple cycles, else 1 + the largest height met at an internal
/// vertex of some simple cycle (a loop contributes just the 1).
std::size_t star_height_cycles(const Quiver& q, VertexId mu);

/// Star height of the factorized ensemble of walks from α to ω (α ≠ ω):
/// the largest cycle height met along a simple path, each vertex taken on
/// the subgraph without the earlier path vertices. 0 with no paths.
std::size_t star_height_open(const Quiver& q, VertexId from, VertexId to);

inline constexpr std::size_t kDefaultLongestPathBound = 12;

struct LongestPaths {
    std::size_t length = 0;
    std::vector<Walk> paths;        // every longest simple path from the start, shortlex
    std::vector<bool> ends_on_loop; // per path: its last vertex has a self-loop
};

/// Exhaustive DFS, exponential in the vertex count; graphs with more than
/// `max_vertices` vertices throw BoundExceeded.
LongestPaths longest_simple_paths_from(const Quiver& q, VertexId from,
                                       std::size_t max_vertices = kDefaultLongestPathBound);

struct StarHeightReport {
    std::size_t height = 0;
    std::size_t longest = 0;     // ℓ_α
    Walk witness;                // a longest simple path from α
    bool witness_loop = false;   // whether it ends on a self-loop
};

/// Closed form for connected undirected (bidirectional) graphs: ℓ_α, plus
/// one when some longest simple path from α ends on a looped vertex.
/// Other inputs throw InvalidArgument.
StarHeightReport star_height_graph(const Quiver& q, VertexId from,
                                   std::size_t max_vertices = kDefaultLongestPathBound);

}  // namespace qf
