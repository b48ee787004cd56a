#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "quiverfact/quiver.hpp"
#include "quiverfact/vertex_set.hpp"
#include "quiverfact/walk.hpp"

namespace qf {

/// Default cardinality cap for exhaustive walk enumeration.
inline constexpr std::size_t kDefaultWalkCap = 1'000'000;

/// All simple paths from `from` to `to` (from ≠ to), shortlex order.
/// Backtracking DFS with an on-path visited set.
std::vector<Walk> simple_paths(const Quiver& q, VertexId from, VertexId to);
/// Same, on q with the vertices of `excluded` deleted.
std::vector<Walk> simple_paths(const Quiver& q, VertexId from, VertexId to, const VertexSet& excluded);

/// Non-trivial simple cycles off `base` (self-loop included), shortlex
/// order. Both directions of an undirected cycle are listed.
std::vector<Walk> simple_cycles_at(const Quiver& q, VertexId base);
std::vector<Walk> simple_cycles_at(const Quiver& q, VertexId base, const VertexSet& excluded);

/// counts[n] = number of walks of length n from `from` to `to`, n = 0..max_length.
std::vector<mpz_class> count_walks(const Quiver& q, VertexId from, VertexId to, std::size_t max_length);

/// Every walk of length ≤ max_length from `from` to `to`, shortlex order.
/// The result grows exponentially with max_length; exceeding `cap` walks
/// throws a CapExceeded error.
std::vector<Walk> enumerate_walks(const Quiver& q, VertexId from, VertexId to, std::size_t max_length,
                                  std::size_t cap = kDefaultWalkCap);

}  // namespace qf
