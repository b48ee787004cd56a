#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quiverfact/vertex_set.hpp"

namespace qf {

/// Names of every vertex a quiver was built with. Shared by the quiver and
/// all of its vertex-deleted subgraphs, so ids stay stable under deletion.
struct VertexTable {
    std::vector<std::string> names;
    std::unordered_map<std::string, VertexId> index;
};

/// Finite directed graph with at most one edge per ordered pair; self-loops
/// allowed. Immutable once built.
class Quiver {
public:
    using Edge = std::pair<VertexId, VertexId>;

    Quiver() = default;

    /// Builds a quiver over `names` (ids are positions in `names`). Throws on
    /// duplicate names, malformed names, out-of-range endpoints, duplicate
    /// edges, or labels on missing edges.
    static Quiver build(std::vector<std::string> names, const std::vector<Edge>& edges,
                        const std::map<Edge, std::string>& labels = {});

    /// Same as `build`, with edges given by vertex name.
    static Quiver from_names(std::vector<std::string> names,
                             const std::vector<std::pair<std::string, std::string>>& edges,
                             const std::map<std::pair<std::string, std::string>, std::string>& labels = {});

    std::size_t universe_size() const noexcept { return table_ ? table_->names.size() : 0; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// Present vertices in ascending id order.
    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    const VertexSet& vertex_set() const noexcept { return present_; }
    bool contains(VertexId v) const noexcept { return present_.contains(v); }

    bool has_edge(VertexId tail, VertexId head) const noexcept;
    bool has_loop(VertexId v) const noexcept { return has_edge(v, v); }

    /// Heads of edges leaving `v`, ascending. Empty for absent vertices.
    std::span<const VertexId> successors(VertexId v) const noexcept;
    std::span<const VertexId> predecessors(VertexId v) const noexcept;

    /// All edges, sorted by (tail, head).
    std::vector<Edge> edges() const;

    const std::string& name(VertexId v) const { return table_->names.at(v); }
    /// Looks a vertex up by name among the present vertices.
    std::optional<VertexId> find(std::string_view name) const;
    /// Like `find` but throws an UnknownVertex error naming the vertex.
    VertexId id(std::string_view name) const;

    std::optional<std::string> label(VertexId tail, VertexId head) const;
    const std::map<Edge, std::string>& labels() const noexcept { return labels_; }

    /// True when every vertex name in the table is a single character, which
    /// enables the compact walk syntax `1331123`.
    bool single_char_names() const noexcept;

    /// Subgraph with the vertices of `removed` and their incident edges
    /// deleted. Throws if some vertex is not present.
    Quiver delete_vertices(std::span<const VertexId> removed) const;
    /// Unchecked variant used by the recursive algorithms; absent vertices in
    /// `removed` are ignored.
    Quiver without(const VertexSet& removed) const;

    /// Every edge has its reverse (self-loops count as their own reverse).
    bool is_bidirectional() const;
    /// Weakly connected and non-empty.
    bool is_connected() const;

    const std::shared_ptr<const VertexTable>& table() const noexcept { return table_; }
    bool same_universe(const Quiver& other) const noexcept { return table_ == other.table_; }

private:
    std::shared_ptr<const VertexTable> table_;
    VertexSet present_;
    std::vector<VertexId> vertices_;
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_;
    std::map<Edge, std::string> labels_;
    std::size_t edge_count_ = 0;
};

/// Vertex names may only use ASCII letters, digits and '_', so that the walk,
/// factorization and expression syntaxes stay unambiguous.
bool is_valid_vertex_name(std::string_view name) noexcept;

}  // namespace qf
