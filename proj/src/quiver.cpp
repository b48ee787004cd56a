#include "quiverfact/quiver.hpp"

#include <algorithm>
#include <queue>

#include "quiverfact/error.hpp"

namespace qf {

bool is_valid_vertex_name(std::string_view name) noexcept {
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

Quiver Quiver::build(std::vector<std::string> names, const std::vector<Edge>& edges,
                     const std::map<Edge, std::string>& labels) {
    auto table = std::make_shared<VertexTable>();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!is_valid_vertex_name(names[i]))
            throw Error(ErrorKind::InvalidArgument,
                        "invalid vertex name '" + names[i] + "' (use letters, digits, '_')");
        if (!table->index.emplace(names[i], static_cast<VertexId>(i)).second)
            throw Error(ErrorKind::InvalidArgument, "duplicate vertex name '" + names[i] + "'");
    }
    table->names = std::move(names);

    Quiver q;
    const std::size_t n = table->names.size();
    q.present_ = VertexSet(n);
    q.out_.assign(n, {});
    q.in_.assign(n, {});
    for (VertexId v = 0; v < n; ++v) {
        q.present_.insert(v);
        q.vertices_.push_back(v);
    }
    for (const auto& [t, h] : edges) {
        if (t >= n || h >= n)
            throw Error(ErrorKind::UnknownVertex, "edge endpoint out of range");
        q.out_[t].push_back(h);
        q.in_[h].push_back(t);
    }
    for (VertexId v = 0; v < n; ++v) {
        auto& out = q.out_[v];
        std::sort(out.begin(), out.end());
        if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
            const VertexId h = *std::adjacent_find(out.begin(), out.end());
            throw Error(ErrorKind::InvalidArgument, "duplicate edge (" + table->names[v] + "," +
                                                        table->names[h] + ")");
        }
        std::sort(q.in_[v].begin(), q.in_[v].end());
    }
    q.edge_count_ = edges.size();
    q.table_ = std::move(table);
    for (const auto& [e, text] : labels) {
        if (!q.has_edge(e.first, e.second))
            throw Error(ErrorKind::InvalidArgument, "label on missing edge (" + q.name(e.first) + "," +
                                                        q.name(e.second) + ")");
    }
    q.labels_ = labels;
    return q;
}

Quiver Quiver::from_names(std::vector<std::string> names,
                          const std::vector<std::pair<std::string, std::string>>& edges,
                          const std::map<std::pair<std::string, std::string>, std::string>& labels) {
    std::unordered_map<std::string, VertexId> index;
    for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], static_cast<VertexId>(i));
    auto lookup = [&](const std::string& name) {
        auto it = index.find(name);
        if (it == index.end()) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + name + "'");
        return it->second;
    };
    std::vector<Edge> ids;
    ids.reserve(edges.size());
    for (const auto& [t, h] : edges) ids.emplace_back(lookup(t), lookup(h));
    std::map<Edge, std::string> id_labels;
    for (const auto& [e, text] : labels) id_labels[{lookup(e.first), lookup(e.second)}] = text;
    return build(std::move(names), ids, id_labels);
}

bool Quiver::has_edge(VertexId tail, VertexId head) const noexcept {
    if (tail >= out_.size()) return false;
    const auto& out = out_[tail];
    return std::binary_search(out.begin(), out.end(), head);
}

std::span<const VertexId> Quiver::successors(VertexId v) const noexcept {
    if (v >= out_.size()) return {};
    return out_[v];
}

std::span<const VertexId> Quiver::predecessors(VertexId v) const noexcept {
    if (v >= in_.size()) return {};
    return in_[v];
}

std::vector<Quiver::Edge> Quiver::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId v : vertices_)
        for (VertexId h : out_[v]) out.emplace_back(v, h);
    return out;
}

std::optional<VertexId> Quiver::find(std::string_view name) const {
    if (!table_) return std::nullopt;
    auto it = table_->index.find(std::string(name));
    if (it == table_->index.end() || !contains(it->second)) return std::nullopt;
    return it->second;
}

VertexId Quiver::id(std::string_view name) const {
    auto v = find(name);
    if (!v) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
    return *v;
}

std::optional<std::string> Quiver::label(VertexId tail, VertexId head) const {
    auto it = labels_.find({tail, head});
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

bool Quiver::single_char_names() const noexcept {
    if (!table_) return true;
    return std::all_of(table_->names.begin(), table_->names.end(),
                       [](const std::string& s) { return s.size() == 1; });
}

Quiver Quiver::delete_vertices(std::span<const VertexId> removed) const {
    VertexSet set(universe_size());
    for (VertexId v : removed) {
        if (!contains(v))
            throw Error(ErrorKind::UnknownVertex,
                        "cannot delete vertex " +
                            (v < universe_size() ? "'" + name(v) + "'" : std::to_string(v)) +
                            ": not in quiver");
        set.insert(v);
    }
    return without(set);
}

Quiver Quiver::without(const VertexSet& removed) const {
    Quiver q;
    q.table_ = table_;
    q.present_ = VertexSet(universe_size());
    q.out_.assign(out_.size(), {});
    q.in_.assign(in_.size(), {});
    for (VertexId v : vertices_) {
        if (removed.contains(v)) continue;
        q.present_.insert(v);
        q.vertices_.push_back(v);
        for (VertexId h : out_[v]) {
            if (removed.contains(h)) continue;
            q.out_[v].push_back(h);
            q.in_[h].push_back(v);
            ++q.edge_count_;
        }
    }
    for (auto& in : q.in_) std::sort(in.begin(), in.end());
    for (const auto& [e, text] : labels_)
        if (q.has_edge(e.first, e.second)) q.labels_.emplace(e, text);
    return q;
}

bool Quiver::is_bidirectional() const {
    for (VertexId v : vertices_)
        for (VertexId h : out_[v])
            if (!has_edge(h, v)) return false;
    return true;
}

bool Quiver::is_connected() const {
    if (vertices_.empty()) return false;
    VertexSet seen(universe_size());
    std::queue<VertexId> todo;
    todo.push(vertices_.front());
    seen.insert(vertices_.front());
    std::size_t reached = 0;
    while (!todo.empty()) {
        const VertexId v = todo.front();
        todo.pop();
        ++reached;
        for (auto neighbours : {successors(v), predecessors(v)})
            for (VertexId u : neighbours)
                if (!seen.contains(u)) {
                    seen.insert(u);
                    todo.push(u);
                }
    }
    return reached == vertices_.size();
}

}  // namespace qf
