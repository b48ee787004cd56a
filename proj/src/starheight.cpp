#include "quiverfact/starheight.hpp"

#include <algorithm>
#include <unordered_map>

#include "quiverfact/enumeration.hpp"
#include "quiverfact/error.hpp"

namespace qf {
namespace {

void require_vertex(const Quiver& q, VertexId v) {
    if (!q.contains(v)) throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(v) + " is not in the graph");
}

class Heights {
public:
    explicit Heights(const Quiver& q) : q_(q) {}

    std::size_t cycles(VertexId mu, const VertexSet& deleted) {
        auto& slot = memo_[mu];
        if (auto it = slot.find(deleted); it != slot.end()) return it->second;
        std::size_t best = 0;
        for (const auto& c : simple_cycles_at(q_, mu, deleted)) {
            const auto seq = c.vertices();
            VertexSet ex = deleted.with(mu);
            std::size_t inner = 0;
            for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
                inner = std::max(inner, cycles(seq[i], ex));
                ex.insert(seq[i]);
            }
            best = std::max(best, 1 + inner);
        }
        memo_[mu].emplace(deleted, best);
        return best;
    }

    std::size_t open(VertexId from, VertexId to) {
        const VertexSet none(q_.universe_size());
        std::size_t best = 0;
        for (const auto& p : simple_paths(q_, from, to)) {
            VertexSet ex = none;
            for (VertexId v : p.vertices()) {
                best = std::max(best, cycles(v, ex));
                ex.insert(v);
            }
        }
        return best;
    }

private:
    const Quiver& q_;
    std::unordered_map<VertexId, std::unordered_map<VertexSet, std::size_t, VertexSetHash>> memo_;
};

}  // namespace

std::size_t star_height_cycles(const Quiver& q, VertexId mu) {
    require_vertex(q, mu);
    return Heights(q).cycles(mu, VertexSet(q.universe_size()));
}

std::size_t star_height_open(const Quiver& q, VertexId from, VertexId to) {
    require_vertex(q, from);
    require_vertex(q, to);
    if (from == to) throw Error(ErrorKind::InvalidArgument, "star_height_open needs distinct endpoints");
    return Heights(q).open(from, to);
}

LongestPaths longest_simple_paths_from(const Quiver& q, VertexId from, std::size_t max_vertices) {
    require_vertex(q, from);
    if (q.vertex_count() > max_vertices)
        throw Error(ErrorKind::BoundExceeded, "longest simple path search is limited to " +
                                                  std::to_string(max_vertices) + " vertices (graph has " +
                                                  std::to_string(q.vertex_count()) + ")");
    LongestPaths out;
    std::vector<std::vector<VertexId>> found;
    std::vector<VertexId> path{from};
    VertexSet on_path(q.universe_size());
    on_path.insert(from);

    auto dfs = [&](auto&& self) -> void {
        const std::size_t len = path.size() - 1;
        if (len > out.length) {
            out.length = len;
            found.clear();
        }
        if (len == out.length) found.push_back(path);
        for (VertexId n : q.successors(path.back())) {
            if (on_path.contains(n)) continue;
            on_path.insert(n);
            path.push_back(n);
            self(self);
            path.pop_back();
            on_path.erase(n);
        }
    };
    dfs(dfs);

    for (auto& seq : found) out.paths.push_back(Walk::unchecked(q.table(), std::move(seq)));
    std::sort(out.paths.begin(), out.paths.end());
    for (const auto& p : out.paths) out.ends_on_loop.push_back(q.has_loop(p.tail()));
    return out;
}

StarHeightReport star_height_graph(const Quiver& q, VertexId from, std::size_t max_vertices) {
    require_vertex(q, from);
    if (!q.is_bidirectional()) throw Error(ErrorKind::InvalidArgument, "star_height_graph needs an undirected graph");
    if (!q.is_connected()) throw Error(ErrorKind::InvalidArgument, "star_height_graph needs a connected graph");
    auto lp = longest_simple_paths_from(q, from, max_vertices);
    std::size_t pick = 0;
    for (std::size_t i = 0; i < lp.paths.size(); ++i)
        if (lp.ends_on_loop[i]) {
            pick = i;
            break;
        }
    const bool loop = lp.ends_on_loop[pick];
    return StarHeightReport{lp.length + (loop ? 1 : 0), lp.length, lp.paths[pick], loop};
}

}  // namespace qf
