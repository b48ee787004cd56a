#include "quiverfact/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "quiverfact/error.hpp"

namespace qf {

namespace {

void require_vertex(const Quiver& q, VertexId v, const VertexSet& excluded) {
    if (!q.contains(v) || excluded.contains(v))
        throw Error(ErrorKind::UnknownVertex,
                    "vertex " + (v < q.universe_size() ? "'" + q.name(v) + "'" : std::to_string(v)) +
                        " is not in the quiver");
}

void sort_shortlex(std::vector<Walk>& walks) { std::stable_sort(walks.begin(), walks.end()); }

}  // namespace

std::vector<Walk> simple_paths(const Quiver& q, VertexId from, VertexId to) {
    return simple_paths(q, from, to, VertexSet(q.universe_size()));
}

std::vector<Walk> simple_paths(const Quiver& q, VertexId from, VertexId to, const VertexSet& excluded) {
    require_vertex(q, from, excluded);
    require_vertex(q, to, excluded);
    if (from == to)
        throw Error(ErrorKind::InvalidArgument,
                    "simple paths need distinct endpoints; the only path from a vertex to itself is the "
                    "trivial walk (" + q.name(from) + ")");

    std::vector<Walk> out;
    std::vector<VertexId> path{from};
    VertexSet on_path = excluded;
    on_path.insert(from);

    auto dfs = [&](auto&& self, VertexId v) -> void {
        for (VertexId u : q.successors(v)) {
            if (on_path.contains(u)) continue;
            path.push_back(u);
            if (u == to) {
                out.push_back(Walk::unchecked(q.table(), path));
            } else {
                on_path.insert(u);
                self(self, u);
                on_path.erase(u);
            }
            path.pop_back();
        }
    };
    dfs(dfs, from);
    sort_shortlex(out);
    return out;
}

std::vector<Walk> simple_cycles_at(const Quiver& q, VertexId base) {
    return simple_cycles_at(q, base, VertexSet(q.universe_size()));
}

std::vector<Walk> simple_cycles_at(const Quiver& q, VertexId base, const VertexSet& excluded) {
    require_vertex(q, base, excluded);
    std::vector<Walk> out;
    std::vector<VertexId> path{base};
    VertexSet on_path = excluded;
    on_path.insert(base);

    auto dfs = [&](auto&& self, VertexId v) -> void {
        for (VertexId u : q.successors(v)) {
            if (u == base) {
                path.push_back(base);
                out.push_back(Walk::unchecked(q.table(), path));
                path.pop_back();
                continue;
            }
            if (on_path.contains(u)) continue;
            path.push_back(u);
            on_path.insert(u);
            self(self, u);
            on_path.erase(u);
            path.pop_back();
        }
    };
    dfs(dfs, base);
    sort_shortlex(out);
    return out;
}

std::vector<mpz_class> count_walks(const Quiver& q, VertexId from, VertexId to, std::size_t max_length) {
    const VertexSet none(q.universe_size());
    require_vertex(q, from, none);
    require_vertex(q, to, none);
    std::vector<mpz_class> current(q.universe_size(), 0), next(q.universe_size(), 0);
    current[from] = 1;
    std::vector<mpz_class> counts;
    counts.reserve(max_length + 1);
    for (std::size_t n = 0; n <= max_length; ++n) {
        counts.push_back(current[to]);
        if (n == max_length) break;
        for (auto& x : next) x = 0;
        for (VertexId t : q.vertices())
            if (current[t] != 0)
                for (VertexId h : q.successors(t)) next[h] += current[t];
        std::swap(current, next);
    }
    return counts;
}

std::vector<Walk> enumerate_walks(const Quiver& q, VertexId from, VertexId to, std::size_t max_length,
                                  std::size_t cap) {
    const VertexSet none(q.universe_size());
    require_vertex(q, from, none);
    require_vertex(q, to, none);

    // Distance to `to`, used to prune prefixes that cannot finish in time.
    constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(q.universe_size(), kFar);
    std::queue<VertexId> todo;
    dist[to] = 0;
    todo.push(to);
    while (!todo.empty()) {
        const VertexId v = todo.front();
        todo.pop();
        for (VertexId p : q.predecessors(v))
            if (dist[p] == kFar) {
                dist[p] = dist[v] + 1;
                todo.push(p);
            }
    }

    std::vector<Walk> out;
    std::vector<VertexId> path{from};
    auto dfs = [&](auto&& self, VertexId v) -> void {
        if (v == to) {
            if (out.size() >= cap)
                throw Error(ErrorKind::CapExceeded,
                            "walk enumeration exceeded the cap of " + std::to_string(cap) + " walks");
            out.push_back(Walk::unchecked(q.table(), path));
        }
        const std::size_t used = path.size() - 1;
        if (used == max_length) return;
        for (VertexId u : q.successors(v)) {
            if (dist[u] == kFar || used + 1 + dist[u] > max_length) continue;
            path.push_back(u);
            self(self, u);
            path.pop_back();
        }
    };
    if (dist[from] != kFar && dist[from] <= max_length) dfs(dfs, from);
    sort_shortlex(out);
    return out;
}

}  // namespace qf
