#include "doctest.h"

#include <map>
#include <random>

#include "fixtures.hpp"
#include "quiverfact/ensembles.hpp"
#include "quiverfact/error.hpp"
#include "quiverfact/starheight.hpp"

using namespace qf;

namespace {

// Eggan cycle rank by exhaustive vertex removal over subsets of at most 16 vertices.
class CycleRank {
public:
    explicit CycleRank(const Quiver& q) : q_(q), n_(q.universe_size()) {}

    std::size_t of(unsigned mask) {
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
        std::size_t r = 0;
        auto comps = sccs(mask);
        if (comps.size() == 1 && comps[0] == mask) {
            if (cyclic(mask)) {
                std::size_t best = SIZE_MAX;
                for (unsigned v = 0; v < n_; ++v)
                    if (mask >> v & 1u) best = std::min(best, of(mask & ~(1u << v)));
                r = 1 + best;
            }
        } else {
            for (unsigned c : comps) r = std::max(r, of(c));
        }
        memo_[mask] = r;
        return r;
    }

private:
    bool reach(unsigned mask, unsigned a, unsigned b) const {
        unsigned seen = 1u << a, frontier = seen;
        while (frontier) {
            unsigned next = 0;
            for (unsigned v = 0; v < n_; ++v)
                if (frontier >> v & 1u)
                    for (VertexId s : q_.successors(v))
                        if ((mask >> s & 1u) && !(seen >> s & 1u)) next |= 1u << s;
            seen |= next;
            frontier = next;
        }
        return seen >> b & 1u;
    }

    std::vector<unsigned> sccs(unsigned mask) const {
        std::vector<unsigned> out;
        unsigned left = mask;
        for (unsigned v = 0; v < n_; ++v) {
            if (!(left >> v & 1u)) continue;
            unsigned comp = 0;
            for (unsigned u = 0; u < n_; ++u)
                if ((left >> u & 1u) && reach(mask, v, u) && reach(mask, u, v)) comp |= 1u << u;
            out.push_back(comp);
            left &= ~comp;
        }
        return out;
    }

    bool cyclic(unsigned comp) const {
        if (__builtin_popcount(comp) > 1) return true;
        const unsigned v = static_cast<unsigned>(__builtin_ctz(comp));
        return q_.has_loop(v);
    }

    const Quiver& q_;
    unsigned n_;
    std::map<unsigned, std::size_t> memo_;
};

std::size_t cycle_rank(const Quiver& q) {
    unsigned mask = 0;
    for (VertexId v : q.vertices()) mask |= 1u << v;
    return CycleRank(q).of(mask);
}

}  // namespace

TEST_CASE("cycle heights") {
    CHECK(star_height_cycles(Quiver::from_names({"1"}, {}), 0) == 0);
    CHECK(star_height_cycles(Quiver::from_names({"1"}, {{"1", "1"}}), 0) == 1);
    CHECK(star_height_cycles(fx::looped(3), 0) == 3);
    CHECK(star_height_cycles(fx::complete(3), 0) == 2);
    CHECK(star_height_cycles(fx::cycle(5), 0) == 4);
    CHECK_THROWS_AS(star_height_cycles(fx::complete(3), 7), Error);
}

TEST_CASE("open heights") {
    CHECK(star_height_open(Quiver::from_names({"1", "2"}, {{"1", "2"}}), 0, 1) == 0);
    CHECK(star_height_open(Quiver::from_names({"1", "2"}, {}), 0, 1) == 0);
    CHECK(star_height_open(fx::complete(3), 0, 1) == 2);
    // the automaton nests three stars: 1231, then 232 off 2, then the loop at 3
    CHECK(star_height_open(fx::automaton(), 0, 3) == 3);
    CHECK_THROWS_AS(star_height_open(fx::complete(3), 1, 1), Error);
}

TEST_CASE("recursion matches the ensemble expressions") {
    for (const auto& q : {fx::complete(3), fx::looped(3), fx::cycle(5), fx::path(4), fx::automaton(), fx::six_vertex()})
        for (VertexId a : q.vertices())
            for (VertexId b : q.vertices()) {
                const auto h = star_height_of_expr(factorize_ensemble(q, a, b));
                CHECK(h == (a == b ? star_height_cycles(q, a) : star_height_open(q, a, b)));
            }
}

TEST_CASE("longest simple paths") {
    auto one = longest_simple_paths_from(Quiver::from_names({"1"}, {}), 0);
    CHECK(one.length == 0);
    CHECK(fx::strings(one.paths) == std::vector<std::string>{"1"});

    auto k3 = longest_simple_paths_from(fx::complete(3), 0);
    CHECK(k3.length == 2);
    CHECK(fx::strings(k3.paths) == std::vector<std::string>{"123", "132"});
    CHECK(k3.ends_on_loop == std::vector<bool>{false, false});

    CHECK(longest_simple_paths_from(fx::path(4), 0).length == 3);
    CHECK(longest_simple_paths_from(fx::path(4), 1).length == 2);
    CHECK_THROWS_AS(longest_simple_paths_from(fx::cycle(13), 0), Error);
    CHECK(longest_simple_paths_from(fx::cycle(13), 0, 13).length == 12);
}

TEST_CASE("closed form") {
    auto r = star_height_graph(Quiver::from_names({"1"}, {{"1", "1"}}), 0);
    CHECK(r.height == 1);
    CHECK(r.witness_loop);
    CHECK(star_height_graph(fx::complete(3), 0).height == 2);
    auto lk3 = star_height_graph(fx::looped(3), 0);
    CHECK(lk3.height == 3);
    CHECK(lk3.longest == 2);
    CHECK(lk3.witness.to_string() == "123");
    CHECK(star_height_graph(fx::cycle(5), 2).height == 4);

    CHECK_THROWS_AS(star_height_graph(fx::automaton(), 0), Error);
    CHECK_THROWS_AS(star_height_graph(Quiver::from_names({"1", "2"}, {}), 0), Error);
}

TEST_CASE("closed form agrees with the recursion on random undirected graphs") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<unsigned> size(1, 7);
    std::uniform_real_distribution<double> density(0.2, 0.7);
    int with_loops = 0;
    for (int i = 0; i < 40; ++i) {
        auto q = fx::random_connected(rng, size(rng), density(rng), true);
        bool loops = false;
        for (VertexId v : q.vertices()) loops |= q.has_loop(v);
        with_loops += loops;
        const auto rank = cycle_rank(q);
        for (VertexId a : q.vertices()) {
            const auto h = star_height_graph(q, a).height;
            CHECK(h == star_height_cycles(q, a));
            for (VertexId b : q.vertices())
                if (b != a) CHECK(h == star_height_open(q, a, b));
            CHECK(h >= rank);
        }
    }
    CHECK(with_loops >= 5);
    CHECK(with_loops <= 35);
}

TEST_CASE("cycle rank oracle") {
    CHECK(cycle_rank(fx::path(3)) == 1);
    CHECK(cycle_rank(fx::complete(3)) == 2);
    CHECK(cycle_rank(fx::looped(3)) == 3);
    CHECK(cycle_rank(Quiver::from_names({"1", "2"}, {{"1", "2"}})) == 0);
}
