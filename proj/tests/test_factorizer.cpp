#include "doctest.h"

#include "fixtures.hpp"
#include "quiverfact/enumeration.hpp"
#include "quiverfact/error.hpp"
#include "quiverfact/factorizer.hpp"

using namespace qf;
using fx::walk;

namespace {

FactorTree L(const Quiver& q, const char* w) { return FactorTree::leaf(walk(q, w)); }
FactorTree N(FactorTree a, FactorTree b) { return FactorTree::nest(std::move(a), std::move(b)); }

std::size_t leaf_length(const FactorTree& t) {
    std::size_t n = 0;
    for (const auto& w : t.leaves()) n += w.length();
    return n;
}

std::vector<Walk> all_walks(const Quiver& q, std::size_t max_length) {
    std::vector<Walk> out;
    for (VertexId a : q.vertices())
        for (VertexId b : q.vertices())
            for (auto& w : enumerate_walks(q, a, b, max_length)) out.push_back(w);
    return out;
}

}  // namespace

TEST_CASE("K4 walk factorization") {
    auto k4 = fx::looped(4);
    auto w = walk(k4, "(1 3 3 1 1 2 3 4 3 4 4 2 3 3 3)");
    auto paper = parse_factor_tree(k4, "((123 . 33^2) . ((2342 . 44) . 343)) . ((131 . 33) . 11)");
    FactorizeStats stats;
    auto t = factorize(w, &stats);
    CHECK(recompose(t) == NestResult(w));
    CHECK(trees_equivalent(t, paper));
    CHECK(normalize_tree(t) == normalize_tree(paper));
    CHECK(to_string(normalize_tree(t)) == "((123 . 33^2) . ((2342 . 44) . 343)) . ((131 . 33) . 11)");
    CHECK(to_string(t) == "((123 . 33^2) . ((2342 . 44) . 343)) . ((131 . 33) . 11)");
    CHECK(stats.rounds == 5);
    CHECK(to_string(t, Charset::Unicode) ==
          "((123 \xE2\x8A\x99 33\xC2\xB2) \xE2\x8A\x99 ((2342 \xE2\x8A\x99 44) \xE2\x8A\x99 343)) \xE2\x8A\x99 "
          "((131 \xE2\x8A\x99 33) \xE2\x8A\x99 11)");
}

TEST_CASE("factorize small cases") {
    auto k3 = fx::complete(3);
    CHECK(factorize(walk(k3, "1231")) == L(k3, "1231"));
    CHECK(factorize(walk(k3, "12")) == L(k3, "12"));
    CHECK(factorize(walk(k3, "(1)")) == L(k3, "(1)"));
    auto t = factorize(walk(k3, "1231231"));
    CHECK(t == N(L(k3, "1231"), L(k3, "1231")));
    CHECK(to_string(t) == "1231^2");
}

TEST_CASE("recompose applies the nesting product exactly") {
    auto lk3 = fx::looped(3);
    CHECK(recompose(L(lk3, "123")) == NestResult(walk(lk3, "123")));
    CHECK(recompose(N(L(lk3, "12"), L(lk3, "11"))) == NestResult(walk(lk3, "112")));
    CHECK(recompose(N(L(lk3, "12"), N(L(lk3, "22"), L(lk3, "11")))).is_zero());
}

TEST_CASE("normal form") {
    auto lk3 = fx::looped(3);
    auto k3 = fx::complete(3);

    auto k4 = fx::complete(4);
    auto already = N(N(L(k4, "1234"), L(k4, "343")), L(k4, "242"));
    CHECK(normalize_tree(already) == already);

    auto with_identity = N(L(k3, "(1)"), L(k3, "1231"));
    CHECK(normalize_tree(with_identity) == L(k3, "1231"));
    CHECK(normalize_tree(N(L(k3, "1231"), L(k3, "(2)"))) == L(k3, "1231"));

    auto c1 = L(lk3, "11"), c2 = L(lk3, "121"), c3 = L(lk3, "131");
    CHECK(normalize_tree(N(c1, N(c2, c3))) == N(N(c1, c2), c3));
    CHECK(trees_equivalent(N(c1, N(c2, c3)), N(N(c1, c2), c3)));

    // distinct vertices of one base, given in the wrong order
    auto swapped = N(N(L(lk3, "123"), L(lk3, "11")), L(lk3, "33"));
    CHECK(recompose(swapped) == NestResult(walk(lk3, "11233")));
    CHECK(normalize_tree(swapped) == N(N(L(lk3, "123"), L(lk3, "33")), L(lk3, "11")));

    CHECK_FALSE(trees_equivalent(L(k3, "121"), L(k3, "131")));
    CHECK_THROWS_AS(normalize_tree(N(L(lk3, "12"), N(L(lk3, "22"), L(lk3, "11")))), Error);

    auto t = factorize(walk(lk3, "1122331"));
    CHECK(trees_equivalent(t, normalize_tree(t)));
}

TEST_CASE("soundness, primality, length and termination") {
    for (const auto& q : {fx::complete(3), fx::looped(3), fx::cycle(5), fx::six_vertex()}) {
        const std::size_t bound = q.vertex_count() == 3 ? 8 : 10;
        for (const auto& w : all_walks(q, bound)) {
            FactorizeStats stats;
            auto t = factorize(w, &stats);
            CHECK(recompose(t) == NestResult(w));
            for (const auto& leaf : t.leaves()) CHECK(is_irreducible(leaf));
            CHECK(leaf_length(t) == w.length());
            CHECK(stats.rounds <= (w.length() > 0 ? w.length() - 1 : 0));
            CHECK(normalize_tree(t) == t);
        }
    }
}

TEST_CASE("exhaustive factorizations agree") {
    auto k3 = fx::complete(3);
    for (const char* text : {"12121", "1212121"}) {
        auto all = all_canonical_factorizations(walk(k3, text));
        for (const auto& t : all) CHECK(trees_equivalent(t, all.front()));
    }
    CHECK(all_canonical_factorizations(walk(k3, "1212121")).size() > 1);
    CHECK(all_canonical_factorizations(walk(k3, "1231")).size() == 1);
    CHECK_THROWS_AS(all_canonical_factorizations(nest_power(walk(k3, "121"), 5)), Error);

    for (const auto& w : all_walks(k3, 6)) {
        auto canon = normalize_tree(factorize(w));
        for (const auto& t : all_canonical_factorizations(w)) {
            CHECK(recompose(t) == NestResult(w));
            CHECK(normalize_tree(t) == canon);
        }
    }
}

TEST_CASE("text round trip") {
    auto k4 = fx::complete(4);
    auto lk3 = fx::looped(3);
    for (const auto& q : {k4, lk3})
        for (const auto& w : all_walks(q, 6)) {
            auto t = factorize(w);
            CHECK(parse_factor_tree(q, to_string(t)) == t);
            CHECK(parse_factor_tree(q, to_string(t, Charset::Unicode)) == t);
        }
    CHECK(parse_factor_tree(k4, "(1 2 3) . (3 2 3)") == N(L(k4, "123"), L(k4, "323")));
    CHECK(parse_factor_tree(k4, "121 . 121 . 121") == parse_factor_tree(k4, "121^3"));

    try {
        (void)parse_factor_tree(k4, "123 . (3 5 3)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 9);
    }
    CHECK_THROWS_AS(parse_factor_tree(k4, "12^2"), ParseError);
    CHECK_THROWS_AS(parse_factor_tree(k4, "(123 . 323"), ParseError);
    CHECK_THROWS_AS(parse_factor_tree(k4, "11"), ParseError);

    auto named = Quiver::from_names({"a", "bb"}, {{"a", "bb"}, {"bb", "a"}});
    auto t = N(FactorTree::leaf(walk(named, "(a bb)")), FactorTree::leaf(walk(named, "(bb a bb)")));
    CHECK(to_string(t) == "(a bb) . (bb a bb)");
    CHECK(parse_factor_tree(named, to_string(t)) == t);
}
