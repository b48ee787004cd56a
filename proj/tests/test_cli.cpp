#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "quiverfact/ensembles.hpp"
#include "quiverfact/factorizer.hpp"
#include "quiverfact/graph_io.hpp"

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& cmd, int* status) {
    std::string text;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) text.append(buf.data(), n);
    const int raw = pclose(p);
    if (status) *status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return text;
}

Run qfact(const std::string& args) {
    const std::string base = std::string("cd '") + QF_DATA_DIR + "' && '" + QFACT_PATH + "' " + args;
    Run r{};
    r.out = slurp(base + " 2>/dev/null", &r.status);
    r.err = slurp(base + " 2>&1 >/dev/null", nullptr);
    return r;
}

std::string data(const char* name) { return std::string(QF_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("reference outputs through the command line") {
    auto r = qfact("genfunc -g six_vertex.json -s 1 -t 1");
    CHECK(r.status == 0);
    CHECK(r.out == "(1-z-z^2-z^3) / (1-2z-z^3+2z^4+z^6)\n");
    CHECK(r.err.empty());

    r = qfact("language -g automaton.json -s 1 -t 4");
    CHECK(r.out == "(a(cc*b)*cc*a)*a(cc*b)*cc*d\n");

    r = qfact("factor -g k4.json -w 133112343442333");
    CHECK(r.out == "((123 . 33^2) . ((2342 . 44) . 343)) . ((131 . 33) . 11)\n");

    r = qfact("factor -g k4.json -w '(1 3 3 1 1 2 3 4 3 4 4 2 3 3 3)' --unicode");
    CHECK(r.out ==
          "((123 \xE2\x8A\x99 33\xC2\xB2) \xE2\x8A\x99 ((2342 \xE2\x8A\x99 44) \xE2\x8A\x99 343)) \xE2\x8A\x99 "
          "((131 \xE2\x8A\x99 33) \xE2\x8A\x99 11)\n");

    r = qfact("genfunc --family cycle:5 -s 1 -t 1");
    CHECK(r.out == "(1-z-z^2) / (1-z-3z^2+2z^3)\n");
}

TEST_CASE("subcommands") {
    CHECK(qfact("series -g six_vertex.json -s 1 -t 1 -N 12").out == "1 1 1 2 3 5 9 16 30 57 109 211 410\n");
    CHECK(qfact("ensemble -g automaton.json -s 1 -t 4 --mode edge").out ==
          "((12)((23)(33)*(32))*(23)(33)*(31))*(12)((23)(33)*(32))*(23)(33)*(34)\n");
    CHECK(qfact("ensemble -g six_vertex.json -s 1 -t 1").out == "{11, 1231 . {242 . {44, 4564}*}*}*\n");
    CHECK(qfact("expand --family complete:3 -s 1 -t 1 -L 3").out == "1\n121\n131\n1231\n1321\n");
    CHECK(qfact("enumerate --family complete:3 -s 1 -t 1 -L 3").out == "1\n121\n131\n1231\n1321\n");
    CHECK(qfact("genfunc -g six_vertex.json -s 1 -t 4 --resolvent").out == qfact("genfunc -g six_vertex.json -s 1 -t 4").out);
    CHECK(qfact("genfunc -g weighted.json -s a -t b").out == "(2z) / (1-2z-z^2+z^3)\n");

    auto r = qfact("starheight --family loops:3 -s 1");
    CHECK(r.out == "recursion 1 -> 1: 3\nexpression 1 -> 1: 3\n"
                   "closed form: 3 (longest simple path 123 of length 2, ends on a loop)\n");
    r = qfact("starheight --family cycle:5 -s 1 -t 3");
    CHECK(r.out.find("recursion 1 -> 3: 4\n") == 0);

    r = qfact("weighted-sum -g weighted.json -s a -t a");
    CHECK(r.status == 0);
    CHECK(r.out.find('\n') < r.out.size() - 1);  // two rows

    r = qfact("family bethe:2:1");
    CHECK(r.out == "{\n  \"vertices\": [\"0\", \"1\", \"2\"],\n  \"edges\": [\n    [\"0\", \"1\"],\n    [\"0\", \"2\"],\n"
                   "    [\"1\", \"0\"],\n    [\"2\", \"0\"]\n  ]\n}\n");
}

TEST_CASE("printed values parse back") {
    const auto k4 = qf::load_graph_file(data("k4.json")).quiver;
    const auto t = qfact("factor -g k4.json -w 133112343442333 --unicode").out;
    REQUIRE(!t.empty());
    const auto tree = qf::parse_factor_tree(k4, t.substr(0, t.size() - 1));
    CHECK(qf::recompose(tree) == qf::NestResult(qf::Walk::parse(k4, "133112343442333")));

    const auto six = qf::load_graph_file(data("six_vertex.json")).quiver;
    for (const char* cs : {"--ascii", "--unicode"}) {
        const auto e = qfact(std::string("ensemble -g six_vertex.json -s 1 -t 4 ") + cs).out;
        REQUIRE(!e.empty());
        CHECK(qf::parse_walk_expr(six, e.substr(0, e.size() - 1)) == qf::factorize_ensemble(six, 0, 3));
    }
}

TEST_CASE("diagnostics") {
    auto r = qfact("factor -g k4.json -w 1251");
    CHECK(r.status == 1);
    CHECK(r.out.empty());
    CHECK(r.err == "qfact: parse error: parse error at byte 2: unknown vertex '5'\n");

    r = qfact("ensemble -g six_vertex.json -s 1 -t 9");
    CHECK(r.status == 1);
    CHECK(r.err.find("'9'") != std::string::npos);

    r = qfact("language --family complete:3 -s 1 -t 2");
    CHECK(r.status == 1);
    CHECK(r.err.find("(1,2)") != std::string::npos);

    r = qfact("enumerate --family loops:4 -s 1 -t 1 -L 20 --cap 1000");
    CHECK(r.status == 1);
    CHECK(r.err.find("cap of 1000") != std::string::npos);

    r = qfact("genfunc -g missing.json -s 1 -t 1");
    CHECK(r.status == 1);
    CHECK(r.err.find("missing.json") != std::string::npos);

    r = qfact("weighted-sum -g six_vertex.json -s 1 -t 1");
    CHECK(r.status == 1);

    r = qfact("genfunc -s 1 -t 1");
    CHECK(r.status == 1);

    r = qfact("frobnicate");
    CHECK(r.status == 2);
    r = qfact("ensemble -g six_vertex.json -s 1 -t 1 --mode sideways");
    CHECK(r.status == 2);

    for (const char* args : {"factor -g k4.json -w 1251", "frobnicate", "genfunc -s 1 -t 1"}) {
        r = qfact(args);
        CHECK(r.err.find('\n') == r.err.size() - 1);  // a single line
    }
}

TEST_CASE("exit status and determinism") {
    for (const char* args : {"genfunc -g six_vertex.json -s 2 -t 5", "ensemble --family loops:3 -s 1 -t 2 --unicode",
                             "expand -g automaton.json -s 1 -t 4 -L 8", "starheight --family complete:4 -s 2",
                             "weighted-sum -g weighted.json -s b -t a", "family cycle:4"}) {
        CAPTURE(args);
        const auto a = qfact(args), b = qfact(args);
        CHECK(a.status == 0);
        CHECK(a.err.empty());
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}
