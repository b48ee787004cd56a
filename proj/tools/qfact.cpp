// qfact: command-line front end over the quiverfact C API.

#include <cstdio>
#include <functional>
#include <string>

#include "CLI11.hpp"
#include "quiverfact.h"

namespace {

struct Options {
    std::string graph;
    std::string family;
    std::string source;
    std::string target;
    std::string walk;
    std::size_t max_length = 8;
    std::size_t terms = 12;
    std::string mode = "vertex";
    bool unicode = false;
    bool resolvent = false;
    std::size_t cap = 1'000'000;
    double rcond = 1e-12;
};

struct Failure {
    qf_status status;
    std::string message;
};

void check(qf_status s) {
    if (s != QF_OK) throw Failure{s, qf_last_error()};
}

// Owns a graph handle for the duration of a command.
class Graph {
public:
    explicit Graph(const Options& o) {
        if (!o.graph.empty() && !o.family.empty()) throw Failure{QF_ERR_INVALID_ARGUMENT, "give either --graph or --family"};
        if (!o.graph.empty()) check(qf_graph_load_file(o.graph.c_str(), &g_));
        else if (!o.family.empty()) check(qf_graph_from_family(o.family.c_str(), &g_));
        else throw Failure{QF_ERR_INVALID_ARGUMENT, "no graph given (use --graph FILE or --family SPEC)"};
    }
    ~Graph() { qf_graph_free(g_); }
    Graph(const Graph&) = delete;
    Graph& operator=(const Graph&) = delete;
    const qf_graph* get() const { return g_; }

private:
    qf_graph* g_ = nullptr;
};

void emit(qf_status s, char*& out) {
    check(s);
    std::fputs(out, stdout);
    qf_string_free(out);
}

void add_graph(CLI::App* sub, Options& o) {
    sub->add_option("-g,--graph", o.graph, "graph file (JSON)");
    sub->add_option("--family", o.family, "built-in family, e.g. complete:4, loops:3, cycle:5, path:4, bethe:3:2");
}

void add_endpoints(CLI::App* sub, Options& o, bool target_required = true) {
    sub->add_option("-s,--source", o.source, "start vertex")->required();
    auto* t = sub->add_option("-t,--target", o.target, "end vertex");
    if (target_required) t->required();
}

void add_charset(CLI::App* sub, Options& o) {
    auto* a = sub->add_flag("--ascii", "ASCII output (default)");
    auto* u = sub->add_flag("--unicode", o.unicode, "unicode output");
    a->excludes(u);
}

qf_render_mode render_mode(const std::string& m) {
    if (m == "edge") return QF_MODE_EDGE;
    if (m == "language") return QF_MODE_LANGUAGE;
    return QF_MODE_VERTEX;
}

qf_charset cs(const Options& o) { return o.unicode ? QF_UNICODE : QF_ASCII; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Walk factorization, walk ensembles and path-sums on quivers"};
    app.set_version_flag("--version", std::string(qf_version()));
    app.require_subcommand(1);
    Options o;
    std::function<void()> run;

    auto* factor = app.add_subcommand("factor", "factorize a walk into prime walks");
    add_graph(factor, o);
    factor->add_option("-w,--walk", o.walk, "walk, e.g. 133112343442333 or \"(1 3 3 1)\"")->required();
    add_charset(factor, o);
    factor->callback([&] {
        run = [&] {
            Graph g(o);
            char* out = nullptr;
            emit(qf_factor(g.get(), o.walk.c_str(), cs(o), &out), out);
        };
    });

    auto* ensemble = app.add_subcommand("ensemble", "factorized expression for all walks source -> target");
    add_graph(ensemble, o);
    add_endpoints(ensemble, o);
    ensemble->add_option("--mode", o.mode, "vertex, edge or language")
        ->check(CLI::IsMember({"vertex", "edge", "language"}));
    add_charset(ensemble, o);
    ensemble->callback([&] {
        run = [&] {
            Graph g(o);
            char* out = nullptr;
            emit(qf_ensemble(g.get(), o.source.c_str(), o.target.c_str(), render_mode(o.mode), cs(o), &out), out);
        };
    });

    auto* language = app.add_subcommand("language", "regular expression over edge labels");
    add_graph(language, o);
    add_endpoints(language, o);
    add_charset(language, o);
    language->callback([&] {
        run = [&] {
            Graph g(o);
            char* out = nullptr;
            emit(qf_ensemble(g.get(), o.source.c_str(), o.target.c_str(), QF_MODE_LANGUAGE, cs(o), &out), out);
        };
    });

    auto* expand = app.add_subcommand("expand", "walks of bounded length generated by the ensemble expression");
    add_graph(expand, o);
    add_endpoints(expand, o);
    expand->add_option("-L,--max-length", o.max_length, "length bound")->capture_default_str();
    expand->add_option("--cap", o.cap, "cardinality cap")->capture_default_str();
    expand->callback([&] {
        run = [&] {
            Graph g(o);
            char* out = nullptr;
            emit(qf_expand(g.get(), o.source.c_str(), o.target.c_str(), o.max_length, o.cap, &out), out);
        };
    });

    auto* enumerate = app.add_subcommand("enumerate", "walks of bounded length by brute force");
    add_graph(enumerate, o);
    add_endpoints(enumerate, o);
    enumerate->add_option("-L,--max-length", o.max_length, "length bound")->capture_default_str();
    enumerate->add_option("--cap", o.cap, "cardinality cap")->capture_default_str();
    enumerate->callback([&] {
        run = [&] {
            Graph g(o);
            char* out = nullptr;
            emit(qf_enumerate(g.get(), o.source.c_str(), o.target.c_str(), o.max_length, o.cap, &out), out);
        };
    });

    auto* genfunc = app.add_subcommand("genfunc", "walk generating function as a rational function of z");
    add_graph(genfunc, o);
    add_endpoints(genfunc, o);
    genfunc->add_flag("--resolvent", o.resolvent, "compute through the adjacency resolvent instead");
    genfunc->callback([&] {
        run = [&] {
            Graph g(o);
            char* out = nullptr;
            const auto s = o.resolvent ? qf_resolvent(g.get(), o.source.c_str(), o.target.c_str(), &out)
                                       : qf_genfunc(g.get(), o.source.c_str(), o.target.c_str(), &out);
            emit(s, out);
        };
    });

    auto* series = app.add_subcommand("series", "Taylor coefficients of the generating function");
    add_graph(series, o);
    add_endpoints(series, o);
    series->add_option("-N,--terms", o.terms, "highest power of z")->capture_default_str();
    series->callback([&] {
        run = [&] {
            Graph g(o);
            char* out = nullptr;
            emit(qf_series(g.get(), o.source.c_str(), o.target.c_str(), o.terms, &out), out);
        };
    });

    auto* weighted = app.add_subcommand("weighted-sum", "matrix path-sum over the graph file's weights");
    add_graph(weighted, o);
    add_endpoints(weighted, o);
    weighted->add_option("--rcond", o.rcond, "smallest accepted reciprocal condition number")->capture_default_str();
    weighted->callback([&] {
        run = [&] {
            Graph g(o);
            char* out = nullptr;
            emit(qf_weighted_sum(g.get(), o.source.c_str(), o.target.c_str(), o.rcond, &out), out);
        };
    });

    auto* starheight = app.add_subcommand("starheight", "star height of the factorized ensemble");
    add_graph(starheight, o);
    add_endpoints(starheight, o, false);
    starheight->callback([&] {
        run = [&] {
            Graph g(o);
            char* out = nullptr;
            emit(qf_starheight(g.get(), o.source.c_str(), o.target.empty() ? nullptr : o.target.c_str(), &out), out);
        };
    });

    auto* family = app.add_subcommand("family", "print a built-in graph family as a graph file");
    family->add_option("spec", o.family, "complete:n, loops:n, cycle:n, path:n or bethe:n:depth")->required();
    family->callback([&] {
        run = [&] {
            Graph g(o);
            char* out = nullptr;
            emit(qf_graph_to_json(g.get(), &out), out);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "qfact: usage error: %s\n", e.what());
        return 2;
    }

    try {
        run();
    } catch (const Failure& f) {
        std::fprintf(stderr, "qfact: %s: %s\n", qf_status_name(f.status), f.message.c_str());
        return 1;
    }
    return 0;
}
