#include "quiverfact.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "quiverfact/enumeration.hpp"
#include "quiverfact/ensembles.hpp"
#include "quiverfact/error.hpp"
#include "quiverfact/factorizer.hpp"
#include "quiverfact/families.hpp"
#include "quiverfact/graph_io.hpp"
#include "quiverfact/pathsum.hpp"
#include "quiverfact/starheight.hpp"

struct qf_graph {
    qf::GraphFile file;
};

namespace {

thread_local std::string last_error;

qf_status status_of(qf::ErrorKind k) {
    switch (k) {
        case qf::ErrorKind::InvalidArgument: return QF_ERR_INVALID_ARGUMENT;
        case qf::ErrorKind::UnknownVertex: return QF_ERR_UNKNOWN_VERTEX;
        case qf::ErrorKind::Parse: return QF_ERR_PARSE;
        case qf::ErrorKind::CapExceeded: return QF_ERR_CAP_EXCEEDED;
        case qf::ErrorKind::BoundExceeded: return QF_ERR_BOUND_EXCEEDED;
        case qf::ErrorKind::Singular: return QF_ERR_SINGULAR;
        case qf::ErrorKind::DomainError: return QF_ERR_DOMAIN;
    }
    return QF_ERR_INTERNAL;
}

qf_status fail(qf_status s, std::string msg) {
    last_error = std::move(msg);
    return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
qf_status guard(F&& f) {
    last_error.clear();
    try {
        f();
        return QF_OK;
    } catch (const qf::Error& e) {
        return fail(status_of(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(QF_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(QF_ERR_INTERNAL, e.what());
    }
}

void put(char** out, const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    *out = p;
}

void need(const void* p, const char* what) {
    if (!p) throw qf::Error(qf::ErrorKind::InvalidArgument, std::string(what) + " is null");
}

const qf::Quiver& graph(const qf_graph* g) {
    need(g, "graph");
    return g->file.quiver;
}

qf::VertexId vertex(const qf_graph* g, const char* name) {
    need(name, "vertex name");
    return graph(g).id(name);
}

qf::Charset charset(qf_charset cs) { return cs == QF_UNICODE ? qf::Charset::Unicode : qf::Charset::Ascii; }

std::string lines(const std::vector<qf::Walk>& ws) {
    std::string s;
    for (const auto& w : ws) s += w.to_string() + "\n";
    return s;
}

std::string number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
    return buf;
}

std::string entry(std::complex<double> z) {
    if (z.imag() == 0.0) return number(z.real());
    const std::string im = number(std::abs(z.imag()));
    return number(z.real()) + (z.imag() < 0 ? "-" : "+") + im + "i";
}

}  // namespace

extern "C" {

const char* qf_last_error(void) { return last_error.c_str(); }

const char* qf_status_name(qf_status status) {
    switch (status) {
        case QF_OK: return "ok";
        case QF_ERR_INVALID_ARGUMENT: return "invalid argument";
        case QF_ERR_UNKNOWN_VERTEX: return "unknown vertex";
        case QF_ERR_PARSE: return "parse error";
        case QF_ERR_CAP_EXCEEDED: return "cap exceeded";
        case QF_ERR_BOUND_EXCEEDED: return "bound exceeded";
        case QF_ERR_SINGULAR: return "singular";
        case QF_ERR_DOMAIN: return "domain error";
        case QF_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* qf_version(void) { return QF_VERSION; }

void qf_string_free(char* s) { std::free(s); }

qf_status qf_graph_load_file(const char* path, qf_graph** out) {
    return guard([&] {
        need(path, "path");
        need(out, "out");
        *out = new qf_graph{qf::load_graph_file(path)};
    });
}

qf_status qf_graph_from_json(const char* text, qf_graph** out) {
    return guard([&] {
        need(text, "text");
        need(out, "out");
        *out = new qf_graph{qf::parse_graph_json(text)};
    });
}

qf_status qf_graph_from_family(const char* spec, qf_graph** out) {
    return guard([&] {
        need(spec, "spec");
        need(out, "out");
        *out = new qf_graph{{qf::make_family(qf::parse_family_spec(spec)), {}, std::nullopt}};
    });
}

void qf_graph_free(qf_graph* g) { delete g; }

size_t qf_graph_vertex_count(const qf_graph* g) { return g ? g->file.quiver.vertex_count() : 0; }
size_t qf_graph_edge_count(const qf_graph* g) { return g ? g->file.quiver.edge_count() : 0; }

qf_status qf_graph_to_json(const qf_graph* g, char** out) {
    return guard([&] {
        need(out, "out");
        put(out, qf::graph_to_json(graph(g)) + "\n");
    });
}

qf_status qf_factor(const qf_graph* g, const char* walk, qf_charset cs, char** out) {
    return guard([&] {
        need(walk, "walk");
        need(out, "out");
        const auto w = qf::Walk::parse(graph(g), walk);
        put(out, qf::to_string(qf::factorize(w), charset(cs)) + "\n");
    });
}

qf_status qf_ensemble(const qf_graph* g, const char* source, const char* target, qf_render_mode mode,
                      qf_charset cs, char** out) {
    return guard([&] {
        need(out, "out");
        const auto& q = graph(g);
        const auto e = qf::factorize_ensemble(q, vertex(g, source), vertex(g, target));
        const auto m = mode == QF_MODE_EDGE       ? qf::RenderMode::Edge
                       : mode == QF_MODE_LANGUAGE ? qf::RenderMode::Language
                                                  : qf::RenderMode::Vertex;
        put(out, qf::render(e, m, q, charset(cs)) + "\n");
    });
}

qf_status qf_expand(const qf_graph* g, const char* source, const char* target, size_t max_length, size_t cap,
                    char** out) {
    return guard([&] {
        need(out, "out");
        const auto e = qf::factorize_ensemble(graph(g), vertex(g, source), vertex(g, target));
        put(out, lines(qf::expand(e, max_length, cap).walks));
    });
}

qf_status qf_enumerate(const qf_graph* g, const char* source, const char* target, size_t max_length, size_t cap,
                       char** out) {
    return guard([&] {
        need(out, "out");
        put(out, lines(qf::enumerate_walks(graph(g), vertex(g, source), vertex(g, target), max_length, cap)));
    });
}

qf_status qf_genfunc(const qf_graph* g, const char* source, const char* target, char** out) {
    return guard([&] {
        need(out, "out");
        const auto f = qf::genfunc(graph(g), vertex(g, source), vertex(g, target), g->file.scalar_weights);
        put(out, f.to_string() + "\n");
    });
}

qf_status qf_resolvent(const qf_graph* g, const char* source, const char* target, char** out) {
    return guard([&] {
        need(out, "out");
        const auto f = qf::resolvent_entry(graph(g), vertex(g, source), vertex(g, target), g->file.scalar_weights);
        put(out, f.to_string() + "\n");
    });
}

qf_status qf_series(const qf_graph* g, const char* source, const char* target, size_t terms, char** out) {
    return guard([&] {
        need(out, "out");
        const auto f = qf::genfunc(graph(g), vertex(g, source), vertex(g, target), g->file.scalar_weights);
        std::string s;
        for (const auto& c : f.series(terms)) s += (s.empty() ? "" : " ") + c.get_str();
        put(out, s + "\n");
    });
}

qf_status qf_weighted_sum(const qf_graph* g, const char* source, const char* target, double rcond_min,
                          char** out) {
    return guard([&] {
        need(out, "out");
        graph(g);
        if (!g->file.weighted)
            throw qf::Error(qf::ErrorKind::InvalidArgument, "graph file has no matrix weights");
        const auto m = qf::weighted_path_sum(*g->file.weighted, vertex(g, source), vertex(g, target), rcond_min);
        std::string s;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            for (Eigen::Index c = 0; c < m.cols(); ++c) s += (c ? " " : "") + entry(m(r, c));
            s += "\n";
        }
        put(out, s);
    });
}

qf_status qf_starheight(const qf_graph* g, const char* source, const char* target, char** out) {
    return guard([&] {
        need(out, "out");
        const auto& q = graph(g);
        const auto a = vertex(g, source);
        const auto b = target ? vertex(g, target) : a;
        const auto range = q.name(a) + " -> " + q.name(b);
        std::string s;
        s += "recursion " + range + ": " +
             std::to_string(a == b ? qf::star_height_cycles(q, a) : qf::star_height_open(q, a, b)) + "\n";
        s += "expression " + range + ": " +
             std::to_string(qf::star_height_of_expr(qf::factorize_ensemble(q, a, b))) + "\n";
        try {
            const auto r = qf::star_height_graph(q, a);
            s += "closed form: " + std::to_string(r.height) + " (longest simple path " + r.witness.to_string() +
                 " of length " + std::to_string(r.longest) + (r.witness_loop ? ", ends on a loop)" : ", no loop at its end)") +
                 "\n";
        } catch (const qf::Error& e) {
            if (e.kind() != qf::ErrorKind::InvalidArgument && e.kind() != qf::ErrorKind::BoundExceeded) throw;
            s += std::string("closed form: not applicable (") + e.what() + ")\n";
        }
        put(out, s);
    });
}

}  // extern "C"
