#include "quiverfact/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "quiverfact/error.hpp"

namespace qf {
namespace {

using json = nlohmann::json;

Error bad(const std::string& what) { return Error(ErrorKind::InvalidArgument, what); }

std::string name_of(const json& j, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw bad(where + ": vertex names must be strings or integers");
}

Quiver::Edge edge_key(const Quiver& q, const std::string& key, const std::string& field) {
    const auto comma = key.find(',');
    if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos)
        throw bad(field + ": key '" + key + "' is not of the form \"tail,head\"");
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(' ');
        const auto b = s.find_last_not_of(' ');
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const auto t = q.find(trim(key.substr(0, comma)));
    const auto h = q.find(trim(key.substr(comma + 1)));
    if (!t || !h) throw bad(field + ": key '" + key + "' names an unknown vertex");
    if (!q.has_edge(*t, *h)) throw bad(field + ": no edge (" + key + ")");
    return {*t, *h};
}

std::complex<double> entry(const json& j, const std::string& where) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw bad(where + ": matrix entries must be numbers or [re, im] pairs");
}

Eigen::MatrixXcd matrix(const json& j, const std::string& where) {
    if (j.is_number()) return Eigen::MatrixXcd::Constant(1, 1, entry(j, where));
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
        throw bad(where + ": a weight must be a non-empty list of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j[0].size());
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            throw bad(where + ": rows have different lengths");
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = entry(row[static_cast<std::size_t>(c)], where);
    }
    return m;
}

mpq_class rational(const json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return mpq_class(std::to_string(j.get<long long>()));
        if (j.is_string()) {
            mpq_class q(j.get<std::string>());
            q.canonicalize();
            return q;
        }
    } catch (const std::invalid_argument&) {
    }
    throw bad(where + ": coefficients must be integers or \"p/q\" strings");
}

}  // namespace

GraphFile parse_graph_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "invalid JSON");
    }
    if (!doc.is_object()) throw bad("graph file must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "vertices" && key != "edges" && key != "labels" && key != "dims" && key != "weights" &&
            key != "scalar_weights")
            throw bad("unknown field '" + key + "'");
    }
    if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw bad("field 'vertices' must be a list");
    if (!doc.contains("edges") || !doc["edges"].is_array()) throw bad("field 'edges' must be a list");

    std::vector<std::string> names;
    for (const auto& v : doc["vertices"]) names.push_back(name_of(v, "vertices"));
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2) throw bad("edges: each edge must be a [tail, head] pair");
        edges.emplace_back(name_of(e[0], "edges"), name_of(e[1], "edges"));
    }
    std::map<std::pair<std::string, std::string>, std::string> labels;
    Quiver bare = Quiver::from_names(names, edges);
    if (doc.contains("labels")) {
        if (!doc["labels"].is_object()) throw bad("field 'labels' must be an object");
        for (const auto& [key, value] : doc["labels"].items()) {
            const auto e = edge_key(bare, key, "labels");
            if (!value.is_string()) throw bad("labels: label of (" + key + ") must be a string");
            labels[{bare.name(e.first), bare.name(e.second)}] = value.get<std::string>();
        }
    }

    GraphFile out{Quiver::from_names(names, edges, labels), {}, std::nullopt};
    const Quiver& q = out.quiver;

    if (doc.contains("scalar_weights")) {
        if (!doc["scalar_weights"].is_object()) throw bad("field 'scalar_weights' must be an object");
        for (const auto& [key, value] : doc["scalar_weights"].items()) {
            const auto e = edge_key(q, key, "scalar_weights");
            if (!value.is_array()) throw bad("scalar_weights: weight of (" + key + ") must be a coefficient list");
            std::vector<mpq_class> c;
            for (const auto& x : value) c.push_back(rational(x, "scalar_weights (" + key + ")"));
            out.scalar_weights[e] = RationalFn(Poly(std::move(c)));
        }
    }

    if (doc.contains("dims") && !doc.contains("weights")) throw bad("field 'dims' needs 'weights'");
    if (doc.contains("weights")) {
        WeightedQuiver wq{q, {}, {}};
        if (doc.contains("dims")) {
            if (!doc["dims"].is_object()) throw bad("field 'dims' must be an object");
            for (const auto& [key, value] : doc["dims"].items()) {
                const auto v = q.find(key);
                if (!v) throw bad("dims: unknown vertex '" + key + "'");
                if (!value.is_number_integer() || value.get<long long>() <= 0 || value.get<long long>() > 1024)
                    throw bad("dims: dimension of '" + key + "' must be a positive integer");
                wq.dims[*v] = static_cast<int>(value.get<long long>());
            }
        }
        if (!doc["weights"].is_object()) throw bad("field 'weights' must be an object");
        for (const auto& [key, value] : doc["weights"].items())
            wq.weights[edge_key(q, key, "weights")] = matrix(value, "weights (" + key + ")");
        wq.validate();
        out.weighted = std::move(wq);
    }
    return out;
}

GraphFile load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open graph file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph_json(ss.str());
}

std::string graph_to_json(const Quiver& q) {
    auto str = [](const std::string& x) { return json(x).dump(); };
    std::string out = "{\n  \"vertices\": [";
    for (std::size_t i = 0; i < q.vertices().size(); ++i) out += (i ? ", " : "") + str(q.name(q.vertices()[i]));
    out += "],\n  \"edges\": [";
    const auto edges = q.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        out += std::string(i ? "," : "") + "\n    [" + str(q.name(edges[i].first)) + ", " + str(q.name(edges[i].second)) + "]";
    out += edges.empty() ? "]" : "\n  ]";
    if (!q.labels().empty()) {
        out += ",\n  \"labels\": {";
        bool first = true;
        for (const auto& [e, l] : q.labels()) {
            out += std::string(first ? "" : ",") + "\n    " + str(q.name(e.first) + "," + q.name(e.second)) + ": " + str(l);
            first = false;
        }
        out += "\n  }";
    }
    return out + "\n}";
}

}  // namespace qf
