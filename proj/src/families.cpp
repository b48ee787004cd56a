#include "quiverfact/families.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "quiverfact/error.hpp"

namespace qf {

namespace {

constexpr unsigned kMaxFamilyVertices = 100000;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

std::vector<std::string> numbered(unsigned count, unsigned first) {
    std::vector<std::string> names;
    names.reserve(count);
    for (unsigned i = 0; i < count; ++i) names.push_back(std::to_string(first + i));
    return names;
}

void link(std::vector<Quiver::Edge>& edges, VertexId a, VertexId b) {
    edges.emplace_back(a, b);
    if (a != b) edges.emplace_back(b, a);
}

Quiver bethe(unsigned n, unsigned depth) {
    std::vector<Quiver::Edge> edges;
    std::vector<VertexId> frontier{0};
    VertexId next = 1;
    for (unsigned level = 0; level < depth; ++level) {
        std::vector<VertexId> grown;
        for (VertexId v : frontier) {
            const unsigned children = (v == 0) ? n : n - 1;
            for (unsigned c = 0; c < children; ++c) {
                if (next >= kMaxFamilyVertices)
                    bad("bethe:" + std::to_string(n) + ":" + std::to_string(depth) + " has more than " +
                        std::to_string(kMaxFamilyVertices) + " vertices");
                link(edges, v, next);
                grown.push_back(next++);
            }
        }
        frontier = std::move(grown);
    }
    return Quiver::build(numbered(next, 0), edges);
}

}  // namespace

Quiver make_family(const FamilySpec& spec) {
    const unsigned n = spec.n;
    if (spec.kind != FamilyKind::TruncatedBethe && (n < 1 || n > kMaxFamilyVertices))
        bad("family size must be between 1 and " + std::to_string(kMaxFamilyVertices) + ", got " + std::to_string(n));

    std::vector<Quiver::Edge> edges;
    switch (spec.kind) {
    case FamilyKind::Complete:
    case FamilyKind::CompleteWithLoops:
        for (VertexId a = 0; a < n; ++a) {
            if (spec.kind == FamilyKind::CompleteWithLoops) edges.emplace_back(a, a);
            for (VertexId b = a + 1; b < n; ++b) link(edges, a, b);
        }
        break;
    case FamilyKind::Cycle:
        if (n < 3) bad("cycle needs at least 3 vertices, got " + std::to_string(n));
        for (VertexId a = 0; a < n; ++a) link(edges, a, (a + 1) % n);
        break;
    case FamilyKind::Path:
        for (VertexId a = 0; a + 1 < n; ++a) link(edges, a, a + 1);
        break;
    case FamilyKind::TruncatedBethe:
        if (n < 2) bad("bethe coordination must be at least 2, got " + std::to_string(n));
        return bethe(n, spec.depth);
    }
    return Quiver::build(numbered(n, 1), edges);
}

FamilySpec parse_family_spec(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ':') {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    auto number = [&](std::size_t k) {
        const std::string_view s = parts[k];
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
            bad("bad number '" + std::string(s) + "' in family spec '" + std::string(text) + "'");
        return value;
    };

    const std::string_view kind = parts[0];
    FamilySpec spec;
    if (kind == "bethe" || kind == "truncated_bethe") {
        if (parts.size() != 3) bad("expected bethe:<n>:<depth>, got '" + std::string(text) + "'");
        spec.kind = FamilyKind::TruncatedBethe;
        spec.n = number(1);
        spec.depth = number(2);
        return spec;
    }
    if (kind == "complete") spec.kind = FamilyKind::Complete;
    else if (kind == "loops" || kind == "complete_with_loops") spec.kind = FamilyKind::CompleteWithLoops;
    else if (kind == "cycle") spec.kind = FamilyKind::Cycle;
    else if (kind == "path") spec.kind = FamilyKind::Path;
    else bad("unknown family '" + std::string(kind) + "' (complete, loops, cycle, path, bethe)");
    if (parts.size() != 2) bad("expected " + std::string(kind) + ":<n>, got '" + std::string(text) + "'");
    spec.n = number(1);
    return spec;
}

}  // namespace qf
