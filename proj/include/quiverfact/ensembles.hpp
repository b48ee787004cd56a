#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "quiverfact/charset.hpp"
#include "quiverfact/quiver.hpp"
#include "quiverfact/walk.hpp"

namespace qf {

/// Expression for a (possibly infinite) set of walks.
class WalkExpr {
public:
    enum class Kind { Atom, Union, NestProd, Star, Trivial };

    /// A trivial walk becomes Trivial(v).
    static WalkExpr atom(Walk w);
    static WalkExpr trivial(std::shared_ptr<const VertexTable> table, VertexId v);
    static WalkExpr union_of(std::shared_ptr<const VertexTable> table, std::vector<WalkExpr> members);
    static WalkExpr nest(WalkExpr base, WalkExpr inserted);
    /// `body` must denote cycles off `vertex`.
    static WalkExpr star(WalkExpr body, VertexId vertex);

    Kind kind() const noexcept;
    const Walk& walk() const;                     // Atom
    VertexId vertex() const;                      // Star, Trivial
    const std::vector<WalkExpr>& members() const; // Union
    const WalkExpr& base() const;                 // NestProd
    const WalkExpr& inserted() const;             // NestProd
    const WalkExpr& body() const;                 // Star
    const std::shared_ptr<const VertexTable>& table() const noexcept;

    friend bool operator==(const WalkExpr& a, const WalkExpr& b) noexcept;

private:
    struct Node;
    explicit WalkExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// A_{Q;μ}: union over the non-trivial simple cycles off μ, each internal
/// vertex dressed with the star of the cycle ensemble of the subgraph that
/// excludes μ and the earlier internal vertices. Dressing runs from the last
/// internal vertex to the first; dressings that are trivial are left out.
/// Trivial(μ) when μ has no non-trivial simple cycle.
WalkExpr cycle_ensemble(const Quiver& q, VertexId mu);

/// W_{Q;αω}. For α ≠ ω, a union over simple paths dressed from ω back to α;
/// an empty union when ω is unreachable. For α = ω, Star(A_{Q;α}).
WalkExpr factorize_ensemble(const Quiver& q, VertexId from, VertexId to);

struct Expansion {
    std::vector<Walk> walks;       // distinct, shortlex
    std::uint64_t derivations = 0; // equals walks.size() iff no walk is derived twice
};

/// All walks of length ≤ max_length denoted by e, with the number of
/// distinct derivations. Intermediate sets above `cap` walks throw.
Expansion expand(const WalkExpr& e, std::size_t max_length, std::size_t cap = 1'000'000);

/// Number of nested stars; a star over a trivial-only body counts 0.
std::size_t star_height_of_expr(const WalkExpr& e);

enum class RenderMode { Vertex, Edge, Language };

/// Vertex mode: `{11, 121 . {22, 232 . {33}*}*}*`.
/// Edge mode: regular expression over edges, `(12)((23)(33)*(32))*(34)`.
/// Language mode: the same with every edge replaced by its label; throws
/// when an edge used by the expression has no label.
/// Unions render with `+` in edge and language mode.
std::string render(const WalkExpr& e, RenderMode mode, const Quiver& q, Charset charset = Charset::Ascii);

/// Parses the vertex-mode rendering back (either charset).
WalkExpr parse_walk_expr(const Quiver& q, std::string_view text);

}  // namespace qf
