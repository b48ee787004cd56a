#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "quiverfact/charset.hpp"
#include "quiverfact/quiver.hpp"
#include "quiverfact/walk.hpp"

namespace qf {

/// Binary nesting tree: a leaf holds a walk, an inner node reads
/// left ⊙ right. Immutable; subtrees are shared.
class FactorTree {
public:
    static FactorTree leaf(Walk w);
    static FactorTree nest(FactorTree left, FactorTree right);

    bool is_leaf() const noexcept;
    /// Leaf walk. Throws on inner nodes.
    const Walk& walk() const;
    /// Children. Throw on leaves.
    const FactorTree& left() const;
    const FactorTree& right() const;

    /// Leaf walks, left to right.
    std::vector<Walk> leaves() const;
    std::size_t depth() const noexcept;

    friend bool operator==(const FactorTree& a, const FactorTree& b) noexcept;

private:
    struct Node;
    explicit FactorTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct FactorizeStats {
    /// Non-irreducible factors replaced by their one-step factorization.
    std::size_t rounds = 0;
};

/// Canonical factorization of w. Picks the leftmost non-irreducible factor
/// each round; a cycle with internal base appearances becomes the left
/// chain c0 ⊙ … ⊙ ck, anything else is peeled by earliest repeated vertex
/// into ((r ⊙ s_m) ⊙ …) ⊙ s_1.
FactorTree factorize(const Walk& w, FactorizeStats* stats = nullptr);

/// Evaluates every nesting bottom-up. Zero if any pair is not canonical.
NestResult recompose(const FactorTree& t);

/// Normal form under reordering of parentheses and factors: trivial leaves
/// are dropped, sibling cycles off one vertex form a left chain, and factors
/// nesting into distinct vertices of one base are applied at descending
/// positions of the base. Throws when t recomposes to zero.
FactorTree normalize_tree(const FactorTree& t);

bool trees_equivalent(const FactorTree& a, const FactorTree& b);

/// Every tree with prime leaves that recomposes to w, by exhaustive search
/// over all splits w = a ⊙ b. Walks longer than `bound` throw BoundExceeded.
std::vector<FactorTree> all_canonical_factorizations(const Walk& w, std::size_t bound = 8);

/// `((123 . 33^2) . ((2342 . 44) . 343)) . ((131 . 33) . 11)`. Left chains of
/// one repeated leaf print as powers.
std::string to_string(const FactorTree& t, Charset charset = Charset::Ascii);

/// Inverse of `to_string` (either charset). Leaves are validated against q;
/// bare chains `a . b . c` associate to the left.
FactorTree parse_factor_tree(const Quiver& q, std::string_view text);

}  // namespace qf
