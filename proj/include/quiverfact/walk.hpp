#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quiverfact/quiver.hpp"

namespace qf {

/// A walk is a non-empty vertex sequence along edges of its home quiver. A
/// sequence of length one is the trivial walk of length 0.
///
/// The home is the vertex table shared by a quiver and its vertex-deleted
/// subgraphs, so a cycle found on Q\{v} composes with walks on Q.
class Walk {
public:
    /// Validates that every consecutive pair is an edge of `q`.
    static Walk on(const Quiver& q, std::vector<VertexId> vertices);
    static Walk trivial(const Quiver& q, VertexId v);
    /// No edge validation. Used by algorithms that only splice existing walks.
    static Walk unchecked(std::shared_ptr<const VertexTable> table, std::vector<VertexId> vertices);

    /// Parses `(1 3 3 1)` or, when every vertex name of `q` is one character,
    /// the compact form `1331`. Errors carry the byte offset.
    static Walk parse(const Quiver& q, std::string_view text);

    std::size_t length() const noexcept { return seq_.size() - 1; }
    VertexId head() const noexcept { return seq_.front(); }
    VertexId tail() const noexcept { return seq_.back(); }
    VertexId operator[](std::size_t i) const noexcept { return seq_[i]; }
    std::span<const VertexId> vertices() const noexcept { return seq_; }

    bool is_trivial() const noexcept { return seq_.size() == 1; }
    /// Non-trivial walk ending where it started.
    bool is_cycle() const noexcept { return seq_.size() >= 2 && head() == tail(); }
    bool is_open() const noexcept { return head() != tail(); }
    /// Cycle or trivial walk; the sense in which the nesting product treats
    /// trivial walks as cycles.
    bool is_closed() const noexcept { return head() == tail(); }

    bool visits(VertexId v) const noexcept;
    std::optional<std::size_t> last_index_of(VertexId v) const noexcept;

    const std::shared_ptr<const VertexTable>& table() const noexcept { return table_; }
    bool same_home(const Walk& other) const noexcept { return table_ == other.table_; }

    /// Compact form (`1331`) when all names of the table are single
    /// characters, spaced form (`(10 11 10)`) otherwise.
    std::string to_string() const;

    friend bool operator==(const Walk& a, const Walk& b) noexcept { return a.seq_ == b.seq_; }
    /// Shortlex: by length, then lexicographically on vertex ids.
    friend std::strong_ordering operator<=>(const Walk& a, const Walk& b) noexcept;

private:
    Walk(std::shared_ptr<const VertexTable> table, std::vector<VertexId> seq)
        : table_(std::move(table)), seq_(std::move(seq)) {}

    std::shared_ptr<const VertexTable> table_;
    std::vector<VertexId> seq_;
};

/// Renders a vertex sequence the way `Walk::to_string` does.
std::string format_walk(const VertexTable& table, std::span<const VertexId> seq);

/// Either a walk or the absorbing zero of the nesting product.
class NestResult {
public:
    NestResult() = default;
    NestResult(Walk w) : walk_(std::move(w)) {}  // NOLINT: implicit by intent

    static NestResult zero() { return {}; }

    bool is_zero() const noexcept { return !walk_.has_value(); }
    explicit operator bool() const noexcept { return walk_.has_value(); }
    /// Throws when zero.
    const Walk& walk() const;

    std::string to_string() const { return walk_ ? walk_->to_string() : "0"; }

    friend bool operator==(const NestResult& a, const NestResult& b) noexcept { return a.walk_ == b.walk_; }

private:
    std::optional<Walk> walk_;
};

/// Whether (a, b) is a canonical couple: b is a cycle off some β that a
/// visits, and either a is a cycle off β too, or no vertex other than β that
/// a visits before its last β is visited by b.
bool is_canonical_pair(const Walk& a, const Walk& b);

/// Nesting product: b replaces the last appearance of its base vertex in a.
/// Zero when the couple is not canonical. A trivial left factor (μ) is a local
/// identity for any walk visiting μ.
NestResult nest(const Walk& a, const Walk& b);
NestResult nest(const NestResult& a, const NestResult& b);

/// Concatenation: defined when t(a) = h(b).
NestResult concat(const Walk& a, const Walk& b);

/// c nested with itself p times; c^0 is the trivial walk at h(c). Open walks
/// only admit p = 1.
Walk nest_power(const Walk& c, unsigned p);

bool is_simple_path(const Walk& w) noexcept;
/// Cycle whose internal vertices are distinct and differ from its base.
bool is_simple_cycle(const Walk& w) noexcept;
/// Simple path, simple cycle, or trivial walk.
bool is_irreducible(const Walk& w) noexcept;

/// One way of writing w = base ⊙ cycle with both factors non-trivial.
/// `position` is the index in `base` the cycle is inserted at.
struct NestSplit {
    Walk base;
    Walk cycle;
    std::size_t position;
};

/// Every non-trivial split of w. Exhaustive over contiguous cycle
/// substrings: O(ℓ³).
std::vector<NestSplit> nest_splits(const Walk& w);

/// d | w: w = (a ⊙ d) ⊙ b or w = a ⊙ (d ⊙ b) for some walks a, b.
/// Exhaustive search; cost grows like ℓ⁵, so walks longer than
/// `max_length` are rejected with a BoundExceeded error.
bool divides(const Walk& d, const Walk& w, std::size_t max_length = 12);

}  // namespace qf
