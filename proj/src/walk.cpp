#include "quiverfact/walk.hpp"

#include <algorithm>
#include <unordered_set>

#include "quiverfact/error.hpp"
#include "syntax.hpp"

namespace qf {

namespace {

void require_same_home(const Walk& a, const Walk& b) {
    if (!a.same_home(b)) throw Error(ErrorKind::InvalidArgument, "walks on different quivers");
}

// Positions 0..n-1 all distinct.
bool all_distinct(std::span<const VertexId> seq) {
    std::vector<VertexId> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

Walk Walk::on(const Quiver& q, std::vector<VertexId> vertices) {
    if (vertices.empty()) throw Error(ErrorKind::InvalidArgument, "a walk needs at least one vertex");
    for (VertexId v : vertices)
        if (!q.contains(v))
            throw Error(ErrorKind::UnknownVertex,
                        "vertex " + (v < q.universe_size() ? "'" + q.name(v) + "'" : std::to_string(v)) +
                            " is not in the quiver");
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (!q.has_edge(vertices[i], vertices[i + 1]))
            throw Error(ErrorKind::InvalidArgument,
                        "no edge (" + q.name(vertices[i]) + "," + q.name(vertices[i + 1]) + ")");
    return Walk(q.table(), std::move(vertices));
}

Walk Walk::trivial(const Quiver& q, VertexId v) { return on(q, {v}); }

Walk Walk::unchecked(std::shared_ptr<const VertexTable> table, std::vector<VertexId> vertices) {
    return Walk(std::move(table), std::move(vertices));
}

Walk Walk::parse(const Quiver& q, std::string_view text) {
    detail::Cursor c(text);
    auto ids = detail::read_walk_token(c, q);
    c.skip_ws();
    if (!c.eof()) c.fail("unexpected trailing input");
    return on(q, std::move(ids));
}

bool Walk::visits(VertexId v) const noexcept { return std::find(seq_.begin(), seq_.end(), v) != seq_.end(); }

std::optional<std::size_t> Walk::last_index_of(VertexId v) const noexcept {
    for (std::size_t i = seq_.size(); i-- > 0;)
        if (seq_[i] == v) return i;
    return std::nullopt;
}

std::string format_walk(const VertexTable& table, std::span<const VertexId> seq) {
    const bool compact = std::all_of(table.names.begin(), table.names.end(),
                                     [](const std::string& s) { return s.size() == 1; });
    std::string out;
    if (compact) {
        for (VertexId v : seq) out += table.names[v];
        return out;
    }
    out = "(";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ' ';
        out += table.names[seq[i]];
    }
    out += ')';
    return out;
}

std::string Walk::to_string() const { return format_walk(*table_, seq_); }

std::strong_ordering operator<=>(const Walk& a, const Walk& b) noexcept {
    if (auto c = a.seq_.size() <=> b.seq_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.seq_.begin(), a.seq_.end(), b.seq_.begin(), b.seq_.end());
}

const Walk& NestResult::walk() const {
    if (!walk_) throw Error(ErrorKind::DomainError, "nesting product is zero");
    return *walk_;
}

bool is_canonical_pair(const Walk& a, const Walk& b) {
    require_same_home(a, b);
    if (!b.is_closed()) return false;
    const VertexId beta = b.head();
    const auto j = a.last_index_of(beta);
    if (!j) return false;
    if (a.is_closed() && a.head() == beta) return true;
    for (std::size_t i = 0; i < *j; ++i)
        if (a[i] != beta && b.visits(a[i])) return false;
    return true;
}

NestResult nest(const Walk& a, const Walk& b) {
    require_same_home(a, b);
    if (a.is_trivial()) {
        if (b.visits(a.head())) return b;
        return NestResult::zero();
    }
    if (!is_canonical_pair(a, b)) return NestResult::zero();
    const std::size_t j = *a.last_index_of(b.head());
    auto as = a.vertices();
    auto bs = b.vertices();
    std::vector<VertexId> out;
    out.reserve(as.size() + bs.size() - 1);
    out.insert(out.end(), as.begin(), as.begin() + static_cast<std::ptrdiff_t>(j));
    out.insert(out.end(), bs.begin(), bs.end());
    out.insert(out.end(), as.begin() + static_cast<std::ptrdiff_t>(j) + 1, as.end());
    return Walk::unchecked(a.table(), std::move(out));
}

NestResult nest(const NestResult& a, const NestResult& b) {
    if (a.is_zero() || b.is_zero()) return NestResult::zero();
    return nest(a.walk(), b.walk());
}

NestResult concat(const Walk& a, const Walk& b) {
    require_same_home(a, b);
    if (a.tail() != b.head()) return NestResult::zero();
    auto as = a.vertices();
    auto bs = b.vertices();
    std::vector<VertexId> out(as.begin(), as.end());
    out.insert(out.end(), bs.begin() + 1, bs.end());
    return Walk::unchecked(a.table(), std::move(out));
}

Walk nest_power(const Walk& c, unsigned p) {
    if (!c.is_closed()) {
        if (p == 1) return c;
        throw Error(ErrorKind::InvalidArgument, "only cycles have powers other than 1 (got " + c.to_string() + ")");
    }
    Walk out = Walk::unchecked(c.table(), {c.head()});
    for (unsigned i = 0; i < p; ++i) out = concat(out, c).walk();
    return out;
}

bool is_simple_path(const Walk& w) noexcept { return w.is_open() && all_distinct(w.vertices()); }

bool is_simple_cycle(const Walk& w) noexcept {
    if (!w.is_cycle()) return false;
    auto seq = w.vertices();
    auto internal = seq.subspan(1, seq.size() - 2);
    if (std::find(internal.begin(), internal.end(), w.head()) != internal.end()) return false;
    return all_distinct(internal);
}

bool is_irreducible(const Walk& w) noexcept { return w.is_trivial() || is_simple_path(w) || is_simple_cycle(w); }

std::vector<NestSplit> nest_splits(const Walk& w) {
    std::vector<NestSplit> out;
    auto seq = w.vertices();
    const std::size_t n = seq.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (seq[i] != seq[j]) continue;
            if (j - i == w.length()) continue;  // base would be trivial
            std::vector<VertexId> base(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            base.insert(base.end(), seq.begin() + static_cast<std::ptrdiff_t>(j) + 1, seq.end());
            std::vector<VertexId> cyc(seq.begin() + static_cast<std::ptrdiff_t>(i),
                                      seq.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            Walk a = Walk::unchecked(w.table(), std::move(base));
            Walk b = Walk::unchecked(w.table(), std::move(cyc));
            if (nest(a, b) != NestResult(w)) continue;
            const bool seen = std::any_of(out.begin(), out.end(), [&](const NestSplit& s) {
                return s.base == a && s.cycle == b;
            });
            if (!seen) {
                const std::size_t pos = *a.last_index_of(b.head());
                out.push_back({std::move(a), std::move(b), pos});
            }
        }
    }
    return out;
}

bool divides(const Walk& d, const Walk& w, std::size_t max_length) {
    require_same_home(d, w);
    if (w.length() > max_length)
        throw Error(ErrorKind::BoundExceeded, "divides: walk length " + std::to_string(w.length()) +
                                                  " exceeds the search bound " + std::to_string(max_length));
    if (d == w) return true;
    if (d.is_trivial()) return w.visits(d.head());

    // x = a ⊙ d for some a (trivial a gives x = d).
    auto left_factor_of = [&](const Walk& x) {
        if (x == d) return true;
        for (const auto& s : nest_splits(x))
            if (s.cycle == d) return true;
        return false;
    };
    // y = d ⊙ b for some b (trivial b gives y = d).
    auto right_factor_of = [&](const Walk& y) {
        if (y == d) return true;
        for (const auto& s : nest_splits(y))
            if (s.base == d) return true;
        return false;
    };

    const auto splits = nest_splits(w);
    if (left_factor_of(w) || right_factor_of(w)) return true;
    for (const auto& s : splits) {
        if (left_factor_of(s.base)) return true;   // w = (a ⊙ d) ⊙ b
        if (right_factor_of(s.cycle)) return true; // w = a ⊙ (d ⊙ b)
    }
    return false;
}

}  // namespace qf
