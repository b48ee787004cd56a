#include "quiverfact/factorizer.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "quiverfact/error.hpp"
#include "syntax.hpp"

namespace qf {

struct FactorTree::Node {
    std::optional<Walk> walk;
    std::optional<FactorTree> left, right;
};

FactorTree FactorTree::leaf(Walk w) { return FactorTree(std::make_shared<const Node>(Node{std::move(w), {}, {}})); }

FactorTree FactorTree::nest(FactorTree left, FactorTree right) {
    return FactorTree(std::make_shared<const Node>(Node{std::nullopt, std::move(left), std::move(right)}));
}

bool FactorTree::is_leaf() const noexcept { return node_->walk.has_value(); }

const Walk& FactorTree::walk() const {
    if (!is_leaf()) throw Error(ErrorKind::InvalidArgument, "not a leaf");
    return *node_->walk;
}

const FactorTree& FactorTree::left() const {
    if (is_leaf()) throw Error(ErrorKind::InvalidArgument, "a leaf has no children");
    return *node_->left;
}

const FactorTree& FactorTree::right() const {
    if (is_leaf()) throw Error(ErrorKind::InvalidArgument, "a leaf has no children");
    return *node_->right;
}

std::vector<Walk> FactorTree::leaves() const {
    std::vector<Walk> out;
    auto visit = [&](auto&& self, const FactorTree& t) -> void {
        if (t.is_leaf()) {
            out.push_back(t.walk());
            return;
        }
        self(self, t.left());
        self(self, t.right());
    };
    visit(visit, *this);
    return out;
}

std::size_t FactorTree::depth() const noexcept {
    if (is_leaf()) return 0;
    return 1 + std::max(node_->left->depth(), node_->right->depth());
}

bool operator==(const FactorTree& a, const FactorTree& b) noexcept {
    if (a.node_ == b.node_) return true;
    if (a.is_leaf() != b.is_leaf()) return false;
    if (a.is_leaf()) return *a.node_->walk == *b.node_->walk;
    return *a.node_->left == *b.node_->left && *a.node_->right == *b.node_->right;
}

// ---------------------------------------------------------------- factorize

namespace {

using Seq = std::vector<VertexId>;

Walk make(const Walk& like, Seq seq) { return Walk::unchecked(like.table(), std::move(seq)); }

FactorTree left_chain(std::vector<FactorTree> items) {
    FactorTree acc = items.front();
    for (std::size_t i = 1; i < items.size(); ++i) acc = FactorTree::nest(acc, items[i]);
    return acc;
}

// Earliest vertex visited twice; cycles are scanned over internal positions only.
std::optional<std::pair<std::size_t, std::size_t>> earliest_repeat(const Seq& s, bool cycle) {
    const std::size_t lo = cycle ? 1 : 0;
    const std::size_t hi = cycle ? s.size() - 1 : s.size();  // exclusive
    for (std::size_t i = lo; i < hi; ++i)
        for (std::size_t j = hi; j-- > i + 1;)
            if (s[j] == s[i]) return std::pair{i, j};
    return std::nullopt;
}

FactorTree factorize_rec(const Walk& a, FactorizeStats* stats) {
    if (is_irreducible(a)) return FactorTree::leaf(a);
    if (stats) ++stats->rounds;
    auto seq = a.vertices();

    if (a.is_cycle()) {
        const VertexId mu = a.head();
        std::vector<std::size_t> cuts{0};
        for (std::size_t i = 1; i + 1 < seq.size(); ++i)
            if (seq[i] == mu) cuts.push_back(i);
        if (cuts.size() > 1) {
            cuts.push_back(seq.size() - 1);
            std::vector<FactorTree> parts;
            for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
                parts.push_back(factorize_rec(make(a, Seq(seq.begin() + static_cast<std::ptrdiff_t>(cuts[k]),
                                                          seq.begin() + static_cast<std::ptrdiff_t>(cuts[k + 1]) + 1)),
                                              stats));
            return left_chain(std::move(parts));
        }
    }

    Seq w(seq.begin(), seq.end());
    std::vector<Walk> peeled;  // s_1, s_2, ...
    while (auto rep = earliest_repeat(w, w.front() == w.back() && w.size() > 1)) {
        const auto [first, last] = *rep;
        peeled.push_back(make(a, Seq(w.begin() + static_cast<std::ptrdiff_t>(first),
                                     w.begin() + static_cast<std::ptrdiff_t>(last) + 1)));
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(first) + 1, w.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    }
    FactorTree acc = FactorTree::leaf(make(a, std::move(w)));
    for (std::size_t k = peeled.size(); k-- > 0;) acc = FactorTree::nest(acc, factorize_rec(peeled[k], stats));
    return acc;
}

}  // namespace

FactorTree factorize(const Walk& w, FactorizeStats* stats) { return factorize_rec(w, stats); }

NestResult recompose(const FactorTree& t) {
    if (t.is_leaf()) return t.walk();
    return nest(recompose(t.left()), recompose(t.right()));
}

// ---------------------------------------------------------------- normal form

namespace {

// Recomposed walk plus, for every edge, the leaf that contributed it.
struct Tracked {
    Seq seq;
    std::vector<std::size_t> owner;
};

std::optional<Tracked> track(const FactorTree& t, std::vector<Walk>& leaves) {
    if (t.is_leaf()) {
        const std::size_t id = leaves.size();
        leaves.push_back(t.walk());
        auto v = t.walk().vertices();
        return Tracked{Seq(v.begin(), v.end()), std::vector<std::size_t>(t.walk().length(), id)};
    }
    auto a = track(t.left(), leaves);
    auto b = track(t.right(), leaves);
    if (!a || !b) return std::nullopt;
    const auto& table = leaves.front().table();
    const Walk wa = Walk::unchecked(table, a->seq);
    const Walk wb = Walk::unchecked(table, b->seq);
    if (!nest(wa, wb)) return std::nullopt;
    if (wa.is_trivial()) return b;

    const std::size_t j = *wa.last_index_of(wb.head());
    Tracked out;
    out.seq.assign(a->seq.begin(), a->seq.begin() + static_cast<std::ptrdiff_t>(j));
    out.seq.insert(out.seq.end(), b->seq.begin(), b->seq.end());
    out.seq.insert(out.seq.end(), a->seq.begin() + static_cast<std::ptrdiff_t>(j) + 1, a->seq.end());
    out.owner.assign(a->owner.begin(), a->owner.begin() + static_cast<std::ptrdiff_t>(j));
    out.owner.insert(out.owner.end(), b->owner.begin(), b->owner.end());
    out.owner.insert(out.owner.end(), a->owner.begin() + static_cast<std::ptrdiff_t>(j), a->owner.end());
    return out;
}

struct Placed {
    Walk walk;
    std::vector<std::size_t> edges;  // positions in the recomposed walk, ascending
    std::size_t first() const { return edges.front(); }
    std::size_t last() const { return edges.back(); }
    // gap index -> children in walk order
    std::map<std::size_t, std::vector<std::size_t>, std::greater<>> gaps;
};

FactorTree emit(const std::vector<Placed>& placed, std::size_t id);

FactorTree emit_chain(const std::vector<Placed>& placed, const std::vector<std::size_t>& ids) {
    std::vector<FactorTree> items;
    for (std::size_t id : ids) items.push_back(emit(placed, id));
    return left_chain(std::move(items));
}

FactorTree emit(const std::vector<Placed>& placed, std::size_t id) {
    FactorTree t = FactorTree::leaf(placed[id].walk);
    for (const auto& [gap, children] : placed[id].gaps) t = FactorTree::nest(t, emit_chain(placed, children));
    return t;
}

}  // namespace

FactorTree normalize_tree(const FactorTree& t) {
    std::vector<Walk> leaves;
    const auto tracked = track(t, leaves);
    if (!tracked) throw Error(ErrorKind::DomainError, "cannot normalize a factorization that recomposes to zero");
    const auto& table = leaves.front().table();

    std::vector<Placed> placed;
    {
        std::vector<std::optional<std::size_t>> slot(leaves.size());
        for (std::size_t e = 0; e < tracked->owner.size(); ++e) {
            const std::size_t leaf = tracked->owner[e];
            if (!slot[leaf]) {
                slot[leaf] = placed.size();
                placed.push_back(Placed{leaves[leaf], {}, {}});
            }
            placed[*slot[leaf]].edges.push_back(e);
        }
    }
    if (placed.empty()) return FactorTree::leaf(Walk::unchecked(table, {tracked->seq.front()}));

    const bool open = tracked->seq.front() != tracked->seq.back();
    std::optional<std::size_t> root;
    if (open) {
        for (std::size_t i = 0; i < placed.size(); ++i)
            if (placed[i].walk.is_open()) {
                if (root) throw Error(ErrorKind::DomainError, "factorization has two open factors");
                root = i;
            }
        if (!root) throw Error(ErrorKind::DomainError, "open walk without an open factor");
    }

    std::vector<std::size_t> top;
    for (std::size_t x = 0; x < placed.size(); ++x) {
        if (root && x == *root) continue;
        std::optional<std::size_t> parent;
        for (std::size_t y = 0; y < placed.size(); ++y) {
            if (y == x || placed[y].first() > placed[x].first() || placed[y].last() < placed[x].last()) continue;
            if (!parent || placed[y].last() - placed[y].first() < placed[*parent].last() - placed[*parent].first())
                parent = y;
        }
        if (!parent) parent = root;
        if (!parent) {
            top.push_back(x);
            continue;
        }
        const auto& pe = placed[*parent].edges;
        const std::size_t gap =
            static_cast<std::size_t>(std::lower_bound(pe.begin(), pe.end(), placed[x].first()) - pe.begin());
        placed[*parent].gaps[gap].push_back(x);
    }
    // Children were collected in ascending id order, which is walk order
    // because ids follow first edge positions.

    FactorTree out = root ? emit(placed, *root) : emit_chain(placed, top);
    if (recompose(out) != NestResult(Walk::unchecked(table, tracked->seq)))
        throw Error(ErrorKind::DomainError, "factorization has no consistent attachment structure");
    return out;
}

bool trees_equivalent(const FactorTree& a, const FactorTree& b) { return normalize_tree(a) == normalize_tree(b); }

// ---------------------------------------------------------------- exhaustive oracle

std::vector<FactorTree> all_canonical_factorizations(const Walk& w, std::size_t bound) {
    if (w.length() > bound)
        throw Error(ErrorKind::BoundExceeded, "walk length " + std::to_string(w.length()) +
                                                  " exceeds the exhaustive factorization bound " +
                                                  std::to_string(bound));
    std::map<Seq, std::vector<FactorTree>> memo;
    auto search = [&](auto&& self, const Walk& x) -> const std::vector<FactorTree>& {
        Seq key(x.vertices().begin(), x.vertices().end());
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::vector<FactorTree> out;
        if (is_irreducible(x) && !x.is_trivial()) out.push_back(FactorTree::leaf(x));
        for (const auto& split : nest_splits(x)) {
            const auto left = self(self, split.base);
            const auto& right = self(self, split.cycle);
            for (const auto& l : left)
                for (const auto& r : right) out.push_back(FactorTree::nest(l, r));
        }
        return memo.emplace(std::move(key), std::move(out)).first->second;
    };
    if (w.is_trivial()) return {FactorTree::leaf(w)};
    return search(search, w);
}

// ---------------------------------------------------------------- text form

namespace {

constexpr std::string_view kNestUnicode = "\xE2\x8A\x99";  // ⊙
const char* const kSuperscripts[] = {"\xE2\x81\xB0", "\xC2\xB9",     "\xC2\xB2",     "\xC2\xB3",
                                     "\xE2\x81\xB4", "\xE2\x81\xB5", "\xE2\x81\xB6", "\xE2\x81\xB7",
                                     "\xE2\x81\xB8", "\xE2\x81\xB9"};

// k >= 2 when t is ((c ⊙ c) ⊙ …) ⊙ c for a single leaf walk c.
std::size_t power_of(const FactorTree& t) {
    if (t.is_leaf()) return 1;
    std::size_t k = 1;
    const FactorTree* cur = &t;
    while (!cur->is_leaf()) {
        if (!cur->right().is_leaf()) return 0;
        ++k;
        cur = &cur->left();
    }
    const Walk& c = cur->walk();
    for (cur = &t; !cur->is_leaf(); cur = &cur->left())
        if (cur->right().walk() != c) return 0;
    return k;
}

const Walk& power_base(const FactorTree& t) {
    const FactorTree* cur = &t;
    while (!cur->is_leaf()) cur = &cur->left();
    return cur->walk();
}

void render(const FactorTree& t, Charset cs, bool wrap, std::string& out) {
    if (t.is_leaf()) {
        out += t.walk().to_string();
        return;
    }
    if (const std::size_t k = power_of(t); k >= 2) {
        out += power_base(t).to_string();
        const std::string digits = std::to_string(k);
        if (cs == Charset::Ascii) {
            out += '^';
            out += digits;
        } else {
            for (char d : digits) out += kSuperscripts[d - '0'];
        }
        return;
    }
    if (wrap) out += '(';
    render(t.left(), cs, true, out);
    out += cs == Charset::Ascii ? std::string_view(" . ") : std::string_view(" \xE2\x8A\x99 ");
    render(t.right(), cs, true, out);
    if (wrap) out += ')';
}

class TreeParser {
public:
    TreeParser(const Quiver& q, std::string_view text) : q_(q), c_(text) {}

    FactorTree run() {
        FactorTree t = expr();
        c_.skip_ws();
        if (!c_.eof()) c_.fail("unexpected trailing input");
        return t;
    }

private:
    bool at_operator() {
        c_.skip_ws();
        if (c_.peek() == '.') {
            c_.advance();
            return true;
        }
        if (c_.starts_with(kNestUnicode)) {
            c_.advance(kNestUnicode.size());
            return true;
        }
        return false;
    }

    FactorTree expr() {
        FactorTree acc = term();
        while (at_operator()) acc = FactorTree::nest(acc, term());
        return acc;
    }

    FactorTree term() {
        c_.skip_ws();
        if (c_.peek() == '(' && detail::spaced_walk_end(c_) == std::string_view::npos) {
            c_.advance();
            FactorTree inner = expr();
            c_.expect(")");
            return inner;
        }
        const std::size_t at = c_.pos();
        Walk w = [&] {
            auto ids = detail::read_walk_token(c_, q_);
            try {
                return Walk::on(q_, std::move(ids));
            } catch (const Error& e) {
                c_.fail_at(at, e.what());
            }
        }();
        const std::size_t k = power();
        if (k == 0) c_.fail("power must be at least 1");
        if (k > 1 && !w.is_cycle()) c_.fail_at(at, "only cycles can be raised to a power");
        std::vector<FactorTree> chain(k, FactorTree::leaf(w));
        return left_chain(std::move(chain));
    }

    // ^k or superscript digits; 1 when absent.
    std::size_t power() {
        std::string digits;
        if (c_.peek() == '^') {
            c_.advance();
            while (c_.peek() >= '0' && c_.peek() <= '9') {
                digits += c_.peek();
                c_.advance();
            }
            if (digits.empty()) c_.fail("expected digits after '^'");
        } else {
            for (bool found = true; found;) {
                found = false;
                for (int d = 0; d <= 9; ++d)
                    if (c_.starts_with(kSuperscripts[d])) {
                        digits += static_cast<char>('0' + d);
                        c_.advance(std::string_view(kSuperscripts[d]).size());
                        found = true;
                        break;
                    }
            }
            if (digits.empty()) return 1;
        }
        if (digits.size() > 6) c_.fail("power too large");
        return std::stoul(digits);
    }

    const Quiver& q_;
    detail::Cursor c_;
};

}  // namespace

std::string to_string(const FactorTree& t, Charset charset) {
    std::string out;
    render(t, charset, false, out);
    return out;
}

FactorTree parse_factor_tree(const Quiver& q, std::string_view text) { return TreeParser(q, text).run(); }

}  // namespace qf
