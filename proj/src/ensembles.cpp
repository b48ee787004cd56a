#include "quiverfact/ensembles.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>

#include "quiverfact/enumeration.hpp"
#include "quiverfact/error.hpp"
#include "syntax.hpp"

namespace qf {

struct WalkExpr::Node {
    Kind kind;
    std::shared_ptr<const VertexTable> table;
    std::optional<Walk> walk;
    VertexId vertex = 0;
    std::vector<WalkExpr> kids;
};

WalkExpr WalkExpr::atom(Walk w) {
    if (w.is_trivial()) return trivial(w.table(), w.head());
    auto table = w.table();
    return WalkExpr(std::make_shared<const Node>(Node{Kind::Atom, std::move(table), std::move(w), 0, {}}));
}

WalkExpr WalkExpr::trivial(std::shared_ptr<const VertexTable> table, VertexId v) {
    return WalkExpr(std::make_shared<const Node>(Node{Kind::Trivial, std::move(table), std::nullopt, v, {}}));
}

WalkExpr WalkExpr::union_of(std::shared_ptr<const VertexTable> table, std::vector<WalkExpr> members) {
    return WalkExpr(
        std::make_shared<const Node>(Node{Kind::Union, std::move(table), std::nullopt, 0, std::move(members)}));
}

WalkExpr WalkExpr::nest(WalkExpr base, WalkExpr inserted) {
    auto table = base.table();
    return WalkExpr(std::make_shared<const Node>(
        Node{Kind::NestProd, std::move(table), std::nullopt, 0, {std::move(base), std::move(inserted)}}));
}

WalkExpr WalkExpr::star(WalkExpr body, VertexId vertex) {
    auto table = body.table();
    return WalkExpr(
        std::make_shared<const Node>(Node{Kind::Star, std::move(table), std::nullopt, vertex, {std::move(body)}}));
}

WalkExpr::Kind WalkExpr::kind() const noexcept { return node_->kind; }

namespace {
[[noreturn]] void wrong_kind(const char* what) {
    throw Error(ErrorKind::InvalidArgument, std::string("expression has no ") + what);
}
}  // namespace

const Walk& WalkExpr::walk() const {
    if (kind() != Kind::Atom) wrong_kind("walk");
    return *node_->walk;
}

VertexId WalkExpr::vertex() const {
    if (kind() != Kind::Star && kind() != Kind::Trivial) wrong_kind("vertex");
    return node_->vertex;
}

const std::vector<WalkExpr>& WalkExpr::members() const {
    if (kind() != Kind::Union) wrong_kind("members");
    return node_->kids;
}

const WalkExpr& WalkExpr::base() const {
    if (kind() != Kind::NestProd) wrong_kind("base");
    return node_->kids[0];
}

const WalkExpr& WalkExpr::inserted() const {
    if (kind() != Kind::NestProd) wrong_kind("inserted factor");
    return node_->kids[1];
}

const WalkExpr& WalkExpr::body() const {
    if (kind() != Kind::Star) wrong_kind("body");
    return node_->kids[0];
}

const std::shared_ptr<const VertexTable>& WalkExpr::table() const noexcept { return node_->table; }

bool operator==(const WalkExpr& a, const WalkExpr& b) noexcept {
    if (a.node_ == b.node_) return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    return x.kind == y.kind && x.walk == y.walk && x.vertex == y.vertex && x.kids == y.kids;
}

// ---------------------------------------------------------------- construction

namespace {

struct MemoKey {
    VertexSet excluded;
    VertexId mu;
    bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const noexcept { return k.excluded.hash() * 31 + k.mu; }
};

class Builder {
public:
    explicit Builder(const Quiver& q) : q_(q) {}

    WalkExpr cycles(const VertexSet& excluded, VertexId mu) {
        const MemoKey key{excluded, mu};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::vector<WalkExpr> members;
        const VertexSet inner = excluded.with(mu);
        for (const auto& c : simple_cycles_at(q_, mu, excluded)) {
            // c = (μ μ1 … μ_{k} μ); μ_i is dressed on Q \ (excluded ∪ {μ, μ1, …, μ_{i-1}})
            std::vector<VertexSet> deleted{inner};
            for (std::size_t i = 1; i + 2 < c.length() + 1; ++i) deleted.push_back(deleted.back().with(c[i]));
            WalkExpr e = WalkExpr::atom(c);
            for (std::size_t i = c.length() - 1; i >= 1; --i) e = dress(e, deleted[i - 1], c[i]);
            members.push_back(e);
        }
        WalkExpr out = members.empty()      ? WalkExpr::trivial(q_.table(), mu)
                       : members.size() == 1 ? members.front()
                                             : WalkExpr::union_of(q_.table(), std::move(members));
        memo_.emplace(key, out);
        return out;
    }

    // e ⊙ A*_{deleted;v}, or e itself when the cycle ensemble is trivial.
    WalkExpr dress(const WalkExpr& e, const VertexSet& deleted, VertexId v) {
        WalkExpr a = cycles(deleted, v);
        if (a.kind() == WalkExpr::Kind::Trivial) return e;
        return WalkExpr::nest(e, WalkExpr::star(a, v));
    }

private:
    const Quiver& q_;
    std::unordered_map<MemoKey, WalkExpr, MemoKeyHash> memo_;
};

void require_member(const Quiver& q, VertexId v) {
    if (!q.contains(v))
        throw Error(ErrorKind::UnknownVertex,
                    "vertex " + (v < q.universe_size() ? "'" + q.name(v) + "'" : std::to_string(v)) +
                        " is not in the quiver");
}

}  // namespace

WalkExpr cycle_ensemble(const Quiver& q, VertexId mu) {
    require_member(q, mu);
    return Builder(q).cycles(VertexSet(q.universe_size()), mu);
}

WalkExpr factorize_ensemble(const Quiver& q, VertexId from, VertexId to) {
    require_member(q, from);
    require_member(q, to);
    Builder b(q);
    const VertexSet none(q.universe_size());
    if (from == to) return WalkExpr::star(b.cycles(none, from), from);

    std::vector<WalkExpr> members;
    for (const auto& p : simple_paths(q, from, to)) {
        std::vector<VertexSet> deleted{none};
        for (std::size_t i = 0; i < p.length(); ++i) deleted.push_back(deleted.back().with(p[i]));
        WalkExpr e = WalkExpr::atom(p);
        for (std::size_t i = p.length() + 1; i-- > 0;) e = b.dress(e, deleted[i], p[i]);
        members.push_back(e);
    }
    if (members.size() == 1) return members.front();
    return WalkExpr::union_of(q.table(), std::move(members));
}

// ---------------------------------------------------------------- expansion

namespace {

using Seq = std::vector<VertexId>;
using Bag = std::map<Seq, std::uint64_t>;

class Expander {
public:
    Expander(std::shared_ptr<const VertexTable> table, std::size_t max_length, std::size_t cap)
        : table_(std::move(table)), max_(max_length), cap_(cap) {}

    Bag eval(const WalkExpr& e) {
        switch (e.kind()) {
        case WalkExpr::Kind::Atom: {
            Bag out;
            if (e.walk().length() <= max_) out.emplace(as_seq(e.walk()), 1);
            return out;
        }
        case WalkExpr::Kind::Trivial:
            return Bag{{Seq{e.vertex()}, 1}};
        case WalkExpr::Kind::Union: {
            Bag out;
            for (const auto& m : e.members())
                for (auto& [w, n] : eval(m)) add(out, w, n);
            return out;
        }
        case WalkExpr::Kind::NestProd:
            return product(eval(e.base()), eval(e.inserted()));
        case WalkExpr::Kind::Star: {
            Bag body = eval(e.body());
            std::erase_if(body, [](const auto& kv) { return kv.first.size() == 1; });
            Bag out{{Seq{e.vertex()}, 1}};
            Bag level = out;
            while (!level.empty() && !body.empty()) {
                level = product(level, body);
                for (auto& [w, n] : level) add(out, w, n);
            }
            return out;
        }
        }
        return {};
    }

private:
    static Seq as_seq(const Walk& w) { return Seq(w.vertices().begin(), w.vertices().end()); }

    void add(Bag& bag, const Seq& w, std::uint64_t n) {
        bag[w] += n;
        if (bag.size() > cap_)
            throw Error(ErrorKind::CapExceeded,
                        "expansion exceeded the cap of " + std::to_string(cap_) + " walks");
    }

    Bag product(const Bag& as, const Bag& bs) {
        Bag out;
        for (const auto& [a, na] : as) {
            const Walk wa = Walk::unchecked(table_, a);
            for (const auto& [b, nb] : bs) {
                if (a.size() + b.size() - 2 > max_) continue;
                auto r = qf::nest(wa, Walk::unchecked(table_, b));
                if (r) add(out, as_seq(r.walk()), na * nb);
            }
        }
        return out;
    }

    std::shared_ptr<const VertexTable> table_;
    std::size_t max_;
    std::size_t cap_;
};

bool trivial_only(const WalkExpr& e) {
    if (e.kind() == WalkExpr::Kind::Trivial) return true;
    if (e.kind() == WalkExpr::Kind::Union)
        return !e.members().empty() &&
               std::all_of(e.members().begin(), e.members().end(), [](const WalkExpr& m) { return trivial_only(m); });
    return false;
}

}  // namespace

Expansion expand(const WalkExpr& e, std::size_t max_length, std::size_t cap) {
    Bag bag = Expander(e.table(), max_length, cap).eval(e);
    Expansion out;
    for (auto& [w, n] : bag) {
        out.walks.push_back(Walk::unchecked(e.table(), w));
        out.derivations += n;
    }
    std::sort(out.walks.begin(), out.walks.end());
    return out;
}

std::size_t star_height_of_expr(const WalkExpr& e) {
    switch (e.kind()) {
    case WalkExpr::Kind::Atom:
    case WalkExpr::Kind::Trivial:
        return 0;
    case WalkExpr::Kind::Union: {
        std::size_t h = 0;
        for (const auto& m : e.members()) h = std::max(h, star_height_of_expr(m));
        return h;
    }
    case WalkExpr::Kind::NestProd:
        return std::max(star_height_of_expr(e.base()), star_height_of_expr(e.inserted()));
    case WalkExpr::Kind::Star:
        return trivial_only(e.body()) ? 0 : 1 + star_height_of_expr(e.body());
    }
    return 0;
}

// ---------------------------------------------------------------- rendering

namespace {

constexpr std::string_view kDot = "\xE2\x8A\x99";   // ⊙
constexpr std::string_view kStar = "\xE2\x88\x97";  // ∗

struct Rx {
    enum class K { Empty, Eps, Edge, Seq, Alt, Star } k = K::Eps;
    VertexId t = 0, h = 0;
    std::vector<Rx> kids;

    static Rx edge(VertexId t, VertexId h) { return Rx{K::Edge, t, h, {}}; }

    static Rx seq(std::vector<Rx> parts) {
        std::vector<Rx> flat;
        for (auto& p : parts) {
            if (p.k == K::Empty) return Rx{K::Empty, 0, 0, {}};
            if (p.k == K::Eps) continue;
            if (p.k == K::Seq) {
                for (auto& q : p.kids) flat.push_back(std::move(q));
            } else {
                flat.push_back(std::move(p));
            }
        }
        if (flat.empty()) return Rx{};
        if (flat.size() == 1) return std::move(flat.front());
        return Rx{K::Seq, 0, 0, std::move(flat)};
    }

    static Rx alt(std::vector<Rx> parts) {
        std::vector<Rx> flat;
        for (auto& p : parts) {
            if (p.k == K::Empty) continue;
            if (p.k == K::Alt) {
                for (auto& q : p.kids) flat.push_back(std::move(q));
            } else {
                flat.push_back(std::move(p));
            }
        }
        if (flat.empty()) return Rx{K::Empty, 0, 0, {}};
        if (flat.size() == 1) return std::move(flat.front());
        return Rx{K::Alt, 0, 0, std::move(flat)};
    }

    static Rx star(Rx body) {
        if (body.k == K::Eps || body.k == K::Empty) return Rx{};
        return Rx{K::Star, 0, 0, {std::move(body)}};
    }
};

// A walk shape with vertex markers kept at top level so that later
// insertions can find the last appearance of their base vertex.
struct Tok {
    bool marker;
    VertexId v;
    Rx rx;
};
using Toks = std::vector<Tok>;

VertexId head_of(const WalkExpr& e) {
    switch (e.kind()) {
    case WalkExpr::Kind::Atom: return e.walk().head();
    case WalkExpr::Kind::Trivial:
    case WalkExpr::Kind::Star: return e.vertex();
    case WalkExpr::Kind::NestProd: return head_of(e.base());
    case WalkExpr::Kind::Union:
        if (e.members().empty()) throw Error(ErrorKind::InvalidArgument, "an empty union has no head vertex");
        return head_of(e.members().front());
    }
    return 0;
}

Rx to_rx(const WalkExpr& e);

std::vector<Toks> shapes(const WalkExpr& e) {
    switch (e.kind()) {
    case WalkExpr::Kind::Atom: {
        Toks t;
        const Walk& w = e.walk();
        for (std::size_t i = 0; i < w.vertices().size(); ++i) {
            if (i) t.push_back({false, 0, Rx::edge(w[i - 1], w[i])});
            t.push_back({true, w[i], {}});
        }
        return {t};
    }
    case WalkExpr::Kind::Trivial:
        return {Toks{{true, e.vertex(), {}}}};
    case WalkExpr::Kind::Star:
        return {Toks{{true, e.vertex(), {}}, {false, 0, to_rx(e)}, {true, e.vertex(), {}}}};
    case WalkExpr::Kind::Union: {
        std::vector<Toks> out;
        for (const auto& m : e.members())
            for (auto& s : shapes(m)) out.push_back(std::move(s));
        return out;
    }
    case WalkExpr::Kind::NestProd: {
        const VertexId beta = head_of(e.inserted());
        const auto inner = shapes(e.inserted());
        std::vector<Toks> out;
        for (const auto& a : shapes(e.base())) {
            std::optional<std::size_t> at;
            for (std::size_t i = a.size(); i-- > 0;)
                if (a[i].marker && a[i].v == beta) {
                    at = i;
                    break;
                }
            if (!at) continue;
            for (const auto& b : inner) {
                Toks t(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(*at));
                t.insert(t.end(), b.begin(), b.end());
                t.insert(t.end(), a.begin() + static_cast<std::ptrdiff_t>(*at) + 1, a.end());
                out.push_back(std::move(t));
            }
        }
        return out;
    }
    }
    return {};
}

Rx to_rx(const WalkExpr& e) {
    if (e.kind() == WalkExpr::Kind::Star) return Rx::star(to_rx(e.body()));
    std::vector<Rx> alts;
    for (auto& s : shapes(e)) {
        std::vector<Rx> parts;
        for (auto& t : s)
            if (!t.marker) parts.push_back(std::move(t.rx));
        alts.push_back(Rx::seq(std::move(parts)));
    }
    return Rx::alt(std::move(alts));
}

class RxPrinter {
public:
    RxPrinter(const Quiver& q, bool language, Charset cs) : q_(q), language_(language), cs_(cs) {}

    std::string print(const Rx& r) {
        switch (r.k) {
        case Rx::K::Empty: return cs_ == Charset::Ascii ? "0" : "\xE2\x88\x85";
        case Rx::K::Eps: return cs_ == Charset::Ascii ? "()" : "\xCE\xB5";
        case Rx::K::Edge: return edge(r.t, r.h);
        case Rx::K::Seq: {
            std::string out;
            for (const auto& k : r.kids) out += k.k == Rx::K::Alt ? "(" + print(k) + ")" : print(k);
            return out;
        }
        case Rx::K::Alt: {
            std::string out;
            for (std::size_t i = 0; i < r.kids.size(); ++i) {
                if (i) out += '+';
                out += print(r.kids[i]);
            }
            return out;
        }
        case Rx::K::Star: {
            const Rx& body = r.kids.front();
            const std::string inner = print(body);
            const bool atomic = body.k == Rx::K::Edge && (!language_ || inner.size() == 1);
            return (atomic ? inner : "(" + inner + ")") + std::string(cs_ == Charset::Ascii ? "*" : kStar);
        }
        }
        return {};
    }

private:
    std::string edge(VertexId t, VertexId h) {
        if (!language_) {
            const VertexId pair[] = {t, h};
            std::string s = format_walk(*q_.table(), pair);
            return s.front() == '(' ? s : "(" + s + ")";
        }
        auto label = q_.label(t, h);
        if (!label) throw Error(ErrorKind::InvalidArgument, "edge (" + q_.name(t) + "," + q_.name(h) + ") has no label");
        return *label;
    }

    const Quiver& q_;
    bool language_;
    Charset cs_;
};

void render_vertex(const WalkExpr& e, Charset cs, std::string& out) {
    switch (e.kind()) {
    case WalkExpr::Kind::Atom:
        out += e.walk().to_string();
        return;
    case WalkExpr::Kind::Trivial: {
        const VertexId v[] = {e.vertex()};
        out += format_walk(*e.table(), v);
        return;
    }
    case WalkExpr::Kind::Union:
        out += '{';
        for (std::size_t i = 0; i < e.members().size(); ++i) {
            if (i) out += ", ";
            render_vertex(e.members()[i], cs, out);
        }
        out += '}';
        return;
    case WalkExpr::Kind::Star: {
        const WalkExpr& b = e.body();
        const bool braced = b.kind() == WalkExpr::Kind::Union && b.members().size() != 1;
        if (!braced) out += '{';
        render_vertex(b, cs, out);
        if (!braced) out += '}';
        out += cs == Charset::Ascii ? std::string_view("*") : kStar;
        return;
    }
    case WalkExpr::Kind::NestProd: {
        auto operand = [&](const WalkExpr& x) {
            const bool wrap = x.kind() == WalkExpr::Kind::NestProd;
            if (wrap) out += '(';
            render_vertex(x, cs, out);
            if (wrap) out += ')';
        };
        operand(e.base());
        out += ' ';
        out += cs == Charset::Ascii ? std::string_view(".") : kDot;
        out += ' ';
        operand(e.inserted());
        return;
    }
    }
}

class ExprParser {
public:
    ExprParser(const Quiver& q, std::string_view text) : q_(q), c_(text) {}

    WalkExpr run() {
        WalkExpr e = expr();
        c_.skip_ws();
        if (!c_.eof()) c_.fail("unexpected trailing input");
        return e;
    }

private:
    bool eat(std::string_view s) {
        c_.skip_ws();
        if (!c_.starts_with(s)) return false;
        c_.advance(s.size());
        return true;
    }

    WalkExpr expr() {
        WalkExpr acc = term();
        while (eat(".") || eat(kDot)) acc = WalkExpr::nest(acc, term());
        return acc;
    }

    WalkExpr term() {
        c_.skip_ws();
        const std::size_t at = c_.pos();
        if (eat("{")) {
            std::vector<WalkExpr> items;
            if (!eat("}")) {
                do items.push_back(expr());
                while (eat(","));
                c_.expect("}");
            }
            if (!eat("*") && !eat(kStar)) return WalkExpr::union_of(q_.table(), std::move(items));
            WalkExpr body = items.size() == 1 ? items.front() : WalkExpr::union_of(q_.table(), std::move(items));
            try {
                return WalkExpr::star(body, head_of(body));
            } catch (const Error& e) {
                c_.fail_at(at, e.what());
            }
        }
        if (c_.peek() == '(' && detail::spaced_walk_end(c_) == std::string_view::npos) {
            c_.advance();
            WalkExpr inner = expr();
            c_.expect(")");
            return inner;
        }
        auto ids = detail::read_walk_token(c_, q_);
        try {
            return WalkExpr::atom(Walk::on(q_, std::move(ids)));
        } catch (const Error& e) {
            c_.fail_at(at, e.what());
        }
    }

    const Quiver& q_;
    detail::Cursor c_;
};

}  // namespace

std::string render(const WalkExpr& e, RenderMode mode, const Quiver& q, Charset charset) {
    if (mode == RenderMode::Vertex) {
        std::string out;
        render_vertex(e, charset, out);
        return out;
    }
    return RxPrinter(q, mode == RenderMode::Language, charset).print(to_rx(e));
}

WalkExpr parse_walk_expr(const Quiver& q, std::string_view text) { return ExprParser(q, text).run(); }

}  // namespace qf
