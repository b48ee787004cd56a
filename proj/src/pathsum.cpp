#include "quiverfact/pathsum.hpp"

#include <unordered_map>
#include <utility>

#include "quiverfact/enumeration.hpp"
#include "quiverfact/error.hpp"

namespace qf {

// ---- Poly ------------------------------------------------------------------

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_) x.canonicalize();
    trim();
}

Poly Poly::constant(const mpq_class& c) { return Poly(std::vector<mpq_class>{c}); }
Poly Poly::z() { return Poly(std::vector<mpq_class>{0, 1}); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t Poly::order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return i;
    throw Error(ErrorKind::DomainError, "order of the zero polynomial");
}

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::scaled(const mpq_class& k) const {
    Poly r = *this;
    for (auto& x : r.c_) x *= k;
    r.trim();
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

void Poly::divmod(const Poly& n, const Poly& d, Poly& quot, Poly& rem) {
    if (d.is_zero()) throw Error(ErrorKind::DomainError, "polynomial division by zero");
    rem = n;
    quot = Poly();
    if (n.degree() < d.degree()) return;
    quot.c_.assign(static_cast<std::size_t>(n.degree() - d.degree() + 1), 0);
    const mpq_class lead = d.c_.back();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        const auto shift = static_cast<std::size_t>(rem.degree() - d.degree());
        const mpq_class k = rem.c_.back() / lead;
        quot.c_[shift] = k;
        for (std::size_t i = 0; i < d.c_.size(); ++i) rem.c_[shift + i] -= k * d.c_[i];
        rem.trim();
    }
    quot.trim();
}

Poly Poly::exact_div(const Poly& n, const Poly& d) {
    Poly q, r;
    divmod(n, d, q, r);
    if (!r.is_zero()) throw Error(ErrorKind::DomainError, "inexact polynomial division");
    return q;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(1 / mpq_class(a.c_.back()));
}

mpq_class Poly::evaluate(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> Poly::evaluate(std::complex<double> x) const {
    std::complex<double> acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const mpq_class m = abs(c_[i]);
        if (c_[i] < 0) out += "-";
        else if (!first) out += "+";
        first = false;
        if (i == 0) {
            out += m.get_str();
            continue;
        }
        if (m != 1) out += m.get_den() == 1 ? m.get_str() : "(" + m.get_str() + ")";
        out += "z";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

// ---- RationalFn ------------------------------------------------------------

RationalFn::RationalFn(Poly num, Poly den) {
    if (den.is_zero()) throw Error(ErrorKind::DomainError, "rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
        num = Poly::exact_div(num, g);
        den = Poly::exact_div(den, g);
    }
    const mpq_class k = 1 / den.coeff(den.order());
    num_ = num.scaled(k);
    den_ = den.scaled(k);
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_); }

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn RationalFn::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DomainError, "inverse of the zero rational function");
    return RationalFn(den_, num_);
}

std::vector<mpq_class> RationalFn::series(std::size_t n) const {
    const mpq_class d0 = den_.coeff(0);
    if (d0 == 0) throw Error(ErrorKind::DomainError, "series expansion at a pole (z = 0)");
    std::vector<mpq_class> a(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        mpq_class acc = num_.coeff(k);
        for (std::size_t j = 1; j <= k && j < den_.coeffs().size(); ++j) acc -= den_.coeffs()[j] * a[k - j];
        a[k] = acc / d0;
    }
    return a;
}

mpq_class RationalFn::evaluate(const mpq_class& x) const {
    const mpq_class d = den_.evaluate(x);
    if (d == 0) throw Error(ErrorKind::DomainError, "evaluation at a pole z = " + x.get_str());
    return num_.evaluate(x) / d;
}

std::string RationalFn::to_string() const {
    mpz_class l = 1;
    for (const Poly* p : {&num_, &den_})
        for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    if (l == 1 && den_ == Poly::constant(1)) return num_.to_string();
    const mpq_class k(l);
    return "(" + num_.scaled(k).to_string() + ") / (" + den_.scaled(k).to_string() + ")";
}

// ---- path-sum recursion ----------------------------------------------------

namespace {

struct MemoKey {
    VertexId v;
    VertexSet deleted;
    friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoHash {
    std::size_t operator()(const MemoKey& k) const noexcept { return k.deleted.hash() * 31u + k.v; }
};

std::string describe(const Quiver& q, VertexId v, const VertexSet& deleted) {
    std::string s = "vertex '" + q.name(v) + "' with deletion set {";
    bool first = true;
    for (VertexId d : deleted.members()) {
        if (!first) s += ", ";
        s += q.name(d);
        first = false;
    }
    return s + "}";
}

void require_vertex(const Quiver& q, VertexId v) {
    if (!q.contains(v)) throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(v) + " is not in the graph");
}

// Shared skeleton: sums cycles off v, dressing internal vertices, and walks
// simple paths. Value is RationalFn or MatrixXcd; Ops supplies the algebra.
template <class Ops>
class PathSum {
public:
    using Value = typename Ops::Value;

    PathSum(const Quiver& q, Ops ops) : q_(q), ops_(std::move(ops)) {}

    const Value& dressed(VertexId v, const VertexSet& deleted) {
        MemoKey key{v, deleted};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Value sum = ops_.zero(v);
        for (const auto& c : simple_cycles_at(q_, v, deleted)) {
            const auto seq = c.vertices();
            VertexSet ex = deleted.with(v);
            Value p = ops_.edge(seq[0], seq[1]);
            for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
                p = ops_.mul(dressed(seq[i], ex), p);
                ex.insert(seq[i]);
                p = ops_.mul(ops_.edge(seq[i], seq[i + 1]), p);
            }
            sum = ops_.add(sum, p);
        }
        Value inv = ops_.bracket_inverse(sum, v, [&] { return describe(q_, v, deleted); });
        return memo_.emplace(std::move(key), std::move(inv)).first->second;
    }

    Value total(VertexId from, VertexId to) {
        const VertexSet none(q_.universe_size());
        if (from == to) return dressed(from, none);
        Value sum = ops_.zero_between(from, to);
        for (const auto& path : simple_paths(q_, from, to)) {
            const auto seq = path.vertices();
            VertexSet ex = none;
            Value p = dressed(seq[0], ex);
            ex.insert(seq[0]);
            for (std::size_t i = 1; i < seq.size(); ++i) {
                p = ops_.mul(ops_.edge(seq[i - 1], seq[i]), p);
                p = ops_.mul(dressed(seq[i], ex), p);
                ex.insert(seq[i]);
            }
            sum = ops_.add(sum, p);
        }
        return sum;
    }

private:
    const Quiver& q_;
    Ops ops_;
    std::unordered_map<MemoKey, Value, MemoHash> memo_;
};

struct ScalarOps {
    using Value = RationalFn;
    const EdgeWeights* w;

    Value zero(VertexId) const { return RationalFn(); }
    Value zero_between(VertexId, VertexId) const { return RationalFn(); }
    Value edge(VertexId t, VertexId h) const {
        auto it = w->find({t, h});
        return it == w->end() ? RationalFn::z() : it->second;
    }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value add(const Value& a, const Value& b) { return a + b; }
    template <class Describe>
    static Value bracket_inverse(const Value& cycles, VertexId, Describe describe) {
        const RationalFn b = RationalFn::constant(1) - cycles;
        if (b.is_zero()) throw Error(ErrorKind::DomainError, "required inverse does not exist at " + describe());
        return b.inverse();
    }
};

struct MatrixOps {
    using Value = Eigen::MatrixXcd;
    const WeightedQuiver* wq;
    double rcond_min;

    Value zero(VertexId v) const { return Value::Zero(wq->dim(v), wq->dim(v)); }
    Value zero_between(VertexId from, VertexId to) const { return Value::Zero(wq->dim(to), wq->dim(from)); }
    Value edge(VertexId t, VertexId h) const { return wq->weight(t, h); }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value add(const Value& a, const Value& b) { return a + b; }
    template <class Describe>
    Value bracket_inverse(const Value& cycles, VertexId, Describe describe) const {
        const Value b = Value::Identity(cycles.rows(), cycles.cols()) - cycles;
        Eigen::PartialPivLU<Value> lu(b);
        const double rc = lu.rcond();
        if (!(rc >= rcond_min))
            throw Error(ErrorKind::Singular, "singular bracket at " + describe() + " (rcond " + std::to_string(rc) + ")");
        return lu.inverse();
    }
};

}  // namespace

RationalFn dressed_weight(const Quiver& q, VertexId v, const VertexSet& deleted, const EdgeWeights& w) {
    require_vertex(q, v);
    if (deleted.contains(v)) throw Error(ErrorKind::InvalidArgument, "dressed vertex is in its own deletion set");
    PathSum<ScalarOps> ps(q, ScalarOps{&w});
    return ps.dressed(v, deleted);
}

RationalFn genfunc(const Quiver& q, VertexId from, VertexId to, const EdgeWeights& w) {
    require_vertex(q, from);
    require_vertex(q, to);
    PathSum<ScalarOps> ps(q, ScalarOps{&w});
    return ps.total(from, to);
}

RationalFn resolvent_entry(const Quiver& q, VertexId from, VertexId to, const EdgeWeights& w) {
    require_vertex(q, from);
    require_vertex(q, to);
    const auto& vs = q.vertices();
    const std::size_t n = vs.size();
    std::vector<std::size_t> pos(q.universe_size());
    for (std::size_t i = 0; i < n; ++i) pos[vs[i]] = i;

    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Poly::constant(1);
    for (auto [t, h] : q.edges()) {
        Poly wt = Poly::z();
        if (auto it = w.find({t, h}); it != w.end()) {
            if (!(it->second.denominator() == Poly::constant(1)))
                throw Error(ErrorKind::InvalidArgument, "resolvent_entry needs polynomial edge weights");
            wt = it->second.numerator();
        }
        m[pos[t]][pos[h]] = m[pos[t]][pos[h]] - wt;
    }

    // Bareiss elimination; the last pivot is the determinant.
    auto det = [](std::vector<std::vector<Poly>> a) {
        const std::size_t k = a.size();
        if (k == 0) return Poly::constant(1);
        Poly prev = Poly::constant(1);
        int sign = 1;
        for (std::size_t p = 0; p + 1 < k; ++p) {
            if (a[p][p].is_zero()) {
                std::size_t r = p + 1;
                while (r < k && a[r][p].is_zero()) ++r;
                if (r == k) return Poly();
                std::swap(a[p], a[r]);
                sign = -sign;
            }
            for (std::size_t i = p + 1; i < k; ++i) {
                for (std::size_t j = p + 1; j < k; ++j)
                    a[i][j] = Poly::exact_div(a[i][j] * a[p][p] - a[i][p] * a[p][j], prev);
                a[i][p] = Poly();
            }
            prev = a[p][p];
        }
        return sign > 0 ? a[k - 1][k - 1] : -a[k - 1][k - 1];
    };

    // (M^-1)[from][to] = (-1)^(from+to) det(M without row `to`, column `from`) / det M
    const std::size_t r = pos[to], c = pos[from];
    std::vector<std::vector<Poly>> minor;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == r) continue;
        std::vector<Poly> row;
        for (std::size_t j = 0; j < n; ++j)
            if (j != c) row.push_back(m[i][j]);
        minor.push_back(std::move(row));
    }
    Poly cof = det(std::move(minor));
    if ((r + c) % 2) cof = -cof;
    return RationalFn(cof, det(m));
}

// ---- matrix weights --------------------------------------------------------

int WeightedQuiver::dim(VertexId v) const {
    auto it = dims.find(v);
    return it == dims.end() ? 1 : it->second;
}

const Eigen::MatrixXcd& WeightedQuiver::weight(VertexId tail, VertexId head) const {
    auto it = weights.find({tail, head});
    if (it == weights.end())
        throw Error(ErrorKind::InvalidArgument,
                    "no weight for edge (" + quiver.name(tail) + "," + quiver.name(head) + ")");
    return it->second;
}

void WeightedQuiver::validate() const {
    for (auto [v, d] : dims) {
        if (d <= 0) throw Error(ErrorKind::InvalidArgument, "dimension of '" + quiver.name(v) + "' must be positive");
    }
    for (auto [t, h] : quiver.edges()) {
        const auto& m = weight(t, h);
        if (m.rows() != dim(h) || m.cols() != dim(t))
            throw Error(ErrorKind::InvalidArgument, "weight of edge (" + quiver.name(t) + "," + quiver.name(h) +
                                                        ") must be " + std::to_string(dim(h)) + "x" +
                                                        std::to_string(dim(t)));
    }
    for (const auto& [e, m] : weights)
        if (!quiver.has_edge(e.first, e.second))
            throw Error(ErrorKind::InvalidArgument, "weight given for a missing edge");
}

Eigen::MatrixXcd dressed_weight(const WeightedQuiver& wq, VertexId v, const VertexSet& deleted, double rcond_min) {
    require_vertex(wq.quiver, v);
    wq.validate();
    if (deleted.contains(v)) throw Error(ErrorKind::InvalidArgument, "dressed vertex is in its own deletion set");
    PathSum<MatrixOps> ps(wq.quiver, MatrixOps{&wq, rcond_min});
    return ps.dressed(v, deleted);
}

Eigen::MatrixXcd weighted_path_sum(const WeightedQuiver& wq, VertexId from, VertexId to, double rcond_min) {
    require_vertex(wq.quiver, from);
    require_vertex(wq.quiver, to);
    wq.validate();
    PathSum<MatrixOps> ps(wq.quiver, MatrixOps{&wq, rcond_min});
    return ps.total(from, to);
}

Eigen::MatrixXcd walk_weight(const WeightedQuiver& wq, const Walk& w) {
    const auto seq = w.vertices();
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(wq.dim(seq[0]), wq.dim(seq[0]));
    for (std::size_t i = 1; i < seq.size(); ++i) p = wq.weight(seq[i - 1], seq[i]) * p;
    return p;
}

Eigen::MatrixXcd block_matrix(const WeightedQuiver& wq, std::map<VertexId, int>* offsets) {
    std::map<VertexId, int> off;
    int total = 0;
    for (VertexId v : wq.quiver.vertices()) {
        off[v] = total;
        total += wq.dim(v);
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(total, total);
    for (auto [t, h] : wq.quiver.edges()) m.block(off[h], off[t], wq.dim(h), wq.dim(t)) = wq.weight(t, h);
    if (offsets) *offsets = std::move(off);
    return m;
}

Eigen::MatrixXcd dense_block_resolvent(const WeightedQuiver& wq, VertexId from, VertexId to) {
    require_vertex(wq.quiver, from);
    require_vertex(wq.quiver, to);
    wq.validate();
    std::map<VertexId, int> off;
    const Eigen::MatrixXcd m = block_matrix(wq, &off);
    const Eigen::MatrixXcd inv = (Eigen::MatrixXcd::Identity(m.rows(), m.cols()) - m).fullPivLu().inverse();
    return inv.block(off[to], off[from], wq.dim(to), wq.dim(from));
}

}  // namespace qf
