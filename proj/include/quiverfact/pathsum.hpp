#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

#include "quiverfact/quiver.hpp"
#include "quiverfact/vertex_set.hpp"
#include "quiverfact/walk.hpp"

namespace qf {

/// Dense polynomial in z over the rationals, ascending coefficients, no
/// trailing zeros (the zero polynomial has no coefficients).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<mpq_class> coeffs);
    static Poly constant(const mpq_class& c);
    static Poly z();

    const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    mpq_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
    /// Index of the lowest non-zero coefficient; the zero polynomial throws.
    std::size_t order() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const mpq_class& k) const;

    /// Euclidean division; `d` must be non-zero.
    static void divmod(const Poly& n, const Poly& d, Poly& quot, Poly& rem);
    /// Exact division; throws if `d` does not divide `n`.
    static Poly exact_div(const Poly& n, const Poly& d);
    /// Monic gcd (zero when both are zero).
    static Poly gcd(Poly a, Poly b);

    mpq_class evaluate(const mpq_class& x) const;
    std::complex<double> evaluate(std::complex<double> x) const;

    /// `1-2z-z^3+2z^4+z^6`; non-integer coefficients print as `(3/2)z`.
    std::string to_string() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<mpq_class> c_;
};

/// Exact rational function num/den in z. Always normalized: no common factor,
/// and the lowest non-zero coefficient of the denominator is 1. Normal forms
/// are unique, so equality is structural.
class RationalFn {
public:
    RationalFn() : num_(), den_(Poly::constant(1)) {}
    RationalFn(Poly num, Poly den);
    explicit RationalFn(Poly num) : RationalFn(std::move(num), Poly::constant(1)) {}
    static RationalFn constant(const mpq_class& c) { return RationalFn(Poly::constant(c)); }
    static RationalFn z() { return RationalFn(Poly::z()); }

    const Poly& numerator() const noexcept { return num_; }
    const Poly& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RationalFn operator-() const;
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    /// Throws DomainError for the zero function.
    RationalFn inverse() const;

    /// First n+1 Taylor coefficients at z = 0. Throws DomainError at a pole.
    std::vector<mpq_class> series(std::size_t n) const;
    /// Throws DomainError at a pole.
    mpq_class evaluate(const mpq_class& x) const;

    /// `(1-z-z^2-z^3) / (1-2z-z^3+2z^4+z^6)`, both sides scaled to integer
    /// coefficients; just the numerator when that leaves a denominator of 1.
    std::string to_string() const;

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    Poly num_, den_;
};

/// Scalar edge weights; edges not in the map weigh z.
using EdgeWeights = std::map<Quiver::Edge, RationalFn>;

/// Dressed vertex (v)' on q with `deleted` removed: the inverse of
/// 1 - Σ over simple cycles off v of the cycle weight, each internal vertex
/// dressed on the subgraph that also drops v and the earlier internal
/// vertices. Throws DomainError when a bracket is identically zero.
RationalFn dressed_weight(const Quiver& q, VertexId v, const VertexSet& deleted, const EdgeWeights& w = {});

/// Sum of the weights of all walks from `from` to `to`, as a finite
/// continued fraction over simple paths and simple cycles.
RationalFn genfunc(const Quiver& q, VertexId from, VertexId to, const EdgeWeights& w = {});

/// Entry of (I - W)^-1 that sums walks from `from` to `to`, where W is the
/// weighted adjacency matrix. Fraction-free elimination over Q[z].
RationalFn resolvent_entry(const Quiver& q, VertexId from, VertexId to, const EdgeWeights& w = {});

/// Quiver with matrix weights. The edge (μ,ν) carries a d_ν × d_μ complex
/// matrix. Vertices missing from `dims` have dimension 1.
struct WeightedQuiver {
    Quiver quiver;
    std::map<VertexId, int> dims;
    std::map<Quiver::Edge, Eigen::MatrixXcd> weights;

    int dim(VertexId v) const;
    /// Throws InvalidArgument on a missing weight or a shape mismatch.
    void validate() const;
    const Eigen::MatrixXcd& weight(VertexId tail, VertexId head) const;
};

inline constexpr double kDefaultRcondMin = 1e-12;

/// Matrix dressed vertex on q with `deleted` removed. A bracket whose
/// reciprocal condition estimate is below `rcond_min` throws Singular,
/// naming the vertex and the deletion set.
Eigen::MatrixXcd dressed_weight(const WeightedQuiver& wq, VertexId v, const VertexSet& deleted,
                                double rcond_min = kDefaultRcondMin);

/// Sum of all walk weights from `from` to `to` (a d_to × d_from matrix),
/// multiplying right to left along each walk.
Eigen::MatrixXcd weighted_path_sum(const WeightedQuiver& wq, VertexId from, VertexId to,
                                   double rcond_min = kDefaultRcondMin);

/// Product of the edge weights of w, last edge leftmost. Identity for a
/// trivial walk.
Eigen::MatrixXcd walk_weight(const WeightedQuiver& wq, const Walk& w);

/// Block matrix M (block row ν, column μ holds the weight of (μ,ν)) over the
/// present vertices in id order, with each vertex's block offset.
Eigen::MatrixXcd block_matrix(const WeightedQuiver& wq, std::map<VertexId, int>* offsets = nullptr);

/// The (to, from) block of (I - M)^-1 by dense LU.
Eigen::MatrixXcd dense_block_resolvent(const WeightedQuiver& wq, VertexId from, VertexId to);

}  // namespace qf
