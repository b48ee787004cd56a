#pragma once

#include <complex>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "quiverfact/families.hpp"
#include "quiverfact/pathsum.hpp"
#include "quiverfact/quiver.hpp"
#include "quiverfact/walk.hpp"

namespace fx {

inline qf::Quiver complete(unsigned n) { return qf::make_family({qf::FamilyKind::Complete, n, 0}); }
inline qf::Quiver looped(unsigned n) { return qf::make_family({qf::FamilyKind::CompleteWithLoops, n, 0}); }
inline qf::Quiver cycle(unsigned n) { return qf::make_family({qf::FamilyKind::Cycle, n, 0}); }
inline qf::Quiver path(unsigned n) { return qf::make_family({qf::FamilyKind::Path, n, 0}); }
inline qf::Quiver bethe(unsigned n, unsigned d) { return qf::make_family({qf::FamilyKind::TruncatedBethe, n, d}); }

// Finite automaton of the language example.
inline qf::Quiver automaton() {
    return qf::Quiver::from_names({"1", "2", "3", "4"},
                                  {{"1", "2"}, {"2", "3"}, {"3", "3"}, {"3", "2"}, {"3", "1"}, {"3", "4"}},
                                  {{{"1", "2"}, "a"},
                                   {{"2", "3"}, "c"},
                                   {{"3", "3"}, "c"},
                                   {{"3", "2"}, "b"},
                                   {{"3", "1"}, "a"},
                                   {{"3", "4"}, "d"}});
}

inline qf::Quiver six_vertex() {
    return qf::Quiver::from_names({"1", "2", "3", "4", "5", "6"},
                                  {{"1", "1"}, {"1", "2"}, {"2", "3"}, {"3", "1"}, {"2", "4"},
                                   {"4", "2"}, {"4", "4"}, {"4", "5"}, {"5", "6"}, {"6", "4"}});
}

inline qf::Walk walk(const qf::Quiver& q, const std::string& text) { return qf::Walk::parse(q, text); }

inline std::vector<std::string> strings(const std::vector<qf::Walk>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(w.to_string());
    return out;
}

// Weakly connected quiver on n vertices, each ordered pair (loops included)
// an edge with probability p. Resamples until connected.
inline qf::Quiver random_connected(std::mt19937& rng, unsigned n, double p, bool undirected = false) {
    std::bernoulli_distribution coin(p);
    std::vector<std::string> names;
    for (unsigned i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    for (;;) {
        std::vector<qf::Quiver::Edge> edges;
        for (qf::VertexId a = 0; a < n; ++a)
            for (qf::VertexId b = undirected ? a : 0; b < n; ++b) {
                if (!coin(rng)) continue;
                edges.emplace_back(a, b);
                if (undirected && a != b) edges.emplace_back(b, a);
            }
        auto q = qf::Quiver::build(names, edges);
        if (q.is_connected()) return q;
    }
}

// Random complex weights with block dims in [1, max_dim], scaled so the
// block matrix has spectral norm `norm`.
inline qf::WeightedQuiver random_weighted(std::mt19937& rng, const qf::Quiver& q, int max_dim, double norm) {
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    qf::WeightedQuiver wq{q, {}, {}};
    for (auto v : q.vertices()) wq.dims[v] = dim(rng);
    for (auto [t, h] : q.edges()) {
        Eigen::MatrixXcd m(wq.dim(h), wq.dim(t));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m(i, j) = {u(rng), u(rng)};
        wq.weights[{t, h}] = m;
    }
    const double s = qf::block_matrix(wq).jacobiSvd().singularValues()(0);
    if (s > 0)
        for (auto& [e, m] : wq.weights) m *= norm / s;
    return wq;
}

// Some pair of equally shaped square weights fails to commute.
inline bool has_noncommuting_weights(const qf::WeightedQuiver& wq) {
    for (const auto& [e1, a] : wq.weights)
        for (const auto& [e2, b] : wq.weights)
            if (a.rows() == a.cols() && b.rows() == b.cols() && a.rows() == b.rows() && a.rows() > 1 &&
                (a * b - b * a).norm() > 1e-9 * a.norm() * b.norm())
                return true;
    return false;
}

}  // namespace fx
