#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "netautoma/graph.hpp"
#include "netautoma/rng.hpp"

namespace netautoma {

// Fractional edge counts round half-up everywhere so datasets are
// bit-reproducible from their parameters.
inline std::size_t round_half_up(double x) {
    return static_cast<std::size_t>(std::floor(x + 0.5));
}

inline std::size_t max_edges(NodeId n) {
    return static_cast<std::size_t>(n) * (n - 1) / 2;
}

// Erdos-Renyi in the fixed-edge-count G(n, M) form with M = round(n*k_avg/2):
// the target mean degree is hit exactly, not just in expectation.
inline Network gen_erdos_renyi(NodeId n, double k_avg, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_erdos_renyi: n must be >= 1");
    const std::size_t m = round_half_up(n * k_avg / 2.0);
    if (m > max_edges(n))
        throw std::invalid_argument("gen_erdos_renyi: requested mean degree needs " +
                                    std::to_string(m) + " edges, more than n(n-1)/2");
    Rng rng(seed);
    std::set<EdgePair> chosen;
    while (chosen.size() < m) {
        NodeId a = static_cast<NodeId>(rng.below(n));
        NodeId b = static_cast<NodeId>(rng.below(n));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        chosen.insert({a, b});
    }
    return Network(n, {chosen.begin(), chosen.end()});
}

// Watts-Strogatz: ring lattice with k_avg/2 neighbors on each side, then each
// lattice edge (u, u+j) is rewired with probability p_rewire to a uniformly
// chosen non-neighbor of u. Edge count is preserved exactly.
inline Network gen_watts_strogatz(NodeId n, std::uint32_t k_avg, double p_rewire,
                                  std::uint64_t seed) {
    if (k_avg % 2 != 0 || k_avg < 2)
        throw std::invalid_argument("gen_watts_strogatz: k_avg must be even and >= 2");
    if (k_avg >= n)
        throw std::invalid_argument("gen_watts_strogatz: k_avg must be smaller than n");
    Rng rng(seed);
    std::vector<std::set<NodeId>> adj(n);
    for (NodeId u = 0; u < n; ++u)
        for (std::uint32_t j = 1; j <= k_avg / 2; ++j) {
            NodeId v = (u + j) % n;
            adj[u].insert(v);
            adj[v].insert(u);
        }
    for (NodeId u = 0; u < n; ++u) {
        for (std::uint32_t j = 1; j <= k_avg / 2; ++j) {
            NodeId v = (u + j) % n;
            if (!rng.bernoulli(p_rewire)) continue;
            if (adj[u].size() >= n - 1) continue;  // u already sees everyone
            NodeId w;
            do {
                w = static_cast<NodeId>(rng.below(n));
            } while (w == u || adj[u].count(w));
            adj[u].erase(v);
            adj[v].erase(u);
            adj[u].insert(w);
            adj[w].insert(u);
        }
    }
    std::vector<EdgePair> edges;
    edges.reserve(static_cast<std::size_t>(n) * k_avg / 2);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v : adj[u])
            if (u < v) edges.emplace_back(u, v);
    return Network(n, std::move(edges));
}

// Growth with nonlinear preferential attachment: starting from a clique on
// m+1 nodes (m = round(k_avg/2)), each arriving node attaches to m distinct
// existing nodes with probability proportional to degree^alpha. alpha = 1 is
// the classic Barabasi-Albert model, alpha = 0 is uniform attachment.
inline Network gen_barabasi_albert(NodeId n, double k_avg, double alpha, std::uint64_t seed) {
    const std::uint32_t m = static_cast<std::uint32_t>(round_half_up(k_avg / 2.0));
    if (m < 1) throw std::invalid_argument("gen_barabasi_albert: k_avg/2 must round to >= 1");
    if (n < m + 2) throw std::invalid_argument("gen_barabasi_albert: n must exceed the seed core");
    if (alpha < 0) throw std::invalid_argument("gen_barabasi_albert: alpha must be >= 0");
    Rng rng(seed);
    std::vector<EdgePair> edges;
    std::vector<std::uint32_t> degree(n, 0);
    for (NodeId a = 0; a <= m; ++a)
        for (NodeId b = a + 1; b <= m; ++b) {
            edges.emplace_back(a, b);
            ++degree[a];
            ++degree[b];
        }
    std::vector<double> cumulative;
    std::vector<NodeId> targets;
    for (NodeId u = m + 1; u < n; ++u) {
        cumulative.resize(u);
        double total = 0.0;
        for (NodeId i = 0; i < u; ++i) {
            total += std::pow(static_cast<double>(degree[i]), alpha);
            cumulative[i] = total;
        }
        targets.clear();
        while (targets.size() < m) {
            const double r = rng.real01() * total;
            auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
            NodeId t = static_cast<NodeId>(it - cumulative.begin());
            if (t >= u) t = u - 1;  // guards r == total after fp roundoff
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        for (NodeId t : targets) {
            edges.emplace_back(t, u);
            ++degree[t];
            ++degree[u];
        }
    }
    return Network(n, std::move(edges));
}

// Waxman geographic graph with a fixed beta: nodes uniform in the unit
// square, pair (i,j) connected with probability beta*exp(-d_ij/(alpha_w*d_max)),
// d_max = sqrt(2). Probabilities are capped at 1.
inline Network gen_waxman_beta(NodeId n, double beta, double alpha_w, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> x(n), y(n);
    for (NodeId i = 0; i < n; ++i) {
        x[i] = rng.real01();
        y[i] = rng.real01();
    }
    const double scale = 1.0 / (alpha_w * std::sqrt(2.0));
    std::vector<EdgePair> edges;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) {
            const double d = std::hypot(x[i] - x[j], y[i] - y[j]);
            const double p = beta * std::exp(-d * scale);
            if (rng.real01() < p) edges.emplace_back(i, j);
        }
    return Network(n, std::move(edges));
}

// Geographic generator calibrated to a target mean degree: beta is found by
// bisection so that the *expected* edge count sum(beta*exp(-d/(alpha_w*d_max)))
// over the seeded node positions matches n*k_avg/2 within 2%.
inline Network gen_waxman(NodeId n, double k_avg, std::uint64_t seed, double alpha_w = 0.15) {
    if (n < 2) throw std::invalid_argument("gen_waxman: n must be >= 2");
    const double target = static_cast<double>(round_half_up(n * k_avg / 2.0));
    if (target > static_cast<double>(max_edges(n)))
        throw std::invalid_argument("gen_waxman: target mean degree exceeds n-1");

    // Node positions must match gen_waxman_beta's draw order exactly, so the
    // calibrated beta applies to the same geometry.
    Rng rng(seed);
    std::vector<double> x(n), y(n);
    for (NodeId i = 0; i < n; ++i) {
        x[i] = rng.real01();
        y[i] = rng.real01();
    }
    const double scale = 1.0 / (alpha_w * std::sqrt(2.0));
    std::vector<double> weight;
    weight.reserve(max_edges(n));
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            weight.push_back(std::exp(-std::hypot(x[i] - x[j], y[i] - y[j]) * scale));

    auto expected = [&](double beta) {
        double s = 0.0;
        for (double w : weight) s += std::min(1.0, beta * w);
        return s;
    };
    double lo = 0.0, hi = 1.0;
    while (expected(hi) < target && hi < 1e12) hi *= 2.0;
    double beta = hi;
    bool ok = false;
    for (int step = 0; step < 60; ++step) {
        beta = 0.5 * (lo + hi);
        const double e = expected(beta);
        if (std::abs(e - target) <= 0.02 * target) {
            ok = true;
            break;
        }
        (e < target ? lo : hi) = beta;
    }
    if (!ok)
        throw std::invalid_argument("gen_waxman: beta calibration failed after 60 bisection steps");
    return gen_waxman_beta(n, beta, alpha_w, seed);
}

// Dorogovtsev-Mendes growth: start from a triangle; every arriving node picks
// an existing edge uniformly at random and connects to both endpoints.
// Final edge count is exactly 3 + 2(n-3).
inline Network gen_dorogovtsev_mendes(NodeId n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("gen_dorogovtsev_mendes: n must be >= 3");
    Rng rng(seed);
    std::vector<EdgePair> edges{{0, 1}, {0, 2}, {1, 2}};
    edges.reserve(3 + 2 * (static_cast<std::size_t>(n) - 3));
    for (NodeId u = 3; u < n; ++u) {
        const auto [a, b] = edges[rng.below(edges.size())];
        edges.emplace_back(a, u);
        edges.emplace_back(b, u);
    }
    return Network(n, std::move(edges));
}

// Noise perturbation: removes a = round(sigma*M/2) uniformly chosen existing
// edges and adds a uniformly chosen non-edges of the original graph, so the
// edge count is preserved and removed/added sets never overlap.
inline Network perturb(const Network& net, double sigma, std::uint64_t seed) {
    if (sigma <= 0.0 || sigma > 1.0)
        throw std::invalid_argument("perturb: sigma must be in (0, 1]");
    const std::size_t m = net.edge_count();
    const std::size_t a = round_half_up(sigma * static_cast<double>(m) / 2.0);
    if (a == 0) return net;
    if (max_edges(net.node_count()) - m < a)
        throw std::invalid_argument("perturb: not enough non-edges to add");

    Rng rng(seed);
    // partial Fisher-Yates picks `a` distinct edges to drop
    std::vector<std::uint32_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < a; ++i)
        std::swap(idx[i], idx[i + rng.below(m - i)]);
    std::vector<bool> removed(m, false);
    for (std::size_t i = 0; i < a; ++i) removed[idx[i]] = true;

    std::set<EdgePair> added;
    const NodeId n = net.node_count();
    while (added.size() < a) {
        NodeId u = static_cast<NodeId>(rng.below(n));
        NodeId v = static_cast<NodeId>(rng.below(n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (net.has_edge(u, v)) continue;
        added.insert({u, v});
    }

    std::vector<EdgePair> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        if (!removed[i]) edges.push_back(net.edges()[i]);
    edges.insert(edges.end(), added.begin(), added.end());
    return Network(n, std::move(edges));
}

}  // namespace netautoma
