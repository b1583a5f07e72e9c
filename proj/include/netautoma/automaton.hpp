#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "netautoma/graph.hpp"
#include "netautoma/matrix.hpp"
#include "netautoma/rng.hpp"
#include "netautoma/rule.hpp"

namespace netautoma {

using StateVector = std::vector<std::uint8_t>;

// Random initial condition: each cell alive with probability 1/2.
inline StateVector init_state(NodeId n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("init_state: n must be >= 1");
    Rng rng(seed);
    StateVector s(n);
    for (auto& bit : s) bit = rng.next_bit() ? 1 : 0;
    return s;
}

// Density of alive neighbors, rho_i = (1/k_i) * sum of s_j over j adjacent
// to i. Isolated nodes (k_i = 0) take rho = 0.
inline std::vector<double> density(const Network& net, const StateVector& state) {
    if (state.size() != net.node_count())
        throw std::invalid_argument("density: state length must equal node count");
    std::vector<double> rho(net.node_count(), 0.0);
    for (NodeId i = 0; i < net.node_count(); ++i) {
        const auto nb = net.neighbors(i);
        if (nb.empty()) continue;
        std::uint32_t alive = 0;
        for (NodeId j : nb) alive += state[j];
        rho[i] = static_cast<double>(alive) / static_cast<double>(nb.size());
    }
    return rho;
}

// Density level: the unique L with L/9 <= rho < (L+1)/9, except rho = 1
// which lands in level 8 (the top interval is closed). Densities are
// rationals a/k, so rho*9 sits within one rounding error of the exact value;
// the epsilon pulls boundary cases like a/k = 1/3 up onto their level and
// cannot misclassify anything unless k exceeds ~1e7.
inline int density_level(double rho) {
    if (rho < 0.0 || rho > 1.0) throw std::invalid_argument("density level: rho outside [0, 1]");
    const int level = static_cast<int>(std::floor(rho * 9.0 + 1e-9));
    return level > 8 ? 8 : level;
}

inline bool rule_fires(Rule rule, bool alive, int level) {
    const std::uint16_t mask = alive ? rule.survive : rule.born;
    return (mask >> level) & 1;
}

// Single-cell transition: dead cells consult the born set, alive cells the
// survive set, everything else dies.
inline std::uint8_t transition(std::uint8_t state, double rho, Rule rule) {
    return rule_fires(rule, state != 0, density_level(rho)) ? 1 : 0;
}

// One evolution run. tep row t holds the states at timestep t; dtep row t
// holds the densities observed at those states (the values that produced
// row t+1). Both matrices have T+1 rows so they stay aligned; the final
// density row is computed with one extra pass after the last transition.
struct EvolutionRecord {
    Matrix<std::uint8_t> tep;
    Matrix<double> dtep;
    Rule rule;
    std::uint64_t seed = 0;
    std::size_t transient = 20;  // rows to discard before feature extraction
};

inline EvolutionRecord evolve(const Network& net, Rule rule, std::size_t timesteps,
                              std::uint64_t seed, std::size_t transient = 20) {
    if (timesteps < 1) throw std::invalid_argument("evolve: timesteps must be >= 1");
    const NodeId n = net.node_count();
    EvolutionRecord rec;
    rec.rule = rule;
    rec.seed = seed;
    rec.transient = transient;
    rec.tep = Matrix<std::uint8_t>(timesteps + 1, n);
    rec.dtep = Matrix<double>(timesteps + 1, n);

    const StateVector s0 = init_state(n, seed);
    for (NodeId i = 0; i < n; ++i) rec.tep(0, i) = s0[i];

    // Levels are computed in exact integer arithmetic (L = 9a/k truncated,
    // capped at 8 for a == k); the stored density is the same a/k as a double.
    for (std::size_t t = 0; t <= timesteps; ++t) {
        auto cur = rec.tep.row(t);
        for (NodeId i = 0; i < n; ++i) {
            const auto nb = net.neighbors(i);
            const std::uint64_t k = nb.size();
            std::uint64_t alive = 0;
            for (NodeId j : nb) alive += cur[j];
            int level = 0;
            double rho = 0.0;
            if (k > 0) {
                level = static_cast<int>(9 * alive / k);
                if (level > 8) level = 8;
                rho = static_cast<double>(alive) / static_cast<double>(k);
            }
            rec.dtep(t, i) = rho;
            if (t < timesteps) rec.tep(t + 1, i) = rule_fires(rule, cur[i] != 0, level) ? 1 : 0;
        }
    }
    return rec;
}

// SD-TEP: densities signed by state, dtep (x) (2*tep - 1). Entries in [-1, 1].
inline Matrix<double> sd_tep(const EvolutionRecord& rec) {
    Matrix<double> out(rec.dtep.rows(), rec.dtep.cols());
    for (std::size_t t = 0; t < out.rows(); ++t)
        for (std::size_t i = 0; i < out.cols(); ++i)
            out(t, i) = rec.tep(t, i) ? rec.dtep(t, i) : -rec.dtep(t, i);
    return out;
}

// Per-column Shannon entropy of a binary matrix, -p log2 p - (1-p) log2 (1-p)
// with p the column's alive fraction and 0 log 0 := 0.
inline std::vector<double> column_entropy(const Matrix<std::uint8_t>& tep) {
    std::vector<double> out(tep.cols(), 0.0);
    if (tep.rows() == 0) return out;
    for (std::size_t c = 0; c < tep.cols(); ++c) {
        std::size_t alive = 0;
        for (std::size_t r = 0; r < tep.rows(); ++r) alive += tep(r, c);
        const double p = static_cast<double>(alive) / static_cast<double>(tep.rows());
        if (p > 0.0 && p < 1.0) out[c] = -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
    }
    return out;
}

}  // namespace netautoma
