#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "netautoma/matrix.hpp"

namespace netautoma {

// Value domain of a matrix being binned: D-TEPs live in [0,1], SD-TEPs in
// [-1,1] (mapped affinely onto [0,1] before binning).
enum class Domain { unit, signed_unit };

struct Histogram {
    std::vector<double> bins;  // normalized: non-negative, sums to 1
    Domain domain = Domain::unit;

    std::size_t size() const { return bins.size(); }
};

// Bin membership. Intervals are half-open [b/L, (b+1)/L) with the top bin
// closed at 1, so the bins partition the domain and boundary values are
// counted once.
inline std::size_t bin_index(double v, std::size_t bin_count, Domain domain = Domain::unit) {
    if (bin_count < 1) throw std::invalid_argument("bin_index: bin count must be >= 1");
    if (domain == Domain::signed_unit) {
        if (v < -1.0 || v > 1.0) throw std::out_of_range("bin_index: value outside [-1, 1]");
        v = (v + 1.0) / 2.0;
    } else if (v < 0.0 || v > 1.0) {
        throw std::out_of_range("bin_index: value outside [0, 1]");
    }
    const std::size_t b = static_cast<std::size_t>(v * static_cast<double>(bin_count));
    return b >= bin_count ? bin_count - 1 : b;
}

namespace detail {

inline void check_histogram_input(const Matrix<double>& m, std::size_t bin_count) {
    if (m.empty()) throw std::invalid_argument("histogram: empty matrix");
    if (bin_count < 1) throw std::invalid_argument("histogram: bin count must be >= 1");
}

inline std::vector<double> normalized(const std::vector<std::size_t>& counts, std::size_t total) {
    std::vector<double> out(counts.size(), 0.0);
    if (total == 0) return out;
    for (std::size_t b = 0; b < counts.size(); ++b)
        out[b] = static_cast<double>(counts[b]) / static_cast<double>(total);
    return out;
}

}  // namespace detail

// Occurrence counts of every matrix entry over L density intervals,
// normalized by the total entry count so the result is invariant to
// network size.
inline Histogram global_histogram(const Matrix<double>& m, std::size_t bin_count,
                                  Domain domain = Domain::unit) {
    detail::check_histogram_input(m, bin_count);
    std::vector<std::size_t> counts(bin_count, 0);
    for (double v : m.data()) ++counts[bin_index(v, bin_count, domain)];
    return {detail::normalized(counts, m.rows() * m.cols()), domain};
}

// How degree classes are averaged: one histogram per distinct degree present,
// then either an unweighted mean over degree classes (default) or a mean
// weighted by each class's node population.
enum class DegreeAveraging { per_degree, node_weighted };

// Splits the histogram by node degree: columns whose node has degree k form
// one normalized histogram, and the result is the mean over the degree
// classes actually present (absent degrees contribute nothing).
inline Histogram degree_histogram_mean(const Matrix<double>& m,
                                       const std::vector<std::uint32_t>& degrees,
                                       std::size_t bin_count, Domain domain = Domain::unit,
                                       DegreeAveraging averaging = DegreeAveraging::per_degree) {
    detail::check_histogram_input(m, bin_count);
    if (degrees.size() != m.cols())
        throw std::invalid_argument("degree histogram: degrees length must equal column count");
    std::map<std::uint32_t, std::pair<std::vector<std::size_t>, std::size_t>> by_degree;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        auto& [counts, nodes] = by_degree[degrees[c]];
        if (counts.empty()) counts.assign(bin_count, 0);
        ++nodes;
        for (std::size_t r = 0; r < m.rows(); ++r)
            ++counts[bin_index(m(r, c), bin_count, domain)];
    }
    std::vector<double> mean(bin_count, 0.0);
    double weight_total = 0.0;
    for (const auto& [k, entry] : by_degree) {
        const auto& [counts, nodes] = entry;
        const double w = averaging == DegreeAveraging::per_degree
                             ? 1.0
                             : static_cast<double>(nodes);
        const auto h = detail::normalized(counts, nodes * m.rows());
        for (std::size_t b = 0; b < bin_count; ++b) mean[b] += w * h[b];
        weight_total += w;
    }
    for (double& v : mean) v /= weight_total;
    return {std::move(mean), domain};
}

// Splits the histogram by timestep: one normalized histogram per row,
// averaged over rows.
inline Histogram temporal_histogram_mean(const Matrix<double>& m, std::size_t bin_count,
                                         Domain domain = Domain::unit) {
    detail::check_histogram_input(m, bin_count);
    std::vector<double> mean(bin_count, 0.0);
    std::vector<std::size_t> counts(bin_count);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        counts.assign(bin_count, 0);
        for (double v : m.row(r)) ++counts[bin_index(v, bin_count, domain)];
        for (std::size_t b = 0; b < bin_count; ++b)
            mean[b] += static_cast<double>(counts[b]) / static_cast<double>(m.cols());
    }
    for (double& v : mean) v /= static_cast<double>(m.rows());
    return {std::move(mean), domain};
}

// Binary-pattern histogram of a TEP: a length-D window slides down each
// column (stride 1), its bits are read as a binary number with the earliest
// row as the most significant bit, and occurrences are accumulated over all
// columns into a normalized histogram of size 2^D.
inline Histogram binary_pattern_histogram(const Matrix<std::uint8_t>& tep, std::size_t window) {
    if (window < 1 || window > 16)
        throw std::invalid_argument("binary pattern: window must be in [1, 16]");
    if (tep.empty()) throw std::invalid_argument("binary pattern: empty matrix");
    if (window > tep.rows())
        throw std::invalid_argument("binary pattern: window exceeds row count");
    std::vector<std::size_t> counts(std::size_t{1} << window, 0);
    const std::uint32_t mask = (1u << window) - 1;
    for (std::size_t c = 0; c < tep.cols(); ++c) {
        std::uint32_t word = 0;
        for (std::size_t r = 0; r < tep.rows(); ++r) {
            word = ((word << 1) | tep(r, c)) & mask;
            if (r + 1 >= window) ++counts[word];
        }
    }
    const std::size_t total = tep.cols() * (tep.rows() - window + 1);
    return {detail::normalized(counts, total), Domain::unit};
}

}  // namespace netautoma
