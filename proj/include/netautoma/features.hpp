#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "netautoma/automaton.hpp"
#include "netautoma/histogram.hpp"
#include "netautoma/matrix.hpp"

namespace netautoma {

struct FeatureVector {
    std::vector<double> values;
    std::string descriptor;  // how the vector was built: sources, parts, bin sizes

    std::size_t size() const { return values.size(); }
};

// Canonical bin-size list: ascending, deduplicated, each in [2, 4096].
inline std::vector<std::size_t> canonical_bins(std::vector<std::size_t> bins) {
    if (bins.empty()) throw std::invalid_argument("features: bin size set must be non-empty");
    std::sort(bins.begin(), bins.end());
    bins.erase(std::unique(bins.begin(), bins.end()), bins.end());
    for (auto b : bins)
        if (b < 2 || b > 4096)
            throw std::invalid_argument("features: bin sizes must be in [2, 4096]");
    return bins;
}

// Upsilon: [global, degree-mean, temporal-mean] histograms of one matrix for
// one bin count, length 3L.
inline FeatureVector upsilon(const Matrix<double>& m, const std::vector<std::uint32_t>& degrees,
                             std::size_t bin_count, Domain domain = Domain::unit,
                             DegreeAveraging averaging = DegreeAveraging::per_degree) {
    FeatureVector fv;
    fv.values.reserve(3 * bin_count);
    for (const Histogram& h : {global_histogram(m, bin_count, domain),
                               degree_histogram_mean(m, degrees, bin_count, domain, averaging),
                               temporal_histogram_mean(m, bin_count, domain)})
        fv.values.insert(fv.values.end(), h.bins.begin(), h.bins.end());
    fv.descriptor = (domain == Domain::unit ? std::string("dtep") : std::string("sdtep")) +
                    "|global+degree+temporal|L=" + std::to_string(bin_count);
    return fv;
}

// Theta: upsilon concatenated over every bin size in canonical ascending
// order, length 3 * sum(L).
inline FeatureVector theta(const Matrix<double>& m, const std::vector<std::uint32_t>& degrees,
                           const std::vector<std::size_t>& bin_sizes,
                           Domain domain = Domain::unit,
                           DegreeAveraging averaging = DegreeAveraging::per_degree) {
    const auto bins = canonical_bins(bin_sizes);
    FeatureVector fv;
    std::string sizes;
    for (auto L : bins) {
        auto u = upsilon(m, degrees, L, domain, averaging);
        fv.values.insert(fv.values.end(), u.values.begin(), u.values.end());
        if (!sizes.empty()) sizes += ',';
        sizes += std::to_string(L);
    }
    fv.descriptor = (domain == Domain::unit ? std::string("dtep") : std::string("sdtep")) +
                    "|global+degree+temporal|bins=" + sizes;
    return fv;
}

// Omega: the combined feature vector, theta over the D-TEP (unit domain)
// followed by theta over the SD-TEP (signed domain), length 6 * sum(L).
// The record's transient rows are discarded from both matrices first.
inline FeatureVector omega(const EvolutionRecord& rec, const std::vector<std::uint32_t>& degrees,
                           const std::vector<std::size_t>& bin_sizes,
                           DegreeAveraging averaging = DegreeAveraging::per_degree) {
    const auto dtep = discard_transient(rec.dtep, rec.transient);
    const auto sdtep = discard_transient(sd_tep(rec), rec.transient);
    auto d = theta(dtep, degrees, bin_sizes, Domain::unit, averaging);
    auto s = theta(sdtep, degrees, bin_sizes, Domain::signed_unit, averaging);
    FeatureVector fv;
    fv.values = std::move(d.values);
    fv.values.insert(fv.values.end(), s.values.begin(), s.values.end());
    fv.descriptor = "omega|" + d.descriptor.substr(d.descriptor.find('|') + 1);
    return fv;
}

// ---------------------------------------------------------------------------
// Feature matrix CSV: header "label,f0,f1,...", one row per network sample,
// '.' decimal separator, 17 significant digits.
// ---------------------------------------------------------------------------

inline void write_feature_csv(std::ostream& os, const std::vector<std::string>& labels,
                              const std::vector<std::vector<double>>& rows) {
    if (labels.size() != rows.size())
        throw std::invalid_argument("feature csv: label/row count mismatch");
    const std::size_t width = rows.empty() ? 0 : rows.front().size();
    os << "label";
    for (std::size_t i = 0; i < width; ++i) os << ",f" << i;
    os << '\n';
    char buf[64];
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != width)
            throw std::invalid_argument("feature csv: ragged feature rows");
        os << labels[r];
        for (double v : rows[r]) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            os << ',' << buf;
        }
        os << '\n';
    }
}

struct FeatureTable {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> rows;
};

inline FeatureTable read_feature_csv(std::istream& in) {
    FeatureTable table;
    std::string line;
    if (!std::getline(in, line) || line.rfind("label", 0) != 0)
        throw std::runtime_error("feature csv: missing 'label,...' header");
    std::size_t width = std::string::npos;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::string label, cell;
        if (!std::getline(ls, label, ',') || label.empty())
            throw std::runtime_error("feature csv: missing label at line " +
                                     std::to_string(lineno));
        std::vector<double> row;
        while (std::getline(ls, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw std::runtime_error("feature csv: bad number '" + cell + "' at line " +
                                         std::to_string(lineno));
            }
        }
        if (width == std::string::npos) width = row.size();
        if (row.size() != width)
            throw std::runtime_error("feature csv: ragged row at line " + std::to_string(lineno));
        table.labels.push_back(std::move(label));
        table.rows.push_back(std::move(row));
    }
    if (table.rows.empty()) throw std::runtime_error("feature csv: no data rows");
    return table;
}

}  // namespace netautoma
