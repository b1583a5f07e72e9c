#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace netautoma {

using NodeId = std::uint32_t;
using EdgePair = std::pair<NodeId, NodeId>;

// Undirected simple graph, immutable after construction. Edges are kept both
// as a sorted canonical list (a < b) and as compressed adjacency (CSR), so
// neighbor scans and edge resampling are both cheap.
class Network {
public:
    Network() = default;

    Network(NodeId node_count, std::vector<EdgePair> edges) : node_count_(node_count) {
        for (auto& [a, b] : edges) {
            if (a == b)
                throw std::invalid_argument("Network: self-loop at node " + std::to_string(a));
            if (a >= node_count || b >= node_count)
                throw std::invalid_argument("Network: edge endpoint out of range");
            if (a > b) std::swap(a, b);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        build_adjacency();
    }

    NodeId node_count() const { return node_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<EdgePair>& edges() const { return edges_; }

    std::uint32_t degree(NodeId i) const { return offsets_[i + 1] - offsets_[i]; }
    const std::vector<std::uint32_t>& degrees() const { return degrees_; }

    std::span<const NodeId> neighbors(NodeId i) const {
        return {neighbors_.data() + offsets_[i], degree(i)};
    }

    bool has_edge(NodeId a, NodeId b) const {
        if (a > b) std::swap(a, b);
        return std::binary_search(edges_.begin(), edges_.end(), EdgePair{a, b});
    }

    // Re-checks every structural invariant. Construction already guarantees
    // them; tests call this on generator output.
    void validate() const {
        std::size_t total = 0;
        for (NodeId i = 0; i < node_count_; ++i) {
            auto nb = neighbors(i);
            if (degrees_[i] != nb.size())
                throw std::logic_error("Network: degree/adjacency mismatch");
            total += nb.size();
            for (std::size_t j = 0; j < nb.size(); ++j) {
                if (nb[j] == i) throw std::logic_error("Network: self-loop in adjacency");
                if (j > 0 && nb[j] <= nb[j - 1])
                    throw std::logic_error("Network: adjacency not strictly sorted");
                auto back = neighbors(nb[j]);
                if (!std::binary_search(back.begin(), back.end(), i))
                    throw std::logic_error("Network: adjacency not symmetric");
            }
        }
        if (total != 2 * edges_.size())
            throw std::logic_error("Network: degree sum != 2M");
        for (std::size_t e = 1; e < edges_.size(); ++e)
            if (edges_[e] == edges_[e - 1]) throw std::logic_error("Network: duplicate edge");
    }

private:
    void build_adjacency() {
        degrees_.assign(node_count_, 0);
        for (auto [a, b] : edges_) {
            ++degrees_[a];
            ++degrees_[b];
        }
        offsets_.assign(node_count_ + 1, 0);
        for (NodeId i = 0; i < node_count_; ++i) offsets_[i + 1] = offsets_[i] + degrees_[i];
        neighbors_.resize(2 * edges_.size());
        std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
        for (auto [a, b] : edges_) {
            neighbors_[cursor[a]++] = b;
            neighbors_[cursor[b]++] = a;
        }
        for (NodeId i = 0; i < node_count_; ++i)
            std::sort(neighbors_.begin() + offsets_[i], neighbors_.begin() + offsets_[i + 1]);
    }

    NodeId node_count_ = 0;
    std::vector<EdgePair> edges_;
    std::vector<std::uint32_t> offsets_{0};
    std::vector<NodeId> neighbors_;
    std::vector<std::uint32_t> degrees_;
};

inline double mean_degree(const Network& net) {
    if (net.node_count() == 0) throw std::invalid_argument("mean_degree: empty network");
    return 2.0 * static_cast<double>(net.edge_count()) / net.node_count();
}

// Result of ingesting an edge-list file. Node tokens are remapped to a dense
// 0..N-1 range in first-appearance order; `node_names` keeps the original
// token for node i so diagnostics can refer back to the input file.
struct IngestedNetwork {
    Network network;
    std::vector<std::string> node_names;
};

// Edge-list text format: one edge per line, two whitespace-separated node
// tokens; `#` starts a comment line; blank lines are ignored. Tokens may be
// arbitrary strings. Self-loops are rejected, duplicate pairs collapse.
inline IngestedNetwork from_edge_list(std::istream& in) {
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> names;
    std::vector<EdgePair> edges;
    std::string line;
    std::size_t lineno = 0;
    auto intern = [&](const std::string& tok) {
        auto [it, inserted] = ids.try_emplace(tok, static_cast<NodeId>(names.size()));
        if (inserted) names.push_back(tok);
        return it->second;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // whitespace-only line
        if (!(ls >> b) || (ls >> extra))
            throw std::runtime_error("edge list parse error at line " + std::to_string(lineno) +
                                     ": expected exactly two node tokens");
        if (a == b)
            throw std::runtime_error("edge list validation error at line " +
                                     std::to_string(lineno) + ": self-loop on node '" + a + "'");
        edges.emplace_back(intern(a), intern(b));
    }
    Network net(static_cast<NodeId>(names.size()), std::move(edges));
    return {std::move(net), std::move(names)};
}

inline void write_edge_list(std::ostream& os, const Network& net) {
    for (auto [a, b] : net.edges()) os << a << ' ' << b << '\n';
}

}  // namespace netautoma
