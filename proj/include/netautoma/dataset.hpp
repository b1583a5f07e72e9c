#pragma once

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "netautoma/generators.hpp"
#include "netautoma/graph.hpp"
#include "netautoma/parallel.hpp"
#include "netautoma/rng.hpp"

namespace netautoma {

enum class Model { random, small_world, scale_free, geographic, mendes };

inline Model parse_model(const std::string& name) {
    if (name == "random") return Model::random;
    if (name == "small-world" || name == "small_world") return Model::small_world;
    if (name == "scale-free" || name == "scale_free") return Model::scale_free;
    if (name == "geographic") return Model::geographic;
    if (name == "mendes") return Model::mendes;
    throw std::invalid_argument("unknown model '" + name + "'");
}

inline std::string model_name(Model m) {
    switch (m) {
        case Model::random: return "random";
        case Model::small_world: return "small-world";
        case Model::scale_free: return "scale-free";
        case Model::geographic: return "geographic";
        case Model::mendes: return "mendes";
    }
    return "?";
}

struct GeneratorSpec {
    Model model = Model::random;
    NodeId n = 500;
    double k_avg = 8.0;
    double rewire = 0.1;    // small-world only
    double alpha = 1.0;     // scale-free only
    double alpha_w = 0.15;  // geographic only

    void validate() const {
        if (n < 4) throw std::invalid_argument("generator: n must be >= 4");
        if (model != Model::mendes && k_avg >= n)
            throw std::invalid_argument("generator: k_avg must be below n");
        if (model == Model::scale_free && alpha < 0)
            throw std::invalid_argument("generator: alpha must be positive");
    }
};

inline Network generate(const GeneratorSpec& g, std::uint64_t seed) {
    g.validate();
    switch (g.model) {
        case Model::random: return gen_erdos_renyi(g.n, g.k_avg, seed);
        case Model::small_world:
            return gen_watts_strogatz(g.n, static_cast<std::uint32_t>(g.k_avg), g.rewire, seed);
        case Model::scale_free: return gen_barabasi_albert(g.n, g.k_avg, g.alpha, seed);
        case Model::geographic: return gen_waxman(g.n, g.k_avg, seed, g.alpha_w);
        case Model::mendes: return gen_dorogovtsev_mendes(g.n, seed);
    }
    throw std::logic_error("unreachable");
}

// One dataset class: a generator template crossed with lists of node counts
// and target mean degrees, `samples` networks per (n, k) cell.
struct ClassSpec {
    std::string label;
    GeneratorSpec generator;
    std::vector<NodeId> nodes{500};
    std::vector<double> degrees{8.0};
    std::size_t samples = 25;
};

struct DatasetSpec {
    std::uint64_t master_seed = 1;
    double noise_sigma = 0.0;  // 0 disables perturbation
    std::vector<ClassSpec> classes;

    void validate() const {
        if (classes.size() < 2) throw std::invalid_argument("dataset: needs at least 2 classes");
        for (const auto& c : classes) {
            if (c.samples < 1) throw std::invalid_argument("dataset: sample count must be >= 1");
            if (c.nodes.empty() || c.degrees.empty())
                throw std::invalid_argument("dataset: empty nodes/degrees list");
            if (c.label.empty() || c.label.find_first_of(" \t") != std::string::npos)
                throw std::invalid_argument("dataset: class labels must be non-empty and "
                                            "whitespace-free, got '" + c.label + "'");
        }
        if (noise_sigma < 0.0 || noise_sigma > 1.0)
            throw std::invalid_argument("dataset: noise must be in [0, 1]");
    }
};

struct LabeledNetwork {
    std::string label;
    std::size_t class_index = 0;
    std::size_t sample_index = 0;  // position within the class
    std::uint64_t seed = 0;        // generator seed for this sample
    Network network;
};

// Mendes growth has no mean-degree parameter, so its degree list collapses to
// a single cell instead of producing duplicate (n, k) combinations.
inline std::size_t class_cell_count(const ClassSpec& c) {
    const std::size_t dk = c.generator.model == Model::mendes ? 1 : c.degrees.size();
    return c.nodes.size() * dk;
}

inline std::size_t class_sample_count(const ClassSpec& c) {
    return class_cell_count(c) * c.samples;
}

// Generates every sample of the dataset. Per-sample seeds derive from
// (master seed, class index, sample index), so any single network can be
// regenerated without replaying the whole dataset. With noise_sigma > 0 the
// returned networks are the perturbed ones.
inline std::vector<LabeledNetwork> gen_dataset(const DatasetSpec& spec, int threads = 1) {
    spec.validate();
    std::vector<LabeledNetwork> out;
    for (std::size_t ci = 0; ci < spec.classes.size(); ++ci) {
        const auto& c = spec.classes[ci];
        const std::size_t dk = c.generator.model == Model::mendes ? 1 : c.degrees.size();
        std::size_t si = 0;
        for (std::size_t ni = 0; ni < c.nodes.size(); ++ni)
            for (std::size_t di = 0; di < dk; ++di)
                for (std::size_t s = 0; s < c.samples; ++s, ++si) {
                    LabeledNetwork ln;
                    ln.label = c.label;
                    ln.class_index = ci;
                    ln.sample_index = si;
                    ln.seed = derive_seed(spec.master_seed, "sample", ci, si);
                    out.push_back(std::move(ln));
                }
    }
    parallel_for(out.size(), threads, [&](std::size_t i) {
        auto& ln = out[i];
        const auto& c = spec.classes[ln.class_index];
        const std::size_t dk = c.generator.model == Model::mendes ? 1 : c.degrees.size();
        const std::size_t cell = ln.sample_index / c.samples;
        GeneratorSpec g = c.generator;
        g.n = c.nodes[cell / dk];
        if (g.model != Model::mendes) g.k_avg = c.degrees[cell % dk];
        ln.network = generate(g, ln.seed);
        if (spec.noise_sigma > 0.0) {
            const std::uint64_t noise_seed =
                derive_seed(spec.master_seed, "noise", ln.class_index, ln.sample_index);
            ln.network = perturb(ln.network, spec.noise_sigma, noise_seed);
        }
    });
    return out;
}

// ---------------------------------------------------------------------------
// Manifest format: plain-text key = value pairs with [class LABEL] sections.
//
//   seed = 42            master seed
//   samples = 25         networks per (class, n, k) cell
//   nodes = 500          comma list, default node counts
//   degrees = 4,8        comma list, default mean degrees
//   noise = 0.1          optional sigma; perturbed copies become the dataset
//
//   [class random]
//   model = random       random | small-world | scale-free | geographic | mendes
//   alpha = 1.0          scale-free exponent
//   rewire = 0.1         small-world rewiring probability
//   alpha_w = 0.15       geographic decay parameter
//
// Class sections may override samples/nodes/degrees.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline std::string strip_comment(const std::string& s) {
    auto pos = s.find('#');
    return pos == std::string::npos ? s : s.substr(0, pos);
}

template <typename T>
std::vector<T> parse_number_list(const std::string& text, const std::string& key) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            if constexpr (std::is_floating_point_v<T>)
                out.push_back(std::stod(item));
            else
                out.push_back(static_cast<T>(std::stoull(item)));
        } catch (const std::exception&) {
            throw std::invalid_argument("manifest: bad value '" + item + "' for " + key);
        }
    }
    if (out.empty()) throw std::invalid_argument("manifest: empty list for " + key);
    return out;
}

}  // namespace detail

inline DatasetSpec parse_manifest(std::istream& in) {
    DatasetSpec spec;
    ClassSpec defaults;  // top-level nodes/degrees/samples seed the per-class values
    ClassSpec* current = nullptr;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = detail::trim(detail::strip_comment(line));
        if (line.empty()) continue;
        auto fail = [&](const std::string& msg) {
            throw std::invalid_argument("manifest line " + std::to_string(lineno) + ": " + msg);
        };
        if (line.front() == '[') {
            if (line.back() != ']') fail("unterminated section header");
            std::string head = detail::trim(line.substr(1, line.size() - 2));
            if (head.rfind("class", 0) != 0) fail("expected [class LABEL]");
            std::string label = detail::trim(head.substr(5));
            if (label.empty()) fail("class label missing");
            ClassSpec c = defaults;
            c.label = label;
            spec.classes.push_back(c);
            current = &spec.classes.back();
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected key = value");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (value.empty()) fail("empty value for " + key);
        try {
            if (!current) {
                if (key == "seed")
                    spec.master_seed = std::stoull(value);
                else if (key == "noise")
                    spec.noise_sigma = std::stod(value);
                else if (key == "samples")
                    defaults.samples = std::stoull(value);
                else if (key == "nodes")
                    defaults.nodes = detail::parse_number_list<NodeId>(value, key);
                else if (key == "degrees")
                    defaults.degrees = detail::parse_number_list<double>(value, key);
                else
                    fail("unknown top-level key '" + key + "'");
            } else {
                if (key == "model")
                    current->generator.model = parse_model(value);
                else if (key == "samples")
                    current->samples = std::stoull(value);
                else if (key == "nodes")
                    current->nodes = detail::parse_number_list<NodeId>(value, key);
                else if (key == "degrees")
                    current->degrees = detail::parse_number_list<double>(value, key);
                else if (key == "rewire")
                    current->generator.rewire = std::stod(value);
                else if (key == "alpha")
                    current->generator.alpha = std::stod(value);
                else if (key == "alpha_w")
                    current->generator.alpha_w = std::stod(value);
                else
                    fail("unknown class key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            fail("bad value '" + value + "' for " + key);
        }
    }
    spec.validate();
    return spec;
}

inline DatasetSpec parse_manifest_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest " + path.string());
    return parse_manifest(in);
}

// ---------------------------------------------------------------------------
// On-disk dataset layout: one directory per class label holding numbered
// edge-list files, plus index.tsv at the root with one line per sample:
// label <tab> relative-path <tab> generator-seed. When noise is enabled the
// originals stay on disk and the index points at the perturbed copies.
// ---------------------------------------------------------------------------

struct DatasetIndexEntry {
    std::string label;
    std::filesystem::path path;  // resolved against the index location on load
    std::uint64_t seed = 0;
};

inline std::string sanitize_label(const std::string& label) {
    std::string out;
    for (char c : label)
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
    return out;
}

inline std::vector<DatasetIndexEntry> write_dataset(const DatasetSpec& spec,
                                                    const std::filesystem::path& out_dir,
                                                    int threads = 1) {
    namespace fs = std::filesystem;
    // Originals are generated unperturbed here; perturbation is re-applied
    // below so both copies can be written when noise is on.
    DatasetSpec clean = spec;
    clean.noise_sigma = 0.0;
    auto networks = gen_dataset(clean, threads);

    fs::create_directories(out_dir);
    std::vector<DatasetIndexEntry> index;
    std::ofstream idx(out_dir / "index.tsv");
    if (!idx) throw std::runtime_error("cannot write dataset index in " + out_dir.string());
    idx << "# netautoma dataset index: label\tpath\tseed\n";
    for (const auto& ln : networks) {
        const std::string dir = sanitize_label(ln.label);
        fs::create_directories(out_dir / dir);
        char stem[32];
        std::snprintf(stem, sizeof stem, "sample_%04zu", ln.sample_index);
        const std::string rel = dir + "/" + stem + ".edges";
        {
            std::ofstream os(out_dir / rel, std::ios::binary);
            write_edge_list(os, ln.network);
        }
        std::string dataset_rel = rel;
        if (spec.noise_sigma > 0.0) {
            const std::uint64_t noise_seed =
                derive_seed(spec.master_seed, "noise", ln.class_index, ln.sample_index);
            Network noisy = perturb(ln.network, spec.noise_sigma, noise_seed);
            dataset_rel = dir + "/" + stem + ".noisy.edges";
            std::ofstream os(out_dir / dataset_rel, std::ios::binary);
            write_edge_list(os, noisy);
        }
        idx << ln.label << '\t' << dataset_rel << '\t' << ln.seed << '\n';
        index.push_back({ln.label, out_dir / dataset_rel, ln.seed});
    }
    return index;
}

inline std::vector<DatasetIndexEntry> load_dataset_index(const std::filesystem::path& index_path) {
    std::ifstream in(index_path);
    if (!in) throw std::runtime_error("cannot open dataset index " + index_path.string());
    const auto base = index_path.parent_path();
    std::vector<DatasetIndexEntry> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        DatasetIndexEntry e;
        std::string path;
        if (!(ls >> e.label >> path >> e.seed))
            throw std::runtime_error("dataset index parse error at line " + std::to_string(lineno));
        e.path = base / path;
        out.push_back(std::move(e));
    }
    if (out.empty()) throw std::runtime_error("dataset index is empty: " + index_path.string());
    return out;
}

}  // namespace netautoma
