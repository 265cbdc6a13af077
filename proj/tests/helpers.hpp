#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kgprobe/graph.hpp"

namespace kgtest {

// Deterministic random multigraph builder shared across suites.
struct RandomGraphSpec {
    std::size_t max_nodes = 20;
    std::size_t max_triples = 60;
    std::size_t relations = 3;
    bool fractional_weights = false;
    bool allow_self_loops = true;
    bool isolated_nodes = true;  // pre-intern the whole name pool
};

inline kgprobe::KnowledgeGraph random_graph(std::mt19937& rng, const RandomGraphSpec& spec = {}) {
    kgprobe::KnowledgeGraph g;
    std::uniform_int_distribution<std::size_t> n_nodes(2, spec.max_nodes);
    const std::size_t n = n_nodes(rng);
    std::vector<std::string> nodes;
    for (std::size_t i = 0; i < n; ++i) nodes.push_back("n" + std::to_string(i));
    if (spec.isolated_nodes) {
        for (const auto& name : nodes) g.intern_node(name);
    }

    std::uniform_int_distribution<std::size_t> n_triples(1, spec.max_triples);
    std::uniform_int_distribution<std::size_t> pick_node(0, n - 1);
    std::uniform_int_distribution<std::size_t> pick_rel(0, spec.relations - 1);
    const std::size_t m = n_triples(rng);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t h = pick_node(rng);
        std::size_t t = pick_node(rng);
        if (!spec.allow_self_loops && h == t) t = (t + 1) % n;
        double w = 1.0;
        if (spec.fractional_weights) {
            std::uniform_real_distribution<double> wd(0.001, 50.0);
            w = wd(rng);
        }
        g.add_triple(nodes[h], "r" + std::to_string(pick_rel(rng)), nodes[t], w);
    }
    return g;
}

inline std::string random_bytes(std::mt19937& rng, std::size_t max_len = 24) {
    std::uniform_int_distribution<std::size_t> len_d(0, max_len);
    std::uniform_int_distribution<int> byte_d(0, 255);
    std::string s;
    const std::size_t len = len_d(rng);
    for (std::size_t i = 0; i < len; ++i) s.push_back(static_cast<char>(byte_d(rng)));
    return s;
}

// Mixed printable/unicode strings that stress the normalizer.
inline std::string random_texty(std::mt19937& rng, std::size_t max_len = 20) {
    static const std::vector<std::string> pieces = {
        "a",  "B",   "z",  "9",    "_",  " ",  "'",  "-",  ".",  ",", "!", "?",
        "\t", "\xC3\xA9" /* é */,  "\xC3\x84" /* Ä */, "\xE2\x80\x99" /* right quote */,
        "\xE2\x80\x93" /* en dash */, "word", "Tree", "  ", "07"};
    std::uniform_int_distribution<std::size_t> len_d(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
    std::string s;
    const std::size_t len = len_d(rng);
    for (std::size_t i = 0; i < len; ++i) s += pieces[pick(rng)];
    return s;
}

}  // namespace kgtest
