#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kgprobe/graph.hpp"

namespace kgprobe {

/// Structural summary of one frozen graph.
struct GraphStats {
    std::uint64_t n_triples = 0;
    std::uint64_t n_nodes = 0;
    std::uint64_t n_relations = 0;
    double density = 0.0;      // |E| / (|N|·(|N|−1))
    double avg_degree = 0.0;   // |E| / |N|
    double node_entropy = 0.0; // Σ −P(e)·ln P(e), P(e) = degree(e)/|E|
};

/// |E| / (|N|·(|N|−1)). Throws TooFewNodes for |N| < 2.
double density(const KnowledgeGraph& g);

/// |E| / |N|. Throws EmptyGraph for |N| = 0.
double avg_degree(const KnowledgeGraph& g);

/// Entropy of the degree-based node distribution, in nats. P(e) =
/// degree(e)/|E| with degree = in+out, so Σ P(e) = 2 and the value can
/// exceed ln|N|. Throws EmptyGraph when there are no edges.
double node_entropy(const KnowledgeGraph& g);

/// All of the above in one pass.
GraphStats compute_stats(const KnowledgeGraph& g);

/// Per-relation share of edges, f_r = |E(r)|/|E|, sorted by descending
/// share then by relation name. Shares sum to 1.
std::vector<std::pair<std::string, double>> relation_distribution(
    const KnowledgeGraph& g);

}  // namespace kgprobe
