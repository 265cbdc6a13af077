#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kgprobe/graph.hpp"

namespace kgprobe {

/// Pairwise comparison of two graphs' vocabularies and link structure.
/// Edge fractions use each graph's own deduplicated directed edge count as
/// denominator; the unordered-pair count is symmetric.
struct OverlapReport {
    std::uint64_t shared_nodes = 0;
    double frac_of_a = 0.0;
    double frac_of_b = 0.0;
    std::uint64_t shared_edges_undirected = 0;  // unordered pairs in both
    double edge_frac_of_a = 0.0;
    double edge_frac_of_b = 0.0;
    std::uint64_t shared_edges_a = 0;  // directed edges of A with pair in B
    std::uint64_t shared_edges_b = 0;
    std::uint64_t edges_within_shared_a = 0;  // A edges with both ends shared
    std::uint64_t edges_within_shared_b = 0;
};

/// Node-set comparison by exact string equality (fills the node fields).
OverlapReport node_overlap(const KnowledgeGraph& a, const KnowledgeGraph& b);

/// Link comparison over unordered head–tail pairs (fills the edge fields).
OverlapReport edge_overlap(const KnowledgeGraph& a, const KnowledgeGraph& b);

/// Everything at once, including edges-within-shared-vocabulary counts.
OverlapReport overlap_report(const KnowledgeGraph& a, const KnowledgeGraph& b);

/// The triples of `a` whose unordered head–tail pair is linked (in either
/// direction) in `b`; labels and weights come from `a`.
KnowledgeGraph intersection_graph(const KnowledgeGraph& a,
                                  const KnowledgeGraph& b);

/// Per-relation recall of `inter` against `full`:
/// recall_r = |E_inter(r)| / |E_full(r)|. Relations missing from `inter`
/// map to 0; a relation in `inter` unknown to `full` is an error.
std::map<std::string, double> relation_recall(const KnowledgeGraph& full,
                                              const KnowledgeGraph& inter);

/// How negation cues are searched for in node text.
enum class NegationMatch {
    token,     // marker tokens as a contiguous whole-token subsequence
    substring, // marker as a plain substring
};

struct NegationReport {
    std::uint64_t negated_edges = 0;
    double fraction = 0.0;
    std::vector<Triple> sample;  // up to 20, in edge order
};

/// Counts edges whose head or tail text contains any marker.
NegationReport negation_stats(const KnowledgeGraph& g,
                              const std::vector<std::string>& markers,
                              NegationMatch mode = NegationMatch::token);

/// Tag shares over an external concept→tag annotation map, descending,
/// truncated to `top_k` (ties broken by tag name).
std::vector<std::pair<std::string, double>> annotated_distribution(
    const std::unordered_map<std::string, std::string>& annotations,
    std::size_t top_k);

struct FrequencyCoverage {
    double missing_fraction = 0.0;  // share of nodes absent from the table
    double mean_frequency = 0.0;    // arithmetic mean over found nodes
};

/// Looks every node up in an external phrase-frequency table.
FrequencyCoverage corpus_frequency_coverage(
    const KnowledgeGraph& g,
    const std::unordered_map<std::string, std::uint64_t>& freq_table);

}  // namespace kgprobe
