#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "kgprobe/graph.hpp"

namespace kgprobe {

/// Relation-conflation scheme: keep labels, or merge the standard relation
/// inventory into 17 groups, 7 groups, or one generic label.
enum class MergeSchemeKind { none, seventeen, seven, one };

struct MergeScheme {
    MergeSchemeKind kind = MergeSchemeKind::none;
    std::unordered_map<std::string, std::string> mapping;

    /// Bundled mapping for a scheme (empty mapping for none/one).
    static MergeScheme bundled(MergeSchemeKind kind);
    /// User-supplied relation→group rows for seventeen/seven.
    static MergeScheme from_rows(
        MergeSchemeKind kind,
        const std::vector<std::pair<std::string, std::string>>& rows);
};

MergeSchemeKind merge_scheme_from_name(std::string_view name);
std::string_view merge_scheme_name(MergeSchemeKind kind);

/// Concepts found in a question and in its answer text.
struct GroundedPair {
    std::vector<NodeId> question_concepts;  // sorted, unique
    std::vector<NodeId> answer_concepts;
};

/// Greedy longest-match scan of normalized text against the KG vocabulary:
/// at each token position the longest n-gram (≤ max_ngram tokens) that is a
/// KG node is taken and the cursor jumps past it; matches made only of
/// stopwords are discarded. Returns sorted unique node ids.
std::vector<NodeId> ground_concepts(
    std::string_view text, const KnowledgeGraph& kg,
    const std::unordered_set<std::string>& stopwords,
    std::size_t max_ngram = 4);

/// A 1- or 2-edge directed path: node, relation, node [, relation, node].
struct KgPath {
    std::vector<NodeId> nodes;      // 2 or 3
    std::vector<RelId> relations;   // 1 or 2

    friend bool operator==(const KgPath&, const KgPath&) = default;
};

/// All simple directed paths (distinct nodes) from any question concept to
/// any answer concept using at most max_hops edges, deduplicated and sorted
/// lexicographically by named (node, relation, ...) sequence, shorter first.
std::vector<KgPath> retrieve_paths(const GroundedPair& gp,
                                   const KnowledgeGraph& kg, int max_hops);

/// Rewrites relation labels through the scheme, dropping edges whose
/// relation is unmapped (their labels are appended to `dropped_relations`
/// once each, sorted). Weights of triples that become identical accumulate.
KnowledgeGraph merge_relations(const KnowledgeGraph& g,
                               const MergeScheme& scheme,
                               std::vector<std::string>* dropped_relations =
                                   nullptr);

/// Adds (tail, relation_rev, head) for every triple. Relation count doubles;
/// edge count exactly doubles when no reverse edges pre-exist.
KnowledgeGraph densify_reverse(const KnowledgeGraph& g);

}  // namespace kgprobe
