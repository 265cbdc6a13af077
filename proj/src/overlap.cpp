#include "kgprobe/overlap.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "kgprobe/error.hpp"
#include "kgprobe/text.hpp"

namespace kgprobe {

namespace {

constexpr NodeId kNotShared = std::numeric_limits<NodeId>::max();

// For each node of g: its index in the shared vocabulary, or kNotShared.
// The shared vocabulary is enumerated in a's node order.
struct SharedVocab {
    std::vector<NodeId> a_to_shared;
    std::vector<NodeId> b_to_shared;
    std::uint64_t count = 0;
};

SharedVocab shared_vocab(const KnowledgeGraph& a, const KnowledgeGraph& b) {
    SharedVocab v;
    v.a_to_shared.assign(a.node_count(), kNotShared);
    v.b_to_shared.assign(b.node_count(), kNotShared);
    for (NodeId n = 0; n < a.node_count(); ++n) {
        if (auto other = b.find_node(a.node_name(n))) {
            NodeId id = static_cast<NodeId>(v.count++);
            v.a_to_shared[n] = id;
            v.b_to_shared[*other] = id;
        }
    }
    return v;
}

std::uint64_t pair_key(NodeId x, NodeId y) {
    if (x > y) std::swap(x, y);
    return (static_cast<std::uint64_t>(x) << 32) | y;
}

// Unordered pairs of g, restricted to edges whose endpoints are both shared.
std::unordered_set<std::uint64_t> shared_pairs(
    const KnowledgeGraph& g, const std::vector<NodeId>& to_shared) {
    std::unordered_set<std::uint64_t> pairs;
    pairs.reserve(g.triple_count());
    for (const Triple& t : g.triples()) {
        NodeId h = to_shared[t.head];
        NodeId tl = to_shared[t.tail];
        if (h == kNotShared || tl == kNotShared) continue;
        pairs.insert(pair_key(h, tl));
    }
    return pairs;
}

void require_frozen(const KnowledgeGraph& g, const char* what) {
    if (!g.frozen()) throw Error(Errc::not_frozen, what);
}

}  // namespace

OverlapReport node_overlap(const KnowledgeGraph& a, const KnowledgeGraph& b) {
    require_frozen(a, "node_overlap needs frozen graphs");
    require_frozen(b, "node_overlap needs frozen graphs");
    OverlapReport r;
    for (NodeId n = 0; n < a.node_count(); ++n)
        if (b.find_node(a.node_name(n))) ++r.shared_nodes;
    if (a.node_count()) r.frac_of_a = double(r.shared_nodes) / a.node_count();
    if (b.node_count()) r.frac_of_b = double(r.shared_nodes) / b.node_count();
    return r;
}

OverlapReport edge_overlap(const KnowledgeGraph& a, const KnowledgeGraph& b) {
    require_frozen(a, "edge_overlap needs frozen graphs");
    require_frozen(b, "edge_overlap needs frozen graphs");
    SharedVocab v = shared_vocab(a, b);
    auto pairs_a = shared_pairs(a, v.a_to_shared);
    auto pairs_b = shared_pairs(b, v.b_to_shared);

    OverlapReport r;
    for (const Triple& t : a.triples()) {
        NodeId h = v.a_to_shared[t.head], tl = v.a_to_shared[t.tail];
        if (h == kNotShared || tl == kNotShared) continue;
        if (pairs_b.count(pair_key(h, tl))) ++r.shared_edges_a;
    }
    for (const Triple& t : b.triples()) {
        NodeId h = v.b_to_shared[t.head], tl = v.b_to_shared[t.tail];
        if (h == kNotShared || tl == kNotShared) continue;
        if (pairs_a.count(pair_key(h, tl))) ++r.shared_edges_b;
    }
    for (std::uint64_t key : pairs_a)
        if (pairs_b.count(key)) ++r.shared_edges_undirected;
    if (a.triple_count())
        r.edge_frac_of_a = double(r.shared_edges_a) / a.triple_count();
    if (b.triple_count())
        r.edge_frac_of_b = double(r.shared_edges_b) / b.triple_count();
    return r;
}

OverlapReport overlap_report(const KnowledgeGraph& a, const KnowledgeGraph& b) {
    require_frozen(a, "overlap_report needs frozen graphs");
    require_frozen(b, "overlap_report needs frozen graphs");
    SharedVocab v = shared_vocab(a, b);
    auto pairs_a = shared_pairs(a, v.a_to_shared);
    auto pairs_b = shared_pairs(b, v.b_to_shared);

    OverlapReport r;
    r.shared_nodes = v.count;
    if (a.node_count()) r.frac_of_a = double(v.count) / a.node_count();
    if (b.node_count()) r.frac_of_b = double(v.count) / b.node_count();

    for (const Triple& t : a.triples()) {
        NodeId h = v.a_to_shared[t.head], tl = v.a_to_shared[t.tail];
        if (h == kNotShared || tl == kNotShared) continue;
        ++r.edges_within_shared_a;
        if (pairs_b.count(pair_key(h, tl))) ++r.shared_edges_a;
    }
    for (const Triple& t : b.triples()) {
        NodeId h = v.b_to_shared[t.head], tl = v.b_to_shared[t.tail];
        if (h == kNotShared || tl == kNotShared) continue;
        ++r.edges_within_shared_b;
        if (pairs_a.count(pair_key(h, tl))) ++r.shared_edges_b;
    }
    for (std::uint64_t key : pairs_a)
        if (pairs_b.count(key)) ++r.shared_edges_undirected;
    if (a.triple_count())
        r.edge_frac_of_a = double(r.shared_edges_a) / a.triple_count();
    if (b.triple_count())
        r.edge_frac_of_b = double(r.shared_edges_b) / b.triple_count();
    return r;
}

KnowledgeGraph intersection_graph(const KnowledgeGraph& a,
                                  const KnowledgeGraph& b) {
    require_frozen(a, "intersection_graph needs frozen graphs");
    require_frozen(b, "intersection_graph needs frozen graphs");
    SharedVocab v = shared_vocab(a, b);
    auto pairs_b = shared_pairs(b, v.b_to_shared);

    KnowledgeGraph out;
    for (const Triple& t : a.triples()) {
        NodeId h = v.a_to_shared[t.head], tl = v.a_to_shared[t.tail];
        if (h == kNotShared || tl == kNotShared) continue;
        if (!pairs_b.count(pair_key(h, tl))) continue;
        out.add_triple(a.node_name(t.head), a.relation_name(t.relation),
                       a.node_name(t.tail), t.weight);
    }
    out.freeze();
    return out;
}

std::map<std::string, double> relation_recall(const KnowledgeGraph& full,
                                              const KnowledgeGraph& inter) {
    std::vector<std::uint64_t> full_counts(full.relation_count(), 0);
    for (const Triple& t : full.triples()) ++full_counts[t.relation];

    std::vector<std::uint64_t> inter_counts(full.relation_count(), 0);
    for (const Triple& t : inter.triples()) {
        auto r = full.find_relation(inter.relation_name(t.relation));
        if (!r)
            throw Error(Errc::inconsistent_inputs,
                        "intersection carries relation '" +
                            std::string(inter.relation_name(t.relation)) +
                            "' unknown to the full graph");
        ++inter_counts[*r];
    }
    std::map<std::string, double> recall;
    for (RelId r = 0; r < full.relation_count(); ++r) {
        if (full_counts[r] == 0) continue;
        recall[std::string(full.relation_name(r))] =
            double(inter_counts[r]) / double(full_counts[r]);
    }
    return recall;
}

namespace {

// Does `tokens` contain `marker` as a contiguous run of whole tokens?
bool has_token_run(const std::vector<std::string_view>& tokens,
                   const std::vector<std::string_view>& marker) {
    if (marker.empty() || marker.size() > tokens.size()) return false;
    for (std::size_t i = 0; i + marker.size() <= tokens.size(); ++i) {
        bool hit = true;
        for (std::size_t j = 0; j < marker.size(); ++j) {
            if (tokens[i + j] != marker[j]) {
                hit = false;
                break;
            }
        }
        if (hit) return true;
    }
    return false;
}

}  // namespace

NegationReport negation_stats(const KnowledgeGraph& g,
                              const std::vector<std::string>& markers,
                              NegationMatch mode) {
    std::vector<std::vector<std::string_view>> marker_tokens;
    marker_tokens.reserve(markers.size());
    for (const std::string& m : markers) marker_tokens.push_back(split_tokens(m));

    std::vector<char> negated(g.node_count(), 0);
    for (NodeId n = 0; n < g.node_count(); ++n) {
        std::string_view text = g.node_name(n);
        if (mode == NegationMatch::substring) {
            for (const std::string& m : markers) {
                if (text.find(m) != std::string_view::npos) {
                    negated[n] = 1;
                    break;
                }
            }
        } else {
            auto tokens = split_tokens(text);
            for (const auto& m : marker_tokens) {
                if (has_token_run(tokens, m)) {
                    negated[n] = 1;
                    break;
                }
            }
        }
    }

    NegationReport rep;
    for (const Triple& t : g.triples()) {
        if (!negated[t.head] && !negated[t.tail]) continue;
        ++rep.negated_edges;
        if (rep.sample.size() < 20) rep.sample.push_back(t);
    }
    if (g.triple_count())
        rep.fraction = double(rep.negated_edges) / double(g.triple_count());
    return rep;
}

std::vector<std::pair<std::string, double>> annotated_distribution(
    const std::unordered_map<std::string, std::string>& annotations,
    std::size_t top_k) {
    if (annotations.empty())
        throw Error(Errc::empty_annotations, "no annotated concepts");
    std::unordered_map<std::string, std::uint64_t> counts;
    for (const auto& [concept_text, tag] : annotations) ++counts[tag];
    std::vector<std::pair<std::string, double>> out;
    out.reserve(counts.size());
    double inv = 1.0 / static_cast<double>(annotations.size());
    for (const auto& [tag, c] : counts)
        out.emplace_back(tag, static_cast<double>(c) * inv);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (out.size() > top_k) out.resize(top_k);
    return out;
}

FrequencyCoverage corpus_frequency_coverage(
    const KnowledgeGraph& g,
    const std::unordered_map<std::string, std::uint64_t>& freq_table) {
    if (g.node_count() == 0)
        throw Error(Errc::empty_graph, "coverage of an empty vocabulary");
    FrequencyCoverage cov;
    std::uint64_t missing = 0;
    double sum = 0.0;
    std::uint64_t found = 0;
    for (NodeId n = 0; n < g.node_count(); ++n) {
        auto it = freq_table.find(std::string(g.node_name(n)));
        if (it == freq_table.end()) {
            ++missing;
        } else {
            sum += static_cast<double>(it->second);
            ++found;
        }
    }
    cov.missing_fraction = double(missing) / double(g.node_count());
    if (found) cov.mean_frequency = sum / double(found);
    return cov;
}

}  // namespace kgprobe
