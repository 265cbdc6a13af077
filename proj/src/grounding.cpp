#include "kgprobe/grounding.hpp"

#include <algorithm>
#include <set>

#include "kgprobe/data_tables.hpp"
#include "kgprobe/error.hpp"
#include "kgprobe/text.hpp"

namespace kgprobe {

MergeScheme MergeScheme::bundled(MergeSchemeKind kind) {
    MergeScheme s;
    s.kind = kind;
    switch (kind) {
        case MergeSchemeKind::none:
        case MergeSchemeKind::one:
            break;
        case MergeSchemeKind::seventeen:
            s.mapping = relation_merge_seventeen();
            break;
        case MergeSchemeKind::seven:
            s.mapping = relation_merge_seven();
            break;
    }
    return s;
}

MergeScheme MergeScheme::from_rows(
    MergeSchemeKind kind,
    const std::vector<std::pair<std::string, std::string>>& rows) {
    if (kind == MergeSchemeKind::none || kind == MergeSchemeKind::one)
        throw Error(Errc::invalid_config,
                    "schemes none/one take no mapping table");
    MergeScheme s;
    s.kind = kind;
    for (const auto& [rel, group] : rows) s.mapping[rel] = group;
    return s;
}

MergeSchemeKind merge_scheme_from_name(std::string_view name) {
    if (name == "none" || name == "31") return MergeSchemeKind::none;
    if (name == "seventeen" || name == "17") return MergeSchemeKind::seventeen;
    if (name == "seven" || name == "7") return MergeSchemeKind::seven;
    if (name == "one" || name == "1") return MergeSchemeKind::one;
    throw Error(Errc::invalid_config,
                "unknown merge scheme '" + std::string(name) +
                    "' (expected none|17|7|1)");
}

std::string_view merge_scheme_name(MergeSchemeKind kind) {
    switch (kind) {
        case MergeSchemeKind::none: return "none";
        case MergeSchemeKind::seventeen: return "seventeen";
        case MergeSchemeKind::seven: return "seven";
        case MergeSchemeKind::one: return "one";
    }
    return "unknown";
}

std::vector<NodeId> ground_concepts(
    std::string_view text, const KnowledgeGraph& kg,
    const std::unordered_set<std::string>& stopwords, std::size_t max_ngram) {
    if (!kg.frozen())
        throw Error(Errc::not_frozen, "grounding needs a frozen graph");
    if (max_ngram == 0) max_ngram = 1;
    std::string normalized = normalize_concept_lenient(text);
    if (normalized.empty()) return {};
    auto tokens = split_tokens(normalized);

    std::set<NodeId> found;
    std::size_t i = 0;
    std::string candidate;
    while (i < tokens.size()) {
        std::size_t longest = std::min(max_ngram, tokens.size() - i);
        std::size_t advance = 1;
        for (std::size_t n = longest; n >= 1; --n) {
            candidate.assign(tokens[i]);
            for (std::size_t j = 1; j < n; ++j) {
                candidate += ' ';
                candidate += tokens[i + j];
            }
            auto id = kg.find_node(candidate);
            if (!id) continue;
            bool all_stop = true;
            for (std::size_t j = 0; j < n && all_stop; ++j)
                all_stop = stopwords.count(std::string(tokens[i + j])) > 0;
            if (!all_stop) found.insert(*id);
            advance = n;  // skip the matched span even when discarded
            break;
        }
        i += advance;
    }
    return {found.begin(), found.end()};
}

std::vector<KgPath> retrieve_paths(const GroundedPair& gp,
                                   const KnowledgeGraph& kg, int max_hops) {
    if (!kg.frozen())
        throw Error(Errc::not_frozen, "path retrieval needs a frozen graph");
    if (max_hops < 1 || max_hops > 2)
        throw Error(Errc::invalid_config, "max_hops must be 1 or 2");

    std::vector<char> is_answer(kg.node_count(), 0);
    for (NodeId a : gp.answer_concepts)
        if (a < kg.node_count()) is_answer[a] = 1;

    std::set<std::pair<std::vector<NodeId>, std::vector<RelId>>> dedup;
    for (NodeId q : gp.question_concepts) {
        if (q >= kg.node_count()) continue;
        for (std::uint32_t idx : kg.out_edges(q)) {
            const Triple& first = kg.triples()[idx];
            NodeId mid = first.tail;
            if (mid != q && is_answer[mid])
                dedup.insert({{q, mid}, {first.relation}});
            if (max_hops < 2 || mid == q) continue;
            for (std::uint32_t idx2 : kg.out_edges(mid)) {
                const Triple& second = kg.triples()[idx2];
                NodeId end = second.tail;
                if (end == q || end == mid || !is_answer[end]) continue;
                dedup.insert({{q, mid, end}, {first.relation, second.relation}});
            }
        }
    }

    std::vector<KgPath> out;
    out.reserve(dedup.size());
    for (const auto& [nodes, rels] : dedup) {
        KgPath p;
        p.nodes = nodes;
        p.relations = rels;
        out.push_back(std::move(p));
    }
    // Order by hop count, then by the named sequence.
    std::sort(out.begin(), out.end(), [&](const KgPath& a, const KgPath& b) {
        if (a.nodes.size() != b.nodes.size())
            return a.nodes.size() < b.nodes.size();
        for (std::size_t i = 0; i + 1 < a.nodes.size(); ++i) {
            if (int c = kg.node_name(a.nodes[i]).compare(
                    kg.node_name(b.nodes[i])); c != 0)
                return c < 0;
            if (int c = kg.relation_name(a.relations[i]).compare(
                    kg.relation_name(b.relations[i])); c != 0)
                return c < 0;
        }
        return kg.node_name(a.nodes.back()) < kg.node_name(b.nodes.back());
    });
    return out;
}

KnowledgeGraph merge_relations(const KnowledgeGraph& g,
                               const MergeScheme& scheme,
                               std::vector<std::string>* dropped_relations) {
    KnowledgeGraph out;
    for (NodeId n = 0; n < g.node_count(); ++n) out.intern_node(g.node_name(n));

    std::vector<const std::string*> remapped(g.relation_count(), nullptr);
    std::vector<std::string> storage(g.relation_count());
    std::set<std::string> dropped;
    static const std::string kGeneric = "generic";
    for (RelId r = 0; r < g.relation_count(); ++r) {
        const std::string& name = g.relation_name(r);
        switch (scheme.kind) {
            case MergeSchemeKind::none:
                remapped[r] = &name;
                break;
            case MergeSchemeKind::one:
                remapped[r] = &kGeneric;
                break;
            case MergeSchemeKind::seventeen:
            case MergeSchemeKind::seven: {
                auto it = scheme.mapping.find(name);
                if (it == scheme.mapping.end()) {
                    dropped.insert(name);
                } else {
                    storage[r] = it->second;
                    remapped[r] = &storage[r];
                }
                break;
            }
        }
    }
    for (const Triple& t : g.triples()) {
        if (!remapped[t.relation]) continue;
        out.add_triple(g.node_name(t.head), *remapped[t.relation],
                       g.node_name(t.tail), t.weight);
    }
    out.freeze();
    if (dropped_relations)
        dropped_relations->assign(dropped.begin(), dropped.end());
    return out;
}

KnowledgeGraph densify_reverse(const KnowledgeGraph& g) {
    if (!g.frozen())
        throw Error(Errc::not_frozen, "densification needs a frozen graph");
    KnowledgeGraph out;
    for (NodeId n = 0; n < g.node_count(); ++n) out.intern_node(g.node_name(n));
    for (RelId r = 0; r < g.relation_count(); ++r)
        out.intern_relation(g.relation_name(r));
    for (RelId r = 0; r < g.relation_count(); ++r)
        out.intern_relation(g.relation_name(r) + "_rev");
    for (const Triple& t : g.triples())
        out.add_triple_ids(t.head, t.relation, t.tail, t.weight);
    for (const Triple& t : g.triples()) {
        std::string rev = g.relation_name(t.relation) + "_rev";
        out.add_triple(g.node_name(t.tail), rev, g.node_name(t.head),
                       t.weight);
    }
    out.freeze();
    return out;
}

}  // namespace kgprobe
