#include "kgprobe/graph.hpp"

#include <algorithm>
#include <tuple>

#include "kgprobe/error.hpp"

namespace kgprobe {

void KnowledgeGraph::require_frozen() const {
    if (!frozen_) throw Error(Errc::not_frozen, "operation requires a frozen graph");
}

void KnowledgeGraph::require_mutable() const {
    if (frozen_) throw Error(Errc::frozen_graph, "graph is frozen");
}

NodeId KnowledgeGraph::intern_node(std::string_view text) {
    if (auto it = node_ids_.find(text); it != node_ids_.end()) return it->second;
    require_mutable();
    const auto id = static_cast<NodeId>(node_names_.size());
    node_names_.emplace_back(text);
    node_ids_.emplace(node_names_.back(), id);
    return id;
}

RelId KnowledgeGraph::intern_relation(std::string_view name) {
    if (auto it = relation_ids_.find(name); it != relation_ids_.end()) return it->second;
    require_mutable();
    const auto id = static_cast<RelId>(relation_names_.size());
    relation_names_.emplace_back(name);
    relation_ids_.emplace(relation_names_.back(), id);
    return id;
}

void KnowledgeGraph::add_triple(std::string_view head, std::string_view relation,
                                std::string_view tail, double weight) {
    // intern in a fixed order; argument evaluation order is unspecified and
    // must not decide the id layout
    const NodeId h = intern_node(head);
    const RelId r = intern_relation(relation);
    const NodeId t = intern_node(tail);
    add_triple_ids(h, r, t, weight);
}

void KnowledgeGraph::add_triple_ids(NodeId head, RelId relation, NodeId tail, double weight) {
    require_mutable();
    if (!(weight > 0)) throw Error(Errc::malformed_row, "triple weight must be positive");
    const detail::TripleKey key{head, relation, tail};
    if (auto it = triple_index_.find(key); it != triple_index_.end()) {
        triples_[it->second].weight += weight;
        ++duplicate_insertions_;
        return;
    }
    triple_index_.emplace(key, static_cast<std::uint32_t>(triples_.size()));
    triples_.push_back(Triple{head, relation, tail, weight});
}

void KnowledgeGraph::reset_weights(double w) {
    require_mutable();
    if (!(w > 0)) throw Error(Errc::invalid_config, "weight must be positive");
    for (auto& t : triples_) t.weight = w;
}

void KnowledgeGraph::freeze() {
    if (frozen_) return;
    const std::size_t n = node_names_.size();
    out_offsets_.assign(n + 1, 0);
    in_offsets_.assign(n + 1, 0);
    for (const auto& t : triples_) {
        ++out_offsets_[t.head + 1];
        ++in_offsets_[t.tail + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) {
        out_offsets_[i] += out_offsets_[i - 1];
        in_offsets_[i] += in_offsets_[i - 1];
    }
    out_list_.resize(triples_.size());
    in_list_.resize(triples_.size());
    std::vector<std::uint32_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
    std::vector<std::uint32_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
    for (std::uint32_t i = 0; i < triples_.size(); ++i) {
        out_list_[out_fill[triples_[i].head]++] = i;
        in_list_[in_fill[triples_[i].tail]++] = i;
    }
    frozen_ = true;
}

std::optional<NodeId> KnowledgeGraph::find_node(std::string_view text) const {
    if (auto it = node_ids_.find(text); it != node_ids_.end()) return it->second;
    return std::nullopt;
}

std::optional<RelId> KnowledgeGraph::find_relation(std::string_view name) const {
    if (auto it = relation_ids_.find(name); it != relation_ids_.end()) return it->second;
    return std::nullopt;
}

NodeId KnowledgeGraph::resolve_node(std::string_view node) const {
    auto id = find_node(node);
    if (!id) throw Error(Errc::unknown_node, "node '" + std::string(node) + "' is not in the graph");
    return *id;
}

std::size_t KnowledgeGraph::degree(NodeId id) const {
    require_frozen();
    return (out_offsets_[id + 1] - out_offsets_[id]) + (in_offsets_[id + 1] - in_offsets_[id]);
}

std::size_t KnowledgeGraph::degree(std::string_view node) const { return degree(resolve_node(node)); }

std::span<const std::uint32_t> KnowledgeGraph::out_edges(NodeId id) const {
    require_frozen();
    return {out_list_.data() + out_offsets_[id], out_offsets_[id + 1] - out_offsets_[id]};
}

std::span<const std::uint32_t> KnowledgeGraph::in_edges(NodeId id) const {
    require_frozen();
    return {in_list_.data() + in_offsets_[id], in_offsets_[id + 1] - in_offsets_[id]};
}

std::vector<NodeId> KnowledgeGraph::undirected_neighbors(NodeId id) const {
    std::vector<NodeId> out;
    for (auto ti : out_edges(id)) out.push_back(triples_[ti].tail);
    for (auto ti : in_edges(id)) out.push_back(triples_[ti].head);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> KnowledgeGraph::undirected_neighbors(std::string_view node) const {
    std::vector<std::string> out;
    for (auto id : undirected_neighbors(resolve_node(node))) out.push_back(node_names_[id]);
    return out;
}

bool operator==(const KnowledgeGraph& a, const KnowledgeGraph& b) {
    if (a.node_count() != b.node_count() || a.relation_count() != b.relation_count() ||
        a.triple_count() != b.triple_count()) {
        return false;
    }
    auto sorted_names = [](const std::vector<std::string>& v) {
        auto out = v;
        std::sort(out.begin(), out.end());
        return out;
    };
    if (sorted_names(a.node_names_) != sorted_names(b.node_names_)) return false;
    if (sorted_names(a.relation_names_) != sorted_names(b.relation_names_)) return false;

    using NamedTriple = std::tuple<std::string_view, std::string_view, std::string_view, double>;
    auto named = [](const KnowledgeGraph& g) {
        std::vector<NamedTriple> out;
        out.reserve(g.triples_.size());
        for (const auto& t : g.triples_) {
            out.emplace_back(g.node_name(t.head), g.relation_name(t.relation), g.node_name(t.tail),
                             t.weight);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return named(a) == named(b);
}

KnowledgeGraph thaw_copy(const KnowledgeGraph& g) {
    KnowledgeGraph out;
    for (const auto& name : g.node_names()) out.intern_node(name);
    for (const auto& name : g.relation_names()) out.intern_relation(name);
    for (const auto& t : g.triples()) out.add_triple_ids(t.head, t.relation, t.tail, t.weight);
    return out;
}

}  // namespace kgprobe
