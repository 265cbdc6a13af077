#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kgprobe {

using NodeId = std::uint32_t;
using RelId = std::uint32_t;

/// One directed, weighted, relation-labelled edge in interned form.
struct Triple {
    NodeId head;
    RelId relation;
    NodeId tail;
    double weight;

    friend bool operator==(const Triple&, const Triple&) = default;
};

namespace detail {

struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
    std::size_t operator()(const std::string& s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
};

struct TripleKey {
    NodeId head;
    RelId relation;
    NodeId tail;
    friend bool operator==(const TripleKey&, const TripleKey&) = default;
};

struct TripleKeyHash {
    std::size_t operator()(const TripleKey& k) const noexcept {
        std::uint64_t x = (std::uint64_t(k.head) << 32) ^ (std::uint64_t(k.tail) << 16) ^ k.relation;
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        x *= 0xc4ceb9fe1a85ec53ULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

}  // namespace detail

/// Directed, weighted, relation-labelled triple store with interned node and
/// relation vocabularies. Mutable while loading; freeze() builds the
/// adjacency indices and makes the graph immutable, after which reads are
/// safe from any number of threads. Re-inserting an existing (head,
/// relation, tail) accumulates its weight.
class KnowledgeGraph {
public:
    KnowledgeGraph() = default;

    NodeId intern_node(std::string_view normalized_text);
    RelId intern_relation(std::string_view name);

    void add_triple(std::string_view head, std::string_view relation, std::string_view tail,
                    double weight = 1.0);
    void add_triple_ids(NodeId head, RelId relation, NodeId tail, double weight);

    /// Sets every stored weight to `w` (pre-freeze).
    void reset_weights(double w);

    void freeze();
    bool frozen() const { return frozen_; }

    std::size_t node_count() const { return node_names_.size(); }
    std::size_t triple_count() const { return triples_.size(); }
    std::size_t relation_count() const { return relation_names_.size(); }

    std::optional<NodeId> find_node(std::string_view normalized_text) const;
    std::optional<RelId> find_relation(std::string_view name) const;
    bool has_node(std::string_view normalized_text) const { return find_node(normalized_text).has_value(); }

    const std::string& node_name(NodeId id) const { return node_names_[id]; }
    const std::string& relation_name(RelId id) const { return relation_names_[id]; }
    const std::vector<std::string>& node_names() const { return node_names_; }
    const std::vector<std::string>& relation_names() const { return relation_names_; }
    const std::vector<Triple>& triples() const { return triples_; }

    /// In-degree plus out-degree; a self-loop counts twice.
    std::size_t degree(NodeId id) const;
    std::size_t degree(std::string_view node) const;

    /// Union of out- and in-neighbours, deduplicated, sorted by node id.
    std::vector<NodeId> undirected_neighbors(NodeId id) const;
    std::vector<std::string> undirected_neighbors(std::string_view node) const;

    /// Triple indices leaving / entering a node (frozen graphs only).
    std::span<const std::uint32_t> out_edges(NodeId id) const;
    std::span<const std::uint32_t> in_edges(NodeId id) const;

    /// Number of triples whose weight was accumulated from more than one
    /// insertion (loading diagnostics).
    std::uint64_t duplicate_insertions() const { return duplicate_insertions_; }

    /// Two graphs are equal when they hold the same vocabularies and the
    /// same multiset of named triples, regardless of interning order.
    friend bool operator==(const KnowledgeGraph& a, const KnowledgeGraph& b);

private:
    void require_frozen() const;
    void require_mutable() const;
    NodeId resolve_node(std::string_view node) const;

    std::vector<std::string> node_names_;
    std::vector<std::string> relation_names_;
    std::unordered_map<std::string, NodeId, detail::StringHash, std::equal_to<>> node_ids_;
    std::unordered_map<std::string, RelId, detail::StringHash, std::equal_to<>> relation_ids_;
    std::unordered_map<detail::TripleKey, std::uint32_t, detail::TripleKeyHash> triple_index_;
    std::vector<Triple> triples_;
    std::uint64_t duplicate_insertions_ = 0;

    // CSR adjacency over triple indices, built by freeze().
    std::vector<std::uint32_t> out_offsets_;
    std::vector<std::uint32_t> out_list_;
    std::vector<std::uint32_t> in_offsets_;
    std::vector<std::uint32_t> in_list_;
    bool frozen_ = false;
};

/// Copies vocabularies and triples into a fresh unfrozen graph.
KnowledgeGraph thaw_copy(const KnowledgeGraph& g);

}  // namespace kgprobe
