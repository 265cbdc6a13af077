#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kgprobe/graph.hpp"

namespace kgprobe {

enum class Norm { l1, l2 };

Norm norm_from_name(std::string_view name);  // "L1"/"l1"/"L2"/"l2"
std::string_view norm_name(Norm n);

struct TrainConfig {
    std::uint32_t dim = 100;
    double margin = 1.0;
    double learning_rate = 0.01;
    std::uint32_t epochs = 100;
    std::uint32_t negatives_per_positive = 1;
    Norm norm = Norm::l2;
    std::uint64_t seed = 42;

    void validate() const;  // throws InvalidConfig
};

/// Translation embeddings for one graph. Vector i of a vocabulary lives at
/// [i*dim, (i+1)*dim) in the flat arrays.
struct EmbeddingSpace {
    std::uint32_t dim = 0;
    Norm norm = Norm::l2;
    std::vector<std::string> node_names;
    std::vector<std::string> relation_names;
    std::vector<double> node_vectors;
    std::vector<double> relation_vectors;
    std::vector<double> epoch_losses;
    double final_loss = 0.0;

    std::span<const double> node_vec(std::size_t i) const {
        return {node_vectors.data() + i * dim, dim};
    }
    std::span<const double> relation_vec(std::size_t i) const {
        return {relation_vectors.data() + i * dim, dim};
    }
};

/// One margin-ranking term max(0, margin + d(h+r,t) − d(h'+r,t')) with its
/// analytic gradients. Exposed so tests can check the gradients against
/// finite differences.
struct MarginTerm {
    double value = 0.0;
    std::vector<double> d_head, d_rel, d_tail, d_neg_head, d_neg_tail;
};

MarginTerm margin_term(std::span<const double> head,
                       std::span<const double> rel,
                       std::span<const double> tail,
                       std::span<const double> neg_head,
                       std::span<const double> neg_tail, double margin,
                       Norm norm);

/// d(h + r, t) under the given norm. Exposed for evaluation and tests.
double translation_distance(std::span<const double> head,
                            std::span<const double> rel,
                            std::span<const double> tail, Norm norm);

/// Margin-ranking SGD with uniform head-or-tail corruption, single thread,
/// node vectors renormalized to unit length after every epoch. Bitwise
/// deterministic for a given (graph, config).
EmbeddingSpace train_transe(const KnowledgeGraph& g, const TrainConfig& cfg);

struct EvalResult {
    double mean_rank = 0.0;
    double hits_at_10 = 0.0;
};

/// Raw ranking of each held-out tail among all nodes by d(h+r, ·),
/// ascending, ties broken by node name. Triple ids index the space's
/// vocabularies.
EvalResult link_prediction_eval(const EmbeddingSpace& space,
                                const std::vector<Triple>& heldout);

/// TSV `relation<TAB>v1...<TAB>vdim`, shortest round-trippable doubles,
/// relations sorted lexicographically.
void export_relation_matrix(const EmbeddingSpace& space, std::ostream& out);
void export_relation_matrix(const EmbeddingSpace& space,
                            const std::filesystem::path& file);

/// Reads the export format back: (relation, vector) pairs in file order.
std::vector<std::pair<std::string, std::vector<double>>> read_relation_matrix(
    std::istream& in);
std::vector<std::pair<std::string, std::vector<double>>> read_relation_matrix(
    const std::filesystem::path& file);

}  // namespace kgprobe
