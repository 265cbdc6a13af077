#include "kgprobe/transe.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>

#include "kgprobe/error.hpp"
#include "kgprobe/tsv.hpp"

namespace kgprobe {

Norm norm_from_name(std::string_view name) {
    if (name == "l1" || name == "L1") return Norm::l1;
    if (name == "l2" || name == "L2") return Norm::l2;
    throw Error(Errc::invalid_config,
                "unknown norm '" + std::string(name) + "' (expected L1|L2)");
}

std::string_view norm_name(Norm n) { return n == Norm::l1 ? "L1" : "L2"; }

void TrainConfig::validate() const {
    if (dim == 0) throw Error(Errc::invalid_config, "dim must be positive");
    if (!(margin > 0))
        throw Error(Errc::invalid_config, "margin must be positive");
    if (!(learning_rate > 0))
        throw Error(Errc::invalid_config, "learning rate must be positive");
    if (epochs == 0)
        throw Error(Errc::invalid_config, "epochs must be positive");
    if (negatives_per_positive == 0)
        throw Error(Errc::invalid_config,
                    "negatives per positive must be positive");
}

namespace {

// Deterministic uniforms built directly from mt19937_64 output so results
// do not depend on the standard library's distribution implementations.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform01() {  // [0, 1)
        return static_cast<double>(gen() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }
    std::uint64_t bounded(std::uint64_t n) {  // [0, n)
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(gen()) * n) >> 64);
    }
    bool coin() { return (gen() & 1u) != 0; }
};

double distance_impl(const double* h, const double* r, const double* t,
                     std::size_t dim, Norm norm) {
    double acc = 0.0;
    if (norm == Norm::l1) {
        for (std::size_t i = 0; i < dim; ++i)
            acc += std::fabs(h[i] + r[i] - t[i]);
        return acc;
    }
    for (std::size_t i = 0; i < dim; ++i) {
        double x = h[i] + r[i] - t[i];
        acc += x * x;
    }
    return std::sqrt(acc);
}

// d'(x)/dx_i for d = |x|_norm evaluated at x = h + r − t.
void distance_grad(const double* h, const double* r, const double* t,
                   std::size_t dim, Norm norm, double dist, double* out) {
    if (norm == Norm::l1) {
        for (std::size_t i = 0; i < dim; ++i) {
            double x = h[i] + r[i] - t[i];
            out[i] = x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0);
        }
        return;
    }
    if (dist <= 0) {
        std::fill(out, out + dim, 0.0);
        return;
    }
    double inv = 1.0 / dist;
    for (std::size_t i = 0; i < dim; ++i)
        out[i] = (h[i] + r[i] - t[i]) * inv;
}

}  // namespace

double translation_distance(std::span<const double> head,
                            std::span<const double> rel,
                            std::span<const double> tail, Norm norm) {
    return distance_impl(head.data(), rel.data(), tail.data(), head.size(),
                         norm);
}

MarginTerm margin_term(std::span<const double> head,
                       std::span<const double> rel,
                       std::span<const double> tail,
                       std::span<const double> neg_head,
                       std::span<const double> neg_tail, double margin,
                       Norm norm) {
    std::size_t dim = head.size();
    MarginTerm m;
    m.d_head.assign(dim, 0.0);
    m.d_rel.assign(dim, 0.0);
    m.d_tail.assign(dim, 0.0);
    m.d_neg_head.assign(dim, 0.0);
    m.d_neg_tail.assign(dim, 0.0);

    double d_pos =
        distance_impl(head.data(), rel.data(), tail.data(), dim, norm);
    double d_neg = distance_impl(neg_head.data(), rel.data(), neg_tail.data(),
                                 dim, norm);
    double value = margin + d_pos - d_neg;
    if (value <= 0) {
        m.value = 0.0;
        return m;
    }
    m.value = value;
    std::vector<double> gp(dim), gn(dim);
    distance_grad(head.data(), rel.data(), tail.data(), dim, norm, d_pos,
                  gp.data());
    distance_grad(neg_head.data(), rel.data(), neg_tail.data(), dim, norm,
                  d_neg, gn.data());
    for (std::size_t i = 0; i < dim; ++i) {
        m.d_head[i] = gp[i];
        m.d_tail[i] = -gp[i];
        m.d_rel[i] = gp[i] - gn[i];
        m.d_neg_head[i] = -gn[i];
        m.d_neg_tail[i] = gn[i];
    }
    return m;
}

EmbeddingSpace train_transe(const KnowledgeGraph& g, const TrainConfig& cfg) {
    cfg.validate();
    if (!g.frozen())
        throw Error(Errc::not_frozen, "training needs a frozen graph");
    if (g.triple_count() == 0)
        throw Error(Errc::empty_graph, "cannot train on a graph with no edges");

    const std::size_t n_nodes = g.node_count();
    const std::size_t n_rels = g.relation_count();
    const std::size_t dim = cfg.dim;

    EmbeddingSpace space;
    space.dim = cfg.dim;
    space.norm = cfg.norm;
    space.node_names = g.node_names();
    space.relation_names = g.relation_names();
    space.node_vectors.resize(n_nodes * dim);
    space.relation_vectors.resize(n_rels * dim);

    Rng rng(cfg.seed);
    const double bound = 6.0 / std::sqrt(static_cast<double>(dim));
    for (double& x : space.node_vectors) x = rng.uniform(-bound, bound);
    for (double& x : space.relation_vectors) x = rng.uniform(-bound, bound);

    auto renormalize_nodes = [&] {
        for (std::size_t n = 0; n < n_nodes; ++n) {
            double* v = space.node_vectors.data() + n * dim;
            double sq = 0.0;
            for (std::size_t i = 0; i < dim; ++i) sq += v[i] * v[i];
            double len = std::sqrt(sq);
            if (len < 1e-300) continue;  // nothing sensible to scale
            for (std::size_t i = 0; i < dim; ++i) v[i] /= len;
        }
    };
    // Relation vectors are scaled once at init, nodes before training and
    // again after every epoch.
    for (std::size_t r = 0; r < n_rels; ++r) {
        double* v = space.relation_vectors.data() + r * dim;
        double sq = 0.0;
        for (std::size_t i = 0; i < dim; ++i) sq += v[i] * v[i];
        double len = std::sqrt(sq);
        if (len < 1e-300) continue;
        for (std::size_t i = 0; i < dim; ++i) v[i] /= len;
    }
    renormalize_nodes();

    std::vector<double> gp(dim), gn(dim);
    const double lr = cfg.learning_rate;
    space.epoch_losses.reserve(cfg.epochs);
    for (std::uint32_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        double epoch_loss = 0.0;
        for (const Triple& t : g.triples()) {
            for (std::uint32_t k = 0; k < cfg.negatives_per_positive; ++k) {
                NodeId nh = t.head, nt = t.tail;
                if (rng.coin())
                    nh = static_cast<NodeId>(rng.bounded(n_nodes));
                else
                    nt = static_cast<NodeId>(rng.bounded(n_nodes));

                double* h = space.node_vectors.data() + std::size_t(t.head) * dim;
                double* tl = space.node_vectors.data() + std::size_t(t.tail) * dim;
                double* r = space.relation_vectors.data() +
                            std::size_t(t.relation) * dim;
                double* h2 = space.node_vectors.data() + std::size_t(nh) * dim;
                double* t2 = space.node_vectors.data() + std::size_t(nt) * dim;

                double d_pos = distance_impl(h, r, tl, dim, cfg.norm);
                double d_neg = distance_impl(h2, r, t2, dim, cfg.norm);
                double term = cfg.margin + d_pos - d_neg;
                if (!std::isfinite(term))
                    throw Error(Errc::non_finite_loss,
                                "training diverged at epoch " +
                                    std::to_string(epoch));
                if (term <= 0) continue;
                epoch_loss += term;

                distance_grad(h, r, tl, dim, cfg.norm, d_pos, gp.data());
                distance_grad(h2, r, t2, dim, cfg.norm, d_neg, gn.data());
                for (std::size_t i = 0; i < dim; ++i) {
                    double g_pos = lr * gp[i];
                    double g_neg = lr * gn[i];
                    h[i] -= g_pos;
                    tl[i] += g_pos;
                    r[i] -= g_pos - g_neg;
                    h2[i] += g_neg;
                    t2[i] -= g_neg;
                }
            }
        }
        if (!std::isfinite(epoch_loss))
            throw Error(Errc::non_finite_loss,
                        "training diverged at epoch " + std::to_string(epoch));
        renormalize_nodes();
        space.epoch_losses.push_back(epoch_loss);
    }
    space.final_loss = space.epoch_losses.back();
    return space;
}

EvalResult link_prediction_eval(const EmbeddingSpace& space,
                                const std::vector<Triple>& heldout) {
    if (heldout.empty())
        throw Error(Errc::empty_graph, "no held-out triples to evaluate");
    const std::size_t n_nodes = space.node_names.size();
    const std::size_t dim = space.dim;
    std::uint64_t rank_sum = 0;
    std::uint64_t hits = 0;
    std::vector<double> query(dim);
    for (const Triple& t : heldout) {
        if (t.head >= n_nodes || t.tail >= n_nodes ||
            t.relation >= space.relation_names.size())
            throw Error(Errc::unknown_node,
                        "held-out triple outside the embedding vocabulary");
        const double* h = space.node_vectors.data() + std::size_t(t.head) * dim;
        const double* r =
            space.relation_vectors.data() + std::size_t(t.relation) * dim;
        for (std::size_t i = 0; i < dim; ++i) query[i] = h[i] + r[i];

        auto candidate_distance = [&](std::size_t c) {
            const double* v = space.node_vectors.data() + c * dim;
            double acc = 0.0;
            if (space.norm == Norm::l1) {
                for (std::size_t i = 0; i < dim; ++i)
                    acc += std::fabs(query[i] - v[i]);
                return acc;
            }
            for (std::size_t i = 0; i < dim; ++i) {
                double x = query[i] - v[i];
                acc += x * x;
            }
            return std::sqrt(acc);
        };
        double d_true = candidate_distance(t.tail);
        const std::string& true_name = space.node_names[t.tail];
        std::uint64_t rank = 1;
        for (std::size_t c = 0; c < n_nodes; ++c) {
            if (c == t.tail) continue;
            double d = candidate_distance(c);
            if (d < d_true || (d == d_true && space.node_names[c] < true_name))
                ++rank;
        }
        rank_sum += rank;
        if (rank <= 10) ++hits;
    }
    EvalResult res;
    res.mean_rank = double(rank_sum) / double(heldout.size());
    res.hits_at_10 = double(hits) / double(heldout.size());
    return res;
}

void export_relation_matrix(const EmbeddingSpace& space, std::ostream& out) {
    std::vector<std::size_t> order(space.relation_names.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return space.relation_names[a] < space.relation_names[b];
    });
    for (std::size_t r : order) {
        out << space.relation_names[r];
        auto vec = space.relation_vec(r);
        for (double x : vec) out << '\t' << format_double(x);
        out << '\n';
    }
}

void export_relation_matrix(const EmbeddingSpace& space,
                            const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw Error(Errc::io_error, "cannot write " + file.string());
    export_relation_matrix(space, out);
    if (!out.good())
        throw Error(Errc::io_error, "failed writing " + file.string());
}

std::vector<std::pair<std::string, std::vector<double>>> read_relation_matrix(
    std::istream& in) {
    std::vector<std::pair<std::string, std::vector<double>>> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string_view> fields;
        std::string_view row(line);
        std::size_t start = 0;
        while (true) {
            std::size_t tab = row.find('\t', start);
            if (tab == std::string_view::npos) {
                fields.push_back(row.substr(start));
                break;
            }
            fields.push_back(row.substr(start, tab - start));
            start = tab + 1;
        }
        if (fields.size() < 2)
            throw Error(Errc::malformed_row,
                        "embedding row " + std::to_string(lineno) +
                            " has no components");
        std::vector<double> vec;
        vec.reserve(fields.size() - 1);
        for (std::size_t i = 1; i < fields.size(); ++i)
            vec.push_back(parse_double_field(fields[i], lineno));
        out.emplace_back(std::string(fields[0]), std::move(vec));
    }
    return out;
}

std::vector<std::pair<std::string, std::vector<double>>> read_relation_matrix(
    const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(Errc::io_error, "cannot open " + file.string());
    return read_relation_matrix(in);
}

}  // namespace kgprobe
