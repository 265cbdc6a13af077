#include "kgprobe/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "kgprobe/error.hpp"

namespace kgprobe {

double density(const KnowledgeGraph& g) {
    if (g.node_count() < 2)
        throw Error(Errc::too_few_nodes,
                    "density needs at least two nodes");
    double n = static_cast<double>(g.node_count());
    return static_cast<double>(g.triple_count()) / (n * (n - 1.0));
}

double avg_degree(const KnowledgeGraph& g) {
    if (g.node_count() == 0)
        throw Error(Errc::empty_graph, "average degree of an empty graph");
    return static_cast<double>(g.triple_count()) /
           static_cast<double>(g.node_count());
}

double node_entropy(const KnowledgeGraph& g) {
    if (g.triple_count() == 0)
        throw Error(Errc::empty_graph, "node entropy needs at least one edge");
    double inv_e = 1.0 / static_cast<double>(g.triple_count());
    double h = 0.0;
    for (NodeId n = 0; n < g.node_count(); ++n) {
        std::uint64_t deg = g.degree(n);
        if (deg == 0) continue;
        double p = static_cast<double>(deg) * inv_e;
        h -= p * std::log(p);
    }
    return h;
}

GraphStats compute_stats(const KnowledgeGraph& g) {
    GraphStats s;
    s.n_triples = g.triple_count();
    s.n_nodes = g.node_count();
    s.n_relations = g.relation_count();
    s.density = density(g);
    s.avg_degree = avg_degree(g);
    s.node_entropy = node_entropy(g);
    return s;
}

std::vector<std::pair<std::string, double>> relation_distribution(
    const KnowledgeGraph& g) {
    if (g.triple_count() == 0)
        throw Error(Errc::empty_graph,
                    "relation distribution needs at least one edge");
    std::vector<std::uint64_t> counts(g.relation_count(), 0);
    for (const Triple& t : g.triples()) ++counts[t.relation];
    std::vector<std::pair<std::string, double>> out;
    out.reserve(g.relation_count());
    double inv_e = 1.0 / static_cast<double>(g.triple_count());
    for (RelId r = 0; r < g.relation_count(); ++r) {
        if (counts[r] == 0) continue;
        out.emplace_back(std::string(g.relation_name(r)),
                         static_cast<double>(counts[r]) * inv_e);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return out;
}

}  // namespace kgprobe
