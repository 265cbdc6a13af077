// Python bindings: the graph container plus the analysis entry points,
// with reports flattened to dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <fstream>

#include "kgprobe/data_tables.hpp"
#include "kgprobe/error.hpp"
#include "kgprobe/graph.hpp"
#include "kgprobe/grounding.hpp"
#include "kgprobe/ingest.hpp"
#include "kgprobe/metrics.hpp"
#include "kgprobe/overlap.hpp"
#include "kgprobe/scriptgraph.hpp"
#include "kgprobe/text.hpp"
#include "kgprobe/transe.hpp"
#include "kgprobe/tsv.hpp"

namespace py = pybind11;
using namespace kgprobe;

namespace {

py::dict ingest_report_dict(const IngestReport& r) {
    py::dict d;
    d["rows_read"] = r.rows_read;
    d["rows_kept"] = r.rows_kept;
    d["rows_malformed"] = r.rows_malformed;
    d["rows_skipped_language"] = r.rows_skipped_language;
    d["rows_skipped_na"] = r.rows_skipped_na;
    d["rows_skipped_frequency"] = r.rows_skipped_frequency;
    d["rows_skipped_empty_concept"] = r.rows_skipped_empty_concept;
    d["raw_triples"] = r.raw_triples;
    d["nodes"] = r.nodes;
    d["triples"] = r.triples;
    d["relations"] = r.relations;
    return d;
}

std::ifstream open_or_throw(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error(Errc::io_error, "cannot open " + p.string());
    return in;
}

std::unordered_set<std::string> stops_or_default(
    const std::optional<std::vector<std::string>>& words) {
    if (!words) return default_stopwords();
    return {words->begin(), words->end()};
}

py::list named_triples(const KnowledgeGraph& g) {
    py::list out;
    for (const Triple& t : g.triples())
        out.append(py::make_tuple(std::string(g.node_name(t.head)),
                                  std::string(g.relation_name(t.relation)),
                                  std::string(g.node_name(t.tail)),
                                  t.weight));
    return out;
}

}  // namespace

PYBIND11_MODULE(_kgprobe, m) {
    m.doc() = "knowledge-graph comparison toolkit";

    py::register_exception<Error>(m, "KgError");

    py::class_<KnowledgeGraph>(m, "KnowledgeGraph")
        .def(py::init<>())
        .def("add_triple",
             [](KnowledgeGraph& g, const std::string& h, const std::string& r,
                const std::string& t, double w) { g.add_triple(h, r, t, w); },
             py::arg("head"), py::arg("relation"), py::arg("tail"),
             py::arg("weight") = 1.0)
        .def("freeze", &KnowledgeGraph::freeze)
        .def_property_readonly("frozen", &KnowledgeGraph::frozen)
        .def_property_readonly("node_count", &KnowledgeGraph::node_count)
        .def_property_readonly("triple_count", &KnowledgeGraph::triple_count)
        .def_property_readonly("relation_count",
                               &KnowledgeGraph::relation_count)
        .def("has_node",
             [](const KnowledgeGraph& g, const std::string& name) {
                 return g.has_node(name);
             })
        .def("degree",
             [](const KnowledgeGraph& g, const std::string& name) {
                 return g.degree(name);
             })
        .def_property_readonly("node_names",
                               [](const KnowledgeGraph& g) {
                                   return g.node_names();
                               })
        .def_property_readonly("relation_names",
                               [](const KnowledgeGraph& g) {
                                   return g.relation_names();
                               })
        .def("triples", &named_triples)
        .def("__eq__",
             [](const KnowledgeGraph& a, const KnowledgeGraph& b) {
                 return a == b;
             })
        .def("__len__", &KnowledgeGraph::triple_count)
        .def("__repr__", [](const KnowledgeGraph& g) {
            return "<KnowledgeGraph nodes=" + std::to_string(g.node_count()) +
                   " triples=" + std::to_string(g.triple_count()) + ">";
        });

    m.def("read_graph_tsv",
          [](const std::filesystem::path& p) { return read_graph_tsv(p); });
    m.def("write_graph_tsv",
          [](const KnowledgeGraph& g, const std::filesystem::path& p) {
              write_graph_tsv(g, p);
          });
    m.def("normalize_concept",
          [](const std::string& s) { return normalize_concept(s); });

    m.def("parse_conceptnet", [](const std::filesystem::path& p) {
        auto in = open_or_throw(p);
        IngestReport rep;
        auto g = parse_conceptnet(in, &rep);
        return py::make_tuple(std::move(g), ingest_report_dict(rep));
    });
    m.def(
        "parse_swow",
        [](const std::filesystem::path& p, std::uint64_t min_frequency) {
            auto in = open_or_throw(p);
            IngestReport rep;
            auto g = parse_swow(in, min_frequency, &rep);
            return py::make_tuple(std::move(g), ingest_report_dict(rep));
        },
        py::arg("path"), py::arg("min_frequency") = 1);
    m.def("label_swow_relations", &label_swow_relations);

    m.def("compute_stats", [](const KnowledgeGraph& g) {
        auto s = compute_stats(g);
        py::dict d;
        d["triples"] = s.n_triples;
        d["nodes"] = s.n_nodes;
        d["relations"] = s.n_relations;
        d["density"] = s.density;
        d["avg_degree"] = s.avg_degree;
        d["node_entropy"] = s.node_entropy;
        return d;
    });
    m.def("relation_distribution", &relation_distribution);

    m.def("overlap_report",
          [](const KnowledgeGraph& a, const KnowledgeGraph& b) {
              auto r = overlap_report(a, b);
              py::dict d;
              d["shared_nodes"] = r.shared_nodes;
              d["node_frac_of_a"] = r.frac_of_a;
              d["node_frac_of_b"] = r.frac_of_b;
              d["shared_edges_undirected"] = r.shared_edges_undirected;
              d["edge_frac_of_a"] = r.edge_frac_of_a;
              d["edge_frac_of_b"] = r.edge_frac_of_b;
              d["shared_edges_a"] = r.shared_edges_a;
              d["shared_edges_b"] = r.shared_edges_b;
              d["edges_within_shared_a"] = r.edges_within_shared_a;
              d["edges_within_shared_b"] = r.edges_within_shared_b;
              return d;
          });
    m.def("intersection_graph", &intersection_graph);
    m.def("relation_recall", &relation_recall);

    m.def(
        "negation_stats",
        [](const KnowledgeGraph& g,
           const std::optional<std::vector<std::string>>& markers,
           bool substring) {
            auto rep = negation_stats(
                g, markers ? *markers : default_negation_markers(),
                substring ? NegationMatch::substring : NegationMatch::token);
            py::dict d;
            d["negated_edges"] = rep.negated_edges;
            d["fraction"] = rep.fraction;
            py::list sample;
            for (const Triple& t : rep.sample)
                sample.append(
                    py::make_tuple(std::string(g.node_name(t.head)),
                                   std::string(g.relation_name(t.relation)),
                                   std::string(g.node_name(t.tail))));
            d["sample"] = sample;
            return d;
        },
        py::arg("graph"), py::arg("markers") = py::none(),
        py::arg("substring") = false);

    m.def(
        "ground_concepts",
        [](const std::string& text, const KnowledgeGraph& kg,
           const std::optional<std::vector<std::string>>& stopwords,
           std::size_t max_ngram) {
            std::vector<std::string> names;
            for (NodeId id :
                 ground_concepts(text, kg, stops_or_default(stopwords),
                                 max_ngram))
                names.push_back(std::string(kg.node_name(id)));
            return names;
        },
        py::arg("text"), py::arg("kg"), py::arg("stopwords") = py::none(),
        py::arg("max_ngram") = 4);

    m.def(
        "qa_paths",
        [](const KnowledgeGraph& kg, const std::string& question,
           const std::string& answer, int max_hops,
           const std::optional<std::vector<std::string>>& stopwords) {
            auto stops = stops_or_default(stopwords);
            GroundedPair gp;
            gp.question_concepts = ground_concepts(question, kg, stops);
            gp.answer_concepts = ground_concepts(answer, kg, stops);
            py::list out;
            for (const KgPath& p : retrieve_paths(gp, kg, max_hops)) {
                py::list nodes, rels;
                for (NodeId n : p.nodes)
                    nodes.append(std::string(kg.node_name(n)));
                for (RelId r : p.relations)
                    rels.append(std::string(kg.relation_name(r)));
                py::dict d;
                d["nodes"] = nodes;
                d["relations"] = rels;
                out.append(d);
            }
            return out;
        },
        py::arg("kg"), py::arg("question"), py::arg("answer"),
        py::arg("max_hops") = 2, py::arg("stopwords") = py::none());

    m.def(
        "merge_relations",
        [](const KnowledgeGraph& g, const std::string& scheme) {
            std::vector<std::string> dropped;
            auto merged = merge_relations(
                g, MergeScheme::bundled(merge_scheme_from_name(scheme)),
                &dropped);
            return py::make_tuple(std::move(merged), dropped);
        },
        py::arg("graph"), py::arg("scheme"));
    m.def("densify_reverse", &densify_reverse);

    m.def("canonicalize_span",
          [](const std::string& s,
             const std::optional<std::vector<std::string>>& stopwords) {
              return canonicalize_span(s, stops_or_default(stopwords));
          },
          py::arg("span"), py::arg("stopwords") = py::none());
    m.def("canonicalize_predicate",
          [](const std::string& s,
             const std::optional<std::vector<std::string>>& stopwords) {
              return canonicalize_predicate(s, stops_or_default(stopwords));
          },
          py::arg("span"), py::arg("stopwords") = py::none());
    m.def("lemmatize_verb",
          [](const std::string& s) { return lemmatize_verb(s); });
    m.def("singularize", [](const std::string& s) { return singularize(s); });

    m.def(
        "project_pair",
        [](const std::string& head, const std::string& tail,
           const KnowledgeGraph& kg, std::uint32_t max_depth) {
            auto r = project_pair(head, tail, kg, max_depth);
            py::dict d;
            d["head"] = r.head;
            d["tail"] = r.tail;
            d["status"] = std::string(projection_status_name(r.status));
            d["path"] = r.path;
            d["length"] =
                r.length ? py::cast(*r.length) : py::object(py::none());
            return d;
        },
        py::arg("head"), py::arg("tail"), py::arg("kg"),
        py::arg("max_depth") = 10);

    py::class_<EmbeddingSpace>(m, "EmbeddingSpace")
        .def_readonly("dim", &EmbeddingSpace::dim)
        .def_readonly("node_names", &EmbeddingSpace::node_names)
        .def_readonly("relation_names", &EmbeddingSpace::relation_names)
        .def_readonly("node_vectors", &EmbeddingSpace::node_vectors)
        .def_readonly("relation_vectors", &EmbeddingSpace::relation_vectors)
        .def_readonly("epoch_losses", &EmbeddingSpace::epoch_losses)
        .def_readonly("final_loss", &EmbeddingSpace::final_loss);

    m.def(
        "train_transe",
        [](const KnowledgeGraph& g, std::uint32_t dim, double margin,
           double learning_rate, std::uint32_t epochs,
           std::uint32_t negatives, const std::string& norm,
           std::uint64_t seed) {
            TrainConfig cfg;
            cfg.dim = dim;
            cfg.margin = margin;
            cfg.learning_rate = learning_rate;
            cfg.epochs = epochs;
            cfg.negatives_per_positive = negatives;
            cfg.norm = norm_from_name(norm);
            cfg.seed = seed;
            cfg.validate();
            return train_transe(g, cfg);
        },
        py::arg("graph"), py::arg("dim") = 100, py::arg("margin") = 1.0,
        py::arg("learning_rate") = 0.01, py::arg("epochs") = 100,
        py::arg("negatives") = 1, py::arg("norm") = "L2",
        py::arg("seed") = 42);

    m.def("eval_on_graph",
          [](const EmbeddingSpace& space, const KnowledgeGraph& g) {
              std::vector<Triple> heldout(g.triples().begin(),
                                          g.triples().end());
              auto r = link_prediction_eval(space, heldout);
              py::dict d;
              d["mean_rank"] = r.mean_rank;
              d["hits_at_10"] = r.hits_at_10;
              return d;
          });
    m.def("export_relation_matrix",
          [](const EmbeddingSpace& space, const std::filesystem::path& p) {
              export_relation_matrix(space, p);
          });

    m.attr("__version__") = "0.1.0";
}
