// kg-probe: command line front end over the graph toolkit. One subcommand
// per process; every invocation writes its outputs plus one manifest
// recording parameters and input digests.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kgprobe/data_tables.hpp"
#include "kgprobe/error.hpp"
#include "kgprobe/graph.hpp"
#include "kgprobe/grounding.hpp"
#include "kgprobe/ingest.hpp"
#include "kgprobe/manifest.hpp"
#include "kgprobe/metrics.hpp"
#include "kgprobe/overlap.hpp"
#include "kgprobe/scriptgraph.hpp"
#include "kgprobe/transe.hpp"
#include "kgprobe/tsv.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace kgprobe;

namespace {

// Inputs resolve against KGPROBE_DATA_DIR when not found as given.
fs::path resolve_input(const fs::path& p) {
    if (fs::exists(p) || p.is_absolute()) return p;
    if (const char* root = std::getenv("KGPROBE_DATA_DIR")) {
        fs::path candidate = fs::path(root) / p;
        if (fs::exists(candidate)) return candidate;
    }
    return p;
}

KnowledgeGraph load_graph(const fs::path& p) {
    return read_graph_tsv(resolve_input(p));
}

// Human-facing TSV numbers: 6 significant digits.
std::string sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::unordered_set<std::string> stopword_set(const std::string& file) {
    if (file.empty()) return default_stopwords();
    auto rows = load_line_list(resolve_input(file));
    return {rows.begin(), rows.end()};
}

std::vector<std::string> marker_list(const std::string& file) {
    if (file.empty()) return default_negation_markers();
    return load_line_list(resolve_input(file));
}

void write_text(const fs::path& file, const std::string& text) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw Error(Errc::io_error, "cannot write " + file.string());
    out << text;
    if (!out) throw Error(Errc::io_error, "short write to " + file.string());
}

void write_json(const fs::path& file, const json& j) {
    write_text(file, j.dump(2) + "\n");
}

// Shared manifest plumbing: collect parameters/inputs/outputs while the
// command runs, write the manifest last.
struct Run {
    RunManifest manifest;
    fs::path manifest_path;

    Run(const std::string& command, const fs::path& out,
        const std::string& manifest_override)
        : manifest(make_manifest(command)) {
        manifest_path = manifest_override.empty()
                            ? fs::path(out.string() + ".manifest.json")
                            : fs::path(manifest_override);
    }
    void param(std::string_view k, std::string_view v) {
        manifest.add_parameter(k, v);
    }
    void param(std::string_view k, double v) {
        manifest.add_parameter(k, format_double(v));
    }
    void param(std::string_view k, std::uint64_t v) {
        manifest.add_parameter(k, std::to_string(v));
    }
    void input(std::string_view label, const fs::path& p) {
        manifest.add_input(label, resolve_input(p));
    }
    void output(const fs::path& p) { manifest.add_output(p); }
    void finish() { write_manifest(manifest, manifest_path); }
};

json report_json(const IngestReport& r) {
    return json{{"rows_read", r.rows_read},
                {"rows_kept", r.rows_kept},
                {"rows_malformed", r.rows_malformed},
                {"rows_skipped_language", r.rows_skipped_language},
                {"rows_skipped_na", r.rows_skipped_na},
                {"rows_skipped_frequency", r.rows_skipped_frequency},
                {"rows_skipped_empty_concept", r.rows_skipped_empty_concept},
                {"raw_triples", r.raw_triples},
                {"nodes", r.nodes},
                {"triples", r.triples},
                {"relations", r.relations}};
}

json stats_json(const std::string& label, const GraphStats& s) {
    return json{{"graph", label},
                {"triples", s.n_triples},
                {"nodes", s.n_nodes},
                {"relations", s.n_relations},
                {"density", s.density},
                {"avg_degree", s.avg_degree},
                {"node_entropy", s.node_entropy}};
}

const char* kStatsHeader =
    "graph\ttriples\tnodes\trelations\tdensity\tavg_degree\tnode_entropy\n";

std::string stats_tsv_row(const std::string& label, const GraphStats& s) {
    std::ostringstream out;
    out << label << '\t' << s.n_triples << '\t' << s.n_nodes << '\t'
        << s.n_relations << '\t' << sig6(s.density) << '\t'
        << sig6(s.avg_degree) << '\t' << sig6(s.node_entropy) << '\n';
    return out.str();
}

// Per-relation frequency and recall table, shared verbatim by `relrecall`
// and the `fig3` composite so their outputs are byte-identical.
std::string relrecall_tsv(const KnowledgeGraph& full,
                          const KnowledgeGraph& other) {
    auto inter = intersection_graph(full, other);
    auto recall = relation_recall(full, inter);
    std::map<std::string, std::uint64_t> full_counts, inter_counts;
    for (const Triple& t : full.triples())
        ++full_counts[std::string(full.relation_name(t.relation))];
    for (const Triple& t : inter.triples())
        ++inter_counts[std::string(inter.relation_name(t.relation))];
    std::ostringstream out;
    out << "relation\tf_r\trecall_r\ttriples\tshared_triples\n";
    for (const auto& [rel, share] : relation_distribution(full)) {
        auto shared = inter_counts.count(rel) ? inter_counts[rel] : 0;
        out << rel << '\t' << sig6(share) << '\t' << sig6(recall.at(rel))
            << '\t' << full_counts[rel] << '\t' << shared << '\n';
    }
    return out.str();
}

json overlap_json(const OverlapReport& r) {
    return json{{"shared_nodes", r.shared_nodes},
                {"node_frac_of_a", r.frac_of_a},
                {"node_frac_of_b", r.frac_of_b},
                {"shared_edges_undirected", r.shared_edges_undirected},
                {"edge_frac_of_a", r.edge_frac_of_a},
                {"edge_frac_of_b", r.edge_frac_of_b},
                {"shared_edges_a", r.shared_edges_a},
                {"shared_edges_b", r.shared_edges_b},
                {"edges_within_shared_a", r.edges_within_shared_a},
                {"edges_within_shared_b", r.edges_within_shared_b}};
}

json summary_json(const PathLengthSummary& s) {
    json counts = json::object(), hist = json::object();
    for (const auto& [len, n] : s.length_counts)
        counts[std::to_string(len)] = n;
    for (const auto& [len, f] : s.histogram) hist[std::to_string(len)] = f;
    return json{{"total_pairs", s.total_pairs},
                {"found_pairs", s.found_pairs},
                {"head_missing", s.head_missing},
                {"tail_missing", s.tail_missing},
                {"no_path", s.no_path},
                {"length_counts", counts},
                {"histogram", hist},
                {"mean_length", s.mean_length},
                {"found_fraction", s.found_fraction}};
}

// Plot-ready histogram: one (length, fraction-of-found-pairs) row per line.
std::string hist_tsv(const PathLengthSummary& s) {
    std::ostringstream out;
    out << "length\tfraction\n";
    for (const auto& [len, f] : s.histogram)
        out << len << '\t' << sig6(f) << '\n';
    return out.str();
}

std::string named_nodes(const KnowledgeGraph& kg,
                        const std::vector<NodeId>& ids, json& arr) {
    for (NodeId id : ids) arr.push_back(std::string(kg.node_name(id)));
    return {};
}

MergeScheme scheme_for(const std::string& name, const std::string& table) {
    MergeSchemeKind kind = merge_scheme_from_name(name);
    if (table.empty()) return MergeScheme::bundled(kind);
    return MergeScheme::from_rows(kind,
                                  load_pair_table(resolve_input(table)));
}

// ---------------------------------------------------------------- commands

struct IngestOpts {
    std::string format, in, out, report, manifest;
    std::uint64_t min_freq = 1;
    bool label_relations = false;
};

void cmd_ingest(const IngestOpts& o) {
    Run run("ingest", o.out, o.manifest);
    run.param("format", o.format);
    run.input("raw", o.in);
    std::ifstream in(resolve_input(o.in), std::ios::binary);
    if (!in) throw Error(Errc::io_error, "cannot open " + o.in);
    IngestReport rep;
    KnowledgeGraph g;
    if (o.format == "conceptnet") {
        g = parse_conceptnet(in, &rep);
    } else if (o.format == "swow") {
        run.param("min_frequency", o.min_freq);
        run.param("label_relations", o.label_relations ? "true" : "false");
        g = parse_swow(in, o.min_freq, &rep);
        if (o.label_relations) g = label_swow_relations(g);
    } else if (o.format == "canonical") {
        // re-validate an already canonical TSV (malformed rows are data
        // errors); duplicates fold, so kept rows = triples + folded
        g = read_graph_tsv(in);
        rep.raw_triples = g.triple_count() + g.duplicate_insertions();
        rep.rows_read = rep.raw_triples;
        rep.rows_kept = rep.raw_triples;
        rep.nodes = g.node_count();
        rep.triples = g.triple_count();
        rep.relations = g.relation_count();
    } else {
        throw CLI::ValidationError(
            "--format must be conceptnet, swow, or canonical");
    }
    write_graph_tsv(g, fs::path(o.out));
    run.output(o.out);
    if (!o.report.empty()) {
        write_json(o.report, report_json(rep));
        run.output(o.report);
    }
    run.finish();
    std::cout << "kept " << rep.rows_kept << " of " << rep.rows_read
              << " rows: " << rep.nodes << " nodes, " << rep.triples
              << " triples, " << rep.relations << " relations\n";
}

struct StatsOpts {
    std::string graph, out, label, format = "json", manifest;
};

void cmd_stats(const StatsOpts& o) {
    Run run("stats", o.out, o.manifest);
    run.param("format", o.format);
    run.input("graph", o.graph);
    auto g = load_graph(o.graph);
    auto s = compute_stats(g);
    std::string label =
        o.label.empty() ? fs::path(o.graph).stem().string() : o.label;
    if (o.format == "tsv")
        write_text(o.out, kStatsHeader + stats_tsv_row(label, s));
    else
        write_json(o.out, stats_json(label, s));
    run.output(o.out);
    run.finish();
}

struct PairOpts {
    std::string a, b, out, format = "json", manifest;
};

void cmd_overlap(const PairOpts& o) {
    Run run("overlap", o.out, o.manifest);
    run.input("a", o.a);
    run.input("b", o.b);
    auto ga = load_graph(o.a);
    auto gb = load_graph(o.b);
    write_json(o.out, overlap_json(overlap_report(ga, gb)));
    run.output(o.out);
    run.finish();
}

void cmd_relrecall(const std::string& command, const std::string& full,
                   const std::string& other, const std::string& out,
                   const std::string& manifest) {
    Run run(command, out, manifest);
    run.input("full", full);
    run.input("other", other);
    auto gf = load_graph(full);
    auto go = load_graph(other);
    write_text(out, relrecall_tsv(gf, go));
    run.output(out);
    run.finish();
}

struct NegationOpts {
    std::string graph, out, markers, manifest;
    bool substring = false;
};

void cmd_negation(const NegationOpts& o) {
    Run run("negation", o.out, o.manifest);
    run.param("mode", o.substring ? "substring" : "token");
    run.input("graph", o.graph);
    if (!o.markers.empty()) run.input("markers", o.markers);
    auto g = load_graph(o.graph);
    auto rep = negation_stats(g, marker_list(o.markers),
                              o.substring ? NegationMatch::substring
                                          : NegationMatch::token);
    json sample = json::array();
    for (const Triple& t : rep.sample)
        sample.push_back({std::string(g.node_name(t.head)),
                          std::string(g.relation_name(t.relation)),
                          std::string(g.node_name(t.tail)), t.weight});
    write_json(o.out, json{{"negated_edges", rep.negated_edges},
                           {"fraction", rep.fraction},
                           {"sample", sample}});
    run.output(o.out);
    run.finish();
}

struct AnnodistOpts {
    std::string annotations, out, manifest;
    std::uint64_t top_k = 10;
};

void cmd_annodist(const AnnodistOpts& o) {
    Run run("annodist", o.out, o.manifest);
    run.param("top_k", o.top_k);
    run.input("annotations", o.annotations);
    auto rows = load_pair_table(resolve_input(o.annotations));
    std::unordered_map<std::string, std::string> tags(rows.begin(),
                                                      rows.end());
    std::ostringstream text;
    text << "tag\tshare\n";
    for (const auto& [tag, share] : annotated_distribution(tags, o.top_k))
        text << tag << '\t' << sig6(share) << '\n';
    write_text(o.out, text.str());
    run.output(o.out);
    run.finish();
}

struct CorpusFreqOpts {
    std::string graph, table, out, manifest;
};

void cmd_corpusfreq(const CorpusFreqOpts& o) {
    Run run("corpusfreq", o.out, o.manifest);
    run.input("graph", o.graph);
    run.input("table", o.table);
    auto g = load_graph(o.graph);
    std::unordered_map<std::string, std::uint64_t> freq;
    std::size_t line = 0;
    for (const auto& [phrase, count] :
         load_pair_table(resolve_input(o.table))) {
        ++line;
        freq[phrase] = static_cast<std::uint64_t>(
            parse_double_field(count, line));
    }
    auto cov = corpus_frequency_coverage(g, freq);
    write_json(o.out, json{{"missing_fraction", cov.missing_fraction},
                           {"mean_frequency", cov.mean_frequency}});
    run.output(o.out);
    run.finish();
}

struct ScriptGraphOpts {
    std::string narratives, out, stopwords, manifest;
};

std::vector<ScriptGraph> build_scripts(const ScriptGraphOpts& o) {
    auto stops = stopword_set(o.stopwords);
    std::vector<ScriptGraph> graphs;
    for (const Narrative& n : read_narratives(resolve_input(o.narratives))) {
        auto sg = build_script_graph(n.frames, stops);
        sg.id = n.id;
        graphs.push_back(std::move(sg));
    }
    return graphs;
}

void cmd_scriptgraph(const ScriptGraphOpts& o) {
    Run run("scriptgraph", o.out, o.manifest);
    run.input("narratives", o.narratives);
    if (!o.stopwords.empty()) run.input("stopwords", o.stopwords);
    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw Error(Errc::io_error, "cannot write " + o.out);
    write_script_graphs(out, build_scripts(o));
    run.output(o.out);
    run.finish();
}

struct ProjectOpts {
    std::string scripts, kg, out, summary, hist, manifest;
    std::uint32_t max_depth = 10;
};

// one JSONL record per script edge, in script order
std::string projection_jsonl(const std::vector<ScriptGraph>& graphs,
                             const KnowledgeGraph& kg,
                             std::uint32_t max_depth) {
    PathFinder finder(kg, max_depth);
    std::string text;
    for (const ScriptGraph& sg : graphs)
        for (const auto& e : sg.edges) {
            auto r = finder.project(e.first, e.second);
            json row{{"narrative", sg.id},
                     {"head", r.head},
                     {"tail", r.tail},
                     {"status",
                      std::string(projection_status_name(r.status))},
                     {"length", r.length ? json(*r.length) : json()},
                     {"path", r.path}};
            text += row.dump();
            text += '\n';
        }
    return text;
}

void cmd_project(const ProjectOpts& o) {
    Run run("project", o.out, o.manifest);
    run.param("max_depth", std::uint64_t(o.max_depth));
    run.input("graphs", o.scripts);
    run.input("kg", o.kg);
    auto graphs = read_script_graphs(resolve_input(o.scripts));
    auto kg = load_graph(o.kg);
    write_text(o.out, projection_jsonl(graphs, kg, o.max_depth));
    run.output(o.out);
    if (!o.summary.empty() || !o.hist.empty()) {
        auto summary = path_length_distribution(graphs, kg, o.max_depth);
        if (!o.summary.empty()) {
            write_json(o.summary, summary_json(summary));
            run.output(o.summary);
        }
        if (!o.hist.empty()) {
            write_text(o.hist, hist_tsv(summary));
            run.output(o.hist);
        }
    }
    run.finish();
}

struct GroundOpts {
    std::string kg, items, question, answer, out, stopwords, manifest;
    std::uint64_t max_ngram = 4;
};

// reads {"id":..., "question":"...", "answers":["...", ...]} records
std::vector<json> read_jsonl(const std::string& path) {
    std::ifstream in(resolve_input(path), std::ios::binary);
    if (!in) throw Error(Errc::io_error, "cannot open " + path);
    std::vector<json> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        json row = json::parse(line, nullptr, false);
        if (row.is_discarded() || !row.is_object())
            throw Error(Errc::malformed_row,
                        path + " line " + std::to_string(line_no) +
                            ": not a JSON object");
        rows.push_back(std::move(row));
    }
    return rows;
}

void cmd_ground(const GroundOpts& o) {
    if (o.items.empty() && o.question.empty())
        throw CLI::ValidationError("ground: need --items or --question");
    Run run("ground", o.out, o.manifest);
    run.param("max_ngram", o.max_ngram);
    run.input("kg", o.kg);
    auto kg = load_graph(o.kg);
    auto stops = stopword_set(o.stopwords);
    auto concepts_of = [&](const std::string& text) {
        json names = json::array();
        named_nodes(kg, ground_concepts(text, kg, stops, o.max_ngram), names);
        return names;
    };
    if (!o.items.empty()) {
        run.input("items", o.items);
        std::string text;
        for (const json& item : read_jsonl(o.items)) {
            if (!item.contains("question") || !item["question"].is_string())
                throw Error(Errc::malformed_row,
                            "QA item needs a string 'question'");
            json answers = json::array();
            for (const json& a : item.value("answers", json::array())) {
                if (!a.is_string())
                    throw Error(Errc::malformed_row,
                                "QA item answers must be strings");
                answers.push_back({{"text", a},
                                   {"concepts",
                                    concepts_of(a.get<std::string>())}});
            }
            json row{{"id", item.contains("id") ? item["id"] : json()},
                     {"question_concepts",
                      concepts_of(item["question"].get<std::string>())},
                     {"answers", answers}};
            text += row.dump();
            text += '\n';
        }
        write_text(o.out, text);
    } else {
        run.param("question", o.question);
        run.param("answer", o.answer);
        write_json(o.out, json{{"question_concepts", concepts_of(o.question)},
                               {"answer_concepts", concepts_of(o.answer)}});
    }
    run.output(o.out);
    run.finish();
}

struct PathsOpts {
    std::string kg, grounded, question, answer, out, scheme = "none",
                                                  stopwords, manifest;
    int max_hops = 2;
    bool densify = false;
};

json path_list_json(const std::vector<KgPath>& paths,
                    const KnowledgeGraph& kg) {
    json out = json::array();
    for (const KgPath& p : paths) {
        json nodes = json::array(), rels = json::array();
        named_nodes(kg, p.nodes, nodes);
        for (RelId r : p.relations)
            rels.push_back(std::string(kg.relation_name(r)));
        out.push_back({{"nodes", nodes}, {"relations", rels}});
    }
    return out;
}

void cmd_paths(const PathsOpts& o) {
    if (o.grounded.empty() && (o.question.empty() || o.answer.empty()))
        throw CLI::ValidationError(
            "paths: need --grounded or both --question and --answer");
    Run run("paths", o.out, o.manifest);
    run.param("max_hops", std::uint64_t(o.max_hops));
    run.param("scheme", o.scheme);
    run.param("densify", o.densify ? "true" : "false");
    run.input("kg", o.kg);
    auto kg = load_graph(o.kg);
    if (merge_scheme_from_name(o.scheme) != MergeSchemeKind::none)
        kg = merge_relations(kg, scheme_for(o.scheme, ""));
    if (o.densify) kg = densify_reverse(kg);
    if (!o.grounded.empty()) {
        run.input("grounded", o.grounded);
        // concept names were grounded against the same vocabulary; unknown
        // names (e.g. a different graph) are simply absent from the lookup
        auto ids_of = [&](const json& names) {
            std::vector<NodeId> ids;
            for (const json& n : names)
                if (n.is_string())
                    if (auto id = kg.find_node(n.get<std::string>()))
                        ids.push_back(*id);
            return ids;
        };
        std::string text;
        for (const json& item : read_jsonl(o.grounded)) {
            GroundedPair gp;
            gp.question_concepts =
                ids_of(item.value("question_concepts", json::array()));
            json answers = json::array();
            for (const json& a : item.value("answers", json::array())) {
                gp.answer_concepts =
                    ids_of(a.value("concepts", json::array()));
                json found =
                    path_list_json(retrieve_paths(gp, kg, o.max_hops), kg);
                answers.push_back({{"text", a.value("text", "")},
                                   {"count", found.size()},
                                   {"paths", found}});
            }
            json row{{"id", item.contains("id") ? item["id"] : json()},
                     {"answers", answers}};
            text += row.dump();
            text += '\n';
        }
        write_text(o.out, text);
    } else {
        run.param("question", o.question);
        run.param("answer", o.answer);
        auto stops = stopword_set(o.stopwords);
        GroundedPair gp;
        gp.question_concepts = ground_concepts(o.question, kg, stops);
        gp.answer_concepts = ground_concepts(o.answer, kg, stops);
        json paths = path_list_json(retrieve_paths(gp, kg, o.max_hops), kg);
        write_json(o.out, json{{"paths", paths}, {"count", paths.size()}});
    }
    run.output(o.out);
    run.finish();
}

struct MergeOpts {
    std::string kg, scheme, table, out, manifest;
};

void cmd_merge(const MergeOpts& o) {
    Run run("merge", o.out, o.manifest);
    run.param("scheme", o.scheme);
    run.input("kg", o.kg);
    if (!o.table.empty()) run.input("table", o.table);
    auto g = load_graph(o.kg);
    std::vector<std::string> dropped;
    auto merged = merge_relations(g, scheme_for(o.scheme, o.table), &dropped);
    write_graph_tsv(merged, fs::path(o.out));
    run.output(o.out);
    run.finish();
    for (const auto& rel : dropped)
        std::cerr << "kg-probe: dropped unmapped relation '" << rel << "'\n";
}

struct DensifyOpts {
    std::string kg, out, manifest;
};

void cmd_densify(const DensifyOpts& o) {
    Run run("densify", o.out, o.manifest);
    run.input("kg", o.kg);
    auto g = load_graph(o.kg);
    write_graph_tsv(densify_reverse(g), fs::path(o.out));
    run.output(o.out);
    run.finish();
}

struct TranseOpts {
    std::string kg, out, report, norm = "L2", manifest;
    TrainConfig cfg;
};

void cmd_transe(const TranseOpts& o) {
    Run run("transe", o.out, o.manifest);
    TrainConfig cfg = o.cfg;
    cfg.norm = norm_from_name(o.norm);
    cfg.validate();
    run.param("dim", std::uint64_t(cfg.dim));
    run.param("margin", cfg.margin);
    run.param("learning_rate", cfg.learning_rate);
    run.param("epochs", std::uint64_t(cfg.epochs));
    run.param("negatives", std::uint64_t(cfg.negatives_per_positive));
    run.param("norm", norm_name(cfg.norm));
    run.param("seed", cfg.seed);
    run.input("kg", o.kg);
    auto g = load_graph(o.kg);
    auto space = train_transe(g, cfg);
    export_relation_matrix(space, fs::path(o.out));
    run.output(o.out);
    if (!o.report.empty()) {
        write_json(o.report, json{{"final_loss", space.final_loss},
                                  {"epoch_losses", space.epoch_losses},
                                  {"nodes", space.node_names.size()},
                                  {"relations", space.relation_names.size()}});
        run.output(o.report);
    }
    run.finish();
    std::cout << "final epoch loss " << space.final_loss << "\n";
}

struct Table1Opts {
    std::string cn, swow, out, format = "tsv", manifest;
};

void cmd_table1(const Table1Opts& o) {
    Run run("table1", o.out, o.manifest);
    run.param("format", o.format);
    run.input("cn", o.cn);
    run.input("swow", o.swow);
    auto cn = load_graph(o.cn);
    auto sw = load_graph(o.swow);
    auto s_cn = compute_stats(cn);
    auto s_sw = compute_stats(sw);
    if (o.format == "tsv")
        write_text(o.out, kStatsHeader + stats_tsv_row("conceptnet", s_cn) +
                              stats_tsv_row("swow", s_sw));
    else
        write_json(o.out, json::array({stats_json("conceptnet", s_cn),
                                       stats_json("swow", s_sw)}));
    run.output(o.out);
    run.finish();
}

struct Fig4Opts {
    std::string narratives, kg, out, scripts_out, summary_out, paths_out,
        stopwords, manifest;
    std::uint32_t max_depth = 10;
};

void cmd_fig4(const Fig4Opts& o) {
    Run run("fig4", o.out, o.manifest);
    run.param("max_depth", std::uint64_t(o.max_depth));
    run.input("narratives", o.narratives);
    run.input("kg", o.kg);
    std::string scripts_out = o.scripts_out.empty()
                                  ? o.out + ".scripts.jsonl"
                                  : o.scripts_out;
    std::string summary_out = o.summary_out.empty()
                                  ? o.out + ".summary.json"
                                  : o.summary_out;
    ScriptGraphOpts sg{o.narratives, scripts_out, o.stopwords, ""};
    auto graphs = build_scripts(sg);
    {
        std::ofstream out(scripts_out, std::ios::binary);
        if (!out)
            throw Error(Errc::io_error, "cannot write " + scripts_out);
        write_script_graphs(out, graphs);
    }
    auto kg = load_graph(o.kg);
    auto summary = path_length_distribution(graphs, kg, o.max_depth);
    write_json(summary_out, summary_json(summary));
    write_text(o.out, hist_tsv(summary));
    run.output(scripts_out);
    run.output(summary_out);
    run.output(o.out);
    if (!o.paths_out.empty()) {
        write_text(o.paths_out, projection_jsonl(graphs, kg, o.max_depth));
        run.output(o.paths_out);
    }
    run.finish();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kg-probe: knowledge-graph comparison and QA-support tool"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker cap for parallel stages")
        ->check(CLI::PositiveNumber);

    IngestOpts ingest;
    auto* c_ingest =
        app.add_subcommand("ingest", "parse a raw dump into canonical TSV");
    c_ingest
        ->add_option("--format", ingest.format, "conceptnet|swow|canonical")
        ->required();
    c_ingest->add_option("--in", ingest.in, "raw dump file")->required();
    c_ingest->add_option("--out", ingest.out, "canonical TSV")->required();
    c_ingest->add_option("--report", ingest.report, "row accounting JSON");
    c_ingest->add_option("--min-freq", ingest.min_freq,
                         "drop SWOW rows below this frequency");
    c_ingest->add_flag("--label-relations", ingest.label_relations,
                       "split SWOW edges into forward/mutual");
    c_ingest->add_option("--manifest", ingest.manifest);

    StatsOpts stats;
    auto* c_stats = app.add_subcommand("stats", "structural graph summary");
    c_stats->add_option("--in,--graph", stats.graph)->required();
    c_stats->add_option("--out", stats.out)->required();
    c_stats->add_option("--label", stats.label, "row label (default: stem)");
    c_stats->add_option("--format", stats.format, "json|tsv");
    c_stats->add_option("--manifest", stats.manifest);

    PairOpts overlap;
    auto* c_overlap =
        app.add_subcommand("overlap", "node and edge overlap of two graphs");
    c_overlap->add_option("--a", overlap.a)->required();
    c_overlap->add_option("--b", overlap.b)->required();
    c_overlap->add_option("--out", overlap.out)->required();
    c_overlap->add_option("--manifest", overlap.manifest);

    PairOpts relrecall;
    auto* c_relrecall = app.add_subcommand(
        "relrecall", "per-relation frequency and recall against another graph");
    c_relrecall->add_option("--full", relrecall.a)->required();
    c_relrecall->add_option("--other", relrecall.b)->required();
    c_relrecall->add_option("--out", relrecall.out)->required();
    c_relrecall->add_option("--manifest", relrecall.manifest);

    NegationOpts negation;
    auto* c_negation =
        app.add_subcommand("negation", "count negation-bearing edges");
    c_negation->add_option("--in,--graph", negation.graph)->required();
    c_negation->add_option("--out", negation.out)->required();
    c_negation->add_option("--markers", negation.markers,
                           "marker list (default: bundled)");
    c_negation->add_flag("--substring", negation.substring,
                         "match markers as substrings, not whole tokens");
    c_negation->add_option("--manifest", negation.manifest);

    AnnodistOpts annodist;
    auto* c_annodist = app.add_subcommand(
        "annodist", "tag distribution of an annotation table");
    c_annodist->add_option("--annotations", annodist.annotations)->required();
    c_annodist->add_option("--out", annodist.out)->required();
    c_annodist->add_option("--top-k", annodist.top_k);
    c_annodist->add_option("--manifest", annodist.manifest);

    CorpusFreqOpts corpusfreq;
    auto* c_corpusfreq = app.add_subcommand(
        "corpusfreq", "corpus-frequency coverage of graph vocabulary");
    c_corpusfreq->add_option("--graph", corpusfreq.graph)->required();
    c_corpusfreq->add_option("--table", corpusfreq.table)->required();
    c_corpusfreq->add_option("--out", corpusfreq.out)->required();
    c_corpusfreq->add_option("--manifest", corpusfreq.manifest);

    ScriptGraphOpts scriptgraph;
    auto* c_scriptgraph = app.add_subcommand(
        "scriptgraph", "narratives JSONL -> script graphs JSONL");
    c_scriptgraph->add_option("--srl,--narratives", scriptgraph.narratives)
        ->required();
    c_scriptgraph->add_option("--out", scriptgraph.out)->required();
    c_scriptgraph->add_option("--stopwords", scriptgraph.stopwords);
    c_scriptgraph->add_option("--manifest", scriptgraph.manifest);

    ProjectOpts project;
    auto* c_project = app.add_subcommand(
        "project", "shortest-path statistics of script edges in a KG");
    c_project->add_option("--graphs,--scripts", project.scripts)->required();
    c_project->add_option("--kg", project.kg)->required();
    c_project->add_option("--out", project.out, "per-edge projection JSONL")
        ->required();
    c_project->add_option("--summary", project.summary, "aggregate JSON");
    c_project->add_option("--hist", project.hist, "plot-ready histogram TSV");
    c_project->add_option("--max-depth", project.max_depth);
    c_project->add_option("--manifest", project.manifest);

    GroundOpts ground;
    auto* c_ground =
        app.add_subcommand("ground", "map question/answer text to concepts");
    c_ground->add_option("--kg", ground.kg)->required();
    c_ground->add_option("--items", ground.items,
                         "QA items JSONL (id, question, answers)");
    c_ground->add_option("--question", ground.question);
    c_ground->add_option("--answer", ground.answer);
    c_ground->add_option("--out", ground.out)->required();
    c_ground->add_option("--stopwords", ground.stopwords);
    c_ground->add_option("--max-ngram", ground.max_ngram);
    c_ground->add_option("--manifest", ground.manifest);

    PathsOpts paths;
    auto* c_paths = app.add_subcommand(
        "paths", "retrieve 1-2 hop KG paths between grounded concepts");
    c_paths->add_option("--kg", paths.kg)->required();
    c_paths->add_option("--grounded", paths.grounded,
                        "grounded items JSONL (from ground --items)");
    c_paths->add_option("--question", paths.question);
    c_paths->add_option("--answer", paths.answer);
    c_paths->add_option("--out", paths.out)->required();
    c_paths->add_option("--hops,--max-hops", paths.max_hops)
        ->check(CLI::Range(1, 2));
    c_paths->add_option("--merge", paths.scheme, "none|seventeen|seven|one");
    c_paths->add_flag("--densify", paths.densify, "add reverse edges first");
    c_paths->add_option("--stopwords", paths.stopwords);
    c_paths->add_option("--manifest", paths.manifest);

    MergeOpts merge;
    auto* c_merge =
        app.add_subcommand("merge", "conflate relation labels by scheme");
    c_merge->add_option("--kg", merge.kg)->required();
    c_merge->add_option("--scheme", merge.scheme, "none|seventeen|seven|one")
        ->required();
    c_merge->add_option("--table", merge.table, "custom relation->group TSV");
    c_merge->add_option("--out", merge.out)->required();
    c_merge->add_option("--manifest", merge.manifest);

    DensifyOpts densify;
    auto* c_densify =
        app.add_subcommand("densify", "add a reverse edge per triple");
    c_densify->add_option("--kg", densify.kg)->required();
    c_densify->add_option("--out", densify.out)->required();
    c_densify->add_option("--manifest", densify.manifest);

    TranseOpts transe;
    auto* c_transe = app.add_subcommand(
        "transe", "train translation embeddings, export relation matrix");
    c_transe->add_option("--kg", transe.kg)->required();
    c_transe->add_option("--out", transe.out, "relation matrix TSV")
        ->required();
    c_transe->add_option("--report", transe.report, "loss curve JSON");
    c_transe->add_option("--dim", transe.cfg.dim);
    c_transe->add_option("--margin", transe.cfg.margin);
    c_transe->add_option("--lr", transe.cfg.learning_rate);
    c_transe->add_option("--epochs", transe.cfg.epochs);
    c_transe->add_option("--neg,--negatives",
                         transe.cfg.negatives_per_positive);
    c_transe->add_option("--norm", transe.norm, "L1|L2");
    c_transe->add_option("--seed", transe.cfg.seed);
    c_transe->add_option("--manifest", transe.manifest);

    Table1Opts table1;
    auto* c_table1 = app.add_subcommand(
        "table1", "two-row structural comparison of two graphs");
    c_table1->add_option("--cn", table1.cn)->required();
    c_table1->add_option("--swow", table1.swow)->required();
    c_table1->add_option("--out", table1.out)->required();
    c_table1->add_option("--format", table1.format, "tsv|json");
    c_table1->add_option("--manifest", table1.manifest);

    PairOpts fig3;
    auto* c_fig3 = app.add_subcommand(
        "fig3", "relation frequency/recall table (relrecall composite)");
    c_fig3->add_option("--cn", fig3.a)->required();
    c_fig3->add_option("--swow", fig3.b)->required();
    c_fig3->add_option("--out", fig3.out)->required();
    c_fig3->add_option("--manifest", fig3.manifest);

    Fig4Opts fig4;
    auto* c_fig4 = app.add_subcommand(
        "fig4", "script-edge path-length histogram (scriptgraph+project)");
    c_fig4->add_option("--srl,--narratives", fig4.narratives)->required();
    c_fig4->add_option("--kg", fig4.kg)->required();
    c_fig4->add_option("--out", fig4.out, "histogram TSV")->required();
    c_fig4->add_option("--scripts-out", fig4.scripts_out);
    c_fig4->add_option("--summary-out", fig4.summary_out);
    c_fig4->add_option("--paths-out", fig4.paths_out,
                       "per-edge projection JSONL");
    c_fig4->add_option("--stopwords", fig4.stopwords);
    c_fig4->add_option("--max-depth", fig4.max_depth);
    c_fig4->add_option("--manifest", fig4.manifest);

    try {
        app.parse(argc, argv);
        if (*c_ingest) cmd_ingest(ingest);
        if (*c_stats) cmd_stats(stats);
        if (*c_overlap) cmd_overlap(overlap);
        if (*c_relrecall)
            cmd_relrecall("relrecall", relrecall.a, relrecall.b,
                          relrecall.out, relrecall.manifest);
        if (*c_negation) cmd_negation(negation);
        if (*c_annodist) cmd_annodist(annodist);
        if (*c_corpusfreq) cmd_corpusfreq(corpusfreq);
        if (*c_scriptgraph) cmd_scriptgraph(scriptgraph);
        if (*c_project) cmd_project(project);
        if (*c_ground) cmd_ground(ground);
        if (*c_paths) cmd_paths(paths);
        if (*c_merge) cmd_merge(merge);
        if (*c_densify) cmd_densify(densify);
        if (*c_transe) cmd_transe(transe);
        if (*c_table1) cmd_table1(table1);
        if (*c_fig3)
            cmd_relrecall("fig3", fig3.a, fig3.b, fig3.out, fig3.manifest);
        if (*c_fig4) cmd_fig4(fig4);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 1;
    } catch (const Error& e) {
        std::cerr << "kg-probe: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "kg-probe: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
