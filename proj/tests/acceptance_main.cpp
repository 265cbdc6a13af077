// Acceptance gate: one PASS/FAIL/SKIP line per criterion.
//
// Criteria 1-4 and the directional half of 5 replicate published statistics
// and need the real datasets: point KGPROBE_DATA_DIR at a directory holding
//   cn.tsv    canonical ConceptNet english graph (kg-probe ingest)
//   swow.tsv  canonical SWOW graph, ingested with --label-relations
//   scripts.jsonl  (optional) script graphs for the path-length claim
// Everything else runs self-contained. Exit 0 iff no criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "kgprobe/data_tables.hpp"
#include "kgprobe/error.hpp"
#include "kgprobe/graph.hpp"
#include "kgprobe/grounding.hpp"
#include "kgprobe/metrics.hpp"
#include "kgprobe/overlap.hpp"
#include "kgprobe/scriptgraph.hpp"
#include "kgprobe/transe.hpp"
#include "kgprobe/tsv.hpp"

namespace fs = std::filesystem;
using namespace kgprobe;
using Clock = std::chrono::steady_clock;

namespace {

enum class Status { pass, fail, skip };

struct Outcome {
    Status status;
    std::string detail;
};

bool rel_ok(double got, double want, double rel) {
    return std::fabs(got - want) <= rel * std::fabs(want);
}

// fractions compared in percentage points
bool pp_ok(double got_frac, double want_frac, double pp) {
    return std::fabs(got_frac - want_frac) * 100.0 <= pp;
}

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(4);
    out << v;
    return out.str();
}

void note(std::vector<std::string>& fails, bool ok, const std::string& what,
          double got, double want) {
    if (!ok)
        fails.push_back(what + " got " + fmt(got) + " want " + fmt(want));
}

Outcome verdict(const std::vector<std::string>& fails,
                const std::string& pass_detail) {
    if (fails.empty()) return {Status::pass, pass_detail};
    std::string detail;
    for (const auto& f : fails) detail += (detail.empty() ? "" : "; ") + f;
    return {Status::fail, detail};
}

// ------------------------------------------------------------- shared data

struct DataCtx {
    bool available = false;
    std::string reason;
    fs::path dir;
    KnowledgeGraph cn, swow;
};

DataCtx& data_ctx() {
    static DataCtx ctx = [] {
        DataCtx c;
        const char* root = std::getenv("KGPROBE_DATA_DIR");
        if (!root) {
            c.reason = "KGPROBE_DATA_DIR not set";
            return c;
        }
        c.dir = root;
        if (!fs::exists(c.dir / "cn.tsv") || !fs::exists(c.dir / "swow.tsv")) {
            c.reason = "cn.tsv / swow.tsv not found under " + c.dir.string();
            return c;
        }
        c.cn = read_graph_tsv(c.dir / "cn.tsv");
        c.swow = read_graph_tsv(c.dir / "swow.tsv");
        c.available = true;
        return c;
    }();
    return ctx;
}

fs::path fixtures_dir() {
    if (const char* src = std::getenv("KGPROBE_SOURCE_DIR")) {
        fs::path p = fs::path(src) / "tests" / "fixtures";
        if (fs::exists(p)) return p;
    }
    fs::path dir = fs::current_path();
    for (int i = 0; i < 6; ++i) {
        if (fs::exists(dir / "tests" / "fixtures")) return dir / "tests" / "fixtures";
        dir = dir.parent_path();
    }
    return "tests/fixtures";
}

// ------------------------------------------------- independent path oracle

constexpr std::uint32_t kInf = UINT32_MAX;

std::vector<std::vector<std::uint32_t>> floyd_warshall(
    const KnowledgeGraph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<std::uint32_t>> d(
        n, std::vector<std::uint32_t>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (const Triple& t : g.triples()) {
        if (t.head == t.tail) continue;  // keep the diagonal at 0
        d[t.head][t.tail] = 1;
        d[t.tail][t.head] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (d[i][k] == kInf) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (d[k][j] == kInf) continue;
                std::uint32_t via = d[i][k] + d[k][j];
                if (via < d[i][j]) d[i][j] = via;
            }
        }
    return d;
}

// ---------------------------------------------------------------- criteria

Outcome criterion1_table1() {
    auto& ctx = data_ctx();
    if (!ctx.available) return {Status::skip, ctx.reason};
    auto cn = compute_stats(ctx.cn);
    auto sw = compute_stats(ctx.swow);
    std::vector<std::string> fails;
    note(fails, rel_ok(double(cn.n_triples), 3009636, 0.03), "cn triples",
         double(cn.n_triples), 3009636);
    note(fails, rel_ok(double(cn.n_nodes), 1080759, 0.03), "cn nodes",
         double(cn.n_nodes), 1080759);
    note(fails, rel_ok(double(cn.n_relations), 47, 0.03), "cn relations",
         double(cn.n_relations), 47);
    note(fails, rel_ok(cn.avg_degree, 2.78, 0.02), "cn avg degree",
         cn.avg_degree, 2.78);
    note(fails, rel_ok(cn.node_entropy, 23.28, 0.05), "cn node entropy",
         cn.node_entropy, 23.28);
    // density follows from the counts; the published 3.00e-6 does not (it
    // would need ~3.5M edges on 1.08M nodes), so the formula value is the
    // reference here.  See README.
    note(fails, rel_ok(cn.density, 2.58e-6, 0.05), "cn density (by formula)",
         cn.density, 2.58e-6);
    note(fails, rel_ok(double(sw.n_triples), 1593564, 0.03), "swow triples",
         double(sw.n_triples), 1593564);
    note(fails, rel_ok(double(sw.n_nodes), 124626, 0.03), "swow nodes",
         double(sw.n_nodes), 124626);
    note(fails, sw.n_relations == 2, "swow relations",
         double(sw.n_relations), 2);
    note(fails, rel_ok(sw.density, 1.03e-4, 0.05), "swow density",
         sw.density, 1.03e-4);
    note(fails, rel_ok(sw.avg_degree, 12.78, 0.02), "swow avg degree",
         sw.avg_degree, 12.78);
    note(fails, rel_ok(sw.node_entropy, 18.07, 0.05), "swow node entropy",
         sw.node_entropy, 18.07);
    return verdict(fails, "cn " + std::to_string(cn.n_triples) + " triples/" +
                              std::to_string(cn.n_nodes) + " nodes, swow " +
                              std::to_string(sw.n_triples) + "/" +
                              std::to_string(sw.n_nodes) +
                              "; cn density by formula " + fmt(cn.density) +
                              " (published 3.00e-6 documented as "
                              "inconsistent with its own counts)");
}

Outcome criterion2_overlap() {
    auto& ctx = data_ctx();
    if (!ctx.available) return {Status::skip, ctx.reason};
    auto rep = overlap_report(ctx.cn, ctx.swow);
    std::vector<std::string> fails;
    note(fails, pp_ok(rep.frac_of_b, 0.58, 3.0), "swow nodes in cn",
         rep.frac_of_b, 0.58);
    note(fails, pp_ok(rep.frac_of_a, 0.07, 3.0), "cn nodes in swow",
         rep.frac_of_a, 0.07);
    note(fails, pp_ok(rep.edge_frac_of_a, 0.06, 3.0), "cn edges in swow",
         rep.edge_frac_of_a, 0.06);
    note(fails, pp_ok(rep.edge_frac_of_b, 0.15, 3.0), "swow edges in cn",
         rep.edge_frac_of_b, 0.15);
    note(fails, rel_ok(double(rep.shared_edges_a), 190000, 0.05),
         "|cn∩swow| edges", double(rep.shared_edges_a), 190000);
    note(fails, rel_ok(double(rep.edges_within_shared_a), 691000, 0.05),
         "cn edges among shared nodes", double(rep.edges_within_shared_a),
         691000);
    note(fails, rel_ok(double(rep.edges_within_shared_b), 1500000, 0.05),
         "swow edges among shared nodes",
         double(rep.edges_within_shared_b), 1500000);
    note(fails,
         double(rep.edges_within_shared_b) >=
             0.90 * double(ctx.swow.triple_count()),
         "swow edge share within shared nodes >= 90%",
         double(rep.edges_within_shared_b) / double(ctx.swow.triple_count()),
         0.90);
    return verdict(fails,
                   std::to_string(rep.shared_nodes) + " shared nodes (" +
                       fmt(rep.frac_of_b * 100) + "% of swow, " +
                       fmt(rep.frac_of_a * 100) + "% of cn); edge overlap " +
                       fmt(rep.edge_frac_of_a * 100) + "% / " +
                       fmt(rep.edge_frac_of_b * 100) + "%");
}

Outcome criterion3_recall() {
    auto& ctx = data_ctx();
    if (!ctx.available) return {Status::skip, ctx.reason};
    auto inter = intersection_graph(ctx.cn, ctx.swow);
    auto recall = relation_recall(ctx.cn, inter);
    const std::vector<std::pair<std::string, double>> spots = {
        {"distinctfrom", 0.5847},
        {"antonym", 0.2631},
        {"relatedto", 0.0738},
        {"mannerof", 0.2693},
    };
    std::vector<std::string> fails;
    std::string summary;
    for (const auto& [rel, want] : spots) {
        auto it = recall.find(rel);
        if (it == recall.end()) {
            fails.push_back("relation '" + rel + "' absent");
            continue;
        }
        note(fails, rel_ok(it->second, want, 0.10), rel + " recall",
             it->second, want);
        summary += (summary.empty() ? "" : ", ") + rel + "=" +
                   fmt(it->second);
    }
    return verdict(fails, summary);
}

Outcome criterion4_negation() {
    auto& ctx = data_ctx();
    if (!ctx.available) return {Status::skip, ctx.reason};
    const auto& markers = default_negation_markers();
    auto sw = negation_stats(ctx.swow, markers);
    auto cn = negation_stats(ctx.cn, markers);
    std::vector<std::string> fails;
    note(fails, pp_ok(sw.fraction, 0.007, 0.2), "swow negated fraction",
         sw.fraction, 0.007);
    note(fails, pp_ok(cn.fraction, 0.003, 0.2), "cn negated fraction",
         cn.fraction, 0.003);
    return verdict(fails, "swow " + fmt(sw.fraction * 100) + "% (" +
                              std::to_string(sw.negated_edges) + "), cn " +
                              fmt(cn.fraction * 100) + "% (" +
                              std::to_string(cn.negated_edges) + ")");
}

Outcome criterion5_paths() {
    // Exact half: the fixture distribution must equal an independent
    // Floyd-Warshall oracle, plus pinned spot checks.
    auto fixtures = fixtures_dir();
    auto kg = read_graph_tsv(fixtures / "fixture_kg.tsv");
    auto narratives = read_narratives(fixtures / "narratives.jsonl");
    const auto& stops = default_stopwords();
    std::vector<ScriptGraph> graphs;
    for (const auto& n : narratives) {
        auto sg = build_script_graph(n.frames, stops);
        sg.id = n.id;
        graphs.push_back(std::move(sg));
    }
    std::vector<std::string> fails;
    if (graphs.size() != 10)
        fails.push_back("expected 10 fixture narratives, got " +
                        std::to_string(graphs.size()));

    auto oracle = floyd_warshall(kg);
    std::map<std::uint32_t, std::uint64_t> want_hist;
    std::uint64_t want_found = 0, want_missing = 0, want_nopath = 0;
    for (const auto& sg : graphs)
        for (const auto& [a, b] : sg.edges) {
            auto ha = kg.find_node(a);
            auto hb = kg.find_node(b);
            if (!ha || !hb) {
                ++want_missing;
            } else if (oracle[*ha][*hb] == kInf) {
                ++want_nopath;
            } else {
                ++want_found;
                ++want_hist[oracle[*ha][*hb]];
            }
        }
    auto summary = path_length_distribution(graphs, kg);
    if (summary.length_counts != want_hist)
        fails.push_back("fixture histogram differs from oracle");
    note(fails, summary.found_pairs == want_found, "found pairs",
         double(summary.found_pairs), double(want_found));
    note(fails,
         summary.head_missing + summary.tail_missing == want_missing,
         "missing pairs",
         double(summary.head_missing + summary.tail_missing),
         double(want_missing));
    note(fails, summary.no_path == want_nopath, "no-path pairs",
         double(summary.no_path), double(want_nopath));

    // pinned lookups mirroring the published qualitative examples
    auto grow = project_pair("grow", "plant", kg);
    note(fails,
         grow.status == ProjectionStatus::found && grow.length == 1u,
         "grow-plant length", grow.length ? double(*grow.length) : -1, 1);
    auto seed = project_pair("purchase", "seed", kg);
    note(fails,
         seed.status == ProjectionStatus::found && seed.length == 2u,
         "purchase-seed length", seed.length ? double(*seed.length) : -1, 2);
    auto few = project_pair("few seed", "place", kg);
    if (few.status != ProjectionStatus::head_missing)
        fails.push_back("few seed expected head-missing, got " +
                        std::string(projection_status_name(few.status)));
    auto rock = project_pair("rock", "sun", kg);
    if (rock.status != ProjectionStatus::no_path)
        fails.push_back("rock-sun expected no-path, got " +
                        std::string(projection_status_name(rock.status)));

    std::string detail = "fixture histogram == oracle over " +
                         std::to_string(summary.total_pairs) + " pairs";

    // Directional half: mean found-path length smaller on SWOW than on CN.
    auto& ctx = data_ctx();
    if (ctx.available && fs::exists(ctx.dir / "scripts.jsonl")) {
        auto scripts = read_script_graphs(ctx.dir / "scripts.jsonl");
        auto on_sw = path_length_distribution(scripts, ctx.swow);
        auto on_cn = path_length_distribution(scripts, ctx.cn);
        note(fails, on_sw.mean_length < on_cn.mean_length,
             "mean length swow < cn", on_sw.mean_length, on_cn.mean_length);
        detail += "; swow mean " + fmt(on_sw.mean_length) + " < cn mean " +
                  fmt(on_cn.mean_length);
    } else {
        detail += "; directional claim not evaluated (no scripts.jsonl)";
    }
    return verdict(fails, detail);
}

Outcome criterion6_properties() {
    auto start = Clock::now();
    std::vector<std::string> fails;
    std::mt19937 rng(20260816);

    // metrics vs brute force, 50 graphs
    for (int round = 0; round < 50 && fails.empty(); ++round) {
        auto g = kgtest::random_graph(rng);
        g.freeze();
        std::map<std::string, std::uint64_t> deg;
        for (const Triple& t : g.triples()) {
            ++deg[std::string(g.node_name(t.head))];
            ++deg[std::string(g.node_name(t.tail))];
        }
        double m = double(g.triple_count()), n = double(g.node_count());
        double h = 0.0;
        for (const auto& [_, d] : deg) {
            double p = double(d) / m;
            h -= p * std::log(p);
        }
        auto s = compute_stats(g);
        if (std::fabs(s.density - m / (n * (n - 1))) > 1e-12 ||
            std::fabs(s.avg_degree - m / n) > 1e-12 ||
            std::fabs(s.node_entropy - h) > 1e-12)
            fails.push_back("metrics oracle mismatch round " +
                            std::to_string(round));
    }

    // BFS vs Floyd-Warshall, 100 graphs up to 50 nodes
    for (int round = 0; round < 100 && fails.empty(); ++round) {
        kgtest::RandomGraphSpec spec;
        spec.max_nodes = 50;
        spec.max_triples = 120;
        auto g = kgtest::random_graph(rng, spec);
        g.freeze();
        auto oracle = floyd_warshall(g);
        PathFinder finder(g, 64);
        for (int probe = 0; probe < 30; ++probe) {
            NodeId a = NodeId(rng() % g.node_count());
            NodeId b = NodeId(rng() % g.node_count());
            auto r = finder.project(g.node_name(a), g.node_name(b));
            std::uint32_t want = oracle[a][b];
            bool ok = want == kInf
                          ? r.status == ProjectionStatus::no_path
                          : (r.status == ProjectionStatus::found &&
                             r.length == want);
            if (!ok) {
                fails.push_back("bfs/oracle mismatch round " +
                                std::to_string(round));
                break;
            }
        }
    }

    // intersection / recall integer identities
    for (int round = 0; round < 30 && fails.empty(); ++round) {
        auto a = kgtest::random_graph(rng);
        auto b = kgtest::random_graph(rng);
        a.freeze();
        b.freeze();
        auto inter = intersection_graph(a, b);
        auto recall = relation_recall(a, inter);
        std::map<std::string, std::uint64_t> full_n, inter_n;
        for (const Triple& t : a.triples())
            ++full_n[std::string(a.relation_name(t.relation))];
        for (const Triple& t : inter.triples())
            ++inter_n[std::string(inter.relation_name(t.relation))];
        std::uint64_t total = 0;
        for (const auto& [rel, got] : recall) {
            std::uint64_t in_inter =
                inter_n.count(rel) ? inter_n[rel] : 0;
            total += in_inter;
            if (std::fabs(got * double(full_n[rel]) - double(in_inter)) >
                1e-9)
                fails.push_back("recall identity broken for " + rel);
        }
        if (total != inter.triple_count())
            fails.push_back("recall counts don't cover the intersection");
    }

    // merge weight conservation (full-coverage schemes)
    std::vector<std::string> mapped;
    for (const auto& [rel, _] : relation_merge_seventeen())
        mapped.push_back(rel);
    std::sort(mapped.begin(), mapped.end());
    for (int round = 0; round < 20 && fails.empty(); ++round) {
        KnowledgeGraph g;
        int nodes = 3 + int(rng() % 8);
        int m = 1 + int(rng() % 30);
        for (int i = 0; i < m; ++i)
            g.add_triple("n" + std::to_string(rng() % nodes),
                         mapped[rng() % mapped.size()],
                         "n" + std::to_string(rng() % nodes),
                         double(1 + rng() % 9));
        g.freeze();
        double before = 0;
        for (const Triple& t : g.triples()) before += t.weight;
        for (auto kind : {MergeSchemeKind::seventeen, MergeSchemeKind::seven,
                          MergeSchemeKind::one}) {
            auto merged = merge_relations(g, MergeScheme::bundled(kind));
            double after = 0;
            for (const Triple& t : merged.triples()) after += t.weight;
            if (std::fabs(before - after) > 1e-9 * std::max(1.0, before))
                fails.push_back("merge weight not conserved");
        }
    }

    // densify doubling
    for (int round = 0; round < 20 && fails.empty(); ++round) {
        auto g = kgtest::random_graph(rng);
        g.freeze();
        auto dense = densify_reverse(g);
        if (dense.triple_count() != 2 * g.triple_count() ||
            dense.relation_count() != 2 * g.relation_count())
            fails.push_back("densify did not exactly double");
    }

    // canonical TSV bit-exact round trip
    for (int round = 0; round < 30 && fails.empty(); ++round) {
        kgtest::RandomGraphSpec spec;
        spec.fractional_weights = true;
        spec.isolated_nodes = false;  // TSV stores triples only
        auto g = kgtest::random_graph(rng, spec);
        g.freeze();
        std::ostringstream out;
        write_graph_tsv(g, out);
        std::istringstream in(out.str());
        auto back = read_graph_tsv(in);
        std::ostringstream out2;
        write_graph_tsv(back, out2);
        if (!(back == g) || out.str() != out2.str())
            fails.push_back("tsv round trip not bit-exact");
    }

    double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (secs >= 60.0)
        fails.push_back("property suite took " + fmt(secs) + "s (>= 60s)");
    return verdict(fails, "metrics, path, recall, merge, densify, tsv "
                          "oracles all exact (" +
                              fmt(secs) + "s)");
}

Outcome criterion7_transe() {
    auto start = Clock::now();
    std::vector<std::string> fails;

    KnowledgeGraph chain;
    for (int i = 0; i + 1 < 8; ++i)
        chain.add_triple("n" + std::to_string(i), "next",
                         "n" + std::to_string(i + 1));
    chain.freeze();
    TrainConfig small;
    small.dim = 8;
    small.epochs = 20;
    small.seed = 5;
    auto run1 = train_transe(chain, small);
    auto run2 = train_transe(chain, small);
    if (run1.node_vectors != run2.node_vectors ||
        run1.relation_vectors != run2.relation_vectors)
        fails.push_back("retrain not bitwise deterministic");

    // finite differences against the analytic margin-term gradients
    std::mt19937_64 grng(11);
    auto u = [&] { return (double(grng() >> 11) * 0x1.0p-53) * 2.0 - 1.0; };
    double max_rel_err = 0.0;
    for (Norm norm : {Norm::l1, Norm::l2}) {
        int checked = 0;
        while (checked < 8) {
            std::size_t dim = 4;
            std::vector<std::vector<double>> v(5, std::vector<double>(dim));
            for (auto& vec : v)
                for (auto& x : vec) x = u();
            auto term = margin_term(v[0], v[1], v[2], v[3], v[4], 1.0, norm);
            if (term.value < 1e-2) continue;
            ++checked;
            const std::vector<double>* grads[5] = {
                &term.d_head, &term.d_rel, &term.d_tail, &term.d_neg_head,
                &term.d_neg_tail};
            const double eps = 1e-5;
            for (int which = 0; which < 5; ++which)
                for (std::size_t i = 0; i < dim; ++i) {
                    auto value = [&] {
                        double d_pos = translation_distance(v[0], v[1], v[2],
                                                            norm);
                        double d_neg = translation_distance(v[3], v[1], v[4],
                                                            norm);
                        return std::max(0.0, 1.0 + d_pos - d_neg);
                    };
                    double saved = v[which][i];
                    v[which][i] = saved + eps;
                    double up = value();
                    v[which][i] = saved - eps;
                    double down = value();
                    v[which][i] = saved;
                    double fd = (up - down) / (2 * eps);
                    double got = (*grads[which])[i];
                    double err = std::fabs(fd - got) /
                                 std::max(1.0, std::fabs(got));
                    max_rel_err = std::max(max_rel_err, err);
                }
        }
    }
    if (max_rel_err >= 1e-3)
        fails.push_back("fd gradient max rel err " + fmt(max_rel_err));

    // planted structure: one shared translation explains every edge
    KnowledgeGraph planted;
    for (int i = 0; i < 50; ++i) {
        planted.add_triple("l" + std::to_string(i), "pairedwith",
                           "r" + std::to_string(i));
        planted.add_triple("r" + std::to_string(i), "pairof",
                           "l" + std::to_string(i));
    }
    planted.freeze();
    TrainConfig cfg;
    cfg.dim = 24;
    cfg.epochs = 300;
    cfg.learning_rate = 0.05;
    cfg.seed = 7;
    auto space = train_transe(planted, cfg);
    std::vector<Triple> heldout(planted.triples().begin(),
                                planted.triples().end());
    auto eval = link_prediction_eval(space, heldout);
    double random_hits = 10.0 / double(planted.node_count());
    if (eval.hits_at_10 < 3.0 * random_hits)
        fails.push_back("planted hits@10 " + fmt(eval.hits_at_10) +
                        " < 3x random " + fmt(3.0 * random_hits));

    // untrained embeddings must rank at chance
    const std::size_t n = 50, dim = 12, queries = 400;
    std::mt19937_64 rng2(99);
    auto u2 = [&] { return (double(rng2() >> 11) * 0x1.0p-53) * 2.0 - 1.0; };
    EmbeddingSpace raw;
    raw.dim = dim;
    raw.norm = Norm::l2;
    for (std::size_t i = 0; i < n; ++i)
        raw.node_names.push_back("n" + std::to_string(i));
    raw.relation_names.push_back("r");
    raw.node_vectors.resize(n * dim);
    raw.relation_vectors.resize(dim);
    for (auto& x : raw.node_vectors) x = u2();
    for (auto& x : raw.relation_vectors) x = u2();
    std::vector<Triple> probes;
    for (std::size_t q = 0; q < queries; ++q)
        probes.push_back({NodeId(rng2() % n), 0, NodeId(rng2() % n), 1.0});
    auto chance = link_prediction_eval(raw, probes);
    double expect = (double(n) + 1.0) / 2.0;
    double se =
        std::sqrt((double(n) * double(n) - 1.0) / 12.0 / double(queries));
    if (std::fabs(chance.mean_rank - expect) > 3.0 * se)
        fails.push_back("untrained mean rank " + fmt(chance.mean_rank) +
                        " outside " + fmt(expect) + " +- " + fmt(3.0 * se));

    double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (secs >= 120.0)
        fails.push_back("transe sanity took " + fmt(secs) + "s (>= 120s)");
    return verdict(fails,
                   "deterministic; fd err " + fmt(max_rel_err) +
                       "; planted hits@10 " + fmt(eval.hits_at_10) +
                       "; chance rank " + fmt(chance.mean_rank) + " (" +
                       fmt(secs) + "s)");
}

Outcome criterion8_out_of_scope() {
    return {Status::skip,
            "QA accuracies need large-model fine-tuning and the tag/n-gram "
            "figures need external annotation files; distribution arithmetic "
            "is oracle-tested on fixtures instead"};
}

}  // namespace

int main() {
    struct Row {
        const char* name;
        Outcome (*run)();
    };
    const Row rows[] = {
        {"criterion-1 graph statistics", criterion1_table1},
        {"criterion-2 vocabulary/link overlap", criterion2_overlap},
        {"criterion-3 relation recall spot checks", criterion3_recall},
        {"criterion-4 negation fractions", criterion4_negation},
        {"criterion-5 script path lengths", criterion5_paths},
        {"criterion-6 property suites", criterion6_properties},
        {"criterion-7 embedding sanity", criterion7_transe},
        {"criterion-8 out-of-scope artifacts", criterion8_out_of_scope},
    };
    int failures = 0;
    for (const auto& row : rows) {
        Outcome out;
        try {
            out = row.run();
        } catch (const std::exception& e) {
            out = {Status::fail, std::string("exception: ") + e.what()};
        }
        const char* tag = out.status == Status::pass   ? "PASS"
                          : out.status == Status::fail ? "FAIL"
                                                       : "SKIP";
        if (out.status == Status::fail) ++failures;
        std::cout << tag << "  " << row.name << ": " << out.detail << "\n";
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all runnable criteria passed\n";
    return 0;
}
