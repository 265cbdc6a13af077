#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "kgprobe/error.hpp"
#include "kgprobe/graph.hpp"
#include "kgprobe/text.hpp"
#include "kgprobe/tsv.hpp"

using namespace kgprobe;

TEST_SUITE_BEGIN("kg_core");

TEST_CASE("normalize_concept basic forms") {
    CHECK(normalize_concept("camping") == "camping");
    CHECK(normalize_concept("Bed_Roll!") == "bed roll");
    CHECK(normalize_concept("No longer with us") == "no longer with us");
    CHECK(normalize_concept("  doubled   spaces  ") == "doubled spaces");
    CHECK(normalize_concept("don't") == "dont");
    CHECK(normalize_concept("don\xE2\x80\x99t") == "dont");  // curly apostrophe
    CHECK(normalize_concept("route 66") == "route 66");      // digits survive
    CHECK(normalize_concept("bed_roll/n") == "bed rolln");   // '/' is punctuation, not a separator
    CHECK(normalize_concept("\xC3\x89t\xC3\xA9") == "\xC3\xA9t\xC3\xA9");  // Été -> été
}

TEST_CASE("normalize_concept rejects empty results") {
    CHECK_THROWS_AS(normalize_concept(""), Error);
    CHECK_THROWS_AS(normalize_concept("!!!"), Error);
    CHECK_THROWS_AS(normalize_concept("  _ . "), Error);
    try {
        normalize_concept("...");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::empty_after_normalization);
    }
}

TEST_CASE("normalize_concept is idempotent on arbitrary bytes") {
    std::mt19937 rng(7);
    int nonempty = 0;
    for (int i = 0; i < 400; ++i) {
        std::string raw = (i % 2) ? kgtest::random_bytes(rng) : kgtest::random_texty(rng);
        std::string once = normalize_concept_lenient(raw);
        CHECK(normalize_concept_lenient(once) == once);
        if (!once.empty()) {
            ++nonempty;
            CHECK(is_normalized_concept(once));
            CHECK(once.front() != ' ');
            CHECK(once.back() != ' ');
            CHECK(once.find("  ") == std::string::npos);
            for (char c : once) CHECK(!(c >= 'A' && c <= 'Z'));
        }
    }
    CHECK(nonempty > 50);  // generator actually exercises the interesting path
}

TEST_CASE("add_triple grows nodes, edges and accumulates duplicates") {
    KnowledgeGraph g;
    g.add_triple("a", "rel", "b");
    CHECK(g.node_count() == 2);
    CHECK(g.triple_count() == 1);

    SUBCASE("duplicate accumulates weight into one edge") {
        g.add_triple("a", "rel", "b", 1.0);
        CHECK(g.triple_count() == 1);
        CHECK(g.triples()[0].weight == doctest::Approx(2.0));
        CHECK(g.duplicate_insertions() == 1);
    }
    SUBCASE("self-loop is permitted") {
        KnowledgeGraph h;
        h.add_triple("a", "rel", "a");
        CHECK(h.node_count() == 1);
        CHECK(h.triple_count() == 1);
    }
}

TEST_CASE("degree counts in plus out") {
    KnowledgeGraph g;
    g.intern_node("isolated");
    g.add_triple("x", "r", "a");
    g.add_triple("x", "r", "b");
    g.add_triple("c", "r", "x");
    g.freeze();
    CHECK(g.degree("isolated") == 0);
    CHECK(g.degree("x") == 3);
    CHECK_THROWS_AS((void)g.degree("missing"), Error);

    KnowledgeGraph loop;
    loop.add_triple("a", "r", "a");
    loop.freeze();
    CHECK(loop.degree("a") == 2);
}

TEST_CASE("undirected_neighbors unions and dedups") {
    KnowledgeGraph g;
    g.add_triple("a", "r", "b");
    g.freeze();
    CHECK(g.undirected_neighbors("a") == std::vector<std::string>{"b"});
    CHECK(g.undirected_neighbors("b") == std::vector<std::string>{"a"});

    KnowledgeGraph h;
    h.add_triple("a", "r", "b");
    h.add_triple("b", "r", "a");
    h.intern_node("alone");
    h.freeze();
    CHECK(h.undirected_neighbors("a") == std::vector<std::string>{"b"});
    CHECK(h.undirected_neighbors("alone").empty());
}

TEST_CASE("degree sum equals twice the triple count") {
    std::mt19937 rng(11);
    for (int i = 0; i < 30; ++i) {
        auto g = kgtest::random_graph(rng);
        g.freeze();
        std::size_t total = 0;
        for (NodeId id = 0; id < g.node_count(); ++id) total += g.degree(id);
        CHECK(total == 2 * g.triple_count());
    }
}

TEST_CASE("adding a triple leaves unrelated nodes untouched") {
    std::mt19937 rng(13);
    for (int i = 0; i < 20; ++i) {
        auto base = kgtest::random_graph(rng);
        auto extended = thaw_copy(base);
        extended.add_triple("fresh1", "newrel", "fresh2");
        base.freeze();
        extended.freeze();
        for (NodeId id = 0; id < base.node_count(); ++id) {
            CHECK(base.degree(id) == extended.degree(id));
            CHECK(base.undirected_neighbors(id) == extended.undirected_neighbors(id));
        }
    }
}

TEST_CASE("canonical TSV round-trips bit-exactly") {
    std::mt19937 rng(17);
    for (int i = 0; i < 25; ++i) {
        kgtest::RandomGraphSpec spec;
        spec.fractional_weights = (i % 2 == 1);
        spec.isolated_nodes = false;  // TSV stores triples only
        auto g = kgtest::random_graph(rng, spec);
        g.freeze();

        std::ostringstream first;
        write_graph_tsv(g, first);
        std::istringstream back(first.str());
        auto g2 = read_graph_tsv(back);
        CHECK(g == g2);

        std::ostringstream second;
        write_graph_tsv(g2, second);
        CHECK(first.str() == second.str());
    }
}

TEST_CASE("TSV reader skips comments and rejects malformed rows") {
    std::istringstream ok("# comment line\na\trel\tb\t1\n\nc\trel\td\t2.5\n");
    auto g = read_graph_tsv(ok);
    CHECK(g.triple_count() == 2);

    std::istringstream short_row("a\trel\tb\n");
    CHECK_THROWS_AS(read_graph_tsv(short_row), Error);

    std::istringstream bad_weight("a\trel\tb\tzero\n");
    CHECK_THROWS_AS(read_graph_tsv(bad_weight), Error);

    std::istringstream negative("a\trel\tb\t-1\n");
    CHECK_THROWS_AS(read_graph_tsv(negative), Error);

    std::istringstream uppercase("A\trel\tb\t1\n");
    CHECK_THROWS_AS(read_graph_tsv(uppercase), Error);
}

TEST_CASE("frozen graphs refuse mutation") {
    KnowledgeGraph g;
    g.add_triple("a", "r", "b");
    g.freeze();
    CHECK_THROWS_AS(g.add_triple("c", "r", "d"), Error);
}

TEST_SUITE_END();
