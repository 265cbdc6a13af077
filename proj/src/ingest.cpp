#include "kgprobe/ingest.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "kgprobe/error.hpp"
#include "kgprobe/text.hpp"

namespace kgprobe {

namespace {

std::vector<std::string_view> split_on(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

// Comma splitting with just enough quote handling for R-style CSV exports:
// a field wrapped in double quotes may contain commas and "" escapes.
std::vector<std::string> split_csv(std::string_view line) {
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    out.push_back(std::move(field));
    return out;
}

std::string_view strip_cr(std::string_view s) {
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    return s;
}

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

// "/c/en/bed_roll/n" -> "bed_roll"; empty if not an English term URI.
std::string_view english_term(std::string_view uri) {
    constexpr std::string_view prefix = "/c/en/";
    if (uri.substr(0, prefix.size()) != prefix) return {};
    std::string_view rest = uri.substr(prefix.size());
    std::size_t slash = rest.find('/');
    if (slash != std::string_view::npos) rest = rest.substr(0, slash);
    return rest;
}

}  // namespace

KnowledgeGraph parse_conceptnet(std::istream& in, IngestReport* report) {
    KnowledgeGraph g;
    IngestReport rep;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view row = strip_cr(line);
        if (row.empty()) continue;
        ++rep.rows_read;
        auto fields = split_on(row, '\t');
        if (fields.size() < 4) {
            ++rep.rows_malformed;
            continue;
        }
        std::string_view rel_uri = fields[1];
        std::size_t slash = rel_uri.rfind('/');
        if (rel_uri.empty() || slash == std::string_view::npos ||
            slash + 1 == rel_uri.size()) {
            ++rep.rows_malformed;
            continue;
        }
        std::string_view head_term = english_term(fields[2]);
        std::string_view tail_term = english_term(fields[3]);
        if (head_term.empty() || tail_term.empty()) {
            ++rep.rows_skipped_language;
            continue;
        }
        std::string head = normalize_concept_lenient(head_term);
        std::string tail = normalize_concept_lenient(tail_term);
        if (head.empty() || tail.empty()) {
            ++rep.rows_skipped_empty_concept;
            continue;
        }
        std::string rel;
        try {
            rel = normalize_relation(rel_uri.substr(slash + 1));
        } catch (const Error&) {
            ++rep.rows_malformed;
            continue;
        }
        g.add_triple(head, rel, tail, 1.0);
        ++rep.rows_kept;
    }
    rep.raw_triples = rep.rows_kept;
    // A repeated assertion is still one fact: collapse accumulated
    // duplicate weight back to 1 per distinct triple.
    g.reset_weights(1.0);
    g.freeze();
    rep.nodes = g.node_count();
    rep.triples = g.triple_count();
    rep.relations = g.relation_count();
    if (report) *report = rep;
    return g;
}

namespace {

struct SwowLayout {
    char sep = '\t';
    std::size_t cue = 0;
    std::size_t response = 1;
    std::size_t frequency = 2;
    bool first_line_is_data = false;
};

std::vector<std::string> split_row(std::string_view row, char sep) {
    if (sep == ',') return split_csv(row);
    std::vector<std::string> out;
    for (std::string_view f : split_on(row, sep)) out.emplace_back(f);
    return out;
}

// Frequency column aliases, most specific first. "R123" is the
// response-count column in the official SWOW release.
constexpr std::array<std::string_view, 6> kFreqNames = {
    "r123", "frequency", "freq", "count", "strength", "n"};

std::optional<SwowLayout> detect_header(std::string_view first) {
    char sep = first.find('\t') != std::string_view::npos ? '\t' : ',';
    auto fields = split_row(first, sep);
    std::optional<std::size_t> cue, response, freq;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        std::string name = ascii_lower(fields[i]);
        if (name == "cue" && !cue) cue = i;
        if (name == "response" && !response) response = i;
    }
    if (!cue && !response) return std::nullopt;  // headerless file
    for (std::string_view want : kFreqNames) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (ascii_lower(fields[i]) == want) {
                freq = i;
                break;
            }
        }
        if (freq) break;
    }
    if (!cue || !response || !freq)
        throw Error(Errc::missing_columns,
                    "association export header lacks cue/response/frequency "
                    "columns");
    SwowLayout layout;
    layout.sep = sep;
    layout.cue = *cue;
    layout.response = *response;
    layout.frequency = *freq;
    return layout;
}

}  // namespace

KnowledgeGraph parse_swow(std::istream& in, std::uint64_t min_frequency,
                          IngestReport* report) {
    KnowledgeGraph g;
    IngestReport rep;
    std::string line;

    // Find the first non-blank line and decide the layout from it.
    std::optional<SwowLayout> layout;
    while (std::getline(in, line)) {
        std::string_view row = strip_cr(line);
        if (row.empty()) continue;
        layout = detect_header(row);
        if (!layout) {
            // No recognizable header: positional cue, response, frequency.
            SwowLayout fallback;
            fallback.sep = row.find('\t') != std::string_view::npos ? '\t' : ',';
            fallback.first_line_is_data = true;
            if (split_row(row, fallback.sep).size() < 3)
                throw Error(Errc::missing_columns,
                            "association export needs cue, response and "
                            "frequency columns");
            layout = fallback;
        }
        break;
    }
    if (!layout) {
        // Empty input: an empty (frozen) graph with an all-zero report.
        g.freeze();
        if (report) *report = rep;
        return g;
    }

    std::size_t needed = std::max({layout->cue, layout->response,
                                   layout->frequency}) + 1;
    bool pending_first = layout->first_line_is_data;
    while (true) {
        std::string_view row;
        if (pending_first) {
            row = strip_cr(line);
            pending_first = false;
        } else {
            if (!std::getline(in, line)) break;
            row = strip_cr(line);
        }
        if (row.empty()) continue;
        ++rep.rows_read;
        auto fields = split_row(row, layout->sep);
        if (fields.size() < needed) {
            ++rep.rows_malformed;
            continue;
        }
        const std::string& raw_response = fields[layout->response];
        if (raw_response == "NA") {  // missing-response marker, pre-normalization
            ++rep.rows_skipped_na;
            continue;
        }
        const std::string& freq_text = fields[layout->frequency];
        std::uint64_t freq = 0;
        auto [ptr, ec] = std::from_chars(
            freq_text.data(), freq_text.data() + freq_text.size(), freq);
        if (ec != std::errc() || ptr != freq_text.data() + freq_text.size() ||
            freq == 0) {
            ++rep.rows_malformed;
            continue;
        }
        if (freq < min_frequency) {
            ++rep.rows_skipped_frequency;
            continue;
        }
        std::string cue = normalize_concept_lenient(fields[layout->cue]);
        std::string response = normalize_concept_lenient(raw_response);
        if (cue.empty() || response.empty()) {
            ++rep.rows_skipped_empty_concept;
            continue;
        }
        g.add_triple(cue, "association", response,
                     static_cast<double>(freq));
        ++rep.rows_kept;
    }
    rep.raw_triples = rep.rows_kept;
    g.freeze();
    rep.nodes = g.node_count();
    rep.triples = g.triple_count();
    rep.relations = g.relation_count();
    if (report) *report = rep;
    return g;
}

KnowledgeGraph label_swow_relations(const KnowledgeGraph& g) {
    if (g.relation_count() > 1)
        throw Error(Errc::unexpected_relation,
                    "relabeling expects a single-relation association graph");
    std::unordered_set<std::uint64_t> directed;
    directed.reserve(g.triple_count() * 2);
    auto key = [](NodeId h, NodeId t) {
        return (static_cast<std::uint64_t>(h) << 32) | t;
    };
    for (const Triple& t : g.triples()) directed.insert(key(t.head, t.tail));

    KnowledgeGraph out;
    for (NodeId n = 0; n < g.node_count(); ++n) out.intern_node(g.node_name(n));
    for (const Triple& t : g.triples()) {
        bool mutual = directed.count(key(t.tail, t.head)) != 0;
        out.add_triple(g.node_name(t.head),
                       mutual ? "mutualassociated" : "forwardassociated",
                       g.node_name(t.tail), t.weight);
    }
    out.freeze();
    return out;
}

}  // namespace kgprobe
