#include "kgprobe/scriptgraph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include <json.hpp>

#include "kgprobe/data_tables.hpp"
#include "kgprobe/error.hpp"
#include "kgprobe/text.hpp"

namespace kgprobe {

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() &&
           s.substr(s.size() - suffix.size()) == suffix;
}

// After stripping -ed/-ing: undo consonant doubling (stopp -> stop) or
// restore a final e where the letter makes it unambiguous (plac -> place).
std::string fix_stripped_stem(std::string stem) {
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
        std::string_view("bdgmnprt").find(stem.back()) !=
            std::string_view::npos) {
        stem.pop_back();
        return stem;
    }
    if (!ends_with(stem, "ss") && !stem.empty() &&
        std::string_view("csuvzg").find(stem.back()) !=
            std::string_view::npos) {
        stem += 'e';
    }
    return stem;
}

}  // namespace

std::string lemmatize_verb(std::string_view token) {
    const auto& exceptions = default_lemma_exceptions();
    if (auto it = exceptions.find(std::string(token)); it != exceptions.end())
        return it->second;
    std::string w(token);
    if (w.size() < 3) return w;
    if (w.size() >= 5 && ends_with(w, "ies"))
        return w.substr(0, w.size() - 3) + "y";
    if (w.size() >= 5 && ends_with(w, "ied"))
        return w.substr(0, w.size() - 3) + "y";
    if (w.size() >= 6 && ends_with(w, "eed")) return w.substr(0, w.size() - 1);
    if (w.size() >= 4 && ends_with(w, "ed"))
        return fix_stripped_stem(w.substr(0, w.size() - 2));
    if (w.size() >= 6 && ends_with(w, "ing"))
        return fix_stripped_stem(w.substr(0, w.size() - 3));
    if (w.size() >= 4 && ends_with(w, "es")) {
        std::string_view stem(w.data(), w.size() - 2);
        if (ends_with(stem, "ss") || ends_with(stem, "zz") ||
            ends_with(stem, "ch") || ends_with(stem, "sh") ||
            ends_with(stem, "x") || ends_with(stem, "o"))
            return std::string(stem);
        return w.substr(0, w.size() - 1);
    }
    if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") &&
        !ends_with(w, "is"))
        return w.substr(0, w.size() - 1);
    return w;
}

std::string singularize(std::string_view token) {
    const auto& exceptions = default_lemma_exceptions();
    if (auto it = exceptions.find(std::string(token)); it != exceptions.end())
        return it->second;
    std::string w(token);
    if (w.size() < 3) return w;
    if (w.size() >= 5 && ends_with(w, "ies"))
        return w.substr(0, w.size() - 3) + "y";
    if (w.size() >= 4 && ends_with(w, "es")) {
        std::string_view stem(w.data(), w.size() - 2);
        if (ends_with(stem, "ss") || ends_with(stem, "zz") ||
            ends_with(stem, "ch") || ends_with(stem, "sh") ||
            ends_with(stem, "x") || ends_with(stem, "o"))
            return std::string(stem);
        return w.substr(0, w.size() - 1);
    }
    if (ends_with(w, "ss") || ends_with(w, "us") || ends_with(w, "is"))
        return w;
    if (ends_with(w, "s")) return w.substr(0, w.size() - 1);
    return w;
}

std::string canonicalize_span(
    std::string_view span, const std::unordered_set<std::string>& stopwords) {
    std::string normalized = normalize_concept_lenient(span);
    if (normalized.empty()) return {};
    std::vector<std::string> kept;
    for (std::string_view tok : split_tokens(normalized))
        if (!stopwords.count(std::string(tok))) kept.emplace_back(tok);
    if (kept.empty()) return {};
    kept.back() = singularize(kept.back());
    std::string out = kept[0];
    for (std::size_t i = 1; i < kept.size(); ++i) {
        out += ' ';
        out += kept[i];
    }
    return out;
}

std::string canonicalize_predicate(
    std::string_view span, const std::unordered_set<std::string>& stopwords) {
    std::string normalized = normalize_concept_lenient(span);
    if (normalized.empty()) return {};
    std::string out;
    for (std::string_view tok : split_tokens(normalized)) {
        if (stopwords.count(std::string(tok))) continue;
        if (!out.empty()) out += ' ';
        out += lemmatize_verb(tok);
    }
    return out;
}

ScriptGraph build_script_graph(
    const std::vector<SrlFrame>& frames,
    const std::unordered_set<std::string>& stopwords) {
    std::set<std::string> nodes;
    std::set<std::pair<std::string, std::string>> edges;
    auto link = [&](const std::string& pred,
                    const std::optional<std::string>& arg) {
        if (!arg) return;
        std::string a = canonicalize_span(*arg, stopwords);
        if (a.empty()) return;
        nodes.insert(a);
        if (pred.empty() || a == pred) return;
        edges.insert(std::minmax(pred, a));
    };
    for (const SrlFrame& f : frames) {
        std::string pred = canonicalize_predicate(f.predicate, stopwords);
        if (!pred.empty()) nodes.insert(pred);
        link(pred, f.arg0);
        link(pred, f.arg1);
    }
    ScriptGraph g;
    g.nodes.assign(nodes.begin(), nodes.end());
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

namespace {

using nlohmann::json;

std::string id_to_string(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

std::optional<std::string> optional_span(const json& frame, const char* key) {
    auto it = frame.find(key);
    if (it == frame.end() || it->is_null()) return std::nullopt;
    if (!it->is_string())
        throw Error(Errc::malformed_row,
                    std::string("frame field '") + key + "' must be a string");
    return it->get<std::string>();
}

}  // namespace

std::vector<Narrative> read_narratives(std::istream& in) {
    std::vector<Narrative> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("id") ||
            !j.contains("frames") || !j["frames"].is_array())
            throw Error(Errc::malformed_row,
                        "narrative line " + std::to_string(lineno) +
                            " is not {id, frames[]}");
        Narrative n;
        n.id = id_to_string(j["id"]);
        for (const json& f : j["frames"]) {
            if (!f.is_object() || !f.contains("predicate") ||
                !f["predicate"].is_string())
                throw Error(Errc::malformed_row,
                            "frame without predicate on line " +
                                std::to_string(lineno));
            SrlFrame frame;
            frame.predicate = f["predicate"].get<std::string>();
            if (frame.predicate.empty())
                throw Error(Errc::malformed_row,
                            "empty predicate on line " +
                                std::to_string(lineno));
            frame.arg0 = optional_span(f, "arg0");
            frame.arg1 = optional_span(f, "arg1");
            n.frames.push_back(std::move(frame));
        }
        out.push_back(std::move(n));
    }
    return out;
}

std::vector<Narrative> read_narratives(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(Errc::io_error, "cannot open " + file.string());
    return read_narratives(in);
}

void write_script_graphs(std::ostream& out,
                         const std::vector<ScriptGraph>& graphs) {
    for (const ScriptGraph& g : graphs) {
        json j;
        j["id"] = g.id;
        j["nodes"] = g.nodes;
        json edges = json::array();
        for (const auto& [a, b] : g.edges) edges.push_back(json::array({a, b}));
        j["edges"] = std::move(edges);
        out << j.dump() << '\n';
    }
}

std::vector<ScriptGraph> read_script_graphs(std::istream& in) {
    std::vector<ScriptGraph> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("id") ||
            !j.contains("nodes") || !j.contains("edges"))
            throw Error(Errc::malformed_row,
                        "script-graph line " + std::to_string(lineno) +
                            " is not {id, nodes[], edges[]}");
        ScriptGraph g;
        g.id = id_to_string(j["id"]);
        for (const json& n : j["nodes"]) {
            if (!n.is_string())
                throw Error(Errc::malformed_row,
                            "non-string node on line " +
                                std::to_string(lineno));
            g.nodes.push_back(n.get<std::string>());
        }
        for (const json& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
                !e[1].is_string())
                throw Error(Errc::malformed_row,
                            "edge must be a [node, node] pair on line " +
                                std::to_string(lineno));
            g.edges.emplace_back(e[0].get<std::string>(),
                                 e[1].get<std::string>());
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<ScriptGraph> read_script_graphs(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(Errc::io_error, "cannot open " + file.string());
    return read_script_graphs(in);
}

std::string_view projection_status_name(ProjectionStatus s) {
    switch (s) {
        case ProjectionStatus::found: return "found";
        case ProjectionStatus::head_missing: return "head-missing";
        case ProjectionStatus::tail_missing: return "tail-missing";
        case ProjectionStatus::no_path: return "no-path";
    }
    return "unknown";
}

PathFinder::PathFinder(const KnowledgeGraph& kg, std::uint32_t max_depth)
    : kg_(kg), max_depth_(max_depth) {
    if (!kg.frozen())
        throw Error(Errc::not_frozen, "path search needs a frozen graph");
    dist_.assign(kg.node_count(), 0);
    stamp_.assign(kg.node_count(), 0);
}

ProjectionResult PathFinder::project(std::string_view head,
                                     std::string_view tail) {
    ProjectionResult res;
    res.head = std::string(head);
    res.tail = std::string(tail);
    auto h = kg_.find_node(head);
    if (!h) {
        res.status = ProjectionStatus::head_missing;
        return res;
    }
    auto t = kg_.find_node(tail);
    if (!t) {
        res.status = ProjectionStatus::tail_missing;
        return res;
    }
    if (*h == *t) {
        res.status = ProjectionStatus::found;
        res.path = {std::string(head)};
        res.length = 0;
        return res;
    }

    // Breadth-first from the tail so the greedy reconstruction can walk
    // head -> tail choosing the lexicographically smallest next node.
    if (++current_stamp_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        current_stamp_ = 1;
    }
    auto visit = [&](NodeId n, std::uint32_t d) {
        if (stamp_[n] == current_stamp_) return false;
        stamp_[n] = current_stamp_;
        dist_[n] = d;
        return true;
    };
    queue_.clear();
    visit(*t, 0);
    queue_.push_back(*t);
    bool reached = false;
    for (std::size_t qi = 0; qi < queue_.size() && !reached; ++qi) {
        NodeId cur = queue_[qi];
        if (cur == *h) break;  // all shorter layers are final
        std::uint32_t next_d = dist_[cur] + 1;
        if (next_d > max_depth_) continue;
        for (std::uint32_t idx : kg_.out_edges(cur)) {
            NodeId n = kg_.triples()[idx].tail;
            if (visit(n, next_d)) {
                if (n == *h) { reached = true; break; }
                queue_.push_back(n);
            }
        }
        if (reached) break;
        for (std::uint32_t idx : kg_.in_edges(cur)) {
            NodeId n = kg_.triples()[idx].head;
            if (visit(n, next_d)) {
                if (n == *h) { reached = true; break; }
                queue_.push_back(n);
            }
        }
    }
    if (stamp_[*h] != current_stamp_) {
        res.status = ProjectionStatus::no_path;
        return res;
    }

    res.status = ProjectionStatus::found;
    res.length = dist_[*h];
    res.path.reserve(dist_[*h] + 1);
    NodeId cur = *h;
    res.path.push_back(kg_.node_name(cur));
    while (cur != *t) {
        std::uint32_t want = dist_[cur] - 1;
        const std::string* best_name = nullptr;
        NodeId best = 0;
        auto consider = [&](NodeId n) {
            if (stamp_[n] != current_stamp_ || dist_[n] != want) return;
            const std::string& name = kg_.node_name(n);
            if (!best_name || name < *best_name) {
                best_name = &name;
                best = n;
            }
        };
        for (std::uint32_t idx : kg_.out_edges(cur))
            consider(kg_.triples()[idx].tail);
        for (std::uint32_t idx : kg_.in_edges(cur))
            consider(kg_.triples()[idx].head);
        cur = best;
        res.path.push_back(kg_.node_name(cur));
    }
    return res;
}

ProjectionResult project_pair(std::string_view head, std::string_view tail,
                              const KnowledgeGraph& kg,
                              std::uint32_t max_depth) {
    PathFinder finder(kg, max_depth);
    return finder.project(head, tail);
}

PathLengthSummary path_length_distribution(
    const std::vector<ScriptGraph>& graphs, const KnowledgeGraph& kg,
    std::uint32_t max_depth) {
    PathFinder finder(kg, max_depth);
    PathLengthSummary s;
    double length_sum = 0.0;
    for (const ScriptGraph& g : graphs) {
        for (const auto& [a, b] : g.edges) {
            ++s.total_pairs;
            ProjectionResult r = finder.project(a, b);
            switch (r.status) {
                case ProjectionStatus::found:
                    ++s.found_pairs;
                    ++s.length_counts[*r.length];
                    length_sum += *r.length;
                    break;
                case ProjectionStatus::head_missing: ++s.head_missing; break;
                case ProjectionStatus::tail_missing: ++s.tail_missing; break;
                case ProjectionStatus::no_path: ++s.no_path; break;
            }
        }
    }
    if (s.found_pairs) {
        s.mean_length = length_sum / double(s.found_pairs);
        for (const auto& [len, count] : s.length_counts)
            s.histogram[len] = double(count) / double(s.found_pairs);
    }
    if (s.total_pairs)
        s.found_fraction = double(s.found_pairs) / double(s.total_pairs);
    return s;
}

}  // namespace kgprobe
