#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "kgprobe/graph.hpp"

namespace kgprobe {

/// One semantic-role frame extracted from a narrative sentence.
struct SrlFrame {
    std::string predicate;
    std::optional<std::string> arg0;
    std::optional<std::string> arg1;
};

struct Narrative {
    std::string id;
    std::vector<SrlFrame> frames;
};

/// Undirected predicate–argument graph of one narrative. Nodes are
/// canonicalized spans; edges are stored with first < second, both lists
/// sorted and deduplicated.
struct ScriptGraph {
    std::string id;
    std::vector<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
};

/// Canonicalizes an argument span: normalize, drop stopword tokens,
/// singularize the trailing token. Empty result means the span was all
/// function words.
std::string canonicalize_span(std::string_view span,
                              const std::unordered_set<std::string>& stopwords);

/// Same, but every surviving token is reduced to verb base form
/// (exception table first, then suffix rules).
std::string canonicalize_predicate(
    std::string_view span, const std::unordered_set<std::string>& stopwords);

/// Reduces one token to base verb form. Exposed for tests.
std::string lemmatize_verb(std::string_view token);

/// Singularizes one noun token. Exposed for tests.
std::string singularize(std::string_view token);

/// Builds the script graph of one narrative: an edge per surviving
/// predicate–arg0 / predicate–arg1 pairing.
ScriptGraph build_script_graph(
    const std::vector<SrlFrame>& frames,
    const std::unordered_set<std::string>& stopwords);

/// JSONL: {"id":..., "frames":[{"predicate":..., "arg0":..., "arg1":...}]}
/// (arg0/arg1 optional or null). Malformed lines raise MalformedRow.
std::vector<Narrative> read_narratives(std::istream& in);
std::vector<Narrative> read_narratives(const std::filesystem::path& file);

/// JSONL: {"id":..., "nodes":[...], "edges":[[a,b],...]}
void write_script_graphs(std::ostream& out,
                         const std::vector<ScriptGraph>& graphs);
std::vector<ScriptGraph> read_script_graphs(std::istream& in);
std::vector<ScriptGraph> read_script_graphs(const std::filesystem::path& file);

enum class ProjectionStatus { found, head_missing, tail_missing, no_path };

std::string_view projection_status_name(ProjectionStatus s);

/// Result of looking a script-graph edge up in a KG.
struct ProjectionResult {
    std::string head;
    std::string tail;
    ProjectionStatus status = ProjectionStatus::no_path;
    std::vector<std::string> path;  // node sequence when found
    std::optional<std::uint32_t> length;

    bool both_found() const {
        return status == ProjectionStatus::found ||
               status == ProjectionStatus::no_path;
    }
};

/// Reusable undirected-BFS engine over one frozen graph; keeps its scratch
/// buffers between queries. Ties between equal-length paths are broken
/// lexicographically by node name along the path.
class PathFinder {
public:
    explicit PathFinder(const KnowledgeGraph& kg, std::uint32_t max_depth = 10);

    ProjectionResult project(std::string_view head, std::string_view tail);

    std::uint32_t max_depth() const { return max_depth_; }

private:
    const KnowledgeGraph& kg_;
    std::uint32_t max_depth_;
    std::vector<std::uint32_t> dist_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t current_stamp_ = 0;
    std::vector<NodeId> queue_;
};

/// Convenience single-shot wrapper around PathFinder.
ProjectionResult project_pair(std::string_view head, std::string_view tail,
                              const KnowledgeGraph& kg,
                              std::uint32_t max_depth = 10);

/// Aggregate of projecting every edge of every script graph onto one KG.
struct PathLengthSummary {
    std::uint64_t total_pairs = 0;
    std::uint64_t found_pairs = 0;
    std::uint64_t head_missing = 0;
    std::uint64_t tail_missing = 0;
    std::uint64_t no_path = 0;
    std::map<std::uint32_t, std::uint64_t> length_counts;
    std::map<std::uint32_t, double> histogram;  // normalized over found pairs
    double mean_length = 0.0;
    double found_fraction = 0.0;
};

PathLengthSummary path_length_distribution(
    const std::vector<ScriptGraph>& graphs, const KnowledgeGraph& kg,
    std::uint32_t max_depth = 10);

}  // namespace kgprobe
