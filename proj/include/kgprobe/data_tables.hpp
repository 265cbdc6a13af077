#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace kgprobe {

/// Negation cues matched inside concept text (token sequences).
const std::vector<std::string>& default_negation_markers();

/// Function words removed when canonicalizing event-argument spans and
/// ignored when grounding question text.
const std::unordered_set<std::string>& default_stopwords();

/// relation -> merged-group label, 17-group scheme. The group label is the
/// first relation of its group.
const std::unordered_map<std::string, std::string>& relation_merge_seventeen();

/// relation -> merged-group label, 7-group coarse scheme.
const std::unordered_map<std::string, std::string>& relation_merge_seven();

/// Irregular word form -> base form (verbs and plurals) consulted before the
/// suffix-rule stemmer.
const std::unordered_map<std::string, std::string>& default_lemma_exceptions();

/// One entry per non-blank, non-comment line.
std::vector<std::string> load_line_list(const std::filesystem::path& file);

/// Two-column TSV (key, value); blank lines and # comments skipped.
std::vector<std::pair<std::string, std::string>> load_pair_table(
    const std::filesystem::path& file);

}  // namespace kgprobe
