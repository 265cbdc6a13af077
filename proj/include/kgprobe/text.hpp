#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kgprobe {

/// Canonicalizes a free-text concept description: lowercases, removes
/// punctuation (Unicode category P plus the apostrophe; digits are kept),
/// turns underscores into spaces and collapses whitespace runs.
/// Throws Error(Errc::empty_after_normalization) if nothing survives.
std::string normalize_concept(std::string_view raw);

/// Same pipeline, but an empty result is returned instead of thrown.
std::string normalize_concept_lenient(std::string_view raw);

/// True if `text` is already in canonical concept form (non-empty,
/// normalize_concept(text) == text).
bool is_normalized_concept(std::string_view text);

/// Lowercased, non-empty relation label. Throws on empty result.
std::string normalize_relation(std::string_view raw);

/// Splits canonical concept text on single spaces.
std::vector<std::string_view> split_tokens(std::string_view text);

/// Joins tokens with single spaces.
std::string join_tokens(const std::vector<std::string_view>& tokens);

namespace detail {
bool is_punct_codepoint(char32_t cp);
bool is_space_codepoint(char32_t cp);
char32_t lower_codepoint(char32_t cp);
}  // namespace detail

}  // namespace kgprobe
