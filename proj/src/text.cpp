#include "kgprobe/text.hpp"

#include <algorithm>
#include <iterator>

#include "kgprobe/error.hpp"
#include "unicode_tables.inc"

namespace kgprobe {

namespace detail {

namespace {

bool in_ranges(const CodepointRange* first, const CodepointRange* last, char32_t cp) {
    auto it = std::upper_bound(first, last, cp, [](char32_t v, const CodepointRange& r) {
        return v < r.first;
    });
    if (it == first) return false;
    --it;
    return cp <= it->last;
}

// Decodes one UTF-8 codepoint starting at s[i]; advances i. Invalid bytes
// decode as U+FFFD and advance by one so arbitrary byte strings stay safe.
char32_t decode_utf8(std::string_view s, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return 0xFFFD;
    }
    if (i + len > s.size()) {
        ++i;
        return 0xFFFD;
    }
    for (int k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80) {
            ++i;
            return 0xFFFD;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    i += len;
    return cp;
}

void encode_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

}  // namespace

bool is_punct_codepoint(char32_t cp) {
    return in_ranges(std::begin(kPunctRanges), std::end(kPunctRanges), cp);
}

bool is_space_codepoint(char32_t cp) {
    return in_ranges(std::begin(kSpaceRanges), std::end(kSpaceRanges), cp);
}

char32_t lower_codepoint(char32_t cp) {
    auto it = std::lower_bound(std::begin(kLowerPairs), std::end(kLowerPairs), cp,
                               [](const CodepointPair& p, char32_t v) { return p.from < v; });
    if (it != std::end(kLowerPairs) && it->from == cp) return it->to;
    return cp;
}

}  // namespace detail

std::string normalize_concept_lenient(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    std::size_t i = 0;
    while (i < raw.size()) {
        char32_t cp = detail::decode_utf8(raw, i);
        cp = detail::lower_codepoint(cp);
        if (cp == U'_' || detail::is_space_codepoint(cp)) {
            pending_space = true;
            continue;
        }
        if (cp == 0xFFFD || detail::is_punct_codepoint(cp)) continue;
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
        detail::encode_utf8(cp, out);
    }
    return out;
}

std::string normalize_concept(std::string_view raw) {
    std::string out = normalize_concept_lenient(raw);
    if (out.empty()) {
        throw Error(Errc::empty_after_normalization,
                    "concept '" + std::string(raw) + "' is empty after normalization");
    }
    return out;
}

bool is_normalized_concept(std::string_view text) {
    if (text.empty()) return false;
    return normalize_concept_lenient(text) == text;
}

std::string normalize_relation(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    std::size_t i = 0;
    while (i < raw.size()) {
        char32_t cp = detail::decode_utf8(raw, i);
        cp = detail::lower_codepoint(cp);
        if (detail::is_space_codepoint(cp)) continue;
        detail::encode_utf8(cp, out);
    }
    if (out.empty()) {
        throw Error(Errc::empty_after_normalization, "relation label is empty");
    }
    return out;
}

std::vector<std::string_view> split_tokens(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(' ', pos);
        if (next == std::string_view::npos) next = text.size();
        if (next > pos) tokens.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    return tokens;
}

std::string join_tokens(const std::vector<std::string_view>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out.push_back(' ');
        out.append(tokens[i]);
    }
    return out;
}

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::empty_after_normalization: return "EmptyAfterNormalization";
        case Errc::unknown_node: return "UnknownNode";
        case Errc::unknown_relation: return "UnknownRelation";
        case Errc::malformed_row: return "MalformedRow";
        case Errc::missing_columns: return "MissingColumns";
        case Errc::unexpected_relation: return "UnexpectedRelation";
        case Errc::too_few_nodes: return "TooFewNodes";
        case Errc::empty_graph: return "EmptyGraph";
        case Errc::empty_annotations: return "EmptyAnnotations";
        case Errc::inconsistent_inputs: return "InconsistentInputs";
        case Errc::non_finite_loss: return "NonFiniteLoss";
        case Errc::frozen_graph: return "FrozenGraph";
        case Errc::not_frozen: return "NotFrozen";
        case Errc::invalid_config: return "InvalidConfig";
        case Errc::io_error: return "IoError";
    }
    return "Error";
}

}  // namespace kgprobe
