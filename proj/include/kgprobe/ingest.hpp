#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "kgprobe/graph.hpp"

namespace kgprobe {

/// Row-level accounting for one parse run.
struct IngestReport {
    std::uint64_t rows_read = 0;
    std::uint64_t rows_kept = 0;
    std::uint64_t rows_malformed = 0;
    std::uint64_t rows_skipped_language = 0;
    std::uint64_t rows_skipped_na = 0;
    std::uint64_t rows_skipped_frequency = 0;
    std::uint64_t rows_skipped_empty_concept = 0;
    std::uint64_t raw_triples = 0;  // kept rows before deduplication
    std::uint64_t nodes = 0;
    std::uint64_t triples = 0;
    std::uint64_t relations = 0;
};

/// Parses a ConceptNet 5.x assertion dump (TSV: assertion URI, relation URI,
/// start URI, end URI, metadata). Keeps rows whose start and end are both
/// /c/en/ terms, strips sense suffixes, normalizes concepts, lowercases the
/// relation tail. Every deduplicated triple carries weight 1.
KnowledgeGraph parse_conceptnet(std::istream& in, IngestReport* report = nullptr);

/// Parses the official SWOW cue-response-frequency export (header
/// auto-detected by column names, TSV or CSV). Drops "NA" responses and rows
/// below `min_frequency`; weights are response frequencies, summed for pairs
/// that collide after normalization. All edges carry the single relation
/// "association".
KnowledgeGraph parse_swow(std::istream& in, std::uint64_t min_frequency = 1,
                          IngestReport* report = nullptr);

/// Relabels a single-relation association graph: an edge whose reverse is
/// also present becomes "mutualassociated", all others "forwardassociated".
/// The edge multiset (heads, tails, weights) is unchanged.
KnowledgeGraph label_swow_relations(const KnowledgeGraph& g);

}  // namespace kgprobe
