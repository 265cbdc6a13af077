#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "kgprobe/graph.hpp"

namespace kgprobe {

/// Canonical graph format: UTF-8 TSV, one `head\trelation\ttail\tweight`
/// line per triple, '#'-prefixed comment lines allowed, no header.
/// Weights are written in shortest round-trip form so write→read yields an
/// identical graph. The reader rejects fields that are not in canonical
/// form; use ingest for raw dumps.
KnowledgeGraph read_graph_tsv(std::istream& in, bool freeze = true);
KnowledgeGraph read_graph_tsv(const std::filesystem::path& path, bool freeze = true);

void write_graph_tsv(const KnowledgeGraph& g, std::ostream& out);
void write_graph_tsv(const KnowledgeGraph& g, const std::filesystem::path& path);

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

/// Strict double parse of a whole field. Throws Errc::malformed_row.
double parse_double_field(std::string_view field, std::size_t line_no);

}  // namespace kgprobe
