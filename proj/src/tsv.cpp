#include "kgprobe/tsv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "kgprobe/error.hpp"
#include "kgprobe/text.hpp"

namespace kgprobe {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = line.find('\t', pos);
        if (next == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, next - pos));
        pos = next + 1;
    }
    return fields;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) throw Error(Errc::io_error, "failed to format number");
    return std::string(buf, ptr);
}

double parse_double_field(std::string_view field, std::size_t line_no) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw Error(Errc::malformed_row,
                    "line " + std::to_string(line_no) + ": bad numeric field '" +
                        std::string(field) + "'");
    }
    return value;
}

KnowledgeGraph read_graph_tsv(std::istream& in, bool freeze) {
    KnowledgeGraph g;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_tabs(line);
        if (fields.size() != 4) {
            throw Error(Errc::malformed_row,
                        "line " + std::to_string(line_no) + ": expected 4 tab-separated fields, got " +
                            std::to_string(fields.size()));
        }
        if (!is_normalized_concept(fields[0]) || !is_normalized_concept(fields[2])) {
            throw Error(Errc::malformed_row,
                        "line " + std::to_string(line_no) + ": concept field is not in canonical form");
        }
        if (fields[1].empty() || normalize_relation(fields[1]) != fields[1]) {
            throw Error(Errc::malformed_row,
                        "line " + std::to_string(line_no) + ": relation field is not in canonical form");
        }
        const double weight = parse_double_field(fields[3], line_no);
        if (!(weight > 0)) {
            throw Error(Errc::malformed_row,
                        "line " + std::to_string(line_no) + ": weight must be positive");
        }
        g.add_triple(fields[0], fields[1], fields[2], weight);
    }
    if (freeze) g.freeze();
    return g;
}

KnowledgeGraph read_graph_tsv(const std::filesystem::path& path, bool freeze) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io_error, "cannot open '" + path.string() + "' for reading");
    return read_graph_tsv(in, freeze);
}

void write_graph_tsv(const KnowledgeGraph& g, std::ostream& out) {
    for (const auto& t : g.triples()) {
        out << g.node_name(t.head) << '\t' << g.relation_name(t.relation) << '\t'
            << g.node_name(t.tail) << '\t' << format_double(t.weight) << '\n';
    }
    if (!out) throw Error(Errc::io_error, "write failed");
}

void write_graph_tsv(const KnowledgeGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::io_error, "cannot open '" + path.string() + "' for writing");
    write_graph_tsv(g, out);
}

}  // namespace kgprobe
