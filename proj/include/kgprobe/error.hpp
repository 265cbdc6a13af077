#pragma once

#include <stdexcept>
#include <string>

namespace kgprobe {

enum class Errc {
    empty_after_normalization,
    unknown_node,
    unknown_relation,
    malformed_row,
    missing_columns,
    unexpected_relation,
    too_few_nodes,
    empty_graph,
    empty_annotations,
    inconsistent_inputs,
    non_finite_loss,
    frozen_graph,
    not_frozen,
    invalid_config,
    io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace kgprobe
