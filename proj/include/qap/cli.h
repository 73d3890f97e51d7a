#pragma once

#include <cstdint>
#include <string>

#include "qap/partition.h"

namespace qap::cli {

enum class Format { text, json, csv };

struct RunConfig {
    int p = 3;
    Format format = Format::text;
    uint64_t seed = 2024;
    int n = 100;
    std::string label;
    std::string cell;  // "B:<index>/eps:<0|1>"
};

struct CommandResult {
    int exit_code = 0;  // 0 pass, 1 invariant failure, 2 usage error
    std::string output;
};

/// Table layout: label, center, one row per pair, then the
/// bi-subalgebra list.
std::string render_table_text(const QAPartition &q);
std::string render_table_json(const QAPartition &q);
CellId parse_cell(const std::string &key);

CommandResult cmd_count(const RunConfig &cfg);
CommandResult cmd_enumerate(const RunConfig &cfg);
CommandResult cmd_table(const RunConfig &cfg);
CommandResult cmd_qap(const RunConfig &cfg);
CommandResult cmd_coqa(const RunConfig &cfg);
CommandResult cmd_verify(const RunConfig &cfg);
CommandResult cmd_oracle(const RunConfig &cfg);
CommandResult cmd_classify(const RunConfig &cfg);
CommandResult cmd_connect(const RunConfig &cfg);
CommandResult cmd_lift(const RunConfig &cfg);

/// Dispatch by subcommand name; errors become exit codes.
CommandResult run(const std::string &command, const RunConfig &cfg);

}  // namespace qap::cli
