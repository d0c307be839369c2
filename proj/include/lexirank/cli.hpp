#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lexirank/corpus.hpp"

namespace lexirank::cli {

enum class Command { build, agreement, split_stats, positions, compare_langs, correlate_counts, render };

enum class OutputFormat { text, csv };

enum ExitCode : int { kOk = 0, kDomainError = 1, kInputError = 2 };

struct RunConfig {
    Command command = Command::build;
    std::vector<std::string> inputs;
    std::string output;
    std::uint64_t min_occurrences = 5;
    PairMode pair_mode = PairMode::inter;
    double bin_width = 0.05;
    double level = 0.01;
    OutputFormat format = OutputFormat::text;
    std::string map_path;   // sentiment map SVG
    std::string bars_dir;   // one sentiment bar SVG per entry
    std::string html_path;
    std::string counts_path;     // correlate-counts: external counts CSV
    std::string reference_path;  // compare-langs: reference lexicon CSV
    std::size_t shards = 1;
};

// Each command writes its report to `out`; files named in the config are
// written as a side effect. Library errors propagate as exceptions.
void cmd_build(const RunConfig& config, std::ostream& out);
void cmd_agreement(const RunConfig& config, std::ostream& out);
void cmd_split_stats(const RunConfig& config, std::ostream& out);
void cmd_positions(const RunConfig& config, std::ostream& out);
void cmd_compare_langs(const RunConfig& config, std::ostream& out);
void cmd_correlate_counts(const RunConfig& config, std::ostream& out);
void cmd_render(const RunConfig& config, std::ostream& out);

void dispatch(const RunConfig& config, std::ostream& out);

// Full command line front end; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lexirank::cli
