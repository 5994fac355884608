#pragma once

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "archslice/slice.hpp"

namespace archslice::cli {

enum class Command { Parse, Validate, Graph, Slice };

enum class OutputFormat { Text, Dot, Json };

struct CliConfig {
    Command command = Command::Parse;
    std::string input_path;
    std::optional<std::string> output_path;   // default: standard output
    OutputFormat format = OutputFormat::Text;
    std::string criterion_element;            // slice only
    std::vector<std::string> criterion_ifaces;
    SliceDirection direction = SliceDirection::Backward;
};

/// Executes one command. Artifacts go to `output_path` or `out`; diagnostics
/// go to `err`. Returns 0 on success, 1 when diagnostics contain an error,
/// 2 on usage or I/O problems.
int run(const CliConfig& config, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

} // namespace archslice::cli
