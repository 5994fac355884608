#include <map>
#include <string>

#include "CLI11.hpp"

#include "cli.hpp"

using archslice::SliceDirection;
using archslice::cli::CliConfig;
using archslice::cli::Command;
using archslice::cli::OutputFormat;

namespace {

void add_io_options(CLI::App* cmd, CliConfig& config) {
    cmd->add_option("input", config.input_path, "architectural description (.acme)")
        ->required();
    cmd->add_option("-o,--output", config.output_path,
                    "write the artifact to a file instead of standard output");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dependence analysis and slicing for architectural descriptions"};
    app.require_subcommand(1);

    CliConfig config;
    std::map<std::string, OutputFormat> formats{{"text", OutputFormat::Text},
                                                {"dot", OutputFormat::Dot},
                                                {"json", OutputFormat::Json}};
    std::map<std::string, SliceDirection> directions{
        {"backward", SliceDirection::Backward},
        {"forward", SliceDirection::Forward}};

    CLI::App* parse_cmd =
        app.add_subcommand("parse", "parse and echo the canonical form");
    add_io_options(parse_cmd, config);

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "check referential integrity");
    add_io_options(validate_cmd, config);

    CLI::App* graph_cmd =
        app.add_subcommand("graph", "export the dependence graph");
    add_io_options(graph_cmd, config);
    graph_cmd->add_option("--format", config.format, "dot (default) or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    CLI::App* slice_cmd =
        app.add_subcommand("slice", "slice with respect to a criterion");
    add_io_options(slice_cmd, config);
    slice_cmd->add_option("--element", config.criterion_element,
                          "component or connector of the slicing criterion")
        ->required();
    slice_cmd
        ->add_option("--ifaces", config.criterion_ifaces,
                     "comma-separated ports or roles of the element")
        ->required()
        ->delimiter(',');
    slice_cmd->add_option("--format", config.format, "text (default), dot or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    slice_cmd
        ->add_option("--direction", config.direction,
                     "backward (default) or forward")
        ->transform(CLI::CheckedTransformer(directions, CLI::ignore_case));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (parse_cmd->parsed())
        config.command = Command::Parse;
    else if (validate_cmd->parsed())
        config.command = Command::Validate;
    else if (graph_cmd->parsed())
        config.command = Command::Graph;
    else
        config.command = Command::Slice;

    if (graph_cmd->parsed() && graph_cmd->count("--format") == 0)
        config.format = OutputFormat::Dot;   // graphs default to dot

    return archslice::cli::run(config);
}
