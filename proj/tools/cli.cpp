#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "archslice/parse.hpp"
#include "archslice/print.hpp"
#include "archslice/sadg.hpp"
#include "archslice/validate.hpp"

namespace archslice::cli {

namespace {

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

void print_diagnostics(const std::string& path,
                       const std::vector<Diagnostic>& diags, std::ostream& err) {
    for (const Diagnostic& d : diags)
        err << path << ":" << to_string(d) << "\n";
}

int write_artifact(const CliConfig& config, const std::string& text,
                   std::ostream& out, std::ostream& err) {
    if (!config.output_path) {
        out << text;
        return 0;
    }
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) {
        err << "error: cannot write '" << *config.output_path << "'\n";
        return 2;
    }
    file << text;
    return 0;
}

int run_slice(const CliConfig& config, const ArchDescription& desc,
              std::ostream& out, std::ostream& err) {
    std::vector<Diagnostic> diags = validate(desc);
    if (has_errors(diags)) {
        print_diagnostics(config.input_path, diags, err);
        return 1;
    }

    std::vector<Identifier> ifaces;
    Identifier element;
    try {
        element = Identifier(config.criterion_element);
        for (const std::string& name : config.criterion_ifaces)
            ifaces.emplace_back(name);
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }

    CriterionResult criterion = resolve_criterion(desc, element, ifaces);
    if (const Diagnostic* error = std::get_if<Diagnostic>(&criterion)) {
        print_diagnostics(config.input_path, diags, err);
        print_diagnostics(config.input_path, {*error}, err);
        return 1;
    }

    SadgResult built = build_sadg(desc);
    diags.insert(diags.end(), built.diagnostics.begin(), built.diagnostics.end());
    print_diagnostics(config.input_path, diags, err);
    if (!built.ok())
        return 1;

    GraphSlice slice = slice_graph(*built.graph, std::get<SliceCriterion>(criterion),
                                   config.direction);

    switch (config.format) {
    case OutputFormat::Text:
        return write_artifact(config, emit_text(project_slice(desc, slice)), out, err);
    case OutputFormat::Dot:
        return write_artifact(config, emit_dot(*built.graph, &slice.vertices), out, err);
    case OutputFormat::Json: {
        const SliceCriterion& c = std::get<SliceCriterion>(criterion);
        nlohmann::ordered_json doc;
        doc["criterion"]["element"] = c.element.str();
        doc["criterion"]["ifaces"] = nlohmann::ordered_json::array();
        for (const Identifier& iface : c.ifaces)
            doc["criterion"]["ifaces"].push_back(iface.str());
        doc["sliceVertices"] = nlohmann::ordered_json::array();
        std::vector<std::string> labels;
        for (const Vertex& v : slice.vertices)
            labels.push_back(v.label());
        std::sort(labels.begin(), labels.end());
        for (const std::string& label : labels)
            doc["sliceVertices"].push_back(label);
        doc["description"] = emit_text(project_slice(desc, slice));
        return write_artifact(config, doc.dump() + "\n", out, err);
    }
    }
    return 2;
}

} // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    std::string source;
    if (!read_file(config.input_path, source)) {
        err << "error: cannot read '" << config.input_path << "'\n";
        return 2;
    }

    ParseResult parsed = parse(source);
    if (!parsed.ok()) {
        print_diagnostics(config.input_path, parsed.diagnostics, err);
        return 1;
    }
    const ArchDescription& desc = *parsed.description;

    switch (config.command) {
    case Command::Parse:
        if (config.format != OutputFormat::Text) {
            err << "error: 'parse' only supports --format text\n";
            return 2;
        }
        return write_artifact(config, emit_text(desc), out, err);

    case Command::Validate: {
        std::vector<Diagnostic> diags = validate(desc);
        print_diagnostics(config.input_path, diags, err);
        return has_errors(diags) ? 1 : 0;
    }

    case Command::Graph: {
        if (config.format == OutputFormat::Text) {
            err << "error: 'graph' needs --format dot or --format json\n";
            return 2;
        }
        std::vector<Diagnostic> diags = validate(desc);
        if (has_errors(diags)) {
            print_diagnostics(config.input_path, diags, err);
            return 1;
        }
        SadgResult built = build_sadg(desc);
        diags.insert(diags.end(), built.diagnostics.begin(), built.diagnostics.end());
        print_diagnostics(config.input_path, diags, err);
        if (!built.ok())
            return 1;
        return write_artifact(config,
                              config.format == OutputFormat::Dot
                                  ? emit_dot(*built.graph)
                                  : emit_json(*built.graph) + "\n",
                              out, err);
    }

    case Command::Slice:
        return run_slice(config, desc, out, err);
    }
    return 2;
}

} // namespace archslice::cli
