#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "archslice/parse.hpp"

namespace testutil {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

inline std::string fixture_text(const std::string& name) {
    return read_file(fixture_path(name));
}

// Parses text that the test expects to be well-formed.
inline archslice::ArchDescription parse_ok(std::string_view source) {
    archslice::ParseResult result = archslice::parse(source);
    if (!result.ok()) {
        std::string message = "unexpected parse failure:";
        for (const auto& d : result.diagnostics)
            message += "\n  " + archslice::to_string(d);
        throw std::runtime_error(message);
    }
    return *result.description;
}

inline archslice::ArchDescription load_fixture(const std::string& name) {
    return parse_ok(fixture_text(name));
}

} // namespace testutil
