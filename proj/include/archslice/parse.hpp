#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "archslice/ast.hpp"
#include "archslice/diagnostic.hpp"

namespace archslice {

/// Either a description or a non-empty list of error diagnostics, never both.
struct ParseResult {
    std::optional<ArchDescription> description;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return description.has_value(); }
};

/// Parses a textual architectural description.
///
/// Lexical and syntax errors abort the parse with one located diagnostic
/// (codes "bad-token" / "syntax-error"). Name clashes are collected while
/// parsing continues (codes "duplicate-name" / "type-mismatch"), so several
/// of them can be reported in one run. Every parse error carries a location.
ParseResult parse(std::string_view source);

} // namespace archslice
