#pragma once

#include <optional>
#include <string>
#include <vector>

namespace archslice {

/// 1-based position in a source text.
struct SourceLoc {
    int line = 0;
    int column = 0;

    friend bool operator==(const SourceLoc&, const SourceLoc&) = default;
};

enum class Severity { Error, Warning };

/// A structured parse/validation/flow finding. `location` is empty when no
/// source span is known (e.g. for programmatically built descriptions).
struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    std::optional<SourceLoc> location;
};

Diagnostic make_error(std::string code, std::string message,
                      std::optional<SourceLoc> loc = std::nullopt);
Diagnostic make_warning(std::string code, std::string message,
                        std::optional<SourceLoc> loc = std::nullopt);

bool has_errors(const std::vector<Diagnostic>& diags);

/// Renders "line:col: severity[code]: message"; the position prefix is
/// omitted when the diagnostic has no location.
std::string to_string(const Diagnostic& d);

} // namespace archslice
