#include "archslice/diagnostic.hpp"

#include <algorithm>
#include <sstream>

namespace archslice {

Diagnostic make_error(std::string code, std::string message,
                      std::optional<SourceLoc> loc) {
    return Diagnostic{Severity::Error, std::move(code), std::move(message), loc};
}

Diagnostic make_warning(std::string code, std::string message,
                        std::optional<SourceLoc> loc) {
    return Diagnostic{Severity::Warning, std::move(code), std::move(message), loc};
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
        return d.severity == Severity::Error;
    });
}

std::string to_string(const Diagnostic& d) {
    std::ostringstream out;
    if (d.location)
        out << d.location->line << ":" << d.location->column << ": ";
    out << (d.severity == Severity::Error ? "error" : "warning");
    out << "[" << d.code << "]: " << d.message;
    return out.str();
}

} // namespace archslice
