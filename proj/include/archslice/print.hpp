#pragma once

#include <string>

#include "archslice/ast.hpp"

namespace archslice {

/// Pretty-prints a description in canonical form. The output re-parses to a
/// structurally identical description; declaration order is preserved.
std::string emit_text(const ArchDescription& desc);

/// Renders one property value as a literal ("quoted" strings, floats always
/// distinguishable from ints, shortest form that reads back to the same value).
std::string format_value(const PropertyValue& value);

} // namespace archslice
