#pragma once

#include <vector>

#include "archslice/ast.hpp"
#include "archslice/diagnostic.hpp"

namespace archslice {

/// Checks referential integrity of a parsed description:
///   - every attachment's component/port/connector/role must resolve
///     (error "dangling-ref"),
///   - no port or role may appear in more than one attachment
///     (error "multi-attach"),
///   - a port or role that is never attached yields a warning "unattached".
/// Returns the findings in declaration order; empty means fully clean.
std::vector<Diagnostic> validate(const ArchDescription& desc);

} // namespace archslice
