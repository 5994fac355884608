#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "archslice/ast.hpp"
#include "archslice/diagnostic.hpp"

namespace archslice {

/// Direction of information flow through a port or role, relative to its
/// element. Declared with a `direction : string = "in"|"out"|"inout"`
/// property; an interface without one defaults to inout, which
/// over-approximates the flows and keeps slices conservative.
enum class Direction { In, Out, InOut };

std::string_view to_string(Direction d);
std::optional<Direction> direction_from_text(std::string_view text);

enum class InterfaceKind { Port, Role };

/// A port or role, qualified by the component or connector that owns it.
struct InterfaceRef {
    InterfaceKind kind = InterfaceKind::Port;
    Identifier owner;
    Identifier iface;

    std::string label() const { return owner.str() + "." + iface.str(); }

    friend auto operator<=>(const InterfaceRef&, const InterfaceRef&) = default;
};

/// A directed information flow: data moves source -> sink.
struct FlowEdge {
    InterfaceRef source;
    InterfaceRef sink;

    friend auto operator<=>(const FlowEdge&, const FlowEdge&) = default;
};

struct FlowRelation {
    std::set<FlowEdge> edges;
    std::vector<Diagnostic> diagnostics;   // bad-direction/bad-flow errors,
                                           // flow-mismatch warnings
};

/// Direction of a port or role per its `direction` property; defaults to
/// inout when absent. A malformed value reports "bad-direction" and falls
/// back to inout.
Direction resolve_direction(const Port& port, std::vector<Diagnostic>& diags);
Direction resolve_direction(const Role& role, std::vector<Diagnostic>& diags);

/// Flows induced by one attachment. The port's direction decides: out adds
/// port -> role, in adds role -> port, inout adds both. The role's direction
/// is only checked for consistency (a directional clash is the warning
/// "flow-mismatch"; the edges still follow the port).
std::set<FlowEdge> attachment_flows(const ArchDescription& desc,
                                    const Attachment& att,
                                    std::vector<Diagnostic>& diags);

/// Flows between the interfaces of a single element.
///
/// String properties whose name starts with "flow" declare them explicitly:
/// "a -> b" adds exactly that edge, and "none" declares that the element has
/// no internal flows. If no such property is present, every in/inout
/// interface feeds every out/inout one (i != o; self-loops are never
/// generated). A flow property that is malformed or names an unknown
/// interface reports "bad-flow".
std::set<FlowEdge> internal_flows(const Component& component,
                                  std::vector<Diagnostic>& diags);
std::set<FlowEdge> internal_flows(const Connector& connector,
                                  std::vector<Diagnostic>& diags);

/// Union of attachment flows over all groups and internal flows over all
/// elements. Expects a description that validates without errors.
FlowRelation build_flow_relation(const ArchDescription& desc);

} // namespace archslice
