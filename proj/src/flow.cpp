#include "archslice/flow.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace archslice {

namespace {

std::optional<SourceLoc> loc_of(const SourceLoc& loc) {
    if (loc.line == 0)
        return std::nullopt;
    return loc;
}

Direction resolve_direction_impl(const PropertyList& props,
                                 const std::string& label,
                                 std::vector<Diagnostic>& diags) {
    const Property* prop = find_property(props, "direction");
    if (!prop)
        return Direction::InOut;
    if (const std::string* text = std::get_if<std::string>(&prop->value)) {
        if (auto dir = direction_from_text(*text))
            return *dir;
    }
    diags.push_back(make_error(
        "bad-direction",
        "direction of '" + label + "' must be \"in\", \"out\" or \"inout\", got " +
            (std::holds_alternative<std::string>(prop->value)
                 ? "\"" + std::get<std::string>(prop->value) + "\""
                 : "a non-string value"),
        loc_of(prop->loc)));
    return Direction::InOut;
}

// Trim ASCII whitespace on both ends.
std::string_view trimmed(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);
    return text;
}

struct IfaceInfo {
    InterfaceRef ref;
    Direction direction;
};

// Shared by the component and connector overloads; `ifaces` carries the
// element's interfaces with their resolved directions.
std::set<FlowEdge> internal_flows_impl(const Identifier& owner,
                                       std::string_view element_kind,
                                       const PropertyList& element_props,
                                       const std::vector<IfaceInfo>& ifaces,
                                       std::vector<Diagnostic>& diags) {
    std::set<FlowEdge> edges;
    bool explicit_mode = false;

    for (const Property& prop : element_props) {
        if (prop.name.str().rfind("flow", 0) != 0)
            continue;
        const std::string* text = std::get_if<std::string>(&prop.value);
        if (!text)
            continue;   // flow-prefixed but not a string: plain annotation
        explicit_mode = true;
        std::string_view value = trimmed(*text);
        if (value == "none")
            continue;   // explicitly no internal flows
        std::size_t arrow = value.find("->");
        std::string_view lhs = arrow == std::string_view::npos
                                   ? std::string_view{}
                                   : trimmed(value.substr(0, arrow));
        std::string_view rhs = arrow == std::string_view::npos
                                   ? std::string_view{}
                                   : trimmed(value.substr(arrow + 2));
        if (!Identifier::valid(lhs) || !Identifier::valid(rhs)) {
            diags.push_back(make_error(
                "bad-flow",
                "property '" + prop.name.str() + "' of " + std::string(element_kind) +
                    " '" + owner.str() + "' must be \"<iface> -> <iface>\" or \"none\", got \"" +
                    *text + "\"",
                loc_of(prop.loc)));
            continue;
        }
        auto find = [&](std::string_view name) -> const IfaceInfo* {
            for (const IfaceInfo& info : ifaces)
                if (info.ref.iface.str() == name)
                    return &info;
            return nullptr;
        };
        const IfaceInfo* source = find(lhs);
        const IfaceInfo* sink = find(rhs);
        if (!source || !sink) {
            diags.push_back(make_error(
                "bad-flow",
                std::string(element_kind) + " '" + owner.str() + "' has no interface '" +
                    std::string(!source ? lhs : rhs) + "' named in property '" +
                    prop.name.str() + "'",
                loc_of(prop.loc)));
            continue;
        }
        if (source == sink) {
            diags.push_back(make_error(
                "bad-flow",
                "flow property '" + prop.name.str() + "' of " + std::string(element_kind) +
                    " '" + owner.str() + "' connects '" + std::string(lhs) + "' to itself",
                loc_of(prop.loc)));
            continue;
        }
        edges.insert(FlowEdge{source->ref, sink->ref});
    }

    if (explicit_mode)
        return edges;

    for (const IfaceInfo& in : ifaces) {
        if (in.direction == Direction::Out)
            continue;
        for (const IfaceInfo& out : ifaces) {
            if (out.direction == Direction::In || &in == &out)
                continue;
            edges.insert(FlowEdge{in.ref, out.ref});
        }
    }
    return edges;
}

} // namespace

std::string_view to_string(Direction d) {
    switch (d) {
    case Direction::In: return "in";
    case Direction::Out: return "out";
    case Direction::InOut: return "inout";
    }
    return "?";
}

std::optional<Direction> direction_from_text(std::string_view text) {
    if (text == "in")
        return Direction::In;
    if (text == "out")
        return Direction::Out;
    if (text == "inout")
        return Direction::InOut;
    return std::nullopt;
}

Direction resolve_direction(const Port& port, std::vector<Diagnostic>& diags) {
    return resolve_direction_impl(port.properties, port.name.str(), diags);
}

Direction resolve_direction(const Role& role, std::vector<Diagnostic>& diags) {
    return resolve_direction_impl(role.properties, role.name.str(), diags);
}

std::set<FlowEdge> attachment_flows(const ArchDescription& desc,
                                    const Attachment& att,
                                    std::vector<Diagnostic>& diags) {
    std::set<FlowEdge> edges;
    const Component* comp = desc.find_component(att.component_ref);
    const Port* port = comp ? comp->find_port(att.port_ref) : nullptr;
    const Connector* conn = desc.find_connector(att.connector_ref);
    const Role* role = conn ? conn->find_role(att.role_ref) : nullptr;
    if (!port || !role) {
        diags.push_back(make_error(
            "dangling-ref",
            "attachment '" + att.component_ref.str() + "." + att.port_ref.str() +
                " to " + att.connector_ref.str() + "." + att.role_ref.str() +
                "' does not resolve",
            loc_of(att.loc)));
        return edges;
    }

    Direction port_dir = resolve_direction(*port, diags);
    Direction role_dir = resolve_direction(*role, diags);

    InterfaceRef port_ref{InterfaceKind::Port, comp->name, port->name};
    InterfaceRef role_ref{InterfaceKind::Role, conn->name, role->name};
    if (port_dir != Direction::In)
        edges.insert(FlowEdge{port_ref, role_ref});
    if (port_dir != Direction::Out)
        edges.insert(FlowEdge{role_ref, port_ref});

    // The port is authoritative; the role only cross-checks the wiring.
    bool clash = (port_dir == Direction::Out && role_dir == Direction::Out) ||
                 (port_dir == Direction::In && role_dir == Direction::In);
    if (clash)
        diags.push_back(make_warning(
            "flow-mismatch",
            "port '" + port_ref.label() + "' and role '" + role_ref.label() +
                "' are both declared \"" + std::string(to_string(port_dir)) + "\"",
            loc_of(att.loc)));
    return edges;
}

std::set<FlowEdge> internal_flows(const Component& component,
                                  std::vector<Diagnostic>& diags) {
    std::vector<IfaceInfo> ifaces;
    ifaces.reserve(component.ports.size());
    for (const Port& p : component.ports)
        ifaces.push_back(IfaceInfo{
            InterfaceRef{InterfaceKind::Port, component.name, p.name},
            resolve_direction(p, diags)});
    return internal_flows_impl(component.name, "component", component.properties,
                               ifaces, diags);
}

std::set<FlowEdge> internal_flows(const Connector& connector,
                                  std::vector<Diagnostic>& diags) {
    std::vector<IfaceInfo> ifaces;
    ifaces.reserve(connector.roles.size());
    for (const Role& r : connector.roles)
        ifaces.push_back(IfaceInfo{
            InterfaceRef{InterfaceKind::Role, connector.name, r.name},
            resolve_direction(r, diags)});
    return internal_flows_impl(connector.name, "connector", connector.properties,
                               ifaces, diags);
}

FlowRelation build_flow_relation(const ArchDescription& desc) {
    FlowRelation rel;
    for (const AttachmentsGroup& group : desc.attachments_groups)
        for (const Attachment& att : group.attachments)
            rel.edges.merge(attachment_flows(desc, att, rel.diagnostics));
    for (const Component& comp : desc.components)
        rel.edges.merge(internal_flows(comp, rel.diagnostics));
    for (const Connector& conn : desc.connectors)
        rel.edges.merge(internal_flows(conn, rel.diagnostics));

    // Directions get re-resolved per use; drop repeated findings.
    std::vector<Diagnostic> unique;
    for (Diagnostic& d : rel.diagnostics) {
        bool seen = std::any_of(unique.begin(), unique.end(), [&](const Diagnostic& u) {
            return u.code == d.code && u.message == d.message && u.location == d.location;
        });
        if (!seen)
            unique.push_back(std::move(d));
    }
    rel.diagnostics = std::move(unique);
    return rel;
}

} // namespace archslice
