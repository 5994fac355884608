#include "archslice/slice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <utility>

#include "archslice/flow.hpp"
#include "archslice/validate.hpp"

namespace archslice {

namespace {

bool is_flow_property(const Property& prop) {
    return prop.name.str().rfind("flow", 0) == 0 &&
           std::holds_alternative<std::string>(prop.value);
}

// Does this flow property still connect two surviving interfaces?
bool flow_property_survives(const Property& prop,
                            const std::set<Identifier>& kept_ifaces) {
    const std::string& text = std::get<std::string>(prop.value);
    std::size_t arrow = text.find("->");
    if (arrow == std::string::npos)
        return true;   // "none" and malformed values carry no interface names
    auto trim = [](std::string s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.erase(s.begin());
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.pop_back();
        return s;
    };
    std::string lhs = trim(text.substr(0, arrow));
    std::string rhs = trim(text.substr(arrow + 2));
    if (!Identifier::valid(lhs) || !Identifier::valid(rhs))
        return true;
    return kept_ifaces.count(Identifier(lhs)) && kept_ifaces.count(Identifier(rhs));
}

// Keeps the element's properties minus flow declarations whose endpoints
// were sliced away. An element that loses every flow declaration this way
// gets an explicit "none" so the projection cannot fall back to the default
// closure and grow arcs the slice never had.
PropertyList project_properties(const PropertyList& props,
                                const std::set<Identifier>& kept_ifaces) {
    PropertyList kept;
    bool had_flow_decl = false;
    bool kept_flow_decl = false;
    for (const Property& prop : props) {
        if (is_flow_property(prop)) {
            had_flow_decl = true;
            if (!flow_property_survives(prop, kept_ifaces))
                continue;
            kept_flow_decl = true;
        }
        kept.push_back(prop);
    }
    if (had_flow_decl && !kept_flow_decl) {
        std::string name = "flow";
        for (int i = 2; find_property(kept, name); ++i)
            name = "flow" + std::to_string(i);
        kept.push_back(Property{Identifier(name), PropertyType::String,
                                PropertyValue(std::string("none"))});
    }
    return kept;
}

} // namespace

CriterionResult resolve_criterion(const ArchDescription& desc,
                                  const Identifier& element,
                                  const std::vector<Identifier>& ifaces) {
    SliceCriterion criterion;
    criterion.element = element;

    const Component* comp = desc.find_component(element);
    const Connector* conn = comp ? nullptr : desc.find_connector(element);
    if (!comp && !conn)
        return make_error("bad-criterion",
                          "criterion names unknown element '" + element.str() + "'");
    criterion.kind = comp ? VertexKind::Port : VertexKind::Role;

    if (ifaces.empty())
        return make_error("bad-criterion",
                          "criterion needs at least one port or role of '" +
                              element.str() + "'");
    for (const Identifier& iface : ifaces) {
        bool known = comp ? comp->find_port(iface) != nullptr
                          : conn->find_role(iface) != nullptr;
        if (!known)
            return make_error("bad-criterion",
                              std::string(comp ? "component" : "connector") + " '" +
                                  element.str() + "' has no " +
                                  (comp ? "port" : "role") + " '" + iface.str() + "'");
        criterion.ifaces.insert(iface);
    }
    return criterion;
}

GraphSlice slice_graph(const Sadg& g, const SliceCriterion& criterion,
                       SliceDirection direction) {
    GraphSlice slice;
    slice.direction = direction;
    for (const Identifier& iface : criterion.ifaces)
        slice.seed.insert(Vertex{criterion.kind, criterion.element, iface});

    std::map<Vertex, std::vector<Vertex>> succ;
    for (const DependenceArc& arc : g.arcs) {
        if (direction == SliceDirection::Backward)
            succ[arc.from].push_back(arc.to);
        else
            succ[arc.to].push_back(arc.from);
    }

    std::deque<Vertex> queue(slice.seed.begin(), slice.seed.end());
    slice.vertices = slice.seed;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        auto it = succ.find(v);
        if (it == succ.end())
            continue;
        for (const Vertex& next : it->second)
            if (slice.vertices.insert(next).second)
                queue.push_back(next);
    }

    for (const DependenceArc& arc : g.arcs)
        if (slice.vertices.count(arc.from) && slice.vertices.count(arc.to))
            slice.arcs.insert(arc);
    return slice;
}

ArchDescription project_slice(const ArchDescription& desc,
                              const GraphSlice& slice) {
    ArchDescription out;
    out.system_name = desc.system_name;
    out.properties = desc.properties;

    for (const Component& comp : desc.components) {
        Component kept;
        kept.name = comp.name;
        std::set<Identifier> kept_names;
        for (const Port& port : comp.ports)
            if (slice.vertices.count(Vertex{VertexKind::Port, comp.name, port.name})) {
                kept.ports.push_back(port);
                kept_names.insert(port.name);
            }
        if (kept.ports.empty())
            continue;
        kept.properties = project_properties(comp.properties, kept_names);
        out.components.push_back(std::move(kept));
    }

    for (const Connector& conn : desc.connectors) {
        Connector kept;
        kept.name = conn.name;
        std::set<Identifier> kept_names;
        for (const Role& role : conn.roles)
            if (slice.vertices.count(Vertex{VertexKind::Role, conn.name, role.name})) {
                kept.roles.push_back(role);
                kept_names.insert(role.name);
            }
        if (kept.roles.empty())
            continue;
        kept.properties = project_properties(conn.properties, kept_names);
        out.connectors.push_back(std::move(kept));
    }

    for (const AttachmentsGroup& group : desc.attachments_groups) {
        AttachmentsGroup kept;
        kept.name = group.name;
        for (const Attachment& att : group.attachments) {
            bool port_in = slice.vertices.count(
                Vertex{VertexKind::Port, att.component_ref, att.port_ref});
            bool role_in = slice.vertices.count(
                Vertex{VertexKind::Role, att.connector_ref, att.role_ref});
            if (port_in && role_in)
                kept.attachments.push_back(att);
        }
        if (!kept.attachments.empty())
            out.attachments_groups.push_back(std::move(kept));
    }
    return out;
}

SliceOutcome slice(const ArchDescription& desc, const Identifier& element,
                   const std::vector<Identifier>& ifaces,
                   SliceDirection direction) {
    SliceOutcome outcome;
    outcome.diagnostics = validate(desc);
    if (has_errors(outcome.diagnostics))
        return outcome;

    CriterionResult criterion = resolve_criterion(desc, element, ifaces);
    if (const Diagnostic* error = std::get_if<Diagnostic>(&criterion)) {
        outcome.diagnostics.push_back(*error);
        return outcome;
    }

    SadgResult built = build_sadg(desc);
    outcome.diagnostics.insert(outcome.diagnostics.end(),
                               built.diagnostics.begin(), built.diagnostics.end());
    if (!built.ok())
        return outcome;

    outcome.graph = slice_graph(*built.graph, std::get<SliceCriterion>(criterion),
                                direction);
    outcome.description = project_slice(desc, *outcome.graph);
    return outcome;
}

} // namespace archslice
