#include "archslice/sadg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace archslice {

namespace {

Vertex vertex_of(const InterfaceRef& ref) {
    return Vertex{ref.kind == InterfaceKind::Port ? VertexKind::Port : VertexKind::Role,
                  ref.owner, ref.iface};
}

// Label order: owner then interface. Owners are unique across components and
// connectors, so this equals ordering by the printed "owner.iface" label.
bool label_less(const Vertex& a, const Vertex& b) {
    if (a.owner != b.owner)
        return a.owner < b.owner;
    return a.iface < b.iface;
}

std::vector<Vertex> by_label(const std::set<Vertex>& vertices) {
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end(), label_less);
    return sorted;
}

std::vector<DependenceArc> by_label(const std::set<DependenceArc>& arcs) {
    std::vector<DependenceArc> sorted(arcs.begin(), arcs.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const DependenceArc& a, const DependenceArc& b) {
                  if (a.from != b.from)
                      return label_less(a.from, b.from);
                  if (a.to != b.to)
                      return label_less(a.to, b.to);
                  return a.kind < b.kind;
              });
    return sorted;
}

const char* edge_style(ArcKind kind) {
    switch (kind) {
    case ArcKind::ComponentConnector: return "bold";
    case ArcKind::ConnectorComponent: return "\"bold,dashed\"";
    case ArcKind::Additional: return "dashed";
    }
    return "solid";
}

} // namespace

std::string_view to_string(VertexKind k) {
    return k == VertexKind::Port ? "port" : "role";
}

std::string_view to_string(ArcKind k) {
    switch (k) {
    case ArcKind::ComponentConnector: return "component-connector";
    case ArcKind::ConnectorComponent: return "connector-component";
    case ArcKind::Additional: return "additional";
    }
    return "?";
}

SadgResult build_sadg(const ArchDescription& desc) {
    SadgResult result;
    FlowRelation rel = build_flow_relation(desc);
    result.diagnostics = std::move(rel.diagnostics);
    if (has_errors(result.diagnostics))
        return result;

    Sadg g;
    g.description = &desc;
    for (const Component& comp : desc.components)
        for (const Port& port : comp.ports)
            g.vertices.insert(Vertex{VertexKind::Port, comp.name, port.name});
    for (const Connector& conn : desc.connectors)
        for (const Role& role : conn.roles)
            g.vertices.insert(Vertex{VertexKind::Role, conn.name, role.name});

    // The sink of a flow depends on its source.
    for (const FlowEdge& edge : rel.edges) {
        Vertex from = vertex_of(edge.sink);
        Vertex to = vertex_of(edge.source);
        ArcKind kind;
        if (from.owner == to.owner && from.kind == to.kind)
            kind = ArcKind::Additional;
        else if (from.kind == VertexKind::Port)
            kind = ArcKind::ComponentConnector;
        else
            kind = ArcKind::ConnectorComponent;
        g.arcs.insert(DependenceArc{std::move(from), std::move(to), kind});
    }
    result.graph = std::move(g);
    return result;
}

std::string emit_dot(const Sadg& g, const std::set<Vertex>* highlight) {
    std::ostringstream out;
    out << "digraph sadg {\n";
    for (const Vertex& v : by_label(g.vertices)) {
        out << "  \"" << v.label() << "\" [shape="
            << (v.kind == VertexKind::Port ? "box" : "ellipse");
        if (highlight && highlight->count(v))
            out << ", style=filled, fillcolor=gray85";
        out << "];\n";
    }
    for (const DependenceArc& a : by_label(g.arcs))
        out << "  \"" << a.from.label() << "\" -> \"" << a.to.label()
            << "\" [style=" << edge_style(a.kind) << "];\n";
    out << "}\n";
    return out.str();
}

std::string emit_json(const Sadg& g) {
    nlohmann::ordered_json doc;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (const Vertex& v : by_label(g.vertices))
        doc["vertices"].push_back({{"kind", std::string(to_string(v.kind))},
                                   {"owner", v.owner.str()},
                                   {"iface", v.iface.str()}});
    doc["arcs"] = nlohmann::ordered_json::array();
    for (const DependenceArc& a : by_label(g.arcs))
        doc["arcs"].push_back({{"from", a.from.label()},
                               {"to", a.to.label()},
                               {"kind", std::string(to_string(a.kind))}});
    return doc.dump();
}

} // namespace archslice
