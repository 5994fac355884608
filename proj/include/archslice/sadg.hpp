#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "archslice/ast.hpp"
#include "archslice/diagnostic.hpp"
#include "archslice/flow.hpp"

namespace archslice {

enum class VertexKind { Port, Role };

std::string_view to_string(VertexKind k);

/// One port or role of the description. Named "owner.iface".
struct Vertex {
    VertexKind kind = VertexKind::Port;
    Identifier owner;
    Identifier iface;

    std::string label() const { return owner.str() + "." + iface.str(); }

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Arc classification of the dependence graph:
///   - component-connector: a port depends on a role (data flows role -> port),
///   - connector-component: a role depends on a port (data flows port -> role),
///   - additional: intra-element, an output depends on an input that feeds it.
enum class ArcKind { ComponentConnector, ConnectorComponent, Additional };

std::string_view to_string(ArcKind k);

/// `from` depends on `to`; arcs run from the data sink to the data source,
/// so a backward slice is plain reachability from the criterion.
struct DependenceArc {
    Vertex from;
    Vertex to;
    ArcKind kind = ArcKind::Additional;

    friend auto operator<=>(const DependenceArc&, const DependenceArc&) = default;
};

/// The software architectural dependence graph (SADG): one vertex per port
/// and per role (isolated ones included), arcs per the flow relation.
/// Holds a pointer to the description it was built from; keep that
/// description alive for as long as the graph is used.
struct Sadg {
    std::set<Vertex> vertices;
    std::set<DependenceArc> arcs;
    const ArchDescription* description = nullptr;
};

struct SadgResult {
    std::optional<Sadg> graph;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return graph.has_value(); }
};

/// Builds the dependence graph for a description that validates cleanly.
/// Each flow edge s -> t becomes one arc (t, s). Fails only when the flow
/// derivation reported errors (bad-direction / bad-flow).
SadgResult build_sadg(const ArchDescription& desc);

/// Graphviz view: port vertices as boxes, role vertices as ellipses;
/// component-connector arcs bold, connector-component bold+dashed,
/// additional dashed. Vertices listed in `highlight` are filled.
/// Output is sorted and byte-stable.
std::string emit_dot(const Sadg& g, const std::set<Vertex>* highlight = nullptr);

/// Deterministic JSON: {"vertices":[{kind,owner,iface}],"arcs":[{from,to,kind}]},
/// vertices sorted by owner/iface, arcs by from/to labels.
std::string emit_json(const Sadg& g);

} // namespace archslice
