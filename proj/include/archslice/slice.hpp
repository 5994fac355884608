#pragma once

#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "archslice/ast.hpp"
#include "archslice/diagnostic.hpp"
#include "archslice/sadg.hpp"

namespace archslice {

/// Backward: everything that may affect the criterion. Forward: everything
/// the criterion may affect.
enum class SliceDirection { Backward, Forward };

/// A component plus some of its ports, or a connector plus some of its
/// roles. Produced by resolve_criterion, so all names are known to exist.
struct SliceCriterion {
    VertexKind kind = VertexKind::Port;
    Identifier element;
    std::set<Identifier> ifaces;   // non-empty
};

/// The vertices reachable from the criterion, with the arcs they induce.
struct GraphSlice {
    std::set<Vertex> seed;
    std::set<Vertex> vertices;          // seed is always included
    std::set<DependenceArc> arcs;       // both endpoints inside `vertices`
    SliceDirection direction = SliceDirection::Backward;
};

using CriterionResult = std::variant<SliceCriterion, Diagnostic>;

/// Checks the element and each interface in the given order; the first name
/// that does not resolve is reported as error "bad-criterion". An empty
/// interface list is rejected the same way.
CriterionResult resolve_criterion(const ArchDescription& desc,
                                  const Identifier& element,
                                  const std::vector<Identifier>& ifaces);

/// Reachability slice over the graph: follows arcs as stored for a backward
/// slice and reversed for a forward slice, starting from (and including) the
/// criterion's vertices.
GraphSlice slice_graph(const Sadg& g, const SliceCriterion& criterion,
                       SliceDirection direction);

/// Projects a graph slice back into a well-formed description: an element
/// survives iff one of its vertices does, keeping exactly its surviving
/// interfaces; an attachment survives iff both endpoints do; groups that
/// lose all attachments are dropped. Declaration order and properties are
/// preserved, except that explicit flow properties whose endpoints were
/// sliced away are removed (see project_slice in the library docs).
ArchDescription project_slice(const ArchDescription& desc,
                              const GraphSlice& slice);

struct SliceOutcome {
    std::optional<GraphSlice> graph;
    std::optional<ArchDescription> description;
    std::vector<Diagnostic> diagnostics;   // errors on failure, else warnings

    bool ok() const { return description.has_value(); }
};

/// The whole pipeline: validate, resolve the criterion, build the graph,
/// slice it, project it. Fails on validation errors, a bad criterion, or
/// flow derivation errors; warnings are passed through on success.
SliceOutcome slice(const ArchDescription& desc, const Identifier& element,
                   const std::vector<Identifier>& ifaces,
                   SliceDirection direction = SliceDirection::Backward);

} // namespace archslice
