#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "archslice/flow.hpp"
#include "archslice/validate.hpp"

#include "support/corpus.hpp"
#include "support/util.hpp"

using namespace archslice;

namespace {

Port make_port(const std::string& name, const char* direction = nullptr) {
    Port p;
    p.name = Identifier(name);
    if (direction)
        p.properties.push_back(Property{Identifier("direction"), PropertyType::String,
                                        PropertyValue(std::string(direction))});
    return p;
}

Role make_role(const std::string& name, const char* direction = nullptr) {
    Role r;
    r.name = Identifier(name);
    if (direction)
        r.properties.push_back(Property{Identifier("direction"), PropertyType::String,
                                        PropertyValue(std::string(direction))});
    return r;
}

FlowEdge edge(InterfaceKind src_kind, const std::string& src_owner,
              const std::string& src_iface, InterfaceKind sink_kind,
              const std::string& sink_owner, const std::string& sink_iface) {
    return FlowEdge{
        InterfaceRef{src_kind, Identifier(src_owner), Identifier(src_iface)},
        InterfaceRef{sink_kind, Identifier(sink_owner), Identifier(sink_iface)}};
}

bool contains(const std::set<FlowEdge>& edges, const FlowEdge& e) {
    return edges.count(e) > 0;
}

} // namespace

TEST_CASE("direction resolves from the property") {
    std::vector<Diagnostic> diags;
    CHECK(resolve_direction(make_port("p", "in"), diags) == Direction::In);
    CHECK(resolve_direction(make_port("p", "out"), diags) == Direction::Out);
    CHECK(resolve_direction(make_port("p", "inout"), diags) == Direction::InOut);
    CHECK(resolve_direction(make_role("r", "in"), diags) == Direction::In);
    CHECK(diags.empty());
}

TEST_CASE("missing direction defaults to inout") {
    std::vector<Diagnostic> diags;
    CHECK(resolve_direction(make_port("p"), diags) == Direction::InOut);
    CHECK(diags.empty());
}

TEST_CASE("a bogus direction is an error") {
    std::vector<Diagnostic> diags;
    CHECK(resolve_direction(make_role("r", "sideways"), diags) == Direction::InOut);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == "bad-direction");
    CHECK(diags[0].severity == Severity::Error);
}

TEST_CASE("a non-string direction is an error too") {
    Port p;
    p.name = Identifier("p");
    p.properties.push_back(
        Property{Identifier("direction"), PropertyType::Int, PropertyValue(std::int64_t{1})});
    std::vector<Diagnostic> diags;
    resolve_direction(p, diags);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == "bad-direction");
}

TEST_CASE("attachment flows follow the port direction") {
    ArchDescription d = testutil::parse_ok(R"(
        System s = {
          Component call_entry = {
            Port send_call_msg = { Properties { direction : string = "out"; } };
          }
          Connector call_info_channel = {
            Role from = { Properties { direction : string = "in"; } };
          }
          Attachments w = { call_entry.send_call_msg to call_info_channel.from; }
        }
    )");
    std::vector<Diagnostic> diags;
    std::set<FlowEdge> edges =
        attachment_flows(d, d.attachments_groups[0].attachments[0], diags);
    CHECK(diags.empty());
    REQUIRE(edges.size() == 1);
    CHECK(contains(edges, edge(InterfaceKind::Port, "call_entry", "send_call_msg",
                               InterfaceKind::Role, "call_info_channel", "from")));
}

TEST_CASE("an in port receives from the role") {
    ArchDescription d = testutil::parse_ok(R"(
        System s = {
          Component resource_mgr = {
            Port receive_incident_info = { Properties { direction : string = "in"; } };
          }
          Connector incident_update_channel = {
            Role to = { Properties { direction : string = "out"; } };
          }
          Attachments w = {
            resource_mgr.receive_incident_info to incident_update_channel.to;
          }
        }
    )");
    std::vector<Diagnostic> diags;
    std::set<FlowEdge> edges =
        attachment_flows(d, d.attachments_groups[0].attachments[0], diags);
    REQUIRE(edges.size() == 1);
    CHECK(contains(edges, edge(InterfaceKind::Role, "incident_update_channel", "to",
                               InterfaceKind::Port, "resource_mgr",
                               "receive_incident_info")));
}

TEST_CASE("an inout port flows both ways") {
    ArchDescription d = testutil::parse_ok(R"(
        System s = {
          Component c = { Port p; }
          Connector k = { Role r; }
          Attachments w = { c.p to k.r; }
        }
    )");
    std::vector<Diagnostic> diags;
    std::set<FlowEdge> edges =
        attachment_flows(d, d.attachments_groups[0].attachments[0], diags);
    CHECK(edges.size() == 2);
    CHECK(diags.empty());
}

TEST_CASE("directional clash warns but still follows the port") {
    ArchDescription d = testutil::parse_ok(R"(
        System s = {
          Component c = { Port p = { Properties { direction : string = "out"; } }; }
          Connector k = { Role r = { Properties { direction : string = "out"; } }; }
          Attachments w = { c.p to k.r; }
        }
    )");
    std::vector<Diagnostic> diags;
    std::set<FlowEdge> edges =
        attachment_flows(d, d.attachments_groups[0].attachments[0], diags);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == "flow-mismatch");
    CHECK(diags[0].severity == Severity::Warning);
    REQUIRE(edges.size() == 1);
    CHECK(contains(edges, edge(InterfaceKind::Port, "c", "p",
                               InterfaceKind::Role, "k", "r")));
}

TEST_CASE("no clash warning when either side is inout") {
    ArchDescription d = testutil::parse_ok(R"(
        System s = {
          Component c = { Port p = { Properties { direction : string = "out"; } }; }
          Connector k = { Role r; }
          Attachments w = { c.p to k.r; }
        }
    )");
    std::vector<Diagnostic> diags;
    attachment_flows(d, d.attachments_groups[0].attachments[0], diags);
    CHECK(diags.empty());
}

TEST_CASE("default internal closure feeds inputs to outputs") {
    Connector rpc;
    rpc.name = Identifier("map_request_rpc2");
    rpc.roles.push_back(make_role("client_end", "in"));
    rpc.roles.push_back(make_role("server_end", "out"));
    std::vector<Diagnostic> diags;
    std::set<FlowEdge> edges = internal_flows(rpc, diags);
    CHECK(diags.empty());
    REQUIRE(edges.size() == 1);
    CHECK(contains(edges, edge(InterfaceKind::Role, "map_request_rpc2", "client_end",
                               InterfaceKind::Role, "map_request_rpc2", "server_end")));
}

TEST_CASE("all-input elements have no internal flows") {
    Component c;
    c.name = Identifier("sink");
    c.ports.push_back(make_port("a", "in"));
    c.ports.push_back(make_port("b", "in"));
    std::vector<Diagnostic> diags;
    CHECK(internal_flows(c, diags).empty());
}

TEST_CASE("inout interfaces feed each other but never themselves") {
    Component c;
    c.name = Identifier("c");
    c.ports.push_back(make_port("a"));
    c.ports.push_back(make_port("b"));
    std::vector<Diagnostic> diags;
    std::set<FlowEdge> edges = internal_flows(c, diags);
    CHECK(edges.size() == 2);
    for (const FlowEdge& e : edges)
        CHECK(e.source != e.sink);
}

TEST_CASE("explicit flow properties replace the closure") {
    Component c;
    c.name = Identifier("c");
    c.ports.push_back(make_port("a", "in"));
    c.ports.push_back(make_port("b", "in"));
    c.ports.push_back(make_port("x", "out"));
    c.ports.push_back(make_port("y", "out"));
    c.properties.push_back(Property{Identifier("flow"), PropertyType::String,
                                    PropertyValue(std::string("a -> x"))});
    c.properties.push_back(Property{Identifier("flow2"), PropertyType::String,
                                    PropertyValue(std::string("b->y"))});
    std::vector<Diagnostic> diags;
    std::set<FlowEdge> edges = internal_flows(c, diags);
    CHECK(diags.empty());
    CHECK(edges.size() == 2);
    CHECK(contains(edges, edge(InterfaceKind::Port, "c", "a",
                               InterfaceKind::Port, "c", "x")));
    CHECK(contains(edges, edge(InterfaceKind::Port, "c", "b",
                               InterfaceKind::Port, "c", "y")));
}

TEST_CASE("flow none declares an explicitly flow-free element") {
    Connector k;
    k.name = Identifier("k");
    k.roles.push_back(make_role("a", "in"));
    k.roles.push_back(make_role("b", "out"));
    k.properties.push_back(Property{Identifier("flow"), PropertyType::String,
                                    PropertyValue(std::string("none"))});
    std::vector<Diagnostic> diags;
    CHECK(internal_flows(k, diags).empty());
    CHECK(diags.empty());
}

TEST_CASE("flow naming an unknown interface is an error") {
    Component c;
    c.name = Identifier("c");
    c.ports.push_back(make_port("a", "in"));
    c.properties.push_back(Property{Identifier("flow"), PropertyType::String,
                                    PropertyValue(std::string("a -> ghost"))});
    std::vector<Diagnostic> diags;
    CHECK(internal_flows(c, diags).empty());
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == "bad-flow");
}

TEST_CASE("malformed and self-referential flows are errors") {
    Component c;
    c.name = Identifier("c");
    c.ports.push_back(make_port("a"));
    SUBCASE("garbage") {
        c.properties.push_back(Property{Identifier("flow"), PropertyType::String,
                                        PropertyValue(std::string("garbage"))});
    }
    SUBCASE("self loop") {
        c.properties.push_back(Property{Identifier("flow"), PropertyType::String,
                                        PropertyValue(std::string("a -> a"))});
    }
    std::vector<Diagnostic> diags;
    CHECK(internal_flows(c, diags).empty());
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == "bad-flow");
}

TEST_CASE("non-string flow-prefixed properties are plain annotations") {
    Component c;
    c.name = Identifier("c");
    c.ports.push_back(make_port("a", "in"));
    c.ports.push_back(make_port("b", "out"));
    c.properties.push_back(Property{Identifier("flow_limit"), PropertyType::Int,
                                    PropertyValue(std::int64_t{3})});
    std::vector<Diagnostic> diags;
    // still the default closure: the int property does not switch modes
    CHECK(internal_flows(c, diags).size() == 1);
    CHECK(diags.empty());
}

TEST_CASE("empty system yields an empty relation") {
    ArchDescription d = testutil::parse_ok("System s = { }");
    FlowRelation rel = build_flow_relation(d);
    CHECK(rel.edges.empty());
    CHECK(rel.diagnostics.empty());
}

TEST_CASE("las relation contains the documented flows") {
    ArchDescription d = testutil::load_fixture("las.acme");
    FlowRelation rel = build_flow_relation(d);
    CHECK(rel.diagnostics.empty());
    CHECK(contains(rel.edges,
                   edge(InterfaceKind::Port, "call_entry", "send_call_msg",
                        InterfaceKind::Role, "call_info_channel", "from")));
    CHECK(contains(rel.edges,
                   edge(InterfaceKind::Role, "incident_update_channel", "to",
                        InterfaceKind::Port, "resource_mgr", "receive_incident_info")));
}

TEST_CASE("one attachment plus one internal flow gives exactly two edges") {
    ArchDescription d = testutil::parse_ok(R"(
        System s = {
          Component c = {
            Port p = { Properties { direction : string = "out"; } };
          }
          Connector k = {
            Role r1 = { Properties { direction : string = "in"; } };
            Role r2 = { Properties { direction : string = "out"; } };
          }
          Attachments w = { c.p to k.r1; }
        }
    )");
    FlowRelation rel = build_flow_relation(d);
    CHECK(rel.edges.size() == 2);
}

TEST_CASE("edge endpoints always exist in the description") {
    std::mt19937 rng(7101);
    for (int i = 0; i < 120; ++i) {
        ArchDescription d = testcorpus::random_description(rng);
        FlowRelation rel = build_flow_relation(d);
        for (const FlowEdge& e : rel.edges) {
            for (const InterfaceRef& ref : {e.source, e.sink}) {
                if (ref.kind == InterfaceKind::Port) {
                    const Component* c = d.find_component(ref.owner);
                    REQUIRE(c != nullptr);
                    REQUIRE(c->find_port(ref.iface) != nullptr);
                } else {
                    const Connector* k = d.find_connector(ref.owner);
                    REQUIRE(k != nullptr);
                    REQUIRE(k->find_role(ref.iface) != nullptr);
                }
            }
            // cross-element edges connect a port and a role; internal edges
            // stay within one element
            if (e.source.owner != e.sink.owner)
                CHECK(e.source.kind != e.sink.kind);
            else
                CHECK(e.source.kind == e.sink.kind);
        }
    }
}

TEST_CASE("narrowing a direction never adds edges") {
    std::mt19937 rng(7201);
    int narrowed = 0;
    for (int i = 0; i < 150; ++i) {
        ArchDescription d = testcorpus::random_description(rng);
        std::set<FlowEdge> before = build_flow_relation(d).edges;

        // narrow the first defaulted or inout port we find
        auto narrow = [&](PropertyList& props) {
            Property* dir = nullptr;
            for (Property& p : props)
                if (p.name.str() == "direction")
                    dir = &p;
            if (dir && std::get<std::string>(dir->value) != "inout")
                return false;
            const char* target = (i % 2 == 0) ? "in" : "out";
            if (dir)
                dir->value = PropertyValue(std::string(target));
            else
                props.push_back(Property{Identifier("direction"), PropertyType::String,
                                         PropertyValue(std::string(target))});
            return true;
        };

        bool changed = false;
        for (Component& c : d.components) {
            for (Port& p : c.ports)
                if ((changed = narrow(p.properties)))
                    break;
            if (changed)
                break;
        }
        if (!changed)
            continue;
        ++narrowed;

        std::set<FlowEdge> after = build_flow_relation(d).edges;
        for (const FlowEdge& e : after)
            CHECK(before.count(e));
    }
    CHECK(narrowed > 30);   // the corpus must actually exercise the property
}

TEST_CASE("the relation is a pure function of the tree") {
    ArchDescription d = testutil::load_fixture("pipeline.acme");
    FlowRelation a = build_flow_relation(d);
    FlowRelation b = build_flow_relation(d);
    CHECK(a.edges == b.edges);
    CHECK(a.diagnostics.size() == b.diagnostics.size());
}
