#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "archslice/diagnostic.hpp"

namespace archslice {

/// A name in an architectural description. Must match
/// [A-Za-z_][A-Za-z0-9_]*; the constructor throws std::invalid_argument
/// otherwise. Identifiers are case-sensitive.
class Identifier {
public:
    Identifier() = default;
    explicit Identifier(std::string text);

    const std::string& str() const { return text_; }
    bool empty() const { return text_.empty(); }

    static bool valid(std::string_view text);

    friend auto operator<=>(const Identifier&, const Identifier&) = default;

private:
    std::string text_;
};

enum class PropertyType { String, Int, Float, Boolean };

std::string_view to_string(PropertyType t);

using PropertyValue = std::variant<std::string, std::int64_t, double, bool>;

/// The kind tag a literal of this value would carry.
PropertyType value_kind(const PropertyValue& v);

/// A name/value annotation with an optional declared type tag. When the tag
/// is present it matches the value's kind (the parser rejects mismatches).
struct Property {
    Identifier name;
    std::optional<PropertyType> type;
    PropertyValue value;
    SourceLoc loc{};

    friend bool operator==(const Property& a, const Property& b) {
        return a.name == b.name && a.type == b.type && a.value == b.value;
    }
};

using PropertyList = std::vector<Property>;

/// First property with the given name, or nullptr.
const Property* find_property(const PropertyList& props, std::string_view name);

struct Port {
    Identifier name;
    PropertyList properties;
    SourceLoc loc{};

    friend bool operator==(const Port& a, const Port& b) {
        return a.name == b.name && a.properties == b.properties;
    }
};

struct Role {
    Identifier name;
    PropertyList properties;
    SourceLoc loc{};

    friend bool operator==(const Role& a, const Role& b) {
        return a.name == b.name && a.properties == b.properties;
    }
};

struct Component {
    Identifier name;
    std::vector<Port> ports;     // names unique within the component
    PropertyList properties;
    SourceLoc loc{};

    const Port* find_port(const Identifier& port_name) const;

    friend bool operator==(const Component& a, const Component& b) {
        return a.name == b.name && a.ports == b.ports &&
               a.properties == b.properties;
    }
};

struct Connector {
    Identifier name;
    std::vector<Role> roles;     // names unique within the connector
    PropertyList properties;
    SourceLoc loc{};

    const Role* find_role(const Identifier& role_name) const;

    friend bool operator==(const Connector& a, const Connector& b) {
        return a.name == b.name && a.roles == b.roles &&
               a.properties == b.properties;
    }
};

/// One `component.port to connector.role;` link. References are resolved by
/// validate(), not at construction.
struct Attachment {
    Identifier component_ref;
    Identifier port_ref;
    Identifier connector_ref;
    Identifier role_ref;
    SourceLoc loc{};

    friend bool operator==(const Attachment& a, const Attachment& b) {
        return a.component_ref == b.component_ref && a.port_ref == b.port_ref &&
               a.connector_ref == b.connector_ref && a.role_ref == b.role_ref;
    }
};

struct AttachmentsGroup {
    Identifier name;
    std::vector<Attachment> attachments;   // may be empty
    SourceLoc loc{};

    friend bool operator==(const AttachmentsGroup& a, const AttachmentsGroup& b) {
        return a.name == b.name && a.attachments == b.attachments;
    }
};

/// A parsed system. Component names, connector names and attachments-group
/// names are each unique, and no name is both a component and a connector.
/// Declaration order is preserved and significant for printing.
struct ArchDescription {
    Identifier system_name;
    std::vector<Component> components;
    std::vector<Connector> connectors;
    std::vector<AttachmentsGroup> attachments_groups;
    PropertyList properties;

    const Component* find_component(const Identifier& name) const;
    const Connector* find_connector(const Identifier& name) const;

    friend bool operator==(const ArchDescription& a, const ArchDescription& b) {
        return a.system_name == b.system_name && a.components == b.components &&
               a.connectors == b.connectors &&
               a.attachments_groups == b.attachments_groups &&
               a.properties == b.properties;
    }
};

} // namespace archslice
