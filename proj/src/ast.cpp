#include "archslice/ast.hpp"

#include <cctype>
#include <stdexcept>

namespace archslice {

namespace {

bool ident_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9');
}

} // namespace

Identifier::Identifier(std::string text) : text_(std::move(text)) {
    if (!valid(text_))
        throw std::invalid_argument("invalid identifier: '" + text_ + "'");
}

bool Identifier::valid(std::string_view text) {
    if (text.empty() || !ident_start(text.front()))
        return false;
    for (char c : text)
        if (!ident_char(c))
            return false;
    return true;
}

std::string_view to_string(PropertyType t) {
    switch (t) {
    case PropertyType::String: return "string";
    case PropertyType::Int: return "int";
    case PropertyType::Float: return "float";
    case PropertyType::Boolean: return "boolean";
    }
    return "?";
}

PropertyType value_kind(const PropertyValue& v) {
    switch (v.index()) {
    case 0: return PropertyType::String;
    case 1: return PropertyType::Int;
    case 2: return PropertyType::Float;
    default: return PropertyType::Boolean;
    }
}

const Property* find_property(const PropertyList& props, std::string_view name) {
    for (const Property& p : props)
        if (p.name.str() == name)
            return &p;
    return nullptr;
}

const Port* Component::find_port(const Identifier& port_name) const {
    for (const Port& p : ports)
        if (p.name == port_name)
            return &p;
    return nullptr;
}

const Role* Connector::find_role(const Identifier& role_name) const {
    for (const Role& r : roles)
        if (r.name == role_name)
            return &r;
    return nullptr;
}

const Component* ArchDescription::find_component(const Identifier& name) const {
    for (const Component& c : components)
        if (c.name == name)
            return &c;
    return nullptr;
}

const Connector* ArchDescription::find_connector(const Identifier& name) const {
    for (const Connector& c : connectors)
        if (c.name == name)
            return &c;
    return nullptr;
}

} // namespace archslice
