#include "archslice/validate.hpp"

#include <map>
#include <string>
#include <utility>

namespace archslice {

namespace {

// (is_port, owner, iface) -> first attachment that used it
using AttachKey = std::tuple<bool, std::string, std::string>;

// Nodes built in code rather than parsed carry no real position.
std::optional<SourceLoc> loc_of(const SourceLoc& loc) {
    if (loc.line == 0)
        return std::nullopt;
    return loc;
}

} // namespace

std::vector<Diagnostic> validate(const ArchDescription& desc) {
    std::vector<Diagnostic> diags;
    std::map<AttachKey, SourceLoc> attached;

    for (const AttachmentsGroup& group : desc.attachments_groups) {
        for (const Attachment& att : group.attachments) {
            const Component* comp = desc.find_component(att.component_ref);
            const Port* port = nullptr;
            if (!comp) {
                diags.push_back(make_error(
                    "dangling-ref",
                    "attachment references unknown component '" +
                        att.component_ref.str() + "'",
                    loc_of(att.loc)));
            } else {
                port = comp->find_port(att.port_ref);
                if (!port)
                    diags.push_back(make_error(
                        "dangling-ref",
                        "component '" + comp->name.str() + "' has no port '" +
                            att.port_ref.str() + "'",
                        loc_of(att.loc)));
            }

            const Connector* conn = desc.find_connector(att.connector_ref);
            const Role* role = nullptr;
            if (!conn) {
                diags.push_back(make_error(
                    "dangling-ref",
                    "attachment references unknown connector '" +
                        att.connector_ref.str() + "'",
                    loc_of(att.loc)));
            } else {
                role = conn->find_role(att.role_ref);
                if (!role)
                    diags.push_back(make_error(
                        "dangling-ref",
                        "connector '" + conn->name.str() + "' has no role '" +
                            att.role_ref.str() + "'",
                        loc_of(att.loc)));
            }

            if (port) {
                AttachKey key{true, comp->name.str(), port->name.str()};
                auto [it, fresh] = attached.emplace(key, att.loc);
                if (!fresh)
                    diags.push_back(make_error(
                        "multi-attach",
                        "port '" + comp->name.str() + "." + port->name.str() +
                            "' is attached more than once",
                        loc_of(att.loc)));
            }
            if (role) {
                AttachKey key{false, conn->name.str(), role->name.str()};
                auto [it, fresh] = attached.emplace(key, att.loc);
                if (!fresh)
                    diags.push_back(make_error(
                        "multi-attach",
                        "role '" + conn->name.str() + "." + role->name.str() +
                            "' is attached more than once",
                        loc_of(att.loc)));
            }
        }
    }

    for (const Component& comp : desc.components)
        for (const Port& port : comp.ports)
            if (!attached.count(AttachKey{true, comp.name.str(), port.name.str()}))
                diags.push_back(make_warning(
                    "unattached",
                    "port '" + comp.name.str() + "." + port.name.str() +
                        "' is never attached",
                    loc_of(port.loc)));
    for (const Connector& conn : desc.connectors)
        for (const Role& role : conn.roles)
            if (!attached.count(AttachKey{false, conn.name.str(), role.name.str()}))
                diags.push_back(make_warning(
                    "unattached",
                    "role '" + conn.name.str() + "." + role.name.str() +
                        "' is never attached",
                    loc_of(role.loc)));

    return diags;
}

} // namespace archslice
