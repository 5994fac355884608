#include "archslice/print.hpp"

#include <charconv>
#include <sstream>
#include <string>

namespace archslice {

namespace {

std::string quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default: out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

std::string format_float(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    std::string text(buf, ptr);
    // Keep the literal recognizably a float so it reads back with the same kind.
    if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
        text.find("inf") == std::string::npos && text.find("nan") == std::string::npos)
        text += ".0";
    return text;
}

class Printer {
public:
    explicit Printer(const ArchDescription& desc) : desc_(desc) {}

    std::string run() {
        open_block("System " + desc_.system_name.str() + " =",
                   desc_.components.empty() && desc_.connectors.empty() &&
                       desc_.attachments_groups.empty() && desc_.properties.empty());
        for (const Component& c : desc_.components)
            print_component(c);
        for (const Connector& c : desc_.connectors)
            print_connector(c);
        for (const AttachmentsGroup& g : desc_.attachments_groups)
            print_attachments(g);
        print_propblock(desc_.properties);
        close_block("");
        return std::move(out_).str();
    }

private:
    void indent() {
        for (int i = 0; i < depth_; ++i)
            out_ << "  ";
    }

    // Empty bodies collapse to "... = { }" on one line.
    void open_block(const std::string& head, bool empty) {
        indent();
        if (empty) {
            out_ << head << " { }";
        } else {
            out_ << head << " {\n";
            ++depth_;
        }
        collapsed_ = empty;
    }

    void close_block(const std::string& tail) {
        if (!collapsed_) {
            --depth_;
            indent();
            out_ << "}";
        }
        out_ << tail << "\n";
        collapsed_ = false;
    }

    void print_component(const Component& c) {
        open_block("Component " + c.name.str() + " =",
                   c.ports.empty() && c.properties.empty());
        for (const Port& p : c.ports)
            print_iface("Port", p.name, p.properties);
        print_propblock(c.properties);
        close_block("");
    }

    void print_connector(const Connector& c) {
        open_block("Connector " + c.name.str() + " =",
                   c.roles.empty() && c.properties.empty());
        for (const Role& r : c.roles)
            print_iface("Role", r.name, r.properties);
        print_propblock(c.properties);
        close_block("");
    }

    void print_iface(const char* keyword, const Identifier& name,
                     const PropertyList& props) {
        if (props.empty()) {
            indent();
            out_ << keyword << " " << name.str() << ";\n";
            return;
        }
        open_block(std::string(keyword) + " " + name.str() + " =", false);
        print_propblock(props);
        close_block(";");
    }

    void print_attachments(const AttachmentsGroup& g) {
        open_block("Attachments " + g.name.str() + " =", g.attachments.empty());
        for (const Attachment& a : g.attachments) {
            indent();
            out_ << a.component_ref.str() << "." << a.port_ref.str() << " to "
                 << a.connector_ref.str() << "." << a.role_ref.str() << ";\n";
        }
        close_block("");
    }

    void print_propblock(const PropertyList& props) {
        if (props.empty())
            return;
        open_block("Properties", false);
        for (const Property& p : props) {
            indent();
            out_ << p.name.str();
            if (p.type)
                out_ << " : " << to_string(*p.type);
            out_ << " = " << format_value(p.value) << ";\n";
        }
        close_block("");
    }

    const ArchDescription& desc_;
    std::ostringstream out_;
    int depth_ = 0;
    bool collapsed_ = false;
};

} // namespace

std::string format_value(const PropertyValue& value) {
    switch (value.index()) {
    case 0: return quote(std::get<std::string>(value));
    case 1: return std::to_string(std::get<std::int64_t>(value));
    case 2: return format_float(std::get<double>(value));
    default: return std::get<bool>(value) ? "true" : "false";
    }
}

std::string emit_text(const ArchDescription& desc) {
    return Printer(desc).run();
}

} // namespace archslice
