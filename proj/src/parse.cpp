#include "archslice/parse.hpp"

#include <charconv>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace archslice {

namespace {

enum class Tok {
    KwSystem,
    KwComponent,
    KwPort,
    KwConnector,
    KwRole,
    KwAttachments,
    KwProperties,
    KwTrue,
    KwFalse,
    Ident,
    IntLit,
    FloatLit,
    StringLit,
    LBrace,
    RBrace,
    Equals,
    Semicolon,
    Colon,
    Dot,
    End,
};

const char* describe(Tok t) {
    switch (t) {
    case Tok::KwSystem: return "'System'";
    case Tok::KwComponent: return "'Component'";
    case Tok::KwPort: return "'Port'";
    case Tok::KwConnector: return "'Connector'";
    case Tok::KwRole: return "'Role'";
    case Tok::KwAttachments: return "'Attachments'";
    case Tok::KwProperties: return "'Properties'";
    case Tok::KwTrue: return "'true'";
    case Tok::KwFalse: return "'false'";
    case Tok::Ident: return "identifier";
    case Tok::IntLit: return "integer literal";
    case Tok::FloatLit: return "float literal";
    case Tok::StringLit: return "string literal";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Equals: return "'='";
    case Tok::Semicolon: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind = Tok::End;
    std::string text;          // identifier/keyword spelling
    SourceLoc loc;
    std::int64_t int_value = 0;
    double float_value = 0.0;
    std::string string_value;  // decoded string literal

    Token() = default;
    Token(Tok kind, std::string text, SourceLoc loc)
        : kind(kind), text(std::move(text)), loc(loc) {}
};

bool ident_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9');
}

bool digit(char c) { return c >= '0' && c <= '9'; }

Tok keyword_kind(std::string_view word) {
    // 'to' and the property type names stay ordinary identifiers; message
    // channels routinely name their roles 'from' and 'to'.
    static const std::map<std::string_view, Tok> keywords = {
        {"System", Tok::KwSystem},         {"Component", Tok::KwComponent},
        {"Port", Tok::KwPort},             {"Connector", Tok::KwConnector},
        {"Role", Tok::KwRole},             {"Attachments", Tok::KwAttachments},
        {"Properties", Tok::KwProperties}, {"true", Tok::KwTrue},
        {"false", Tok::KwFalse},
    };
    auto it = keywords.find(word);
    return it == keywords.end() ? Tok::Ident : it->second;
}

class Lexer {
public:
    explicit Lexer(std::string_view source) : src_(source) {}

    // Fills `out`; on a lexical error returns false with one diagnostic.
    bool run(std::vector<Token>& out, Diagnostic& error) {
        while (true) {
            skip_trivia();
            SourceLoc loc = loc_;
            if (eof()) {
                out.push_back(Token{Tok::End, "", loc});
                return true;
            }
            char c = peek();
            if (ident_start(c)) {
                std::string word = take_while(ident_char);
                out.push_back(Token{keyword_kind(word), std::move(word), loc});
                continue;
            }
            if (digit(c) || (c == '-' && pos_ + 1 < src_.size() && digit(src_[pos_ + 1]))) {
                Token t;
                if (!lex_number(loc, t, error))
                    return false;
                out.push_back(std::move(t));
                continue;
            }
            if (c == '"') {
                Token t;
                if (!lex_string(loc, t, error))
                    return false;
                out.push_back(std::move(t));
                continue;
            }
            Tok punct;
            switch (c) {
            case '{': punct = Tok::LBrace; break;
            case '}': punct = Tok::RBrace; break;
            case '=': punct = Tok::Equals; break;
            case ';': punct = Tok::Semicolon; break;
            case ':': punct = Tok::Colon; break;
            case '.': punct = Tok::Dot; break;
            default:
                error = make_error("bad-token",
                                   std::string("unexpected character '") + c + "'", loc);
                return false;
            }
            advance();
            out.push_back(Token{punct, std::string(1, c), loc});
        }
    }

private:
    bool eof() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }

    void advance() {
        if (src_[pos_] == '\n') {
            ++loc_.line;
            loc_.column = 1;
        } else {
            ++loc_.column;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (!eof() && peek() != '\n')
                    advance();
            } else {
                break;
            }
        }
    }

    template <typename Pred>
    std::string take_while(Pred pred) {
        std::string word;
        while (!eof() && pred(peek())) {
            word.push_back(peek());
            advance();
        }
        return word;
    }

    bool lex_number(SourceLoc loc, Token& out, Diagnostic& error) {
        std::string text;
        if (peek() == '-') {
            text.push_back('-');
            advance();
        }
        text += take_while(digit);
        bool is_float = false;
        if (!eof() && peek() == '.' && pos_ + 1 < src_.size() && digit(src_[pos_ + 1])) {
            is_float = true;
            text.push_back('.');
            advance();
            text += take_while(digit);
        }
        if (!eof() && (peek() == 'e' || peek() == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < src_.size() && (src_[look] == '+' || src_[look] == '-'))
                ++look;
            if (look < src_.size() && digit(src_[look])) {
                is_float = true;
                while (pos_ < look) {
                    text.push_back(peek());
                    advance();
                }
                text += take_while(digit);
            }
        }
        if (is_float) {
            double value = 0.0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || ptr != text.data() + text.size()) {
                error = make_error("bad-token", "float literal out of range: " + text, loc);
                return false;
            }
            out = Token{Tok::FloatLit, text, loc};
            out.float_value = value;
        } else {
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || ptr != text.data() + text.size()) {
                error = make_error("bad-token", "integer literal out of range: " + text, loc);
                return false;
            }
            out = Token{Tok::IntLit, text, loc};
            out.int_value = value;
        }
        return true;
    }

    bool lex_string(SourceLoc loc, Token& out, Diagnostic& error) {
        advance();   // opening quote
        std::string value;
        while (true) {
            if (eof() || peek() == '\n') {
                error = make_error("bad-token", "unterminated string literal", loc);
                return false;
            }
            char c = peek();
            if (c == '"') {
                advance();
                break;
            }
            if (c == '\\') {
                SourceLoc esc_loc = loc_;
                advance();
                if (eof()) {
                    error = make_error("bad-token", "unterminated string literal", loc);
                    return false;
                }
                char esc = peek();
                switch (esc) {
                case '"': value.push_back('"'); break;
                case '\\': value.push_back('\\'); break;
                case 'n': value.push_back('\n'); break;
                case 't': value.push_back('\t'); break;
                case 'r': value.push_back('\r'); break;
                default:
                    error = make_error("bad-token",
                                       std::string("unknown escape '\\") + esc + "'", esc_loc);
                    return false;
                }
                advance();
                continue;
            }
            value.push_back(c);
            advance();
        }
        out = Token{Tok::StringLit, "", loc};
        out.string_value = std::move(value);
        return true;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    SourceLoc loc_{1, 1};
};

// Syntax errors abort with one diagnostic (thrown as SyntaxError); name
// clashes and type mismatches are collected so one run reports all of them.
struct SyntaxError {
    Diagnostic diag;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ParseResult run() {
        ParseResult result;
        try {
            ArchDescription desc = parse_system();
            expect(Tok::End);
            if (semantic_.empty())
                result.description = std::move(desc);
            else
                result.diagnostics = std::move(semantic_);
        } catch (const SyntaxError& e) {
            result.diagnostics = std::move(semantic_);
            result.diagnostics.push_back(e.diag);
        }
        return result;
    }

private:
    const Token& cur() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }
    bool at(Tok kind) const { return cur().kind == kind; }

    [[noreturn]] void fail(const std::string& message, SourceLoc loc) {
        throw SyntaxError{make_error("syntax-error", message, loc)};
    }

    const Token& expect(Tok kind) {
        if (!at(kind))
            fail(std::string("expected ") + describe(kind) + ", found " +
                     describe(cur().kind),
                 cur().loc);
        return next();
    }

    Identifier expect_ident(const char* what) {
        if (!at(Tok::Ident))
            fail(std::string("expected ") + what + ", found " + describe(cur().kind),
                 cur().loc);
        return Identifier(next().text);
    }

    void report_duplicate(const std::string& message, SourceLoc loc) {
        semantic_.push_back(make_error("duplicate-name", message, loc));
    }

    ArchDescription parse_system() {
        expect(Tok::KwSystem);
        ArchDescription desc;
        desc.system_name = expect_ident("system name");
        expect(Tok::Equals);
        expect(Tok::LBrace);

        std::map<std::string, const char*> element_names;   // name -> kind
        std::map<std::string, bool> group_names;
        std::map<std::string, bool> property_names;

        while (!at(Tok::RBrace)) {
            if (at(Tok::KwComponent)) {
                Component c = parse_component();
                auto [it, fresh] = element_names.emplace(c.name.str(), "component");
                if (!fresh)
                    report_duplicate("'" + c.name.str() + "' already declared as a " +
                                         std::string(it->second),
                                     c.loc);
                desc.components.push_back(std::move(c));
            } else if (at(Tok::KwConnector)) {
                Connector c = parse_connector();
                auto [it, fresh] = element_names.emplace(c.name.str(), "connector");
                if (!fresh)
                    report_duplicate("'" + c.name.str() + "' already declared as a " +
                                         std::string(it->second),
                                     c.loc);
                desc.connectors.push_back(std::move(c));
            } else if (at(Tok::KwAttachments)) {
                AttachmentsGroup g = parse_attachments();
                if (!group_names.emplace(g.name.str(), true).second)
                    report_duplicate("duplicate attachments name '" + g.name.str() + "'",
                                     g.loc);
                desc.attachments_groups.push_back(std::move(g));
            } else if (at(Tok::KwProperties)) {
                parse_propblock(desc.properties, property_names);
            } else {
                fail("expected 'Component', 'Connector', 'Attachments', 'Properties' "
                     "or '}', found " +
                         std::string(describe(cur().kind)),
                     cur().loc);
            }
        }
        expect(Tok::RBrace);
        return desc;
    }

    Component parse_component() {
        Component c;
        c.loc = cur().loc;
        expect(Tok::KwComponent);
        c.name = expect_ident("component name");
        expect(Tok::Equals);
        expect(Tok::LBrace);
        std::map<std::string, bool> port_names;
        std::map<std::string, bool> property_names;
        while (!at(Tok::RBrace)) {
            if (at(Tok::KwPort)) {
                Port p = parse_port();
                if (!port_names.emplace(p.name.str(), true).second)
                    report_duplicate("duplicate port name '" + p.name.str() +
                                         "' in component '" + c.name.str() + "'",
                                     p.loc);
                c.ports.push_back(std::move(p));
            } else if (at(Tok::KwProperties)) {
                parse_propblock(c.properties, property_names);
            } else {
                fail("expected 'Port', 'Properties' or '}', found " +
                         std::string(describe(cur().kind)),
                     cur().loc);
            }
        }
        expect(Tok::RBrace);
        return c;
    }

    Connector parse_connector() {
        Connector c;
        c.loc = cur().loc;
        expect(Tok::KwConnector);
        c.name = expect_ident("connector name");
        expect(Tok::Equals);
        expect(Tok::LBrace);
        std::map<std::string, bool> role_names;
        std::map<std::string, bool> property_names;
        while (!at(Tok::RBrace)) {
            if (at(Tok::KwRole)) {
                Role r = parse_role();
                if (!role_names.emplace(r.name.str(), true).second)
                    report_duplicate("duplicate role name '" + r.name.str() +
                                         "' in connector '" + c.name.str() + "'",
                                     r.loc);
                c.roles.push_back(std::move(r));
            } else if (at(Tok::KwProperties)) {
                parse_propblock(c.properties, property_names);
            } else {
                fail("expected 'Role', 'Properties' or '}', found " +
                         std::string(describe(cur().kind)),
                     cur().loc);
            }
        }
        expect(Tok::RBrace);
        return c;
    }

    Port parse_port() {
        Port p;
        p.loc = cur().loc;
        expect(Tok::KwPort);
        p.name = expect_ident("port name");
        parse_iface_tail(p.properties);
        return p;
    }

    Role parse_role() {
        Role r;
        r.loc = cur().loc;
        expect(Tok::KwRole);
        r.name = expect_ident("role name");
        parse_iface_tail(r.properties);
        return r;
    }

    // ("=" "{" propblock? "}")? ";"?
    void parse_iface_tail(PropertyList& props) {
        if (at(Tok::Equals)) {
            next();
            expect(Tok::LBrace);
            if (at(Tok::KwProperties)) {
                std::map<std::string, bool> property_names;
                parse_propblock(props, property_names);
            }
            expect(Tok::RBrace);
        }
        if (at(Tok::Semicolon))
            next();
    }

    AttachmentsGroup parse_attachments() {
        AttachmentsGroup g;
        g.loc = cur().loc;
        expect(Tok::KwAttachments);
        g.name = expect_ident("attachments name");
        expect(Tok::Equals);
        expect(Tok::LBrace);
        while (!at(Tok::RBrace)) {
            Attachment a;
            a.loc = cur().loc;
            a.component_ref = expect_ident("component name");
            expect(Tok::Dot);
            a.port_ref = expect_ident("port name");
            const Token& sep = next();
            if (sep.kind != Tok::Ident || sep.text != "to")
                fail("expected 'to' in attachment, found " +
                         std::string(describe(sep.kind)),
                     sep.loc);
            a.connector_ref = expect_ident("connector name");
            expect(Tok::Dot);
            a.role_ref = expect_ident("role name");
            expect(Tok::Semicolon);
            g.attachments.push_back(std::move(a));
        }
        expect(Tok::RBrace);
        return g;
    }

    void parse_propblock(PropertyList& props, std::map<std::string, bool>& seen) {
        expect(Tok::KwProperties);
        expect(Tok::LBrace);
        while (!at(Tok::RBrace)) {
            Property p;
            p.loc = cur().loc;
            p.name = expect_ident("property name");
            if (at(Tok::Colon)) {
                next();
                p.type = parse_ptype();
            }
            expect(Tok::Equals);
            SourceLoc value_loc = cur().loc;
            p.value = parse_literal();
            if (p.type && *p.type != value_kind(p.value))
                semantic_.push_back(make_error(
                    "type-mismatch",
                    "property '" + p.name.str() + "' is declared " +
                        std::string(to_string(*p.type)) + " but its value is " +
                        std::string(to_string(value_kind(p.value))),
                    value_loc));
            expect(Tok::Semicolon);
            if (!seen.emplace(p.name.str(), true).second)
                report_duplicate("duplicate property name '" + p.name.str() + "'",
                                 p.loc);
            props.push_back(std::move(p));
        }
        expect(Tok::RBrace);
    }

    PropertyType parse_ptype() {
        if (at(Tok::Ident)) {
            const std::string& word = cur().text;
            if (word == "string") { next(); return PropertyType::String; }
            if (word == "int") { next(); return PropertyType::Int; }
            if (word == "float") { next(); return PropertyType::Float; }
            if (word == "boolean") { next(); return PropertyType::Boolean; }
        }
        fail("expected property type ('string', 'int', 'float' or 'boolean'), found " +
                 std::string(at(Tok::Ident) ? "'" + cur().text + "'"
                                            : describe(cur().kind)),
             cur().loc);
    }

    PropertyValue parse_literal() {
        switch (cur().kind) {
        case Tok::StringLit: return PropertyValue(next().string_value);
        case Tok::IntLit: return PropertyValue(next().int_value);
        case Tok::FloatLit: return PropertyValue(next().float_value);
        case Tok::KwTrue: next(); return PropertyValue(true);
        case Tok::KwFalse: next(); return PropertyValue(false);
        default:
            fail("expected literal, found " + std::string(describe(cur().kind)),
                 cur().loc);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<Diagnostic> semantic_;
};

} // namespace

ParseResult parse(std::string_view source) {
    std::vector<Token> tokens;
    Diagnostic lex_error;
    if (!Lexer(source).run(tokens, lex_error)) {
        ParseResult result;
        result.diagnostics.push_back(std::move(lex_error));
        return result;
    }
    return Parser(std::move(tokens)).run();
}

} // namespace archslice
