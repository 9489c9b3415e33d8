#include "emoframe/turtle.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "emoframe/errors.hpp"

namespace emoframe {

namespace {

const std::string kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
const std::string kXsd = "http://www.w3.org/2001/XMLSchema#";

bool is_local_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

bool is_prefix_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

/// Recursive-descent parser over the whole document text.
class Parser {
public:
    explicit Parser(std::string text) : text_(std::move(text)) {}

    Graph run() {
        skip();
        while (!eof()) {
            if (peek() == '@')
                directive();
            else
                statement();
            skip();
        }
        return std::move(graph_);
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError("rdf_core/syntax", line_, col_, message);
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char advance() {
        char c = text_[pos_++];
        if (c == '\n') { ++line_; col_ = 1; } else { ++col_; }
        return c;
    }

    void skip() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    bool try_keyword(const std::string& kw) {
        if (text_.compare(pos_, kw.size(), kw) != 0) return false;
        for (std::size_t i = 0; i < kw.size(); ++i) advance();
        return true;
    }

    void directive() {
        advance(); // '@'
        if (try_keyword("prefix")) {
            skip();
            std::string prefix = read_prefix_label();
            expect(':');
            skip();
            std::string iri = read_iriref();
            graph_.prefixes().bind(prefix, iri);
        } else if (try_keyword("base")) {
            skip();
            std::string iri = read_iriref();
            if (iri.find(':') == std::string::npos)
                fail("base IRI must be absolute: <" + iri + ">");
            base_ = iri;
        } else {
            fail("unknown directive");
        }
        skip();
        expect('.');
    }

    std::string read_prefix_label() {
        std::string s;
        while (!eof() && peek() != ':' && is_prefix_char(peek())) s += advance();
        return s;
    }

    std::string read_iriref() {
        expect('<');
        std::string iri;
        while (!eof() && peek() != '>') {
            char c = advance();
            if (c == '\n') fail("newline inside IRI");
            iri += c;
        }
        expect('>');
        if (iri.find(':') == std::string::npos) {
            if (base_.empty()) fail("relative IRI <" + iri + "> without @base");
            iri = base_ + iri;
        }
        return iri;
    }

    Term read_prefixed_name() {
        std::string prefix = read_prefix_label();
        expect(':');
        std::string local;
        while (!eof() && is_local_char(peek())) local += advance();
        // a trailing '.' belongs to the statement, not the name
        while (!local.empty() && local.back() == '.') {
            local.pop_back();
            --pos_; --col_;
        }
        auto ns = graph_.prefixes().ns(prefix);
        if (!ns) fail("undefined prefix '" + prefix + ":'");
        return Term::iri(*ns + local);
    }

    Term read_string_literal() {
        expect('"');
        std::string lex;
        while (true) {
            if (eof()) fail("unterminated string literal");
            char c = advance();
            if (c == '"') break;
            if (c == '\\') {
                if (eof()) fail("unterminated escape");
                char e = advance();
                switch (e) {
                case 'n': lex += '\n'; break;
                case 'r': lex += '\r'; break;
                case 't': lex += '\t'; break;
                case '"': lex += '"'; break;
                case '\\': lex += '\\'; break;
                default: fail(std::string("unsupported escape '\\") + e + "'");
                }
            } else {
                lex += c;
            }
        }
        if (peek() == '^' && peek(1) == '^') {
            advance(); advance();
            Term dt = peek() == '<' ? Term::iri(read_iriref()) : read_prefixed_name();
            return Term::literal(lex, dt.value);
        }
        if (peek() == '@') {
            advance();
            std::string lang;
            while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-'))
                lang += advance();
            if (lang.empty()) fail("empty language tag");
            return Term::literal(lex, {}, lang);
        }
        return Term::literal(lex);
    }

    Term read_numeric_literal() {
        std::string lex;
        bool has_dot = false, has_exp = false;
        if (peek() == '+' || peek() == '-') lex += advance();
        auto digits = [&] {
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) lex += advance();
        };
        digits();
        if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            has_dot = true;
            lex += advance();
            digits();
        }
        if (peek() == 'e' || peek() == 'E') {
            has_exp = true;
            lex += advance();
            if (peek() == '+' || peek() == '-') lex += advance();
            digits();
        }
        if (lex.empty() || !std::isdigit(static_cast<unsigned char>(lex.back()))) fail("malformed number");
        std::string dt = has_exp ? kXsd + "double" : has_dot ? kXsd + "decimal" : kXsd + "integer";
        return Term::literal(lex, dt);
    }

    Term read_term(bool predicate_position) {
        if (eof()) fail("unexpected end of input");
        char c = peek();
        if (c == '<') return Term::iri(read_iriref());
        if (c == '_' && peek(1) == ':') {
            advance(); advance();
            std::string label;
            while (!eof() && is_local_char(peek())) label += advance();
            while (!label.empty() && label.back() == '.') {
                label.pop_back();
                --pos_; --col_;
            }
            if (label.empty()) fail("empty blank node label");
            return Term::blank(label);
        }
        if (c == '"') return read_string_literal();
        if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c)))
            return read_numeric_literal();
        if (predicate_position && c == 'a' && !is_local_char(peek(1)) && peek(1) != ':')
            { advance(); return Term::iri(kRdfType); }
        return read_prefixed_name();
    }

    void statement() {
        Term subject = read_term(false);
        if (subject.is_literal()) fail("literal in subject position");
        while (true) {
            skip();
            Term predicate = read_term(true);
            if (!predicate.is_iri()) fail("predicate must be an IRI");
            while (true) {
                skip();
                Term object = read_term(false);
                graph_.insert(subject, predicate, object);
                skip();
                if (peek() == ',') { advance(); continue; }
                break;
            }
            if (peek() == ';') {
                advance();
                skip();
                if (peek() == '.') break; // tolerate trailing ';'
                continue;
            }
            break;
        }
        skip();
        expect('.');
    }

    std::string text_;
    std::size_t pos_ = 0;
    unsigned line_ = 1;
    unsigned col_ = 1;
    std::string base_;
    Graph graph_;
};

void escape_string(const std::string& s, std::ostream& out) {
    out << '"';
    for (char c : s) {
        switch (c) {
        case '\n': out << "\\n"; break;
        case '\r': out << "\\r"; break;
        case '\t': out << "\\t"; break;
        case '"': out << "\\\""; break;
        case '\\': out << "\\\\"; break;
        default: out << c;
        }
    }
    out << '"';
}

bool shortenable(const std::string& shortened) {
    auto colon = shortened.find(':');
    std::string local = shortened.substr(colon + 1);
    if (local.empty() || local.back() == '.') return false;
    for (char c : local)
        if (!is_local_char(c)) return false;
    std::string prefix = shortened.substr(0, colon);
    for (char c : prefix)
        if (!is_prefix_char(c) || c == '.') return false;
    return true;
}

void write_term_turtle(const Term& t, const PrefixMap& prefixes, std::ostream& out) {
    switch (t.kind) {
    case TermKind::Iri: {
        if (t.value == kRdfType) { out << 'a'; return; }
        auto s = prefixes.shorten(t.value);
        if (s && shortenable(*s)) out << *s;
        else out << '<' << t.value << '>';
        return;
    }
    case TermKind::Blank:
        out << "_:" << t.value;
        return;
    case TermKind::Literal:
        escape_string(t.value, out);
        if (!t.lang.empty()) {
            out << '@' << t.lang;
        } else if (!t.datatype.empty()) {
            out << "^^";
            auto s = prefixes.shorten(t.datatype);
            if (s && shortenable(*s)) out << *s;
            else out << '<' << t.datatype << '>';
        }
        return;
    }
}

void write_term_ntriples(const Term& t, std::ostream& out) {
    switch (t.kind) {
    case TermKind::Iri:
        out << '<' << t.value << '>';
        return;
    case TermKind::Blank:
        out << "_:" << t.value;
        return;
    case TermKind::Literal:
        escape_string(t.value, out);
        if (!t.lang.empty()) out << '@' << t.lang;
        else if (!t.datatype.empty()) out << "^^<" << t.datatype << '>';
        return;
    }
}

} // namespace

Graph parse_turtle(const std::string& text) {
    return Parser(text).run();
}

Graph parse_turtle(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_turtle(buf.str());
}

Graph parse_turtle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("rdf_core/io", "cannot open " + path);
    return parse_turtle(in);
}

void serialize(const Graph& g, std::ostream& out, SerializeFormat format) {
    if (format == SerializeFormat::NTriples) {
        for (const Triple& t : g.sorted_triples()) {
            write_term_ntriples(t.subject, out);
            out << ' ';
            write_term_ntriples(t.predicate, out);
            out << ' ';
            write_term_ntriples(t.object, out);
            out << " .\n";
        }
        return;
    }

    for (const auto& [prefix, ns] : g.prefixes().entries())
        out << "@prefix " << prefix << ": <" << ns << "> .\n";
    if (!g.prefixes().entries().empty() && g.size() > 0) out << '\n';

    // subject -> predicate -> objects, all sorted for stable output
    std::map<Term, std::map<Term, std::vector<Term>>> grouped;
    for (const Triple& t : g.sorted_triples())
        grouped[t.subject][t.predicate].push_back(t.object);

    for (const auto& [subject, preds] : grouped) {
        write_term_turtle(subject, g.prefixes(), out);
        bool first_pred = true;
        for (const auto& [pred, objects] : preds) {
            out << (first_pred ? " " : " ;\n    ");
            first_pred = false;
            write_term_turtle(pred, g.prefixes(), out);
            bool first_obj = true;
            for (const Term& o : objects) {
                out << (first_obj ? " " : " , ");
                first_obj = false;
                write_term_turtle(o, g.prefixes(), out);
            }
        }
        out << " .\n";
    }
}

std::string serialize(const Graph& g, SerializeFormat format) {
    std::ostringstream out;
    serialize(g, out, format);
    return out.str();
}

void serialize_file(const Graph& g, const std::string& path, SerializeFormat format) {
    std::ofstream out(path);
    if (!out) throw Error("rdf_core/io", "cannot open " + path + " for writing");
    serialize(g, out, format);
}

} // namespace emoframe
