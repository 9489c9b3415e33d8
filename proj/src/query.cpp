#include "emoframe/query.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "emoframe/errors.hpp"

namespace emoframe {

namespace {

const std::string kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

const char* kUnsupported[] = {"OPTIONAL", "UNION",  "ORDER",    "LIMIT",  "OFFSET",   "GROUP",
                              "HAVING",   "ASK",    "CONSTRUCT", "DESCRIBE", "INSERT", "DELETE",
                              "BIND",     "VALUES", "MINUS",    "GRAPH",  "SERVICE"};

class QueryParser {
public:
    explicit QueryParser(std::string text) : text_(std::move(text)) {}

    QueryAST run() {
        prologue();
        keyword("SELECT");
        skip();
        if (try_keyword("DISTINCT")) ast_.distinct = true;
        skip();
        if (peek() == '*') fail("unsupported SPARQL feature: SELECT *");
        if (peek() == '$') fail("unsupported SPARQL feature: $-variables");
        while (peek() == '?') {
            ast_.projected.push_back(variable().name);
            skip();
        }
        if (ast_.projected.empty()) fail("expected at least one projected variable");
        keyword("WHERE");
        skip();
        expect('{');
        group_graph_pattern();
        expect('}');
        skip();
        for (const char* kw : {"ORDER", "LIMIT", "OFFSET", "GROUP", "HAVING"})
            if (try_keyword(kw)) fail(std::string("unsupported SPARQL feature: ") + kw);
        if (!eof()) fail("trailing content after query");
        validate();
        return std::move(ast_);
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError("query_engine/syntax", line_, col_, message);
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
            if (peek() == '#') {
                while (!eof() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(peek()))) {
                advance();
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        skip();
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    bool try_keyword(const std::string& kw) {
        skip();
        if (pos_ + kw.size() > text_.size()) return false;
        for (std::size_t i = 0; i < kw.size(); ++i)
            if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) != kw[i]) return false;
        char after = peek(kw.size());
        if (std::isalnum(static_cast<unsigned char>(after)) || after == '_' || after == ':' ||
            after == '-')
            return false;
        for (std::size_t i = 0; i < kw.size(); ++i) advance();
        return true;
    }

    void keyword(const std::string& kw) {
        if (!try_keyword(kw)) fail("expected " + kw);
    }

    void prologue() {
        while (try_keyword("PREFIX")) {
            skip();
            std::string prefix;
            while (!eof() && peek() != ':') prefix += advance();
            expect(':');
            skip();
            ast_.prefixes.bind(prefix, iriref());
        }
        if (try_keyword("BASE")) fail("unsupported SPARQL feature: BASE");
    }

    std::string iriref() {
        expect('<');
        std::string iri;
        while (!eof() && peek() != '>') iri += advance();
        expect('>');
        return iri;
    }

    Variable variable() {
        skip();
        if (peek() != '?') fail("expected variable");
        advance();
        std::string name;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            name += advance();
        if (name.empty()) fail("empty variable name");
        return Variable{name};
    }

    Term iri_term() {
        skip();
        if (peek() == '<') return Term::iri(iriref());
        std::string prefix;
        while (!eof() && peek() != ':' &&
               (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-'))
            prefix += advance();
        if (peek() != ':') fail("expected IRI or prefixed name");
        advance();
        std::string local;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                          peek() == '-' || peek() == '.'))
            local += advance();
        while (!local.empty() && local.back() == '.') {
            local.pop_back();
            --pos_; --col_;
        }
        auto ns = ast_.prefixes.ns(prefix);
        if (!ns) fail("undefined prefix '" + prefix + ":'");
        return Term::iri(*ns + local);
    }

    PatternTerm pattern_term() {
        skip();
        char c = peek();
        if (c == '?') return variable();
        if (c == '$') fail("unsupported SPARQL feature: $-variables");
        if (c == '"' || c == '\'') return Term{string_literal()};
        if (c == '_' && peek(1) == ':') fail("unsupported SPARQL feature: blank node patterns");
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-') {
            std::string lex;
            while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' ||
                              peek() == '+' || peek() == '-'))
                lex += advance();
            bool decimal = lex.find('.') != std::string::npos;
            return Term::literal(lex, std::string("http://www.w3.org/2001/XMLSchema#") +
                                          (decimal ? "decimal" : "integer"));
        }
        return iri_term();
    }

    Term string_literal() {
        skip();
        char quote = advance(); // ' or "
        std::string lex;
        while (!eof() && peek() != quote) {
            char c = advance();
            if (c == '\\' && !eof()) {
                char e = advance();
                if (e == 'n') lex += '\n';
                else if (e == 't') lex += '\t';
                else lex += e;
            } else {
                lex += c;
            }
        }
        if (eof()) fail("unterminated string");
        advance();
        return Term::literal(lex);
    }

    PatternPredicate predicate() {
        skip();
        if (peek() == '?') return variable();
        if (peek() == '^') fail("unsupported SPARQL feature: inverse property paths");
        if (peek() == 'a' && !std::isalnum(static_cast<unsigned char>(peek(1))) && peek(1) != ':' &&
            peek(1) != '_') {
            advance();
            return std::vector<Term>{Term::iri(kRdfType)};
        }
        std::vector<Term> alternatives{iri_term()};
        for (;;) {
            skip();
            if (peek() == '|') {
                advance();
                alternatives.push_back(iri_term());
                continue;
            }
            if (peek() == '/' || peek() == '*' || peek() == '+')
                fail(std::string("unsupported SPARQL feature: property path operator '") + peek() + "'");
            break;
        }
        return alternatives;
    }

    void filter() {
        expect('(');
        skip();
        if (try_keyword("REGEX")) {
            expect('(');
            keyword("STR");
            expect('(');
            Variable v = variable();
            expect(')');
            expect(',');
            Term pattern = string_literal();
            skip();
            if (peek() == ',') fail("unsupported SPARQL feature: regex flags");
            expect(')');
            ast_.filters.push_back(RegexFilter{v.name, pattern.value});
        } else {
            Variable v = variable();
            skip();
            CompareOp op;
            if (peek() == '>' && peek(1) == '=') { op = CompareOp::GreaterEqual; advance(); advance(); }
            else if (peek() == '>') { op = CompareOp::Greater; advance(); }
            else if (peek() == '=') { op = CompareOp::Equal; advance(); }
            else if (peek() == '<') fail("unsupported SPARQL feature: '<' comparison");
            else fail("expected comparison operator");
            skip();
            std::string lex;
            while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' ||
                              peek() == '-' || peek() == '+'))
                lex += advance();
            if (lex.empty()) fail("expected numeric constant");
            ast_.filters.push_back(NumericFilter{v.name, op, std::strtod(lex.c_str(), nullptr)});
        }
        expect(')');
    }

    void group_graph_pattern() {
        for (;;) {
            skip();
            if (peek() == '}') return;
            if (peek() == '{') fail("unsupported SPARQL feature: nested group patterns (UNION blocks)");
            if (eof()) fail("unterminated group");
            for (const char* kw : kUnsupported)
                if (try_keyword(kw)) fail(std::string("unsupported SPARQL feature: ") + kw);
            if (try_keyword("FILTER")) {
                filter();
                skip();
                if (peek() == '.') advance();
                continue;
            }
            triples_block();
        }
    }

    void triples_block() {
        PatternTerm subject = pattern_term();
        for (;;) {
            PatternPredicate pred = predicate();
            for (;;) {
                PatternTerm object = pattern_term();
                ast_.patterns.push_back(TriplePattern{subject, pred, object});
                skip();
                if (peek() == ',') { advance(); continue; }
                break;
            }
            skip();
            if (peek() == ';') {
                advance();
                skip();
                if (peek() == '.' || peek() == '}') break;
                continue;
            }
            break;
        }
        skip();
        if (peek() == '.') advance();
    }

    void validate() const {
        std::set<std::string> in_pattern;
        for (const TriplePattern& p : ast_.patterns) {
            if (const auto* v = std::get_if<Variable>(&p.subject)) in_pattern.insert(v->name);
            if (const auto* v = std::get_if<Variable>(&p.predicate)) in_pattern.insert(v->name);
            if (const auto* v = std::get_if<Variable>(&p.object)) in_pattern.insert(v->name);
        }
        for (const std::string& v : ast_.projected)
            if (!in_pattern.count(v))
                throw Error("query_engine/projection",
                            "projected variable ?" + v + " does not occur in the pattern");
        for (const FilterExpr& f : ast_.filters) {
            const std::string& v =
                std::holds_alternative<RegexFilter>(f) ? std::get<RegexFilter>(f).var
                                                       : std::get<NumericFilter>(f).var;
            if (!in_pattern.count(v))
                throw Error("query_engine/projection",
                            "filter variable ?" + v + " does not occur in the pattern");
        }
    }

    std::string text_;
    std::size_t pos_ = 0;
    unsigned line_ = 1;
    unsigned col_ = 1;
    QueryAST ast_;
};

/// str(?v) per the supported subset: IRI string or literal lexical form.
const std::string& str_of(const Term& t) { return t.value; }

bool passes(const FilterExpr& f, const Binding& binding) {
    if (const auto* r = std::get_if<RegexFilter>(&f)) {
        auto it = binding.find(r->var);
        if (it == binding.end()) return false;
        return str_of(it->second).find(r->pattern) != std::string::npos;
    }
    const auto& n = std::get<NumericFilter>(f);
    auto it = binding.find(n.var);
    if (it == binding.end()) return false;
    const std::string& lex = it->second.value;
    char* end = nullptr;
    double v = std::strtod(lex.c_str(), &end);
    if (end == lex.c_str() || (end && *end != '\0')) return false; // unparsable: row dropped
    switch (n.op) {
    case CompareOp::Greater: return v > n.value;
    case CompareOp::GreaterEqual: return v >= n.value;
    case CompareOp::Equal: return v == n.value;
    }
    return false;
}

std::optional<Term> resolve(const PatternTerm& pt, const Binding& binding) {
    if (const auto* t = std::get_if<Term>(&pt)) return *t;
    auto it = binding.find(std::get<Variable>(pt).name);
    if (it == binding.end()) return std::nullopt;
    return it->second;
}

/// Estimated result size of a pattern against the graph, ignoring joins.
std::size_t estimate(const TriplePattern& p, const Graph& g) {
    auto bound = [](const PatternTerm& pt) -> std::optional<Term> {
        if (const auto* t = std::get_if<Term>(&pt)) return *t;
        return std::nullopt;
    };
    std::optional<Term> s = bound(p.subject), o = bound(p.object);
    if (const auto* alts = std::get_if<std::vector<Term>>(&p.predicate)) {
        std::size_t total = 0;
        for (const Term& pred : *alts) total += g.count(s, pred, o);
        return total;
    }
    return g.count(s, std::nullopt, o);
}

void join(const std::vector<TriplePattern>& patterns, std::size_t i, const Graph& graph,
          const QueryAST& query, Binding& binding, std::vector<std::vector<Term>>& rows) {
    if (i == patterns.size()) {
        for (const FilterExpr& f : query.filters)
            if (!passes(f, binding)) return;
        std::vector<Term> row;
        row.reserve(query.projected.size());
        for (const std::string& v : query.projected) row.push_back(binding.at(v));
        rows.push_back(std::move(row));
        return;
    }

    const TriplePattern& p = patterns[i];
    std::optional<Term> s = resolve(p.subject, binding);
    std::optional<Term> o = resolve(p.object, binding);

    std::vector<Term> predicates;
    const Variable* pred_var = std::get_if<Variable>(&p.predicate);
    std::optional<Term> bound_pred;
    if (pred_var) {
        auto it = binding.find(pred_var->name);
        if (it != binding.end()) bound_pred = it->second;
    }

    auto try_triples = [&](const std::optional<Term>& pred) {
        for (const Triple& t : graph.match(s, pred, o)) {
            Binding saved = binding;
            bool ok = true;
            auto bind = [&](const PatternTerm& pt, const Term& value) {
                if (const auto* v = std::get_if<Variable>(&pt)) {
                    auto [it, inserted] = binding.emplace(v->name, value);
                    if (!inserted && it->second != value) ok = false;
                }
            };
            bind(p.subject, t.subject);
            bind(p.object, t.object);
            if (ok && pred_var && !bound_pred) {
                auto [it, inserted] = binding.emplace(pred_var->name, t.predicate);
                if (!inserted && it->second != t.predicate) ok = false;
            }
            if (ok) join(patterns, i + 1, graph, query, binding, rows);
            binding = std::move(saved);
        }
    };

    if (pred_var) {
        try_triples(bound_pred);
    } else {
        // Union semantics: a predicate listed twice must not match twice.
        std::vector<Term> alternatives;
        for (const Term& pred : std::get<std::vector<Term>>(p.predicate))
            if (std::find(alternatives.begin(), alternatives.end(), pred) == alternatives.end())
                alternatives.push_back(pred);
        for (const Term& pred : alternatives) try_triples(pred);
    }
}

} // namespace

std::vector<Term> ResultTable::column_values(const std::string& var) const {
    std::vector<Term> values;
    auto it = std::find(header.begin(), header.end(), var);
    if (it == header.end()) return values;
    std::size_t col = static_cast<std::size_t>(it - header.begin());
    std::set<Term> seen;
    for (const auto& row : rows)
        if (seen.insert(row[col]).second) values.push_back(row[col]);
    return values;
}

QueryAST parse_query(const std::string& text) {
    return QueryParser(text).run();
}

QueryAST parse_query_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("query_engine/io", "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_query(buf.str());
}

ResultTable evaluate(const QueryAST& query, const Graph& graph, const Binding& initial) {
    std::vector<TriplePattern> ordered = query.patterns;
    std::stable_sort(ordered.begin(), ordered.end(),
                     [&graph](const TriplePattern& a, const TriplePattern& b) {
                         return estimate(a, graph) < estimate(b, graph);
                     });

    std::vector<std::vector<Term>> rows;
    Binding binding = initial;
    join(ordered, 0, graph, query, binding, rows);

    std::sort(rows.begin(), rows.end());
    if (query.distinct) rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    ResultTable table;
    table.header = query.projected;
    table.rows = std::move(rows);
    return table;
}

std::string to_tsv(const ResultTable& table, const PrefixMap& prefixes) {
    std::ostringstream out;
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out << (i ? "\t" : "") << '?' << table.header[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << '\t';
            const Term& t = row[i];
            if (t.is_iri()) {
                auto s = prefixes.shorten(t.value);
                out << (s ? *s : t.value);
            } else if (t.is_blank()) {
                out << "_:" << t.value;
            } else {
                out << t.value;
            }
        }
        out << '\n';
    }
    return out.str();
}

} // namespace emoframe
