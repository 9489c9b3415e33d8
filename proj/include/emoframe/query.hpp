#ifndef EMOFRAME_QUERY_HPP
#define EMOFRAME_QUERY_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "emoframe/graph.hpp"

namespace emoframe {

struct Variable {
    std::string name; // without the '?'
    bool operator==(const Variable&) const = default;
};

/// A pattern slot: a concrete term or a variable.
using PatternTerm = std::variant<Term, Variable>;

/// Predicate slot: a variable, or one-or-more IRI alternatives (p1|p2).
using PatternPredicate = std::variant<Variable, std::vector<Term>>;

struct TriplePattern {
    PatternTerm subject;
    PatternPredicate predicate;
    PatternTerm object;
};

/// FILTER(regex(str(?v), "text")): case-sensitive substring over the IRI
/// string or literal lexical form.
struct RegexFilter {
    std::string var;
    std::string pattern;
};

enum class CompareOp { Greater, GreaterEqual, Equal };

/// FILTER(?v > 3.0): numeric comparison over float-parsed lexical forms;
/// unparsable values fail the filter silently.
struct NumericFilter {
    std::string var;
    CompareOp op;
    double value;
};

using FilterExpr = std::variant<RegexFilter, NumericFilter>;

struct QueryAST {
    bool distinct = false;
    std::vector<std::string> projected;
    std::vector<TriplePattern> patterns;
    std::vector<FilterExpr> filters;
    PrefixMap prefixes; // PREFIX declarations seen in the query text
};

struct ResultTable {
    std::vector<std::string> header;            // variable names, no '?'
    std::vector<std::vector<Term>> rows;        // one term per header entry

    /// Distinct terms appearing in the named column.
    std::vector<Term> column_values(const std::string& var) const;
};

using Binding = std::map<std::string, Term>;

/// Parse the supported SPARQL subset (SELECT [DISTINCT], basic graph
/// patterns with ';'/',' abbreviations, '|' predicate alternation,
/// FILTER regex and numeric filters). Unsupported SPARQL features raise
/// an error naming the feature.
QueryAST parse_query(const std::string& text);
QueryAST parse_query_file(const std::string& path);

/// Evaluate by nested-loop join; patterns are reordered by ascending
/// estimated cardinality before joining. `initial` pre-binds variables
/// (used for parameterized bundled queries). Rows come out sorted.
ResultTable evaluate(const QueryAST& query, const Graph& graph, const Binding& initial = {});

/// Render a table as TSV; IRIs are shortened through the given prefix map.
std::string to_tsv(const ResultTable& table, const PrefixMap& prefixes);

} // namespace emoframe

#endif
