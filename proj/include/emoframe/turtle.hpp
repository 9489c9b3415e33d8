#ifndef EMOFRAME_TURTLE_HPP
#define EMOFRAME_TURTLE_HPP

#include <iosfwd>
#include <string>

#include "emoframe/graph.hpp"

namespace emoframe {

enum class SerializeFormat { Turtle, NTriples };

/// Parse the supported Turtle subset: @prefix/@base directives, IRIs,
/// prefixed names, string/integer/decimal/double literals with optional
/// datatype or language tag, the `a` keyword, object lists (`,`),
/// predicate lists (`;`) and labelled blank nodes (`_:x`).
/// Throws SyntaxError with line/column on malformed input and on
/// undefined prefixes.
Graph parse_turtle(std::istream& in);
Graph parse_turtle(const std::string& text);
Graph parse_turtle_file(const std::string& path);

/// Serialize a graph. Turtle output groups triples by subject and shortens
/// IRIs through the graph's prefix map; N-Triples output is one fully
/// expanded triple per line. Both orders are deterministic.
void serialize(const Graph& g, std::ostream& out, SerializeFormat format);
std::string serialize(const Graph& g, SerializeFormat format);
void serialize_file(const Graph& g, const std::string& path, SerializeFormat format);

} // namespace emoframe

#endif
