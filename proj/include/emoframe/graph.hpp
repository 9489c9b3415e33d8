#ifndef EMOFRAME_GRAPH_HPP
#define EMOFRAME_GRAPH_HPP

#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "emoframe/prefixes.hpp"
#include "emoframe/term.hpp"

namespace emoframe {

/// Which access path answers a pattern; Auto picks the most selective
/// bound position. The three indexes must always agree.
enum class IndexChoice { Auto, Subject, Predicate, Object };

/// In-memory triple set with subject-, predicate- and object-keyed indexes
/// and an attached prefix map for serialization round-trips.
class Graph {
public:
    using TripleSet = std::unordered_set<Triple, TripleHash>;

    /// Insert a triple; returns false (and leaves the graph unchanged)
    /// if it is already present.
    bool insert(Triple t);
    bool insert(Term s, Term p, Term o) { return insert(Triple{std::move(s), std::move(p), std::move(o)}); }

    /// Remove a triple; returns false if it was not present.
    bool remove(const Triple& t);

    bool contains(const Triple& t) const { return triples_.count(t) != 0; }
    bool contains(const Term& s, const Term& p, const Term& o) const { return contains(Triple{s, p, o}); }
    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }

    /// Match a (s, p, o) pattern; nullopt is a wildcard. Results carry no
    /// defined order.
    std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                              const std::optional<Term>& o, IndexChoice index = IndexChoice::Auto) const;

    /// Number of triples matching the pattern without materializing them
    /// beyond the chosen index bucket.
    std::size_t count(const std::optional<Term>& s, const std::optional<Term>& p,
                      const std::optional<Term>& o) const;

    /// First object of (s, p, ?), if any.
    std::optional<Term> object_of(const Term& s, const Term& p) const;

    const TripleSet& triples() const { return triples_; }
    TripleSet::const_iterator begin() const { return triples_.begin(); }
    TripleSet::const_iterator end() const { return triples_.end(); }

    PrefixMap& prefixes() { return prefixes_; }
    const PrefixMap& prefixes() const { return prefixes_; }

    /// All triples in a deterministic (lexicographic) order.
    std::vector<Triple> sorted_triples() const;

private:
    using Index = std::unordered_map<Term, std::vector<Triple>, TermHash>;

    static void index_remove(Index& index, const Term& key, const Triple& t);

    TripleSet triples_;
    Index by_subject_;
    Index by_predicate_;
    Index by_object_;
    PrefixMap prefixes_;
};

/// True iff both graphs hold the same triple set (prefix maps are ignored).
bool same_triples(const Graph& a, const Graph& b);

/// Union of the given graphs. Prefix maps are combined; when the same prefix
/// is bound to different namespaces the later graph wins and a warning is
/// emitted on the diagnostic stream. Blank node labels are file-scoped: an
/// incoming label colliding with one already present is renamed, unless the
/// incoming triples under that label are already a subset of the accumulated
/// graph (which keeps merge(g, g) == g).
Graph merge(std::span<const Graph> graphs);
Graph merge(const Graph& a, const Graph& b);

} // namespace emoframe

#endif
