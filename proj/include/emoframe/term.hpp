#ifndef EMOFRAME_TERM_HPP
#define EMOFRAME_TERM_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

namespace emoframe {

enum class TermKind { Iri, Literal, Blank };

/// An RDF term. IRIs are always stored fully expanded; literals keep their
/// lexical form verbatim (equality is lexical, not value-space), so "3.0"
/// and "3.00" are distinct terms.
struct Term {
    TermKind kind = TermKind::Iri;
    std::string value;    // IRI string, lexical form, or blank node label
    std::string datatype; // literal datatype IRI, may be empty
    std::string lang;     // literal language tag, may be empty

    static Term iri(std::string i) { return Term{TermKind::Iri, std::move(i), {}, {}}; }
    static Term literal(std::string lexical, std::string datatype = {}, std::string lang = {}) {
        return Term{TermKind::Literal, std::move(lexical), std::move(datatype), std::move(lang)};
    }
    static Term blank(std::string label) { return Term{TermKind::Blank, std::move(label), {}, {}}; }

    bool is_iri() const { return kind == TermKind::Iri; }
    bool is_literal() const { return kind == TermKind::Literal; }
    bool is_blank() const { return kind == TermKind::Blank; }

    /// Local name of an IRI: the part after the last '#' or '/'.
    std::string local_name() const;

    bool operator==(const Term&) const = default;
    auto operator<=>(const Term&) const = default;
};

struct Triple {
    Term subject;   // iri or blank
    Term predicate; // always iri
    Term object;

    bool operator==(const Triple&) const = default;
    auto operator<=>(const Triple&) const = default;
};

struct TermHash {
    std::size_t operator()(const Term& t) const {
        std::size_t h = std::hash<std::string>{}(t.value);
        h ^= std::hash<int>{}(static_cast<int>(t.kind)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        if (!t.datatype.empty())
            h ^= std::hash<std::string>{}(t.datatype) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        if (!t.lang.empty())
            h ^= std::hash<std::string>{}(t.lang) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

struct TripleHash {
    std::size_t operator()(const Triple& t) const {
        TermHash h;
        std::size_t r = h(t.subject);
        r ^= h(t.predicate) + 0x9e3779b97f4a7c15ULL + (r << 6) + (r >> 2);
        r ^= h(t.object) + 0x9e3779b97f4a7c15ULL + (r << 6) + (r >> 2);
        return r;
    }
};

} // namespace emoframe

#endif
