#ifndef EMOFRAME_TRIGGERS_HPP
#define EMOFRAME_TRIGGERS_HPP

#include <chrono>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "emoframe/graph.hpp"
#include "emoframe/ontology.hpp"

namespace emoframe {

enum class SourceResource {
    Framenet,
    FrameElement,
    Wordnet,
    Verbnet,
    Propbank,
    Conceptnet,
    Wiktionary,
    Wikidata,
    Dbpedia,
    Babelnet,
    Umbel,
    Yago,
    Premon,
};

enum class ExpansionStep { Frame, FrameElement, Lexical, CloseMatch, Concept };

std::string to_string(SourceResource source);
std::string to_string(ExpansionStep step);

/// Classify a trigger entity by its namespace IRI.
SourceResource source_of(const Term& entity);

/// The seed word list: the emotion label plus all sub-emotion labels,
/// lowercase, deduplicated, sorted.
struct StartingLexicalMaterial {
    Term emotion;
    std::vector<std::string> units;
};

StartingLexicalMaterial starting_lexical_material(const Graph& closure, const Term& emotion);

struct TriggerRecord {
    Term trigger;
    Term emotion;
    SourceResource source;
    ExpansionStep step;
    std::string matched_unit;

    auto operator<=>(const TriggerRecord&) const = default;
};

/// Parse assets/snapshots/<name>.ttl and validate that every predicate
/// belongs to the snapshot schema.
Graph load_snapshot(const std::string& assets_root, const std::string& name);

/// Five-step expansion over a snapshot: (1) frames by lexical unit,
/// (2) their frame elements, (3) subsumed lexical entities, (4) close
/// matches, (5) concepts by label per intensity unit. Deterministic;
/// records unique per (trigger, emotion, source); sorted.
std::vector<TriggerRecord> expand(const StartingLexicalMaterial& slm, const Graph& snapshot);

/// One efo:triggers triple per distinct (trigger, emotion), plus a reified
/// provenance bundle per record and rdfs:label for frame- and concept-step
/// triggers. Frame-element records also attach the element to the emotion.
Graph materialize(const std::vector<TriggerRecord>& records);

/// Run the bundled expansion queries against a SPARQL endpoint and turn the
/// bindings into a snapshot. Responses are cached on disk under `cache_dir`,
/// keyed by (endpoint, emotion, query text); cache writes are atomic.
/// `network_requests`, when given, counts the HTTP round trips made.
Graph fetch_remote(const std::string& endpoint, const Term& emotion,
                   const StartingLexicalMaterial& slm, std::chrono::milliseconds timeout,
                   const std::string& assets_root, const std::string& cache_dir,
                   std::size_t* network_requests = nullptr);

} // namespace emoframe

#endif
