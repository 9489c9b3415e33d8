#ifndef EMOFRAME_ONTOLOGY_HPP
#define EMOFRAME_ONTOLOGY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "emoframe/graph.hpp"
#include "emoframe/query.hpp"

namespace emoframe {

enum class OntologyModule { EmoCore, BE, All };

/// Parse the bundled ontology assets under `assets_root`.
/// `All` merges EmoCore and BE.
Graph load_bundled_ontology(const std::string& assets_root, OntologyModule module);

/// Fixed rule set closure: transitive rdfs:subClassOf, transitive
/// be:moreIntenseThan, inverse completion between moreIntenseThan and
/// lessIntenseThan, and be:hasPolarity inheritance from superclass to
/// subclass. Output always contains the input. Throws on a cycle in either
/// closed relation, naming the cycle.
Graph infer_closures(const Graph& graph);

struct Violation {
    std::string rule; // "R1" .. "R5"
    std::vector<Triple> triples;
    std::string message;
};

struct ConsistencyReport {
    bool pass = true;
    std::vector<Violation> violations;
};

/// Evaluate the fixed consistency rules over a closure graph:
///   R1 intensity acyclicity
///   R2 antidotes only on negative emotions, impediments only on positive
///   R3 every BE emotion class has exactly one polarity
///   R4 emotionalTendencyTowards links psychopathologies to emotion classes
///   R5 every counter is typed be:EmotionCounter (directly or via subclass)
ConsistencyReport check_consistency(const Graph& closure);

/// Report as JSON lines: one object per violation.
std::string consistency_report_jsonl(const ConsistencyReport& report, const PrefixMap& prefixes);

enum class Polarity { Negative, Positive, Neutral };

struct EmotionFrame {
    Term emotion;
    Polarity polarity = Polarity::Neutral;
    std::vector<Term> sub_emotions;  // ordered by increasing intensity
    std::map<Term, Term> counters;   // sub-emotion -> antidote/impediment
    std::vector<Term> psychopathologies;
    std::optional<Term> personality_trait;
};

/// Assemble the frame view of one top-level BE emotion from a closure graph.
/// Throws if the term is not a BE emotion or the frame violates its
/// invariants (e.g. the intensity order is not a strict total order).
EmotionFrame emotion_frame(const Graph& closure, const Term& emotion);

/// Run the bundled competency question query (1..5). CQ3 accepts an optional
/// emotion argument restricting the result; CQ5 requires the emotion frame
/// argument.
ResultTable answer_cq(const Graph& closure, int cq, const std::string& assets_root,
                      const std::optional<Term>& argument = std::nullopt);

} // namespace emoframe

#endif
