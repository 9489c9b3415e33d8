#ifndef EMOFRAME_DETECTOR_HPP
#define EMOFRAME_DETECTOR_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "emoframe/graph.hpp"

namespace emoframe {

/// Bundled stop-word list, lemmatizer exception table and lemma→synset
/// first-sense lexicon.
struct Lexicon {
    std::set<std::string> stopwords;
    std::map<std::string, std::string> exceptions;         // surface -> lemma
    std::map<std::string, std::pair<Term, std::string>> senses; // lemma -> (synset, pos)
};

Lexicon load_lexicon(const std::string& assets_root);

/// Rule-based lemmatizer: exception table first, then documented suffix
/// rules (plural and -ing/-ed stripping with doubled-consonant repair).
std::string lemmatize(const std::string& token, const Lexicon& lexicon);

struct TokenNode {
    Term node;
    std::string surface;
    std::string lemma;
    std::string pos;            // coarse tag from the sense lexicon, "x" if unknown
    std::optional<Term> sense;
    std::size_t begin = 0;      // character offsets into the original text
    std::size_t end = 0;
};

struct SentenceGraph {
    std::string id;
    std::string text;
    std::vector<TokenNode> tokens; // content tokens, in surface order
    Graph graph;
};

/// Tokenize, drop stop words, lemmatize, look up senses and emit the graph.
/// Throws on empty text and on text with no content tokens.
SentenceGraph build_sentence_graph(const std::string& id, const std::string& text,
                                   const Lexicon& lexicon);

/// For each node: look up the trigger KG by sense first, then by (greedy
/// longest, adjacent-lemma) label match; on a hit add one evocation triple
/// per node/emotion pair. Output graph contains the input graph.
SentenceGraph annotate(SentenceGraph sentence, const Graph& trigger_kg);

/// emotion -> triggering nodes; count is the node-list length, zero-count
/// emotions are absent.
struct EmotionProfile {
    std::map<Term, std::vector<Term>> evocations;

    std::size_t count(const Term& emotion) const {
        auto it = evocations.find(emotion);
        return it == evocations.end() ? 0 : it->second.size();
    }
    std::size_t total() const;
};

EmotionProfile profile(const SentenceGraph& sentence);

} // namespace emoframe

#endif
