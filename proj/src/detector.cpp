#include "emoframe/detector.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "emoframe/errors.hpp"
#include "emoframe/vocab.hpp"

namespace emoframe {

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::vector<std::string> split_tab(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, '\t')) fields.push_back(field);
    return fields;
}

bool skip_line(const std::string& line) {
    return line.empty() || line[0] == '#';
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

// After stripping -ing/-ed, collapse a doubled final consonant (stopp -> stop),
// leaving -ll and -ss intact.
void undouble(std::string& s) {
    auto n = s.size();
    if (n >= 2 && s[n - 1] == s[n - 2] && !is_vowel(s[n - 1]) && s[n - 1] != 'l' && s[n - 1] != 's')
        s.pop_back();
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

Lexicon load_lexicon(const std::string& assets_root) {
    Lexicon lexicon;
    const std::string dir = assets_root + "/lexicon";

    std::ifstream stop(dir + "/stopwords.txt");
    if (!stop) throw Error("emotion_detector/io", "cannot read " + dir + "/stopwords.txt");
    for (std::string line; std::getline(stop, line);)
        if (!skip_line(line)) lexicon.stopwords.insert(lower(line));

    std::ifstream exc(dir + "/lemma_exceptions.tsv");
    if (!exc) throw Error("emotion_detector/io", "cannot read " + dir + "/lemma_exceptions.tsv");
    for (std::string line; std::getline(exc, line);) {
        if (skip_line(line)) continue;
        auto fields = split_tab(line);
        if (fields.size() != 2)
            throw Error("emotion_detector/lexicon", "malformed exception row: " + line);
        lexicon.exceptions[lower(fields[0])] = lower(fields[1]);
    }

    std::ifstream senses(dir + "/senses.tsv");
    if (!senses) throw Error("emotion_detector/io", "cannot read " + dir + "/senses.tsv");
    for (std::string line; std::getline(senses, line);) {
        if (skip_line(line)) continue;
        auto fields = split_tab(line);
        if (fields.size() != 3)
            throw Error("emotion_detector/lexicon", "malformed sense row: " + line);
        std::string iri = fields[1];
        if (iri.rfind("wn:", 0) == 0) iri = ns::wn + iri.substr(3);
        lexicon.senses[lower(fields[0])] = {Term::iri(iri), fields[2]};
    }
    return lexicon;
}

std::string lemmatize(const std::string& token, const Lexicon& lexicon) {
    std::string s = lower(token);
    if (auto it = lexicon.exceptions.find(s); it != lexicon.exceptions.end()) return it->second;

    if (ends_with(s, "sses")) {
        s.erase(s.size() - 2);
    } else if (ends_with(s, "ies") && s.size() > 4) {
        s.replace(s.size() - 3, 3, "y");
    } else if (ends_with(s, "s") && s.size() > 3 && !ends_with(s, "ss") && !ends_with(s, "us") &&
               !ends_with(s, "is")) {
        s.pop_back();
    }

    if (ends_with(s, "ing") && s.size() >= 6) {
        s.erase(s.size() - 3);
        undouble(s);
    } else if (ends_with(s, "ed") && s.size() >= 5) {
        s.erase(s.size() - 2);
        undouble(s);
    }
    return s;
}

SentenceGraph build_sentence_graph(const std::string& id, const std::string& text,
                                   const Lexicon& lexicon) {
    if (text.find_first_not_of(" \t\r\n") == std::string::npos)
        throw Error("emotion_detector/empty", "empty sentence " + id);

    SentenceGraph sentence;
    sentence.id = id;
    sentence.text = text;

    Term sent = Term::iri(ns::sg + id);
    Graph& g = sentence.graph;
    g.prefixes().bind("sg", ns::sg);
    g.prefixes().bind("rdf", ns::rdf);
    g.prefixes().bind("wn", ns::wn);
    g.insert(sent, vocab::rdf_type, vocab::sg_sentence);
    g.insert(sent, vocab::sg_text, Term::literal(text));

    const std::string xsd_integer = ns::xsd + "integer";
    std::size_t i = 0, token_index = 0;
    while (i < text.size()) {
        if (!std::isalnum(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t begin = i;
        while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
        std::string surface = text.substr(begin, i - begin);
        if (lexicon.stopwords.count(lower(surface))) continue;

        TokenNode token;
        token.node = Term::iri(ns::sg + id + "/token/" + std::to_string(token_index++));
        token.surface = surface;
        token.lemma = lemmatize(surface, lexicon);
        token.begin = begin;
        token.end = i;
        if (auto it = lexicon.senses.find(token.lemma); it != lexicon.senses.end()) {
            token.sense = it->second.first;
            token.pos = it->second.second;
        } else {
            token.pos = "x";
        }

        g.insert(token.node, vocab::rdf_type, vocab::sg_token);
        g.insert(sent, vocab::sg_has_token, token.node);
        g.insert(token.node, vocab::sg_surface, Term::literal(token.surface));
        g.insert(token.node, vocab::sg_lemma, Term::literal(token.lemma));
        g.insert(token.node, vocab::sg_pos, Term::literal(token.pos));
        g.insert(token.node, vocab::sg_begin, Term::literal(std::to_string(begin), xsd_integer));
        g.insert(token.node, vocab::sg_end, Term::literal(std::to_string(token.end), xsd_integer));
        if (token.sense) g.insert(token.node, vocab::sg_sense, *token.sense);
        sentence.tokens.push_back(std::move(token));
    }

    if (sentence.tokens.empty())
        throw Error("emotion_detector/no-content", "sentence " + id + " has no content tokens");
    return sentence;
}

SentenceGraph annotate(SentenceGraph sentence, const Graph& trigger_kg) {
    // Label -> emotions evoked by any trigger carrying that label.
    std::map<std::string, std::set<Term>> label_emotions;
    std::size_t max_label_words = 1;
    for (const Triple& t : trigger_kg.match(std::nullopt, vocab::rdfs_label, std::nullopt)) {
        if (!t.object.is_literal()) continue;
        std::set<Term> emotions;
        for (const Triple& e : trigger_kg.match(t.subject, vocab::efo_triggers, std::nullopt))
            emotions.insert(e.object);
        if (emotions.empty()) continue;
        const std::string label = lower(t.object.value);
        label_emotions[label].insert(emotions.begin(), emotions.end());
        max_label_words = std::max(max_label_words,
                                   static_cast<std::size_t>(std::count(label.begin(), label.end(), ' ') + 1));
    }

    Graph& g = sentence.graph;
    g.prefixes().bind("efo", ns::efo);
    g.prefixes().bind("be", ns::be);

    const auto& tokens = sentence.tokens;
    for (std::size_t i = 0; i < tokens.size();) {
        // Sense hit first; it suppresses a lemma-level duplicate on this node.
        if (tokens[i].sense) {
            auto hits = trigger_kg.match(*tokens[i].sense, vocab::efo_triggers, std::nullopt);
            if (!hits.empty()) {
                std::sort(hits.begin(), hits.end());
                for (const Triple& t : hits) g.insert(tokens[i].node, vocab::efo_triggers, t.object);
                ++i;
                continue;
            }
        }
        // Greedy longest label match over adjacent content-token lemmas.
        bool matched = false;
        for (std::size_t len = std::min(max_label_words, tokens.size() - i); len >= 1; --len) {
            std::string phrase = tokens[i].lemma;
            for (std::size_t k = 1; k < len; ++k) phrase += ' ' + tokens[i + k].lemma;
            auto it = label_emotions.find(phrase);
            if (it == label_emotions.end()) continue;
            for (const Term& emotion : it->second)
                g.insert(tokens[i].node, vocab::efo_triggers, emotion);
            i += len;
            matched = true;
            break;
        }
        if (!matched) ++i;
    }
    return sentence;
}

std::size_t EmotionProfile::total() const {
    std::size_t n = 0;
    for (const auto& [emotion, nodes] : evocations) n += nodes.size();
    return n;
}

EmotionProfile profile(const SentenceGraph& sentence) {
    EmotionProfile result;
    std::set<Term> nodes;
    for (const TokenNode& t : sentence.tokens) nodes.insert(t.node);
    for (const Triple& t : sentence.graph.match(std::nullopt, vocab::efo_triggers, std::nullopt)) {
        if (!nodes.count(t.subject)) continue;
        result.evocations[t.object].push_back(t.subject);
    }
    for (auto& [emotion, list] : result.evocations) std::sort(list.begin(), list.end());
    return result;
}

} // namespace emoframe
