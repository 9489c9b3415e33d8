#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "emoframe/detector.hpp"
#include "emoframe/errors.hpp"
#include "emoframe/triggers.hpp"
#include "emoframe/vocab.hpp"
#include "helpers.hpp"

using namespace emoframe;
using namespace emoframe::testing;

namespace {

const Lexicon& lexicon() {
    static Lexicon lex = load_lexicon(assets_root());
    return lex;
}

Graph bundled_trigger_kg() {
    static Graph kg = [] {
        Graph closure = infer_closures(load_bundled_ontology(assets_root(), OntologyModule::All));
        const std::vector<std::pair<std::string, Term>> names = {
            {"disgust", vocab::be_disgust}, {"fear", vocab::be_fear},
            {"anger", vocab::be_anger},     {"sadness", vocab::be_sadness},
            {"enjoyment", vocab::be_enjoyment}, {"surprise", vocab::be_surprise},
        };
        Graph out;
        for (const auto& [name, emotion] : names) {
            StartingLexicalMaterial slm = starting_lexical_material(closure, emotion);
            out = merge(out, materialize(expand(slm, load_snapshot(assets_root(), name))));
        }
        return out;
    }();
    return kg;
}

const std::string kFigureSentence =
    "Cosplaying properly for the first time on Saturday! Pretty nervous...";
const std::string kWengerSentence =
    "The immense importance of football is sometimes scary. When you don't win you are "
    "responsible for so many unhappy people. - Arsene Wenger";

} // namespace

TEST_CASE("lexicon loads stop words, exceptions and first senses") {
    const Lexicon& lex = lexicon();
    CHECK(lex.stopwords.count("the"));
    CHECK(lex.stopwords.count("don"));
    CHECK(lex.exceptions.at("felt") == "feel");
    auto [sense, pos] = lex.senses.at("nervous");
    CHECK(sense == Term::iri(ns::wn + "synset-nervous-adjectivesatellite-1"));
    CHECK(pos == "a");
    CHECK_FALSE(lex.senses.count("pretty"));
}

TEST_CASE("lemmatizer applies the documented suffix rules") {
    const Lexicon& lex = lexicon();
    CHECK(lemmatize("classes", lex) == "class");
    CHECK(lemmatize("cries", lex) == "cry");
    CHECK(lemmatize("dogs", lex) == "dog");
    CHECK(lemmatize("bus", lex) == "bus");
    CHECK(lemmatize("miss", lex) == "miss");
    CHECK(lemmatize("this", lex) == "this");
    CHECK(lemmatize("running", lex) == "run");
    CHECK(lemmatize("falling", lex) == "fall");
    CHECK(lemmatize("jumped", lex) == "jump");
    CHECK(lemmatize("passed", lex) == "pass");
    CHECK(lemmatize("sing", lex) == "sing");  // too short for -ing stripping
    CHECK(lemmatize("red", lex) == "red");    // too short for -ed stripping
    CHECK(lemmatize("Feeling", lex) == "feel");
    // exception table takes precedence over the rules
    CHECK(lemmatize("felt", lex) == "feel");
    CHECK(lemmatize("cried", lex) == "cry");
    CHECK(lemmatize("surprised", lex) == "surprised");
}

TEST_CASE("sentence graph keeps content tokens with offsets and senses") {
    SentenceGraph s = build_sentence_graph("s1", kFigureSentence, lexicon());
    CHECK(s.id == "s1");
    CHECK(s.graph.contains(Term::iri(ns::sg + "s1"), vocab::rdf_type, vocab::sg_sentence));
    CHECK(s.graph.contains(Term::iri(ns::sg + "s1"), vocab::sg_text, Term::literal(kFigureSentence)));
    CHECK(s.graph.count(Term::iri(ns::sg + "s1"), vocab::sg_has_token, std::nullopt) ==
          s.tokens.size());

    for (const TokenNode& t : s.tokens) {
        CHECK(t.end <= kFigureSentence.size());
        CHECK(kFigureSentence.substr(t.begin, t.end - t.begin) == t.surface);
        CHECK_FALSE(lexicon().stopwords.count(t.surface));
    }

    auto nervous = std::find_if(s.tokens.begin(), s.tokens.end(),
                                [](const TokenNode& t) { return t.lemma == "nervous"; });
    REQUIRE(nervous != s.tokens.end());
    CHECK(nervous->sense == Term::iri(ns::wn + "synset-nervous-adjectivesatellite-1"));
    CHECK(s.graph.contains(nervous->node, vocab::sg_sense, *nervous->sense));
    CHECK(nervous->pos == "a");
}

TEST_CASE("empty and stop-word-only sentences are rejected") {
    try {
        build_sentence_graph("e1", "   \t\n", lexicon());
        FAIL("expected an empty-sentence error");
    } catch (const Error& e) {
        CHECK(e.code() == "emotion_detector/empty");
    }
    try {
        build_sentence_graph("e2", "and then of", lexicon());
        FAIL("expected a no-content error");
    } catch (const Error& e) {
        CHECK(e.code() == "emotion_detector/no-content");
    }
}

TEST_CASE("the nervous sentence evokes exactly one Fear activation") {
    SentenceGraph s =
        annotate(build_sentence_graph("s1", kFigureSentence, lexicon()), bundled_trigger_kg());
    EmotionProfile p = profile(s);
    CHECK(p.total() == 1);
    REQUIRE(p.count(vocab::be_fear) == 1);
    auto nervous = std::find_if(s.tokens.begin(), s.tokens.end(),
                                [](const TokenNode& t) { return t.lemma == "nervous"; });
    REQUIRE(nervous != s.tokens.end());
    CHECK(p.evocations.at(vocab::be_fear) == std::vector<Term>{nervous->node});
}

TEST_CASE("a mixed sentence evokes both Fear and Sadness") {
    SentenceGraph s =
        annotate(build_sentence_graph("s2", kWengerSentence, lexicon()), bundled_trigger_kg());
    EmotionProfile p = profile(s);
    CHECK(p.count(vocab::be_fear) == 1);
    CHECK(p.count(vocab::be_sadness) == 1);
    CHECK(p.total() == 2);
}

TEST_CASE("annotation is idempotent and only ever adds triples") {
    SentenceGraph base = build_sentence_graph("s2", kWengerSentence, lexicon());
    SentenceGraph once = annotate(base, bundled_trigger_kg());
    SentenceGraph twice = annotate(once, bundled_trigger_kg());
    CHECK(same_triples(once.graph, twice.graph));
    for (const Triple& t : base.graph) CHECK(once.graph.contains(t));
}

TEST_CASE("sense hits take precedence over label matches") {
    Graph kg;
    Term sense = Term::iri(ns::wn + "synset-fear-noun-1");
    kg.insert(sense, vocab::efo_triggers, vocab::be_fear);
    Term label_trigger = Term::iri(ns::cn + "fear");
    kg.insert(label_trigger, vocab::efo_triggers, vocab::be_anger); // deliberately wrong
    kg.insert(label_trigger, vocab::rdfs_label, Term::literal("fear"));

    SentenceGraph s = annotate(build_sentence_graph("s3", "I fear the dark", lexicon()), kg);
    EmotionProfile p = profile(s);
    CHECK(p.count(vocab::be_fear) == 1);
    CHECK(p.count(vocab::be_anger) == 0);
}

TEST_CASE("multi-word labels match greedily over adjacent lemmas") {
    Graph kg;
    Term mwe = Term::iri(ns::cn + "stage_fright");
    kg.insert(mwe, vocab::efo_triggers, vocab::be_fear);
    kg.insert(mwe, vocab::rdfs_label, Term::literal("stage fright"));
    Term single = Term::iri(ns::cn + "stage");
    kg.insert(single, vocab::efo_triggers, vocab::be_surprise); // decoy prefix
    kg.insert(single, vocab::rdfs_label, Term::literal("stage"));
    Term fright = Term::iri(ns::cn + "fright");
    kg.insert(fright, vocab::efo_triggers, vocab::be_sadness); // decoy suffix
    kg.insert(fright, vocab::rdfs_label, Term::literal("fright"));

    SentenceGraph s =
        annotate(build_sentence_graph("s4", "He gets stage fright before shows", lexicon()), kg);
    EmotionProfile p = profile(s);
    // the longest label wins and consumes both tokens
    CHECK(p.count(vocab::be_fear) == 1);
    CHECK(p.count(vocab::be_surprise) == 0);
    CHECK(p.count(vocab::be_sadness) == 0);
    auto stage = std::find_if(s.tokens.begin(), s.tokens.end(),
                              [](const TokenNode& t) { return t.lemma == "stage"; });
    REQUIRE(stage != s.tokens.end());
    CHECK(p.evocations.at(vocab::be_fear) == std::vector<Term>{stage->node});

    // the prefix alone still matches by itself
    SentenceGraph alone = annotate(build_sentence_graph("s5", "The stage stood empty", lexicon()), kg);
    CHECK(profile(alone).count(vocab::be_surprise) == 1);
    CHECK(profile(alone).count(vocab::be_fear) == 0);

    // labels split across a stop word do not match: adjacency is over
    // content tokens after stop-word removal, so the intervening token
    // must be a content word to break the phrase
    SentenceGraph broken =
        annotate(build_sentence_graph("s6", "The stage caused great fright", lexicon()), kg);
    CHECK(profile(broken).count(vocab::be_fear) == 0);
    CHECK(profile(broken).count(vocab::be_surprise) == 1);
    CHECK(profile(broken).count(vocab::be_sadness) == 1);
}

TEST_CASE("removing triggers never increases evocation counts") {
    Graph full = bundled_trigger_kg();
    Graph reduced;
    for (const Triple& t : full)
        if (t.object != vocab::be_sadness || t.predicate != vocab::efo_triggers)
            reduced.insert(t);

    EmotionProfile before =
        profile(annotate(build_sentence_graph("s2", kWengerSentence, lexicon()), full));
    EmotionProfile after =
        profile(annotate(build_sentence_graph("s2", kWengerSentence, lexicon()), reduced));
    CHECK(after.count(vocab::be_sadness) == 0);
    CHECK(after.count(vocab::be_fear) == before.count(vocab::be_fear));
    for (const auto& [emotion, nodes] : after.evocations)
        CHECK(nodes.size() <= before.count(emotion));
}

TEST_CASE("profile only counts evocations anchored on this sentence's tokens") {
    SentenceGraph s = build_sentence_graph("s7", "I fear nothing", lexicon());
    s.graph.insert(Term::iri(ns::sg + "other/token/0"), vocab::efo_triggers, vocab::be_fear);
    CHECK(profile(s).total() == 0);
}
