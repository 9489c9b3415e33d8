#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "emoframe/errors.hpp"
#include "emoframe/evaluation.hpp"
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

std::vector<LabeledInstance> slice(const std::vector<LabeledInstance>& all, const Term& gold) {
    std::vector<LabeledInstance> out;
    for (const LabeledInstance& i : all)
        if (i.gold == gold) out.push_back(i);
    return out;
}

} // namespace

TEST_CASE("corpus emotion labels map to class terms") {
    CHECK(corpus_emotion("anger") == vocab::be_anger);
    CHECK(corpus_emotion("fear") == vocab::be_fear);
    CHECK(corpus_emotion("sadness") == vocab::be_sadness);
    CHECK(corpus_emotion("joy") == vocab::be_enjoyment);
    CHECK(corpus_emotion("enjoyment") == vocab::be_enjoyment);
    try {
        corpus_emotion("boredom");
        FAIL("expected a label error");
    } catch (const Error& e) {
        CHECK(e.code() == "evaluation/label");
    }
}

TEST_CASE("the bundled corpus loads ten instances per emotion") {
    auto all = load_corpus(assets_root() + "/corpus/wassa_mini.tsv");
    CHECK(all.size() == 40);
    for (const Term& gold : {vocab::be_anger, vocab::be_fear, vocab::be_sadness, vocab::be_enjoyment})
        CHECK(slice(all, gold).size() == 10);
    for (const LabeledInstance& i : all) {
        CHECK(i.intensity >= 0.0);
        CHECK(i.intensity <= 1.0);
    }
}

TEST_CASE("malformed corpus rows are skipped, well-formed ones kept") {
    std::string path =
        (std::filesystem::temp_directory_path() / "emoframe_corpus.tsv").string();
    {
        std::ofstream out(path);
        out << "# id\ttext\temotion\tintensity\n"
            << "1\tI feel fear\tfear\t0.5\n"
            << "2\tonly three columns\tfear\n"
            << "3\tout of range\tfear\t1.5\n"
            << "4\tnot a number\tfear\thigh\n"
            << "5\tI feel terror\tfear\t0.9\n";
    }
    auto rows = load_corpus(path);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].id == "1");
    CHECK(rows[1].id == "5");
    CHECK(rows[1].intensity == 0.9);
}

TEST_CASE("pearson matches hand-computed values") {
    std::vector<double> x{1, 2, 3, 4}, y{2, 1, 4, 3};
    CHECK(pearson(x, y) == doctest::Approx(0.6));
    std::vector<double> up{1, 2, 3}, down{6, 4, 2};
    CHECK(pearson(up, up) == doctest::Approx(1.0));
    CHECK(pearson(up, down) == doctest::Approx(-1.0));
}

TEST_CASE("pearson refuses degenerate input instead of returning zero") {
    std::vector<double> x{1, 2, 3}, shorter{1, 2}, flat{5, 5, 5};
    try {
        pearson(x, shorter);
        FAIL("expected a length error");
    } catch (const Error& e) {
        CHECK(e.code() == "evaluation/length-mismatch");
    }
    try {
        pearson(x, flat);
        FAIL("expected an undefined-correlation error");
    } catch (const Error& e) {
        CHECK(e.code() == "evaluation/undefined-correlation");
    }
    std::vector<double> single{1};
    CHECK_THROWS_AS(pearson(single, single), Error);
}

TEST_CASE("pearson is invariant under positive affine transformations") {
    std::mt19937 rng(73);
    std::uniform_real_distribution<double> value(-10, 10);
    std::uniform_real_distribution<double> scale(0.1, 5.0);
    for (int round = 0; round < 100; ++round) {
        std::size_t n = 3 + rng() % 20;
        std::vector<double> x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = value(rng);
            y[i] = value(rng);
        }
        // re-roll until both sides have variance
        if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; })) continue;

        double a = scale(rng), b = value(rng);
        std::vector<double> tx(n);
        for (std::size_t i = 0; i < n; ++i) tx[i] = a * x[i] + b;
        CHECK(std::fabs(pearson(tx, y) - pearson(x, y)) < 1e-9);
    }
}

TEST_CASE("f1 is the harmonic mean of precision and recall") {
    CHECK(f1_score(0, 0) == 0.0);
    CHECK(f1_score(100, 100) == doctest::Approx(100.0));
    for (double r : {10.0, 26.23, 35.0, 77.78}) {
        CHECK(f1_score(100, r) == doctest::Approx(200.0 * r / (100.0 + r)));
    }
}

TEST_CASE("the anger slice reproduces the frozen counts") {
    auto anger = slice(load_corpus(assets_root() + "/corpus/wassa_mini.tsv"), vocab::be_anger);
    EmotionMetrics m = evaluate_corpus(anger, bundled_trigger_kg(), lexicon(), vocab::be_anger);
    CHECK(m.instances == 10);
    CHECK(m.graphs_built == 9);
    CHECK(m.failures == 1);
    CHECK(m.detections == 7);
    CHECK(m.precision == doctest::Approx(100.0));
    CHECK(m.recall == doctest::Approx(77.7778).epsilon(1e-4));
    CHECK(m.f1 == doctest::Approx(87.5));
    CHECK(m.pearson_r > 0.0);
    CHECK(m.pearson_r < 1.0);
}

TEST_CASE("mixed gold labels in a slice are an error") {
    auto all = load_corpus(assets_root() + "/corpus/wassa_mini.tsv");
    try {
        evaluate_corpus(all, bundled_trigger_kg(), lexicon(), vocab::be_anger);
        FAIL("expected a mixed-gold error");
    } catch (const Error& e) {
        CHECK(e.code() == "evaluation/mixed-gold");
    }
}

TEST_CASE("evaluation is deterministic and independent of the job count") {
    auto fear = slice(load_corpus(assets_root() + "/corpus/wassa_mini.tsv"), vocab::be_fear);
    EmotionMetrics serial = evaluate_corpus(fear, bundled_trigger_kg(), lexicon(), vocab::be_fear, 1);
    EmotionMetrics parallel =
        evaluate_corpus(fear, bundled_trigger_kg(), lexicon(), vocab::be_fear, 4);
    CHECK(metrics_table({serial}) == metrics_table({parallel}));
    std::string first = metrics_table({serial});
    for (int run = 0; run < 3; ++run) {
        EmotionMetrics again = evaluate_corpus(fear, bundled_trigger_kg(), lexicon(), vocab::be_fear, 3);
        CHECK(metrics_table({again}) == first);
    }
}

TEST_CASE("counts proportional to intensity give perfect recall and correlation") {
    Graph kg;
    Term trigger = Term::iri(ns::cn + "fear");
    kg.insert(trigger, vocab::efo_triggers, vocab::be_fear);
    kg.insert(trigger, vocab::rdfs_label, Term::literal("fear"));

    std::vector<LabeledInstance> instances;
    for (int k = 1; k <= 4; ++k) {
        std::string text = "fear";
        for (int j = 1; j < k; ++j) text += " beyond fear";
        instances.push_back({"p" + std::to_string(k), text, vocab::be_fear, k / 4.0});
    }
    EmotionMetrics m = evaluate_corpus(instances, kg, lexicon(), vocab::be_fear);
    CHECK(m.graphs_built == 4);
    CHECK(m.detections == 4);
    CHECK(m.recall == doctest::Approx(100.0));
    CHECK(m.f1 == doctest::Approx(100.0));
    CHECK(m.pearson_r == doctest::Approx(1.0));
}

TEST_CASE("a slice with uniform counts reports the correlation as undefined") {
    Graph kg; // no triggers at all: every detection count is zero
    std::vector<LabeledInstance> instances = {
        {"u1", "I fear the dark", vocab::be_fear, 0.2},
        {"u2", "sheer terror tonight", vocab::be_fear, 0.8},
    };
    try {
        evaluate_corpus(instances, kg, lexicon(), vocab::be_fear);
        FAIL("expected an undefined-correlation error");
    } catch (const Error& e) {
        CHECK(e.code() == "evaluation/undefined-correlation");
    }
}

TEST_CASE("reports name the score construction") {
    auto joy = slice(load_corpus(assets_root() + "/corpus/wassa_mini.tsv"), vocab::be_enjoyment);
    EmotionMetrics m = evaluate_corpus(joy, bundled_trigger_kg(), lexicon(), vocab::be_enjoyment);
    CHECK(metrics_json({m}).find("score_construction") != std::string::npos);
    std::string table = metrics_table({m});
    CHECK(table.find("Emotion") != std::string::npos);
    CHECK(table.find("min-max normalized") != std::string::npos);
}
