#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "emoframe/errors.hpp"
#include "emoframe/multimodal.hpp"
#include "emoframe/vocab.hpp"
#include "helpers.hpp"

using namespace emoframe;
using namespace emoframe::testing;

namespace {

const Term fer_neutral = Term::iri(ns::fer + "Neutral");

std::vector<AnnotatedItem> crema_items() {
    return load_annotations(assets_root() + "/fixtures/crema_mini.csv", Dataset::Crema);
}

std::vector<AnnotatedItem> ferplus_items() {
    return load_annotations(assets_root() + "/fixtures/ferplus_mini.csv", Dataset::Ferplus);
}

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream out(path);
    out << body;
    return path;
}

Term value_predicate(const Term& emotion) {
    return Term::iri(ns::fer + "has" + emotion.local_name() + "Value");
}

} // namespace

TEST_CASE("the audio fixture loads ten items with per-emotion scores") {
    auto items = crema_items();
    REQUIRE(items.size() == 10);
    CHECK(items[0].id == "1001_DFA_ANG_XX");
    CHECK(items[0].modality == Modality::Audio);
    REQUIRE(items[0].values.size() == 6);
    CHECK(items[0].values[0] == std::pair{vocab::be_anger, 5.0});
    CHECK(items[0].values[1] == std::pair{vocab::be_disgust, 2.0});
    CHECK(items[0].values[4] == std::pair{fer_neutral, 0.0});
}

TEST_CASE("the image fixture keeps the zero-padded numeric id") {
    auto items = ferplus_items();
    REQUIRE(items.size() == 10);
    CHECK(items[0].id == "0014735");
    CHECK(items[0].modality == Modality::Image);
    REQUIRE(items[0].values.size() == 7);
    CHECK(items[0].values[4] == std::pair{vocab::be_anger, 3.0});
    CHECK(items[2].values[0] == std::pair{fer_neutral, 4.0});
    CHECK(items[2].values[1] == std::pair{vocab::be_enjoyment, 6.0});
}

TEST_CASE("header mismatches are layout errors; a bare header is an empty dataset") {
    std::string wrong = write_temp("emoframe_wrong_header.csv", "File,Anger\nx,1\n");
    try {
        load_annotations(wrong, Dataset::Crema);
        FAIL("expected a layout error");
    } catch (const Error& e) {
        CHECK(e.code() == "multimodal_kg/layout");
    }
    CHECK_THROWS_AS(load_annotations(wrong, Dataset::Ferplus), Error);

    std::string bare = write_temp("emoframe_bare_header.csv",
                                  "FileName,Anger,Disgust,Fear,Happy,Neutral,Sad\n");
    CHECK(load_annotations(bare, Dataset::Crema).empty());
}

TEST_CASE("unparsable and negative scores are rejected") {
    std::string bad = write_temp("emoframe_bad_value.csv",
                                 "FileName,Anger,Disgust,Fear,Happy,Neutral,Sad\n"
                                 "1001_X,high,0,0,0,0,0\n");
    CHECK_THROWS_AS(load_annotations(bad, Dataset::Crema), Error);
    std::string negative = write_temp("emoframe_negative_value.csv",
                                      "FileName,Anger,Disgust,Fear,Happy,Neutral,Sad\n"
                                      "1001_X,-1,0,0,0,0,0\n");
    try {
        load_annotations(negative, Dataset::Crema);
        FAIL("expected a value error");
    } catch (const Error& e) {
        CHECK(e.code() == "multimodal_kg/value");
    }
}

TEST_CASE("transposing the audio fixture yields typed individuals with value and signal triples") {
    Graph g = transpose(crema_items(), Dataset::Crema);
    Term item = Term::iri(ns::cr + "1001_DFA_ANG_XX");
    CHECK(g.contains(item, vocab::rdf_type, vocab::efo_emotion_situation));
    CHECK(g.contains(item, value_predicate(vocab::be_anger),
                     Term::literal("5.0", ns::xsd + "float")));
    CHECK(g.contains(item, value_predicate(vocab::be_disgust),
                     Term::literal("2.0", ns::xsd + "float")));
    CHECK(g.count(item, vocab::be_includes_signal_of, std::nullopt) == 2);
    CHECK(g.contains(item, vocab::be_includes_signal_of, vocab::be_anger));
    CHECK(g.contains(item, vocab::be_includes_signal_of, vocab::be_disgust));

    // fractional scores keep one decimal place
    CHECK(g.contains(Term::iri(ns::cr + "1004_IOM_HAP_LO"), value_predicate(vocab::be_enjoyment),
                     Term::literal("4.5", ns::xsd + "float")));

    // an all-zero item is typed but carries no values
    Term silent = Term::iri(ns::cr + "1010_DFA_NEU_XX");
    CHECK(g.contains(silent, vocab::rdf_type, vocab::efo_emotion_situation));
    CHECK(g.count(silent, std::nullopt, std::nullopt) == 1);
}

TEST_CASE("transposing the image fixture uses integer tallies as floats") {
    Graph g = transpose(ferplus_items(), Dataset::Ferplus);
    Term item = Term::iri(ns::fer + "0014735");
    CHECK(g.contains(item, value_predicate(vocab::be_anger),
                     Term::literal("3.0", ns::xsd + "float")));
    CHECK(g.count(item, std::nullopt, std::nullopt) == 3);
    CHECK(g.contains(Term::iri(ns::fer + "0000001"), value_predicate(fer_neutral),
                     Term::literal("4.0", ns::xsd + "float")));
}

TEST_CASE("duplicate ids and empty value lists are transposition errors") {
    AnnotatedItem a{"dup", Modality::Audio, {{vocab::be_fear, 1.0}}};
    try {
        transpose({a, a}, Dataset::Crema);
        FAIL("expected a duplicate error");
    } catch (const Error& e) {
        CHECK(e.code() == "multimodal_kg/duplicate");
    }
    AnnotatedItem empty{"empty", Modality::Audio, {}};
    CHECK_THROWS_AS(transpose({empty}, Dataset::Crema), Error);
    AnnotatedItem negative{"neg", Modality::Audio, {{vocab::be_fear, -2.0}}};
    CHECK_THROWS_AS(transpose({negative}, Dataset::Crema), Error);
}

TEST_CASE("every item contributes exactly 1 + 2k triples for k positive values") {
    std::mt19937 rng(83);
    const Term emotions[] = {vocab::be_anger,     vocab::be_disgust, vocab::be_fear,
                             vocab::be_enjoyment, vocab::be_sadness, vocab::be_surprise,
                             fer_neutral};
    std::vector<AnnotatedItem> items;
    std::size_t expected = 0;
    for (int i = 0; i < 1000; ++i) {
        AnnotatedItem item;
        item.id = "item" + std::to_string(i);
        item.modality = Modality::Image;
        std::size_t positive = 0;
        for (const Term& e : emotions) {
            if (rng() % 3 == 0) continue; // emotion absent from this item
            double v = static_cast<double>(rng() % 8) / 2.0;
            item.values.emplace_back(e, v);
            if (v > 0.0) ++positive;
        }
        if (item.values.empty()) item.values.emplace_back(emotions[rng() % 7], 1.0);
        expected += 1 + 2 * positive;
        items.push_back(std::move(item));
    }

    Graph g = transpose(items, Dataset::Ferplus);
    CHECK(g.size() == expected);
    // recount per category against the law
    std::size_t typed = g.count(std::nullopt, vocab::rdf_type, vocab::efo_emotion_situation);
    std::size_t signals = g.count(std::nullopt, vocab::be_includes_signal_of, std::nullopt);
    CHECK(typed == items.size());
    CHECK(signals == (expected - items.size()) / 2);
}

TEST_CASE("multi-emotion queries use strict thresholds on every constraint") {
    Graph g = transpose(ferplus_items(), Dataset::Ferplus);
    CHECK(query_multi_emotion(g, {{vocab::be_anger, 3.0}, {vocab::be_fear, 3.0}}) ==
          std::vector<std::string>{"0035509"});
    // strict: a tally equal to the threshold does not qualify
    CHECK(query_multi_emotion(g, {{vocab::be_anger, 4.0}, {vocab::be_fear, 3.0}}).empty());
    CHECK(query_multi_emotion(g, {{vocab::be_anger, 99.0}}).empty());

    auto all = query_multi_emotion(g, {});
    CHECK(all.size() == 10);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(all.front() == "0000001");
}

TEST_CASE("single-constraint queries agree with a direct scan of the items") {
    std::mt19937 rng(89);
    const Term emotions[] = {vocab::be_anger, vocab::be_fear, vocab::be_sadness,
                             vocab::be_enjoyment};
    for (int round = 0; round < 100; ++round) {
        std::vector<AnnotatedItem> items;
        int n = 1 + rng() % 20;
        for (int i = 0; i < n; ++i) {
            AnnotatedItem item;
            item.id = "r" + std::to_string(i);
            for (const Term& e : emotions)
                item.values.emplace_back(e, static_cast<double>(rng() % 10) / 2.0);
            items.push_back(std::move(item));
        }
        Graph g = transpose(items, Dataset::Crema);
        Term target = emotions[rng() % 4];
        double threshold = static_cast<double>(rng() % 10) / 2.0;

        std::vector<std::string> expected;
        for (const AnnotatedItem& item : items)
            for (const auto& [e, v] : item.values)
                if (e == target && v > threshold) expected.push_back(item.id);
        std::sort(expected.begin(), expected.end());

        CHECK(query_multi_emotion(g, {{target, threshold}}) == expected);
    }
}
