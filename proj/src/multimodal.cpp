#include "emoframe/multimodal.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "emoframe/errors.hpp"
#include "emoframe/vocab.hpp"

namespace emoframe {

namespace {

const Term fer_neutral = Term::iri(ns::fer + "Neutral");

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

double parse_value(const std::string& s, const std::string& id) {
    double v;
    try {
        v = std::stod(s);
    } catch (const std::exception&) {
        throw Error("multimodal_kg/value", "unparsable value '" + s + "' for item " + id);
    }
    if (v < 0.0) throw Error("multimodal_kg/value", "negative value for item " + id);
    return v;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

std::vector<AnnotatedItem> load_crema(std::istream& in, const std::string& path) {
    std::string header;
    if (!std::getline(in, header) ||
        strip_cr(header) != "FileName,Anger,Disgust,Fear,Happy,Neutral,Sad")
        throw Error("multimodal_kg/layout", path + ": unexpected CREMA header");

    static const Term emotions[] = {vocab::be_anger, vocab::be_disgust, vocab::be_fear,
                                    vocab::be_enjoyment, fer_neutral, vocab::be_sadness};
    std::vector<AnnotatedItem> items;
    for (std::string line; std::getline(in, line);) {
        line = strip_cr(line);
        if (line.empty()) continue;
        auto fields = split_csv(line);
        if (fields.size() != 7)
            throw Error("multimodal_kg/layout", path + ": expected 7 columns, got row " + line);
        AnnotatedItem item;
        item.id = fields[0];
        item.modality = Modality::Audio;
        for (std::size_t i = 0; i < 6; ++i)
            item.values.emplace_back(emotions[i], parse_value(fields[i + 1], item.id));
        items.push_back(std::move(item));
    }
    return items;
}

std::vector<AnnotatedItem> load_ferplus(std::istream& in, const std::string& path) {
    std::string header;
    if (!std::getline(in, header) ||
        strip_cr(header) !=
            "Usage,Image name,neutral,happiness,surprise,sadness,anger,disgust,fear,contempt,unknown,NF")
        throw Error("multimodal_kg/layout", path + ": unexpected FER+ header");

    static const Term emotions[] = {fer_neutral,      vocab::be_enjoyment, vocab::be_surprise,
                                    vocab::be_sadness, vocab::be_anger,    vocab::be_disgust,
                                    vocab::be_fear};
    std::vector<AnnotatedItem> items;
    std::size_t dropped = 0;
    for (std::string line; std::getline(in, line);) {
        line = strip_cr(line);
        if (line.empty()) continue;
        auto fields = split_csv(line);
        if (fields.size() != 12)
            throw Error("multimodal_kg/layout", path + ": expected 12 columns, got row " + line);
        AnnotatedItem item;
        // Zero-padded numeric image id, e.g. fer0014735.png -> 0014735.
        for (char c : fields[1])
            if (std::isdigit(static_cast<unsigned char>(c))) item.id += c;
        if (item.id.empty())
            throw Error("multimodal_kg/layout", path + ": image name without digits: " + fields[1]);
        item.modality = Modality::Image;
        for (std::size_t i = 0; i < 7; ++i)
            item.values.emplace_back(emotions[i], parse_value(fields[i + 2], item.id));
        for (std::size_t i = 9; i < 12; ++i) // contempt, unknown, NF
            if (parse_value(fields[i], item.id) > 0.0) ++dropped;
        items.push_back(std::move(item));
    }
    if (dropped)
        std::cerr << "note: dropped " << dropped
                  << " contempt/unknown/NF tallies (labels without an emotion class)\n";
    return items;
}

} // namespace

std::vector<AnnotatedItem> load_annotations(const std::string& path, Dataset dataset) {
    std::ifstream in(path);
    if (!in) throw Error("multimodal_kg/io", "cannot read " + path);
    return dataset == Dataset::Crema ? load_crema(in, path) : load_ferplus(in, path);
}

Graph transpose(const std::vector<AnnotatedItem>& items, Dataset dataset) {
    Graph g;
    g.prefixes().bind("rdf", ns::rdf);
    g.prefixes().bind("efo", ns::efo);
    g.prefixes().bind("be", ns::be);
    g.prefixes().bind("fer", ns::fer);
    g.prefixes().bind("cr", ns::cr);
    g.prefixes().bind("xsd", ns::xsd);

    const std::string& subject_ns = dataset == Dataset::Crema ? ns::cr : ns::fer;
    std::set<std::string> seen;
    for (const AnnotatedItem& item : items) {
        if (!seen.insert(item.id).second)
            throw Error("multimodal_kg/duplicate", "duplicate item id " + item.id);
        if (item.values.empty())
            throw Error("multimodal_kg/value", "item " + item.id + " has no emotion values");

        Term subject = Term::iri(subject_ns + item.id);
        g.insert(subject, vocab::rdf_type, vocab::efo_emotion_situation);
        for (const auto& [emotion, value] : item.values) {
            if (value < 0.0) throw Error("multimodal_kg/value", "negative value for item " + item.id);
            if (value == 0.0) continue;
            char lexical[32];
            std::snprintf(lexical, sizeof lexical, "%.1f", value);
            Term predicate = Term::iri(ns::fer + "has" + emotion.local_name() + "Value");
            g.insert(subject, predicate, Term::literal(lexical, ns::xsd + "float"));
            g.insert(subject, vocab::be_includes_signal_of, emotion);
        }
    }
    return g;
}

std::vector<std::string> query_multi_emotion(const Graph& graph,
                                             const std::vector<std::pair<Term, double>>& constraints) {
    std::vector<std::string> ids;
    for (const Triple& t :
         graph.match(std::nullopt, vocab::rdf_type, vocab::efo_emotion_situation)) {
        bool ok = true;
        for (const auto& [emotion, min_value] : constraints) {
            Term predicate = Term::iri(ns::fer + "has" + emotion.local_name() + "Value");
            auto value = graph.object_of(t.subject, predicate);
            double v = 0.0;
            if (!value || !value->is_literal()) {
                ok = false;
            } else {
                try {
                    v = std::stod(value->value);
                } catch (const std::exception&) {
                    ok = false;
                }
            }
            if (!ok || !(v > min_value)) {
                ok = false;
                break;
            }
        }
        if (ok) ids.push_back(t.subject.local_name());
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

} // namespace emoframe
