#include "emoframe/triggers.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "emoframe/errors.hpp"
#include "emoframe/turtle.hpp"
#include "emoframe/vocab.hpp"

namespace emoframe {

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

bool has_unit(const std::vector<std::string>& units, const std::string& s) {
    return std::binary_search(units.begin(), units.end(), lower(s));
}

const std::map<std::string, SourceResource>& source_table() {
    static const std::map<std::string, SourceResource> table = {
        {ns::fscore, SourceResource::Framenet}, {ns::fe, SourceResource::FrameElement},
        {ns::wn, SourceResource::Wordnet},      {ns::vn, SourceResource::Verbnet},
        {ns::pb, SourceResource::Propbank},     {ns::cn, SourceResource::Conceptnet},
        {ns::wikt, SourceResource::Wiktionary}, {ns::wd, SourceResource::Wikidata},
        {ns::dbp, SourceResource::Dbpedia},     {ns::babel, SourceResource::Babelnet},
        {ns::umbel, SourceResource::Umbel},     {ns::yago, SourceResource::Yago},
        {ns::premon, SourceResource::Premon},
    };
    return table;
}

std::vector<Triple> sorted(std::vector<Triple> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

std::string to_string(SourceResource source) {
    switch (source) {
    case SourceResource::Framenet: return "framenet";
    case SourceResource::FrameElement: return "frame_element";
    case SourceResource::Wordnet: return "wordnet";
    case SourceResource::Verbnet: return "verbnet";
    case SourceResource::Propbank: return "propbank";
    case SourceResource::Conceptnet: return "conceptnet";
    case SourceResource::Wiktionary: return "wiktionary";
    case SourceResource::Wikidata: return "wikidata";
    case SourceResource::Dbpedia: return "dbpedia";
    case SourceResource::Babelnet: return "babelnet";
    case SourceResource::Umbel: return "umbel";
    case SourceResource::Yago: return "yago";
    case SourceResource::Premon: return "premon";
    }
    return "unknown";
}

std::string to_string(ExpansionStep step) {
    switch (step) {
    case ExpansionStep::Frame: return "frame";
    case ExpansionStep::FrameElement: return "frame_element";
    case ExpansionStep::Lexical: return "lexical";
    case ExpansionStep::CloseMatch: return "close_match";
    case ExpansionStep::Concept: return "conceptnet";
    }
    return "unknown";
}

SourceResource source_of(const Term& entity) {
    for (const auto& [prefix, source] : source_table())
        if (entity.value.rfind(prefix, 0) == 0) return source;
    throw Error("trigger_builder/source", "entity " + entity.value + " is in no known resource namespace");
}

StartingLexicalMaterial starting_lexical_material(const Graph& closure, const Term& emotion) {
    EmotionFrame frame = emotion_frame(closure, emotion);
    StartingLexicalMaterial slm;
    slm.emotion = emotion;
    slm.units.push_back(lower(emotion.local_name()));
    for (const Term& sub : frame.sub_emotions) slm.units.push_back(lower(sub.local_name()));
    std::sort(slm.units.begin(), slm.units.end());
    slm.units.erase(std::unique(slm.units.begin(), slm.units.end()), slm.units.end());
    return slm;
}

Graph load_snapshot(const std::string& assets_root, const std::string& name) {
    Graph g = parse_turtle_file(assets_root + "/snapshots/" + name + ".ttl");
    static const std::set<Term> schema = {vocab::sn_has_lexical_unit, vocab::sn_has_frame_element,
                                          vocab::sn_subsumes, vocab::sn_close_match, vocab::sn_has_label};
    for (const Triple& t : g)
        if (!schema.count(t.predicate))
            throw Error("trigger_builder/schema",
                        "snapshot predicate " + t.predicate.value + " is outside the snapshot schema");
    return g;
}

std::vector<TriggerRecord> expand(const StartingLexicalMaterial& slm, const Graph& snapshot) {
    if (slm.units.empty()) throw Error("trigger_builder/slm", "empty starting lexical material");
    if (snapshot.empty()) {
        std::cerr << "warning: empty snapshot for " << slm.emotion.value << ", no triggers expanded\n";
        return {};
    }

    std::set<std::tuple<Term, Term, SourceResource>> seen;
    std::vector<TriggerRecord> records;
    auto emit = [&](Term trigger, ExpansionStep step, std::string unit) {
        SourceResource source = source_of(trigger);
        if (!seen.insert({trigger, slm.emotion, source}).second) return;
        records.push_back({std::move(trigger), slm.emotion, source, step, std::move(unit)});
    };

    // Step 1: frames whose lexical units match a seed unit. Each frame
    // remembers its lexicographically least matching unit.
    std::map<Term, std::string> frames;
    for (const Triple& t : sorted(snapshot.match(std::nullopt, vocab::sn_has_lexical_unit, std::nullopt))) {
        if (!t.object.is_literal() || !has_unit(slm.units, t.object.value)) continue;
        std::string unit = lower(t.object.value);
        auto [it, inserted] = frames.emplace(t.subject, unit);
        if (!inserted && unit < it->second) it->second = unit;
    }
    for (const auto& [frame, unit] : frames) emit(frame, ExpansionStep::Frame, unit);

    // Step 2: elements of the step-1 frames.
    for (const auto& [frame, unit] : frames)
        for (const Triple& t : sorted(snapshot.match(frame, vocab::sn_has_frame_element, std::nullopt)))
            emit(t.object, ExpansionStep::FrameElement, unit);

    // Step 3: lexical entities subsumed by the extracted frames.
    for (const auto& [frame, unit] : frames)
        for (const Triple& t : sorted(snapshot.match(frame, vocab::sn_subsumes, std::nullopt)))
            emit(t.object, ExpansionStep::Lexical, unit);

    // Step 4: close matches of the extracted frames.
    for (const auto& [frame, unit] : frames)
        for (const Triple& t : sorted(snapshot.match(frame, vocab::sn_close_match, std::nullopt)))
            emit(t.object, ExpansionStep::CloseMatch, unit);

    // Step 5: concepts labelled by an intensity-degree unit.
    for (const Triple& t : sorted(snapshot.match(std::nullopt, vocab::sn_has_label, std::nullopt)))
        if (t.object.is_literal() && has_unit(slm.units, t.object.value))
            emit(t.subject, ExpansionStep::Concept, lower(t.object.value));

    std::sort(records.begin(), records.end());
    return records;
}

Graph materialize(const std::vector<TriggerRecord>& records) {
    Graph g;
    g.prefixes().bind("rdf", ns::rdf);
    g.prefixes().bind("rdfs", ns::rdfs);
    g.prefixes().bind("efo", ns::efo);
    g.prefixes().bind("be", ns::be);
    g.prefixes().bind("sn", ns::sn);
    g.prefixes().bind("fscore", ns::fscore);
    g.prefixes().bind("fe", ns::fe);
    g.prefixes().bind("wn", ns::wn);
    g.prefixes().bind("vn", ns::vn);
    g.prefixes().bind("cn", ns::cn);
    g.prefixes().bind("pb", ns::pb);
    g.prefixes().bind("yago", ns::yago);
    g.prefixes().bind("premon", ns::premon);
    g.prefixes().bind("babel", ns::babel);
    g.prefixes().bind("wd", ns::wd);
    g.prefixes().bind("wikt", ns::wikt);
    g.prefixes().bind("dbp", ns::dbp);
    g.prefixes().bind("umbel", ns::umbel);

    std::vector<TriggerRecord> sorted_records = records;
    std::sort(sorted_records.begin(), sorted_records.end());

    std::size_t n = 0;
    for (const TriggerRecord& r : sorted_records) {
        g.insert(r.trigger, vocab::efo_triggers, r.emotion);

        Term prov = Term::blank("prov" + std::to_string(n++));
        g.insert(prov, vocab::rdf_type, vocab::rdf_statement);
        g.insert(prov, vocab::rdf_subject, r.trigger);
        g.insert(prov, vocab::rdf_predicate, vocab::efo_triggers);
        g.insert(prov, vocab::rdf_object, r.emotion);
        g.insert(prov, vocab::sn_source_resource, Term::literal(to_string(r.source)));
        g.insert(prov, vocab::sn_expansion_step, Term::literal(to_string(r.step)));
        g.insert(prov, vocab::sn_matched_unit, Term::literal(r.matched_unit));

        if (r.step == ExpansionStep::Frame || r.step == ExpansionStep::Concept)
            g.insert(r.trigger, vocab::rdfs_label, Term::literal(r.matched_unit));
        if (r.step == ExpansionStep::FrameElement)
            g.insert(r.emotion, vocab::efo_has_frame_element, r.trigger);
    }
    return g;
}

namespace {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string url_encode(const std::string& s) {
    std::string out;
    for (unsigned char c : s) {
        if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
            out += static_cast<char>(c);
        } else {
            char buf[4];
            std::snprintf(buf, sizeof buf, "%%%02X", c);
            out += buf;
        }
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("trigger_builder/io", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_atomic(const std::string& path, const std::string& body) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw Error("trigger_builder/io", "cannot write " + tmp);
        out << body;
    }
    std::filesystem::rename(tmp, path);
}

std::string substitute(std::string text, const std::string& marker, const std::string& value) {
    for (std::string::size_type pos; (pos = text.find(marker)) != std::string::npos;)
        text.replace(pos, marker.size(), value);
    return text;
}

Term binding_term(const nlohmann::json& b) {
    const std::string type = b.at("type").get<std::string>();
    const std::string value = b.at("value").get<std::string>();
    if (type == "uri") return Term::iri(value);
    if (type == "literal" || type == "typed-literal")
        return Term::literal(value, b.value("datatype", std::string{}), b.value("xml:lang", std::string{}));
    throw Error("trigger_builder/protocol", "unsupported binding type: " + type);
}

} // namespace

Graph fetch_remote(const std::string& endpoint, const Term& emotion,
                   const StartingLexicalMaterial& slm, std::chrono::milliseconds timeout,
                   const std::string& assets_root, const std::string& cache_dir,
                   std::size_t* network_requests) {
    auto scheme_end = endpoint.find("://");
    if (scheme_end == std::string::npos)
        throw Error("trigger_builder/endpoint", "endpoint URL has no scheme: " + endpoint);
    auto path_start = endpoint.find('/', scheme_end + 3);
    std::string base = path_start == std::string::npos ? endpoint : endpoint.substr(0, path_start);
    std::string path = path_start == std::string::npos ? "/" : endpoint.substr(path_start);

    std::filesystem::create_directories(cache_dir);
    std::size_t cache_hits = 0, issued = 0;

    auto run_query = [&](const std::string& query) -> nlohmann::json {
        std::string key = hex64(fnv1a64(endpoint + '\n' + emotion.value + '\n' + query));
        std::string cache_path = cache_dir + "/" + key + ".json";
        std::string body;
        if (std::filesystem::exists(cache_path)) {
            body = read_file(cache_path);
            ++cache_hits;
        } else {
            httplib::Client client(base);
            client.set_connection_timeout(0, static_cast<time_t>(timeout.count()) * 1000);
            client.set_read_timeout(0, static_cast<time_t>(timeout.count()) * 1000);
            httplib::Headers headers = {{"Accept", "application/sparql-results+json"}};
            auto res = client.Get(path + "?query=" + url_encode(query), headers);
            ++issued;
            if (network_requests) ++(*network_requests);
            if (!res)
                throw Error("trigger_builder/network",
                            "endpoint " + endpoint + " unreachable (" + std::to_string(cache_hits) +
                                " of " + std::to_string(cache_hits + issued) + " queries served from cache)");
            if (res->status != 200)
                throw Error("trigger_builder/protocol",
                            "endpoint returned HTTP " + std::to_string(res->status));
            body = res->body;
            write_atomic(cache_path, body);
        }
        nlohmann::json json = nlohmann::json::parse(body, nullptr, false);
        if (json.is_discarded() || !json.contains("results"))
            throw Error("trigger_builder/protocol", "malformed SPARQL results document");
        return json;
    };

    auto load_template = [&](const std::string& name) {
        return read_file(assets_root + "/queries/expansion/" + name);
    };

    std::string units;
    for (const std::string& u : slm.units) {
        if (!units.empty()) units += ' ';
        units += '"' + u + '"';
    }

    Graph snapshot;
    snapshot.prefixes().bind("sn", ns::sn);

    auto collect = [&](const nlohmann::json& json, const char* v1, const char* v2, const Term& pred) {
        for (const auto& row : json.at("results").at("bindings")) {
            if (!row.contains(v1) || !row.contains(v2)) continue;
            snapshot.insert(binding_term(row.at(v1)), pred, binding_term(row.at(v2)));
        }
    };

    auto step1 = run_query(substitute(load_template("step1_frames.rq"), "%UNITS%", units));
    collect(step1, "frame", "unit", vocab::sn_has_lexical_unit);

    std::set<Term> frame_set;
    for (const Triple& t : snapshot.match(std::nullopt, vocab::sn_has_lexical_unit, std::nullopt))
        frame_set.insert(t.subject);
    std::string frames;
    for (const Term& f : frame_set) {
        if (!frames.empty()) frames += ' ';
        frames += '<' + f.value + '>';
    }

    if (!frame_set.empty()) {
        collect(run_query(substitute(load_template("step2_frame_elements.rq"), "%FRAMES%", frames)),
                "frame", "element", vocab::sn_has_frame_element);
        collect(run_query(substitute(load_template("step3_lexical.rq"), "%FRAMES%", frames)),
                "frame", "entity", vocab::sn_subsumes);
        collect(run_query(substitute(load_template("step4_close_match.rq"), "%FRAMES%", frames)),
                "frame", "match", vocab::sn_close_match);
    }
    collect(run_query(substitute(load_template("step5_concepts.rq"), "%UNITS%", units)),
            "concept", "label", vocab::sn_has_label);

    return snapshot;
}

} // namespace emoframe
