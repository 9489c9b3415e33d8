#include "emoframe/ontology.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "emoframe/errors.hpp"
#include "emoframe/turtle.hpp"
#include "emoframe/vocab.hpp"

namespace emoframe {

namespace {

using AdjacencyMap = std::map<Term, std::set<Term>>;

AdjacencyMap edges_of(const Graph& g, const Term& predicate) {
    AdjacencyMap adj;
    for (const Triple& t : g.match(std::nullopt, predicate, std::nullopt))
        adj[t.subject].insert(t.object);
    return adj;
}

/// Transitive closure by memoized DFS; throws when a cycle is reachable.
AdjacencyMap transitive_closure(const AdjacencyMap& adj, const std::string& relation) {
    AdjacencyMap closed;
    std::map<Term, int> state; // 0 unvisited, 1 on stack, 2 done
    std::vector<Term> stack;

    std::function<void(const Term&)> visit = [&](const Term& node) {
        state[node] = 1;
        stack.push_back(node);
        auto it = adj.find(node);
        if (it != adj.end()) {
            for (const Term& next : it->second) {
                int s = state.count(next) ? state[next] : 0;
                if (s == 1) {
                    std::string cycle;
                    auto from = std::find(stack.begin(), stack.end(), next);
                    for (auto c = from; c != stack.end(); ++c)
                        cycle += c->local_name() + " -> ";
                    cycle += next.local_name();
                    throw Error("emo_ontology/cycle", "cycle in " + relation + ": " + cycle);
                }
                if (s == 0) visit(next);
                closed[node].insert(next);
                auto reach = closed.find(next);
                if (reach != closed.end())
                    closed[node].insert(reach->second.begin(), reach->second.end());
            }
        }
        stack.pop_back();
        state[node] = 2;
    };

    for (const auto& [node, _] : adj)
        if (!state.count(node) || state[node] == 0) visit(node);
    return closed;
}

std::string term_label(const Term& t, const PrefixMap& prefixes) {
    if (t.is_iri()) {
        auto s = prefixes.shorten(t.value);
        return s ? *s : t.value;
    }
    if (t.is_blank()) return "_:" + t.value;
    return '"' + t.value + '"';
}

} // namespace

Graph load_bundled_ontology(const std::string& assets_root, OntologyModule module) {
    auto load = [&](const std::string& name) {
        return parse_turtle_file(assets_root + "/ontology/" + name);
    };
    switch (module) {
    case OntologyModule::EmoCore:
        return load("emocore.ttl");
    case OntologyModule::BE:
        return load("be.ttl");
    case OntologyModule::All:
        return merge(load("emocore.ttl"), load("be.ttl"));
    }
    throw Error("emo_ontology/module", "unknown ontology module");
}

Graph infer_closures(const Graph& graph) {
    Graph out = graph;

    // subclass transitivity
    AdjacencyMap sub = edges_of(graph, vocab::rdfs_subclass_of);
    for (const auto& [node, reach] : transitive_closure(sub, "rdfs:subClassOf"))
        for (const Term& target : reach)
            out.insert(node, vocab::rdfs_subclass_of, target);

    // intensity: symmetrize from lessIntenseThan, close, complete inverses
    AdjacencyMap more = edges_of(graph, vocab::be_more_intense_than);
    for (const Triple& t : graph.match(std::nullopt, vocab::be_less_intense_than, std::nullopt))
        more[t.object].insert(t.subject);
    for (const auto& [node, reach] : transitive_closure(more, "be:moreIntenseThan")) {
        for (const Term& target : reach) {
            out.insert(node, vocab::be_more_intense_than, target);
            out.insert(target, vocab::be_less_intense_than, node);
        }
    }

    // polarity inheritance over the closed subclass relation
    AdjacencyMap polarity = edges_of(graph, vocab::be_has_polarity);
    for (const Triple& t : out.match(std::nullopt, vocab::rdfs_subclass_of, std::nullopt)) {
        auto it = polarity.find(t.object);
        if (it == polarity.end()) continue;
        for (const Term& p : it->second)
            out.insert(t.subject, vocab::be_has_polarity, p);
    }

    return out;
}

namespace {

void check_r1(const Graph& g, ConsistencyReport& report) {
    AdjacencyMap edges = edges_of(g, vocab::be_more_intense_than);
    for (const Triple& t : g.match(std::nullopt, vocab::be_less_intense_than, std::nullopt))
        edges[t.object].insert(t.subject);

    // One violation per strongly connected component with a cycle.
    std::map<Term, int> index, low;
    std::map<Term, bool> on_stack;
    std::vector<Term> stack;
    int counter = 0;

    std::function<void(const Term&)> strongconnect = [&](const Term& v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        auto it = edges.find(v);
        if (it != edges.end()) {
            for (const Term& w : it->second) {
                if (!index.count(w)) {
                    strongconnect(w);
                    low[v] = std::min(low[v], low[w]);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            }
        }
        if (low[v] == index[v]) {
            std::vector<Term> component;
            for (;;) {
                Term w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                component.push_back(w);
                if (w == v) break;
            }
            bool self_loop = edges.count(v) && edges.at(v).count(v);
            if (component.size() > 1 || self_loop) {
                Violation violation;
                violation.rule = "R1";
                std::sort(component.begin(), component.end());
                std::string names;
                for (const Term& c : component) {
                    if (!names.empty()) names += ", ";
                    names += c.local_name();
                    for (const Term& d : component)
                        if (edges.count(c) && edges.at(c).count(d))
                            violation.triples.push_back({c, vocab::be_more_intense_than, d});
                }
                violation.message = "intensity cycle among: " + names;
                report.violations.push_back(std::move(violation));
            }
        }
    };

    for (const auto& [node, _] : edges)
        if (!index.count(node)) strongconnect(node);
}

void check_r2(const Graph& g, ConsistencyReport& report) {
    auto check = [&](const Term& property, const Term& required, const char* kind) {
        for (const Triple& t : g.match(std::nullopt, property, std::nullopt)) {
            if (!g.contains(t.subject, vocab::be_has_polarity, required)) {
                report.violations.push_back(
                    {"R2", {t},
                     t.subject.local_name() + " carries " + std::string(kind) +
                         " but is not " + required.local_name()});
            }
        }
    };
    check(vocab::be_has_antidote, vocab::be_negative_polarity, "an antidote");
    check(vocab::be_has_impediment, vocab::be_positive_polarity, "an impediment");
}

void check_r3(const Graph& g, ConsistencyReport& report) {
    for (const Triple& t : g.match(std::nullopt, vocab::rdfs_subclass_of, vocab::be_emotion)) {
        auto polarities = g.match(t.subject, vocab::be_has_polarity, std::nullopt);
        if (polarities.size() != 1) {
            Violation v;
            v.rule = "R3";
            v.triples = polarities;
            if (v.triples.empty()) v.triples.push_back(t);
            v.message = t.subject.local_name() + " has " + std::to_string(polarities.size()) +
                        " polarities, expected exactly 1";
            report.violations.push_back(std::move(v));
        }
    }
}

void check_r4(const Graph& g, ConsistencyReport& report) {
    for (const Triple& t :
         g.match(std::nullopt, vocab::be_emotional_tendency_towards, std::nullopt)) {
        if (!g.contains(t.subject, vocab::rdf_type, vocab::be_psychopathology))
            report.violations.push_back(
                {"R4", {t}, t.subject.local_name() + " is not typed be:Psychopathology"});
        bool emotion_class = g.contains(t.object, vocab::rdfs_subclass_of, vocab::be_emotion) ||
                             g.contains(t.object, vocab::rdf_type, vocab::efo_emotion);
        if (!emotion_class)
            report.violations.push_back(
                {"R4", {t}, t.object.local_name() + " is not an emotion class"});
    }
}

void check_r5(const Graph& g, ConsistencyReport& report) {
    for (const Term& property : {vocab::be_has_antidote, vocab::be_has_impediment}) {
        for (const Triple& t : g.match(std::nullopt, property, std::nullopt)) {
            bool counter = false;
            for (const Triple& type : g.match(t.object, vocab::rdf_type, std::nullopt)) {
                if (type.object == vocab::be_emotion_counter ||
                    g.contains(type.object, vocab::rdfs_subclass_of, vocab::be_emotion_counter)) {
                    counter = true;
                    break;
                }
            }
            if (!counter)
                report.violations.push_back(
                    {"R5", {t}, t.object.local_name() + " is not typed be:EmotionCounter"});
        }
    }
}

} // namespace

ConsistencyReport check_consistency(const Graph& closure) {
    ConsistencyReport report;
    check_r1(closure, report);
    check_r2(closure, report);
    check_r3(closure, report);
    check_r4(closure, report);
    check_r5(closure, report);
    report.pass = report.violations.empty();
    return report;
}

std::string consistency_report_jsonl(const ConsistencyReport& report, const PrefixMap& prefixes) {
    std::ostringstream out;
    for (const Violation& v : report.violations) {
        nlohmann::json j;
        j["rule"] = v.rule;
        j["message"] = v.message;
        auto& triples = j["triples"] = nlohmann::json::array();
        for (const Triple& t : v.triples)
            triples.push_back({term_label(t.subject, prefixes), term_label(t.predicate, prefixes),
                               term_label(t.object, prefixes)});
        out << j.dump() << '\n';
    }
    return out.str();
}

EmotionFrame emotion_frame(const Graph& closure, const Term& emotion) {
    bool top = closure.contains(emotion, vocab::rdfs_subclass_of, vocab::be_emotion) &&
               closure.contains(emotion, vocab::rdf_type, vocab::efo_emotion);
    if (!top)
        throw Error("emo_ontology/frame",
                    term_label(emotion, closure.prefixes()) + " is not a BE emotion");

    EmotionFrame frame;
    frame.emotion = emotion;

    auto polarity = closure.object_of(emotion, vocab::be_has_polarity);
    if (!polarity) throw Error("emo_ontology/frame", emotion.local_name() + " has no polarity");
    if (*polarity == vocab::be_negative_polarity) frame.polarity = Polarity::Negative;
    else if (*polarity == vocab::be_positive_polarity) frame.polarity = Polarity::Positive;
    else frame.polarity = Polarity::Neutral;

    std::set<Term> subs;
    for (const Triple& t : closure.match(std::nullopt, vocab::rdfs_subclass_of, emotion))
        if (t.subject != emotion) subs.insert(t.subject);

    // Rank by how many frame members each sub-emotion precedes in the
    // intensity chain; the chain source (least intense) precedes them all.
    std::vector<std::pair<std::size_t, Term>> ranked;
    std::size_t pair_count = 0;
    for (const Term& s : subs) {
        std::size_t below = 0;
        for (const Triple& t : closure.match(s, vocab::be_more_intense_than, std::nullopt))
            if (subs.count(t.object)) ++below;
        pair_count += below;
        ranked.push_back({below, s});
    }
    std::size_t n = subs.size();
    if (pair_count != n * (n - 1) / 2)
        throw Error("emo_ontology/frame",
                    emotion.local_name() + ": intensity order is not a strict total order (" +
                        std::to_string(pair_count) + " pairs for " + std::to_string(n) +
                        " sub-emotions)");
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [_, s] : ranked) frame.sub_emotions.push_back(s);

    for (const Term& property : {vocab::be_has_antidote, vocab::be_has_impediment}) {
        if (frame.polarity == Polarity::Negative && property == vocab::be_has_impediment) continue;
        if (frame.polarity == Polarity::Positive && property == vocab::be_has_antidote) continue;
        for (const Term& s : frame.sub_emotions) {
            auto counter = closure.object_of(s, property);
            if (counter) frame.counters[s] = *counter;
        }
    }
    // frame invariant: no counter of the wrong flavour may exist at all
    for (const Term& s : frame.sub_emotions) {
        const Term& forbidden = frame.polarity == Polarity::Positive ? vocab::be_has_antidote
                                                                     : vocab::be_has_impediment;
        if (closure.object_of(s, forbidden))
            throw Error("emo_ontology/frame",
                        s.local_name() + " carries a counter incompatible with the frame polarity");
    }

    for (const Triple& t :
         closure.match(std::nullopt, vocab::be_emotional_tendency_towards, emotion))
        frame.psychopathologies.push_back(t.subject);
    std::sort(frame.psychopathologies.begin(), frame.psychopathologies.end());

    frame.personality_trait = closure.object_of(emotion, vocab::be_has_personality_trait);
    return frame;
}

ResultTable answer_cq(const Graph& closure, int cq, const std::string& assets_root,
                      const std::optional<Term>& argument) {
    if (cq < 1 || cq > 5) throw Error("emo_ontology/cq", "unknown CQ number " + std::to_string(cq));
    if (cq == 5 && !argument)
        throw Error("emo_ontology/cq", "CQ5 requires an emotion frame argument");

    QueryAST query = parse_query_file(assets_root + "/queries/cq" + std::to_string(cq) + ".rq");
    Binding initial;
    if (cq == 3 && argument) initial["emotion"] = *argument;
    if (cq == 5) initial["frame"] = *argument;
    return evaluate(query, closure, initial);
}

} // namespace emoframe
