#include "emoframe/graph.hpp"

#include <algorithm>
#include <iostream>

namespace emoframe {

bool Graph::insert(Triple t) {
    auto [it, added] = triples_.insert(std::move(t));
    if (!added) return false;
    const Triple& stored = *it;
    by_subject_[stored.subject].push_back(stored);
    by_predicate_[stored.predicate].push_back(stored);
    by_object_[stored.object].push_back(stored);
    return true;
}

void Graph::index_remove(Index& index, const Term& key, const Triple& t) {
    auto it = index.find(key);
    if (it == index.end()) return;
    auto& vec = it->second;
    vec.erase(std::remove(vec.begin(), vec.end(), t), vec.end());
    if (vec.empty()) index.erase(it);
}

bool Graph::remove(const Triple& t) {
    if (triples_.erase(t) == 0) return false;
    index_remove(by_subject_, t.subject, t);
    index_remove(by_predicate_, t.predicate, t);
    index_remove(by_object_, t.object, t);
    return true;
}

namespace {

bool matches(const Triple& t, const std::optional<Term>& s, const std::optional<Term>& p,
             const std::optional<Term>& o) {
    return (!s || t.subject == *s) && (!p || t.predicate == *p) && (!o || t.object == *o);
}

} // namespace

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                 const std::optional<Term>& o, IndexChoice index) const {
    const Index* idx = nullptr;
    const Term* key = nullptr;
    std::size_t best_n = 0;

    auto consider = [&](const Index& candidate, const std::optional<Term>& bound) {
        if (!bound) return;
        auto it = candidate.find(*bound);
        std::size_t n = (it == candidate.end()) ? 0 : it->second.size();
        if (!idx || n < best_n) {
            idx = &candidate;
            key = &*bound;
            best_n = n;
        }
    };

    switch (index) {
    case IndexChoice::Subject:
        if (s) { idx = &by_subject_; key = &*s; }
        break;
    case IndexChoice::Predicate:
        if (p) { idx = &by_predicate_; key = &*p; }
        break;
    case IndexChoice::Object:
        if (o) { idx = &by_object_; key = &*o; }
        break;
    case IndexChoice::Auto:
        consider(by_subject_, s);
        consider(by_predicate_, p);
        consider(by_object_, o);
        break;
    }

    std::vector<Triple> result;
    if (idx) {
        auto it = idx->find(*key);
        if (it == idx->end()) return result;
        for (const Triple& t : it->second)
            if (matches(t, s, p, o)) result.push_back(t);
    } else {
        for (const Triple& t : triples_)
            if (matches(t, s, p, o)) result.push_back(t);
    }
    return result;
}

std::size_t Graph::count(const std::optional<Term>& s, const std::optional<Term>& p,
                         const std::optional<Term>& o) const {
    if (!s && !p && !o) return triples_.size();
    return match(s, p, o).size();
}

std::optional<Term> Graph::object_of(const Term& s, const Term& p) const {
    auto hits = match(s, p, std::nullopt);
    if (hits.empty()) return std::nullopt;
    return hits.front().object;
}

std::vector<Triple> Graph::sorted_triples() const {
    std::vector<Triple> all(triples_.begin(), triples_.end());
    std::sort(all.begin(), all.end());
    return all;
}

bool same_triples(const Graph& a, const Graph& b) {
    return a.triples() == b.triples();
}

namespace {

/// Collect the triples of `g` mentioning blank label `label`.
std::vector<Triple> blank_usage(const Graph& g, const std::string& label) {
    Term b = Term::blank(label);
    std::vector<Triple> usage = g.match(b, std::nullopt, std::nullopt);
    for (Triple& t : g.match(std::nullopt, std::nullopt, b)) {
        if (t.subject != b) usage.push_back(std::move(t));
    }
    return usage;
}

} // namespace

Graph merge(std::span<const Graph> graphs) {
    Graph out;
    std::size_t fresh = 0;
    for (const Graph& g : graphs) {
        // Prefix maps: identical bindings are fine, conflicts are rebound
        // with a warning.
        for (const auto& [prefix, ns] : g.prefixes().entries()) {
            auto existing = out.prefixes().ns(prefix);
            if (existing && *existing != ns)
                std::cerr << "warning: prefix '" << prefix << "' rebound from <" << *existing
                          << "> to <" << ns << ">\n";
            out.prefixes().bind(prefix, ns);
        }

        // Decide blank label renames before inserting anything from g.
        std::unordered_map<std::string, std::string> rename;
        std::unordered_set<std::string> seen;
        for (const Triple& t : g) {
            for (const Term* term : {&t.subject, &t.object}) {
                if (!term->is_blank() || !seen.insert(term->value).second) continue;
                auto usage = blank_usage(out, term->value);
                if (usage.empty()) continue; // label unused so far
                bool subset = true;
                for (const Triple& u : blank_usage(g, term->value))
                    if (!out.contains(u)) { subset = false; break; }
                if (subset) continue; // same node by content, keep the label
                std::string replacement;
                do {
                    replacement = "m" + std::to_string(fresh++);
                } while (!blank_usage(out, replacement).empty() || !blank_usage(g, replacement).empty());
                rename[term->value] = replacement;
            }
        }

        auto mapped = [&rename](const Term& t) {
            if (t.is_blank()) {
                auto it = rename.find(t.value);
                if (it != rename.end()) return Term::blank(it->second);
            }
            return t;
        };
        for (const Triple& t : g)
            out.insert(mapped(t.subject), t.predicate, mapped(t.object));
    }
    return out;
}

Graph merge(const Graph& a, const Graph& b) {
    const Graph graphs[] = {a, b};
    return merge(std::span<const Graph>(graphs, 2));
}

} // namespace emoframe
