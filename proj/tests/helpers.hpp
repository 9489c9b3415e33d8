#ifndef EMOFRAME_TESTS_HELPERS_HPP
#define EMOFRAME_TESTS_HELPERS_HPP

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "emoframe/graph.hpp"

namespace emoframe::testing {

inline std::string assets_root() {
    if (const char* env = std::getenv("EMOFRAME_ASSETS")) return env;
    return "assets";
}

inline Term random_term(std::mt19937& rng, bool allow_literal) {
    std::uniform_int_distribution<int> pick(0, allow_literal ? 2 : 0);
    std::uniform_int_distribution<int> id(0, 19);
    switch (pick(rng)) {
    case 1: return Term::literal("lit" + std::to_string(id(rng)));
    case 2: return Term::blank("b" + std::to_string(id(rng)));
    default: return Term::iri("http://example.org/t" + std::to_string(id(rng)));
    }
}

inline Triple random_triple(std::mt19937& rng) {
    return Triple{random_term(rng, false),
                  Term::iri("http://example.org/p" + std::to_string(rng() % 8)),
                  random_term(rng, true)};
}

inline Graph random_graph(std::mt19937& rng, std::size_t max_triples) {
    Graph g;
    std::uniform_int_distribution<std::size_t> count(0, max_triples);
    std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) g.insert(random_triple(rng));
    return g;
}

/// Index-free reference implementation of Graph::match.
inline std::vector<Triple> scan_match(const Graph& g, const std::optional<Term>& s,
                                      const std::optional<Term>& p, const std::optional<Term>& o) {
    std::vector<Triple> out;
    for (const Triple& t : g)
        if ((!s || t.subject == *s) && (!p || t.predicate == *p) && (!o || t.object == *o))
            out.push_back(t);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace emoframe::testing

#endif
