#include "emoframe/prefixes.hpp"

#include <fstream>

#include "emoframe/errors.hpp"

namespace emoframe {

std::optional<std::string> PrefixMap::expand(const std::string& prefixed) const {
    auto colon = prefixed.find(':');
    if (colon == std::string::npos) return std::nullopt;
    auto it = map_.find(prefixed.substr(0, colon));
    if (it == map_.end()) return std::nullopt;
    return it->second + prefixed.substr(colon + 1);
}

std::optional<std::string> PrefixMap::shorten(const std::string& iri) const {
    const std::string* best_prefix = nullptr;
    const std::string* best_ns = nullptr;
    for (const auto& [prefix, ns] : map_) {
        if (ns.empty() || iri.size() < ns.size() || iri.compare(0, ns.size(), ns) != 0) continue;
        if (!best_ns || ns.size() > best_ns->size()) {
            best_prefix = &prefix;
            best_ns = &ns;
        }
    }
    if (!best_ns) return std::nullopt;
    return *best_prefix + ":" + iri.substr(best_ns->size());
}

PrefixMap load_prefix_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("rdf_core/io", "cannot open prefix manifest: " + path);
    PrefixMap map;
    std::string line;
    unsigned lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw Error("rdf_core/manifest",
                        path + ":" + std::to_string(lineno) + ": expected two tab-separated columns");
        map.bind(line.substr(0, tab), line.substr(tab + 1));
    }
    return map;
}

} // namespace emoframe
