#ifndef EMOFRAME_PREFIXES_HPP
#define EMOFRAME_PREFIXES_HPP

#include <map>
#include <optional>
#include <string>

namespace emoframe {

/// Prefix -> namespace IRI map with expansion and longest-match shortening.
class PrefixMap {
public:
    void bind(const std::string& prefix, const std::string& ns) { map_[prefix] = ns; }
    bool has(const std::string& prefix) const { return map_.count(prefix) != 0; }

    std::optional<std::string> ns(const std::string& prefix) const {
        auto it = map_.find(prefix);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    /// Expand "pre:local" to a full IRI; nullopt if the prefix is unbound.
    std::optional<std::string> expand(const std::string& prefixed) const;

    /// Shorten an IRI to "pre:local" using the longest matching namespace;
    /// nullopt if no namespace is a prefix of the IRI.
    std::optional<std::string> shorten(const std::string& iri) const;

    const std::map<std::string, std::string>& entries() const { return map_; }

    bool operator==(const PrefixMap&) const = default;

private:
    std::map<std::string, std::string> map_;
};

/// Load the bundled two-column (prefix TAB namespace) manifest file.
PrefixMap load_prefix_manifest(const std::string& path);

} // namespace emoframe

#endif
