#include "emoframe/term.hpp"

namespace emoframe {

std::string Term::local_name() const {
    auto pos = value.find_last_of("#/");
    if (pos == std::string::npos) return value;
    return value.substr(pos + 1);
}

} // namespace emoframe
