#include "dp3/perm.hpp"

namespace dp3 {

auto toWord(Perm p) -> std::string {
    std::string s(3, '0');
    for (int c = 1; c <= 3; ++c) s[c - 1] = static_cast<char>('0' + apply(p, c));
    return s;
}

auto parsePerm(std::string_view word) -> std::optional<Perm> {
    if (word.size() != 3) return std::nullopt;
    for (Perm p : kAllPerms)
        if (toWord(p) == word) return p;
    return std::nullopt;
}

} // namespace dp3
