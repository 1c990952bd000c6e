#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dp3 {

// A permutation of {1,2,3}, one of six values named by its image word
// (σ(1),σ(2),σ(3)).
enum class Perm : std::uint8_t { P123, P132, P213, P231, P312, P321 };

inline constexpr std::array<Perm, 6> kAllPerms{Perm::P123, Perm::P132, Perm::P213,
                                              Perm::P231, Perm::P312, Perm::P321};
inline constexpr Perm kId = Perm::P123;

namespace detail {
inline constexpr std::uint8_t kImage[6][3] = {
    {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
}

// Color in 1..3 mapped through p.
constexpr auto apply(Perm p, int c) -> int {
    return detail::kImage[static_cast<int>(p)][c - 1];
}

constexpr auto fromImage(int a, int b, int c) -> Perm {
    for (Perm p : kAllPerms)
        if (apply(p, 1) == a && apply(p, 2) == b && apply(p, 3) == c) return p;
    return kId;
}

namespace detail {
constexpr auto composeSlow(Perm p, Perm q) -> Perm {
    return fromImage(apply(p, apply(q, 1)), apply(p, apply(q, 2)), apply(p, apply(q, 3)));
}
inline constexpr auto kCompose = [] {
    std::array<std::array<Perm, 6>, 6> t{};
    for (Perm p : kAllPerms)
        for (Perm q : kAllPerms) t[static_cast<int>(p)][static_cast<int>(q)] = composeSlow(p, q);
    return t;
}();
inline constexpr auto kInverse = [] {
    std::array<Perm, 6> t{};
    for (Perm p : kAllPerms)
        for (Perm q : kAllPerms)
            if (composeSlow(p, q) == kId) t[static_cast<int>(p)] = q;
    return t;
}();
} // namespace detail

// compose(p, q) = p ∘ q: q is applied first.
constexpr auto compose(Perm p, Perm q) -> Perm {
    return detail::kCompose[static_cast<int>(p)][static_cast<int>(q)];
}

constexpr auto invert(Perm p) -> Perm { return detail::kInverse[static_cast<int>(p)]; }

auto toWord(Perm p) -> std::string;
auto parsePerm(std::string_view word) -> std::optional<Perm>;

} // namespace dp3
