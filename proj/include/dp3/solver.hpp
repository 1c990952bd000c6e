#pragma once

#include "dp3/signing.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace dp3 {

// Backtracking CSP for signed 3-coloring: bitmask domains, forward checking, MRV with
// lowest-id tie-break, colors tried in ascending order.
class ColoringProblem {
public:
    explicit ColoringProblem(int n) : adj_(n), dom_(n, 7) {}

    auto n() const -> int { return static_cast<int>(dom_.size()); }
    // Adds the constraint φ(v) ≠ s(φ(u)) (and its reverse form).
    void addArc(int u, int v, Perm s);
    void restrict(int v, unsigned mask) { dom_[v] &= static_cast<std::uint8_t>(mask); }
    void fix(int v, int c) { restrict(v, 1u << (c - 1)); }
    auto domain(int v) const -> unsigned { return dom_[v]; }

    auto solve() const -> std::optional<Coloring>;
    // Stops once `limit` solutions are seen.
    auto count(std::uint64_t limit = UINT64_MAX) const -> std::uint64_t;
    // Visits solutions in search order until the callback returns false.
    void forEach(const std::function<bool(const Coloring&)>& visit) const;

private:
    auto search(std::vector<std::uint8_t>& dom, Coloring& col,
                const std::function<bool(const Coloring&)>& visit) const -> bool;

    std::vector<std::vector<std::pair<int, Perm>>> adj_;  // (neighbor u, σ(v,u))
    std::vector<std::uint8_t> dom_;
};

// Constraint system of sg without its precoloring.
auto problemOf(const SignedPlaneGraph& sg) -> ColoringProblem;
// Same, with the precoloring (and `extra` where nonzero) fixed. Throws
// ImproperPrecoloring if the fixed colors already conflict.
auto problemWithPrecolor(const SignedPlaneGraph& sg, const Coloring& extra = {}) -> ColoringProblem;

auto solve(const SignedPlaneGraph& sg) -> std::optional<Coloring>;
auto count(const SignedPlaneGraph& sg) -> std::uint64_t;

struct BoundaryExtensionReport {
    int boundaryLength = 0;
    bool usedProvidedPrecolor = false;
    std::uint64_t boundaryColorings = 0;
    std::vector<Coloring> failures;  // boundary colorings with no extension
};
auto extendBoundary(const SignedPlaneGraph& sg) -> BoundaryExtensionReport;

// Frontier color tuples (ordered as `frontier`) that extend to a proper coloring of sg.
auto kernelColorings(const SignedPlaneGraph& sg, const std::vector<int>& frontier)
    -> std::vector<std::vector<int>>;
auto freeColorCount(const SignedPlaneGraph& sg, const Coloring& frontierColoring, int target) -> int;

} // namespace dp3
