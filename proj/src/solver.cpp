#include "dp3/solver.hpp"

#include "dp3/errors.hpp"

#include <bit>
#include <string>

namespace dp3 {

void ColoringProblem::addArc(int u, int v, Perm s) {
    adj_[u].push_back({v, s});
    adj_[v].push_back({u, invert(s)});
}

auto ColoringProblem::search(std::vector<std::uint8_t>& dom, Coloring& col,
                             const std::function<bool(const Coloring&)>& visit) const -> bool {
    int best = -1, bestSize = 4;
    for (int v = 0; v < n(); ++v) {
        if (col[v] != 0) continue;
        int s = std::popcount(static_cast<unsigned>(dom[v]));
        if (s < bestSize) {
            best = v;
            bestSize = s;
            if (s <= 1) break;
        }
    }
    if (best < 0) return visit(col);
    if (bestSize == 0) return true;
    for (int c = 1; c <= 3; ++c) {
        if (!(dom[best] & (1u << (c - 1)))) continue;
        std::vector<std::uint8_t> next = dom;
        bool dead = false;
        for (auto [u, s] : adj_[best]) {
            if (col[u] != 0) continue;
            next[u] &= static_cast<std::uint8_t>(~(1u << (apply(s, c) - 1)));
            if (next[u] == 0) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        col[best] = c;
        bool go = search(next, col, visit);
        col[best] = 0;
        if (!go) return false;
    }
    return true;
}

void ColoringProblem::forEach(const std::function<bool(const Coloring&)>& visit) const {
    std::vector<std::uint8_t> dom = dom_;
    for (auto d : dom)
        if (d == 0) return;
    Coloring col(n(), 0);
    search(dom, col, visit);
}

auto ColoringProblem::solve() const -> std::optional<Coloring> {
    std::optional<Coloring> out;
    forEach([&](const Coloring& c) {
        out = c;
        return false;
    });
    return out;
}

auto ColoringProblem::count(std::uint64_t limit) const -> std::uint64_t {
    std::uint64_t k = 0;
    forEach([&](const Coloring&) { return ++k < limit; });
    return k;
}

auto problemOf(const SignedPlaneGraph& sg) -> ColoringProblem {
    ColoringProblem p(sg.n());
    for (int e = 0; e < sg.graph.m(); ++e) {
        auto [u, v] = sg.graph.edge(e);
        p.addArc(u, v, sg.sig[e]);
    }
    return p;
}

auto problemWithPrecolor(const SignedPlaneGraph& sg, const Coloring& extra) -> ColoringProblem {
    Coloring fixed = sg.precolor;
    fixed.resize(sg.n(), 0);
    for (std::size_t v = 0; v < extra.size(); ++v) {
        if (extra[v] == 0) continue;
        if (fixed[v] != 0 && fixed[v] != extra[v])
            throw ImproperPrecoloring("vertex " + std::to_string(v) + " fixed to two colors");
        fixed[v] = extra[v];
    }
    for (int v = 0; v < sg.n(); ++v)
        if (fixed[v] < 0 || fixed[v] > 3)
            throw ImproperPrecoloring("vertex " + std::to_string(v) + " has color " + std::to_string(fixed[v]));
    auto bad = violations(sg, fixed);
    if (!bad.empty())
        throw ImproperPrecoloring("edge " + std::to_string(bad[0][0]) + "-" + std::to_string(bad[0][1]) +
                                  " violated by the precoloring");
    ColoringProblem p = problemOf(sg);
    for (int v = 0; v < sg.n(); ++v)
        if (fixed[v] != 0) p.fix(v, fixed[v]);
    return p;
}

auto solve(const SignedPlaneGraph& sg) -> std::optional<Coloring> { return problemWithPrecolor(sg).solve(); }

auto count(const SignedPlaneGraph& sg) -> std::uint64_t { return problemWithPrecolor(sg).count(); }

auto extendBoundary(const SignedPlaneGraph& sg) -> BoundaryExtensionReport {
    const auto& g = sg.graph;
    BoundaryExtensionReport r;
    r.boundaryLength = g.face(g.outerFace()).length();
    if (r.boundaryLength > 12)
        throw BoundaryTooLong("d(f0) = " + std::to_string(r.boundaryLength));
    if (!inClassG(g)) throw NotInScriptG("graph has a 4-, 6- or 8-cycle");
    ColoringProblem full = problemOf(sg);
    auto tryExtend = [&](const Coloring& phi0) {
        ++r.boundaryColorings;
        ColoringProblem p = full;
        for (int v = 0; v < sg.n(); ++v)
            if (phi0[v] != 0) p.fix(v, phi0[v]);
        if (!p.solve()) r.failures.push_back(phi0);
    };
    bool any = false;
    for (int c : sg.precolor) any = any || c != 0;
    if (any) {
        r.usedProvidedPrecolor = true;
        problemWithPrecolor(sg);  // validates
    }
    // Enumerate proper colorings of G[V(f0)] that agree with the precoloring.
    std::vector<bool> onB(g.n(), false);
    for (int v : g.face(g.outerFace()).walk) onB[v] = true;
    std::vector<int> bverts;
    std::vector<int> local(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        if (onB[v]) {
            local[v] = static_cast<int>(bverts.size());
            bverts.push_back(v);
        }
    ColoringProblem bp(static_cast<int>(bverts.size()));
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edge(e);
        if (onB[u] && onB[v]) bp.addArc(local[u], local[v], sg.sig[e]);
    }
    for (std::size_t i = 0; i < bverts.size(); ++i)
        if (sg.precolor[bverts[i]]) bp.fix(static_cast<int>(i), sg.precolor[bverts[i]]);
    bp.forEach([&](const Coloring& bc) {
        Coloring phi0 = sg.precolor;
        phi0.resize(g.n(), 0);
        for (std::size_t i = 0; i < bverts.size(); ++i) phi0[bverts[i]] = bc[i];
        tryExtend(phi0);
        return true;
    });
    return r;
}

auto kernelColorings(const SignedPlaneGraph& sg, const std::vector<int>& frontier)
    -> std::vector<std::vector<int>> {
    std::vector<std::vector<int>> out;
    ColoringProblem base = problemWithPrecolor(sg);
    std::size_t k = frontier.size();
    std::vector<int> tuple(k, 1);
    while (true) {
        ColoringProblem p = base;
        for (std::size_t i = 0; i < k; ++i) p.fix(frontier[i], tuple[i]);
        if (p.solve()) out.push_back(tuple);
        std::size_t i = k;
        while (i > 0 && tuple[i - 1] == 3) tuple[--i] = 1;
        if (i == 0) break;
        ++tuple[i - 1];
    }
    return out;
}

auto freeColorCount(const SignedPlaneGraph& sg, const Coloring& frontierColoring, int target) -> int {
    int free = 0;
    for (int c = 1; c <= 3; ++c) {
        Coloring extra = frontierColoring;
        extra.resize(sg.n(), 0);
        extra[target] = c;
        try {
            if (problemWithPrecolor(sg, extra).solve()) ++free;
        } catch (const ImproperPrecoloring&) {
        }
    }
    return free;
}

} // namespace dp3
