#pragma once

#include "dp3/plane_graph.hpp"
#include "dp3/signing.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace fx {

using Pts = std::vector<std::array<double, 2>>;
using Edges = std::vector<std::array<int, 2>>;

inline auto ring(int n, double r = 1.0, double phase = 0.0) -> Pts {
    Pts p;
    for (int i = 0; i < n; ++i) {
        double a = phase + 2 * std::numbers::pi * i / n;
        p.push_back({r * std::cos(a), r * std::sin(a)});
    }
    return p;
}

inline auto cycleEdges(int n, int offset = 0) -> Edges {
    Edges e;
    for (int i = 0; i < n; ++i) e.push_back({offset + i, offset + (i + 1) % n});
    return e;
}

inline auto cycle(int n) -> dp3::PlaneGraph { return dp3::fromDrawing(ring(n), cycleEdges(n)); }

inline auto k4() -> dp3::PlaneGraph {
    Pts p = ring(3);
    p.push_back({0, 0});
    Edges e = cycleEdges(3);
    for (int i = 0; i < 3; ++i) e.push_back({i, 3});
    return dp3::fromDrawing(p, e);
}

// Oracle: simple cycles as edge subsets (every vertex degree 0 or 2, connected).
inline auto bruteCycleCount(const dp3::PlaneGraph& g, int maxLen) -> int {
    int m = g.m();
    int count = 0;
    for (long mask = 1; mask < (1L << m); ++mask) {
        int k = __builtin_popcountl(mask);
        if (k < 3 || k > maxLen) continue;
        std::vector<int> deg(g.n(), 0);
        std::vector<std::vector<int>> adj(g.n());
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) {
                auto [a, b] = g.edge(e);
                ++deg[a];
                ++deg[b];
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
        bool ok = true;
        int start = -1, verts = 0;
        for (int v = 0; v < g.n(); ++v) {
            if (deg[v] != 0 && deg[v] != 2) ok = false;
            if (deg[v] == 2) {
                start = v;
                ++verts;
            }
        }
        if (!ok) continue;
        int prev = -1, cur = start, len = 0;
        do {
            int nx = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nx;
            ++len;
        } while (cur != start);
        if (len == verts) ++count;
    }
    return count;
}

// Oracle: enumerate all 3^n total colorings.
inline auto bruteCount(const dp3::SignedPlaneGraph& sg) -> long {
    int n = sg.n();
    std::vector<int> phi(n, 1);
    long c = 0;
    while (true) {
        bool okPre = true;
        for (int v = 0; v < n; ++v)
            if (sg.precolor[v] != 0 && sg.precolor[v] != phi[v]) okPre = false;
        if (okPre && dp3::isProper(sg, phi)) ++c;
        int i = 0;
        while (i < n && phi[i] == 3) phi[i++] = 1;
        if (i == n) break;
        ++phi[i];
    }
    return c;
}

// Ray-casting point-in-polygon oracle for straight-line drawings.
inline auto inside(const Pts& pts, const std::vector<int>& poly, std::array<double, 2> q) -> bool {
    bool in = false;
    int k = static_cast<int>(poly.size());
    for (int i = 0, j = k - 1; i < k; j = i++) {
        auto a = pts[poly[i]], b = pts[poly[j]];
        if ((a[1] > q[1]) != (b[1] > q[1]) && q[0] < (b[0] - a[0]) * (q[1] - a[1]) / (b[1] - a[1]) + a[0])
            in = !in;
    }
    return in;
}

} // namespace fx
