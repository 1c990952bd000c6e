#include "dp3/plane_graph.hpp"

#include "dp3/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <queue>
#include <string>

namespace dp3 {

PlaneGraph::PlaneGraph(std::vector<std::vector<int>> rotation, int outerTail, int outerHead)
    : rot_(std::move(rotation)) {
    int nn = n();
    if (nn <= 2) throw DegenerateGraph("need at least 3 vertices, got " + std::to_string(nn));
    if (outerTail < 0 || outerTail >= nn || outerHead < 0 || outerHead >= nn)
        throw InvalidRotation("outer dart out of range");
    build(-1);
    int d = dart(outerTail, outerHead);
    if (d < 0)
        throw InvalidRotation("outer dart " + std::to_string(outerTail) + "->" +
                              std::to_string(outerHead) + " is not an edge");
    outer_ = dartFace_[d];
    external_.assign(nn, false);
    for (int v : faces_[outer_].walk) external_[v] = true;
}

auto PlaneGraph::withOuterWalk(std::vector<std::vector<int>> rotation, const std::vector<int>& outerWalk)
    -> PlaneGraph {
    if (outerWalk.size() < 2) throw InvalidRotation("outer walk needs at least two vertices");
    PlaneGraph g(std::move(rotation), outerWalk[0], outerWalk[1]);
    const auto& w = g.faces_[g.outer_].walk;
    bool ok = false;
    if (w.size() == outerWalk.size()) {
        for (std::size_t s = 0; s < w.size() && !ok; ++s) {
            bool all = true;
            for (std::size_t i = 0; i < w.size() && all; ++i)
                all = w[(s + i) % w.size()] == outerWalk[i];
            ok = all;
        }
    }
    if (!ok) throw InvalidRotation("outer walk does not match a traced face");
    return g;
}

void PlaneGraph::build(int) {
    int nn = n();
    for (int v = 0; v < nn; ++v) {
        std::vector<int> seen;
        for (int u : rot_[v]) {
            if (u < 0 || u >= nn)
                throw InvalidRotation("vertex " + std::to_string(v) + " lists out-of-range neighbor " +
                                      std::to_string(u));
            if (u == v) throw InvalidRotation("loop at vertex " + std::to_string(v));
            if (std::find(seen.begin(), seen.end(), u) != seen.end())
                throw InvalidRotation("multi-edge " + std::to_string(v) + "-" + std::to_string(u));
            seen.push_back(u);
        }
    }
    edges_.clear();
    incEdge_.assign(nn, {});
    for (int v = 0; v < nn; ++v) incEdge_[v].assign(rot_[v].size(), -1);
    for (int v = 0; v < nn; ++v) {
        for (std::size_t i = 0; i < rot_[v].size(); ++i) {
            int u = rot_[v][i];
            auto it = std::find(rot_[u].begin(), rot_[u].end(), v);
            if (it == rot_[u].end())
                throw InvalidRotation("edge " + std::to_string(v) + "-" + std::to_string(u) +
                                      " missing from rotation of " + std::to_string(u));
            if (v < u) {
                int e = static_cast<int>(edges_.size());
                edges_.push_back({v, u});
                incEdge_[v][i] = e;
                incEdge_[u][it - rot_[u].begin()] = e;
            }
        }
    }
    std::vector<bool> seen(nn, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : rot_[v])
            if (!seen[u]) {
                seen[u] = true;
                ++cnt;
                stack.push_back(u);
            }
    }
    if (cnt != nn) throw Disconnected("graph has " + std::to_string(nn - cnt) + " unreachable vertices");

    faces_.clear();
    dartFace_.assign(2 * edges_.size(), -1);
    for (int d0 = 0; d0 < static_cast<int>(dartFace_.size()); ++d0) {
        if (dartFace_[d0] >= 0) continue;
        FaceWalk f;
        f.id = static_cast<int>(faces_.size());
        int d = d0;
        do {
            dartFace_[d] = f.id;
            f.walk.push_back(dartTail(d));
            f.darts.push_back(d);
            int u = dartTail(d), v = dartHead(d);
            d = dart(v, succ(v, u));
        } while (d != d0);
        faces_.push_back(std::move(f));
    }
    if (nn - m() + static_cast<int>(faces_.size()) != 2)
        throw NonPlanarRotation("Euler check failed: n - m + F = " +
                                std::to_string(nn - m() + static_cast<int>(faces_.size())));
}

auto PlaneGraph::edgeId(int u, int v) const -> int {
    if (u < 0 || v < 0 || u >= n() || v >= n()) return -1;
    const auto& r = rot_[u];
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] == v) return incEdge_[u][i];
    return -1;
}

auto PlaneGraph::dart(int u, int v) const -> int {
    int e = edgeId(u, v);
    if (e < 0) return -1;
    return 2 * e + (u < v ? 0 : 1);
}

auto PlaneGraph::succ(int v, int u) const -> int {
    const auto& r = rot_[v];
    auto it = std::find(r.begin(), r.end(), u);
    ++it;
    return it == r.end() ? r.front() : *it;
}

auto PlaneGraph::facesAt(int v) const -> std::vector<int> {
    std::vector<int> out;
    for (int u : rot_[v]) {
        int f = dartFace_[dart(v, u)];
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
    return out;
}

auto traceFaces(const PlaneGraph& g) -> const std::vector<FaceWalk>& { return g.faces(); }

auto fromDrawing(const std::vector<std::array<double, 2>>& points,
                 const std::vector<std::array<int, 2>>& edges) -> PlaneGraph {
    int n = static_cast<int>(points.size());
    std::vector<std::vector<int>> rot(n);
    for (auto [a, b] : edges) {
        rot[a].push_back(b);
        rot[b].push_back(a);
    }
    auto angle = [&](int v, int u) {
        return std::atan2(points[u][1] - points[v][1], points[u][0] - points[v][0]);
    };
    for (int v = 0; v < n; ++v)
        std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) { return angle(v, a) > angle(v, b); });
    if (edges.empty()) throw DegenerateGraph("drawing has no edges");
    PlaneGraph probe(rot, edges[0][0], edges[0][1]);
    int best = -1;
    double bestArea = 0;
    for (const auto& f : probe.faces()) {
        double area = 0;
        for (int i = 0; i < f.length(); ++i) {
            const auto& p = points[f.walk[i]];
            const auto& q = points[f.walk[(i + 1) % f.length()]];
            area += p[0] * q[1] - p[1] * q[0];
        }
        if (best < 0 || area < bestArea) {
            best = f.id;
            bestArea = area;
        }
    }
    int d = probe.face(best).darts[0];
    return PlaneGraph(std::move(rot), probe.dartTail(d), probe.dartHead(d));
}

auto canonicalCycle(std::vector<int> c) -> std::vector<int> {
    if (c.empty()) return c;
    auto mn = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), mn, c.end());
    if (c.size() > 2 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
    return c;
}

auto cyclesUpTo(const PlaneGraph& g, int maxLen) -> std::vector<std::vector<int>> {
    std::vector<std::vector<int>> out;
    int nn = g.n();
    std::vector<int> path;
    std::vector<bool> on(nn, false);
    std::function<void(int, int)> dfs = [&](int s, int v) {
        for (int u : g.rotation(v)) {
            if (u == s && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
            if (u <= s || on[u] || static_cast<int>(path.size()) >= maxLen) continue;
            on[u] = true;
            path.push_back(u);
            dfs(s, u);
            path.pop_back();
            on[u] = false;
        }
    };
    for (int s = 0; s < nn; ++s) {
        path = {s};
        on[s] = true;
        dfs(s, s);
        on[s] = false;
    }
    return out;
}

auto forbiddenCycleCheck(const PlaneGraph& g, const std::set<int>& lengths)
    -> std::vector<std::vector<int>> {
    if (lengths.empty()) return {};
    std::vector<std::vector<int>> out;
    for (auto& c : cyclesUpTo(g, *lengths.rbegin()))
        if (lengths.count(static_cast<int>(c.size()))) out.push_back(std::move(c));
    return out;
}

auto inClassG(const PlaneGraph& g) -> bool { return forbiddenCycleCheck(g, {4, 6, 8}).empty(); }

auto facialCycleCheck(const PlaneGraph& g) -> std::vector<std::vector<int>> {
    std::set<std::vector<int>> facial;
    for (const auto& f : g.faces()) facial.insert(canonicalCycle(f.walk));
    std::vector<std::vector<int>> out;
    for (auto& c : cyclesUpTo(g, 9))
        if (c.size() % 2 == 1 && !facial.count(canonicalCycle(c))) out.push_back(std::move(c));
    return out;
}

auto cycleSides(const PlaneGraph& g, const std::vector<int>& cycle) -> CycleSides {
    int k = static_cast<int>(cycle.size());
    std::set<int> cedges;
    for (int i = 0; i < k; ++i) {
        int e = g.edgeId(cycle[i], cycle[(i + 1) % k]);
        if (e < 0) throw NotACycle("consecutive cycle vertices are not adjacent");
        cedges.insert(e);
    }
    std::vector<int> region(g.faces().size(), -1);
    std::queue<int> q;
    int start = g.faceOfDart(g.dart(cycle[0], cycle[1]));
    region[start] = 0;
    q.push(start);
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (int d : g.face(f).darts) {
            if (cedges.count(d >> 1)) continue;
            int h = g.faceOfDart(d ^ 1);
            if (region[h] < 0) {
                region[h] = 0;
                q.push(h);
            }
        }
    }
    bool outerInA = region[g.outerFace()] == 0;
    std::vector<bool> onC(g.n(), false);
    for (int v : cycle) onC[v] = true;
    CycleSides s;
    for (int v = 0; v < g.n(); ++v) {
        if (onC[v]) continue;
        int f = g.faceOfDart(g.dart(v, g.rotation(v).front()));
        bool inA = region[f] == 0;
        (inA == outerInA ? s.exterior : s.interior).push_back(v);
    }
    return s;
}

auto separatingCycles(const PlaneGraph& g, int maxLen) -> std::vector<std::vector<int>> {
    std::vector<std::vector<int>> out;
    for (auto& c : cyclesUpTo(g, maxLen)) {
        auto s = cycleSides(g, c);
        if (!s.interior.empty() && !s.exterior.empty()) out.push_back(std::move(c));
    }
    return out;
}

auto strings(const PlaneGraph& g) -> std::vector<StringRecord> {
    int nn = g.n();
    std::vector<bool> done(nn, false);
    std::vector<StringRecord> out;
    auto other = [&](int c, int p) { return g.rotation(c)[0] == p ? g.rotation(c)[1] : g.rotation(c)[0]; };
    auto addRecords = [&](const std::vector<int>& verts, const std::vector<int>& ends, int d) {
        std::vector<int> fs{g.faceOfDart(d), g.faceOfDart(d ^ 1)};
        if (fs[0] == fs[1]) fs.pop_back();
        for (int f : fs)
            if (f != g.outerFace()) out.push_back({verts, ends, f});
    };
    for (int v = 0; v < nn; ++v) {
        if (done[v] || g.degree(v) != 2) continue;
        // run backwards to an end of the maximal run of 2-vertices
        int p = g.rotation(v)[1], c = v;
        bool cyclic = false;
        for (int steps = 0;; ++steps) {
            int nx = other(c, p);
            if (g.degree(nx) != 2) break;
            if (nx == v || steps > nn) {
                cyclic = true;
                break;
            }
            p = c;
            c = nx;
        }
        std::vector<int> verts;
        if (cyclic) {
            // the whole graph is a single cycle
            int pp = g.rotation(v)[0], cc = v;
            for (int i = 0; i < nn; ++i) {
                verts.push_back(cc);
                done[cc] = true;
                int nx = other(cc, pp);
                pp = cc;
                cc = nx;
            }
            addRecords(verts, {}, g.dart(verts[0], verts[1]));
            continue;
        }
        int endA = other(c, p);
        int pp = endA, cc = c;
        while (g.degree(cc) == 2) {
            verts.push_back(cc);
            done[cc] = true;
            int nx = other(cc, pp);
            pp = cc;
            cc = nx;
        }
        std::vector<int> ends{endA};
        if (cc != endA) ends.push_back(cc);
        std::sort(ends.begin(), ends.end());
        addRecords(verts, ends, g.dart(endA, verts[0]));
    }
    return out;
}

auto stringLengthCheck(const PlaneGraph& g) -> std::vector<StringViolation> {
    std::vector<StringViolation> out;
    for (auto& s : strings(g)) {
        if (s.endpoints.empty()) continue;
        int k = g.face(s.face).length();
        int bound = (k - 1) / 2;
        if (static_cast<int>(s.vertices.size()) >= bound) out.push_back({s, k, bound});
    }
    return out;
}

auto cutVertices(const PlaneGraph& g) -> std::vector<int> {
    int nn = g.n();
    std::vector<int> disc(nn, -1), low(nn, 0);
    std::vector<bool> cut(nn, false);
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int u : g.rotation(v)) {
            if (u == parent) continue;
            if (disc[u] >= 0) {
                low[v] = std::min(low[v], disc[u]);
                continue;
            }
            ++children;
            dfs(u, v);
            low[v] = std::min(low[v], low[u]);
            if (parent >= 0 && low[u] >= disc[v]) cut[v] = true;
        }
        if (parent < 0 && children > 1) cut[v] = true;
    };
    dfs(0, -1);
    std::vector<int> out;
    for (int v = 0; v < nn; ++v)
        if (cut[v]) out.push_back(v);
    return out;
}

auto boundaryAudit(const PlaneGraph& g) -> BoundaryReport {
    BoundaryReport r;
    const auto& f0 = g.face(g.outerFace());
    r.outerLength = f0.length();
    r.tooLong = r.outerLength > 12;
    std::set<int> verts(f0.walk.begin(), f0.walk.end());
    r.outerNotCycle = static_cast<int>(verts.size()) != r.outerLength;
    std::set<int> walkEdges;
    for (int d : f0.darts) walkEdges.insert(d >> 1);
    for (int e = 0; e < g.m(); ++e) {
        auto [a, b] = g.edge(e);
        if (verts.count(a) && verts.count(b) && !walkEdges.count(e)) r.chords.push_back({a, b});
    }
    r.cutVertices = cutVertices(g);
    for (int v = 0; v < g.n(); ++v)
        if (!g.isExternal(v) && g.degree(v) <= 2) r.lowDegreeInternal.push_back(v);
    return r;
}

} // namespace dp3
