#include "dp3/configs.hpp"

#include "dp3/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <queue>
#include <random>
#include <set>

namespace dp3 {

namespace {

// Embedded multigraph with explicit edge ids, used while rewriting a host.
struct EdgeRot {
    std::vector<std::array<int, 2>> ends;
    std::vector<Perm> sig;  // along ends[0] -> ends[1]
    std::vector<bool> edgeAlive;
    std::vector<std::vector<int>> rot;  // clockwise edge ids
    std::vector<bool> alive;

    explicit EdgeRot(const SignedPlaneGraph& sg) {
        const auto& g = sg.graph;
        for (int e = 0; e < g.m(); ++e) {
            ends.push_back(g.edge(e));
            sig.push_back(sg.sig[e]);
            edgeAlive.push_back(true);
        }
        rot.resize(g.n());
        for (int v = 0; v < g.n(); ++v)
            for (int u : g.rotation(v)) rot[v].push_back(g.edgeId(v, u));
        alive.assign(g.n(), true);
    }

    auto other(int e, int v) const -> int { return ends[e][0] == v ? ends[e][1] : ends[e][0]; }

    void deleteEdge(int e) {
        for (int v : {ends[e][0], ends[e][1]}) {
            auto& r = rot[v];
            r.erase(std::remove(r.begin(), r.end(), e), r.end());
        }
        edgeAlive[e] = false;
    }

    void deleteVertex(int v) {
        while (!rot[v].empty()) deleteEdge(rot[v].front());
        alive[v] = false;
    }

    // Rotation of v starting right after e, without e.
    auto after(int v, int e) const -> std::vector<int> {
        const auto& r = rot[v];
        auto it = std::find(r.begin(), r.end(), e);
        std::vector<int> out(it + 1, r.end());
        out.insert(out.end(), r.begin(), it);
        return out;
    }

    // Contracts e, keeping endpoint x; loops that appear are deleted.
    void contract(int e, int x) {
        int y = other(e, x);
        auto a = after(x, e), b = after(y, e);
        // a loop x-y edge parallel to e would sit in both lists
        std::vector<int> merged = a;
        merged.insert(merged.end(), b.begin(), b.end());
        for (int f : b)
            for (int& end : ends[f])
                if (end == y) end = x;
        edgeAlive[e] = false;
        rot[y].clear();
        alive[y] = false;
        rot[x] = merged;
        std::set<int> loops;
        for (int f : rot[x])
            if (ends[f][0] == ends[f][1]) loops.insert(f);
        for (int f : loops) {
            auto& r = rot[x];
            r.erase(std::remove(r.begin(), r.end(), f), r.end());
            edgeAlive[f] = false;
        }
    }
};

} // namespace

auto applySurgery(const SignedPlaneGraph& sg0, const ConfigPattern& p, const Occurrence& occ) -> SurgeryResult {
    if (!p.hasScript) throw CatalogError(p.name + ": no reduction script");
    const auto& g0 = sg0.graph;
    const auto& img = occ.image;
    if (static_cast<int>(img.size()) != p.size()) throw SurgeryCollision(p.name + ": occurrence has the wrong size");
    const auto& s = p.script;
    std::vector<std::array<int, 2>> straight;
    for (const auto& path : s.straight)
        for (std::size_t i = 0; i + 1 < path.size(); ++i) straight.push_back({img[path[i]], img[path[i + 1]]});
    auto norm = normalizeTree(sg0, straight);
    const auto& sg = norm.sg;
    EdgeRot er(sg);

    std::vector<bool> removedHost(g0.n(), false);
    for (int v : s.remove) removedHost[img[v]] = true;
    // removed components of the host
    std::vector<int> comp(g0.n(), -1);
    int comps = 0;
    for (int v : s.remove) {
        int x = img[v];
        if (comp[x] >= 0) continue;
        std::queue<int> q;
        q.push(x);
        comp[x] = comps;
        while (!q.empty()) {
            int y = q.front();
            q.pop();
            for (int z : g0.rotation(y))
                if (removedHost[z] && comp[z] < 0) {
                    comp[z] = comps;
                    q.push(z);
                }
        }
        ++comps;
    }
    auto touches = [&](int c, int a) {
        for (int z : g0.rotation(a))
            if (comp[z] == c) return true;
        return false;
    };
    struct Op {
        bool identify;
        int a, b;
        Perm sign;
    };
    std::vector<Op> ops;
    for (auto [a, b] : s.identify) ops.push_back({true, img[a], img[b], kId});
    for (const auto& ie : s.insert) ops.push_back({false, img[ie.a], img[ie.b], ie.sign});
    std::vector<int> opHub(ops.size(), -1);
    std::vector<bool> hubUsed(comps, false);
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (int c = 0; c < comps && opHub[i] < 0; ++c)
            if (!hubUsed[c] && touches(c, ops[i].a) && touches(c, ops[i].b)) opHub[i] = c;
        if (opHub[i] < 0)
            throw SurgeryCollision(p.name + ": no unused removed part joins " + std::to_string(ops[i].a) + " and " +
                                   std::to_string(ops[i].b));
        hubUsed[opHub[i]] = true;
    }
    // contract each hub along a spanning tree; delete the other removed parts
    std::vector<int> hubVertex(comps, -1);
    for (int c = 0; c < comps; ++c) {
        std::vector<int> members;
        for (int v = 0; v < g0.n(); ++v)
            if (comp[v] == c) members.push_back(v);
        if (!hubUsed[c]) {
            for (int v : members) er.deleteVertex(v);
            continue;
        }
        int h = members.front();
        for (bool progress = true; progress;) {
            progress = false;
            for (int e : std::vector<int>(er.rot[h])) {
                int y = er.other(e, h);
                if (er.edgeAlive[e] && comp[y] == c && y != h) {
                    er.contract(e, h);
                    progress = true;
                    break;
                }
            }
        }
        hubVertex[c] = h;
    }
    std::vector<int> mergedInto(g0.n());
    for (int v = 0; v < g0.n(); ++v) mergedInto[v] = v;
    auto rep = [&](int v) {
        while (mergedInto[v] != v) v = mergedInto[v];
        return v;
    };
    for (std::size_t i = 0; i < ops.size(); ++i) {
        int h = hubVertex[opHub[i]];
        int a = rep(ops[i].a), b = rep(ops[i].b);
        if (a == b) throw SurgeryCollision(p.name + ": the pair is already merged");
        int ea = -1, eb = -1;
        for (int e : er.rot[h]) {
            if (ea < 0 && er.other(e, h) == a) ea = e;
            if (eb < 0 && er.other(e, h) == b) eb = e;
        }
        if (ea < 0 || eb < 0) throw SurgeryCollision(p.name + ": hub lost its contact with the pair");
        for (int e : std::vector<int>(er.rot[h]))
            if (e != ea && e != eb) er.deleteEdge(e);
        if (ops[i].identify) {
            for (int e : er.rot[a])
                if (er.other(e, a) == b) throw SurgeryCollision(p.name + ": identified vertices are adjacent");
            er.contract(ea, a);
            er.contract(eb, a);
            mergedInto[b] = a;
        } else {
            auto& rb = er.rot[b];
            std::replace(rb.begin(), rb.end(), eb, ea);
            er.ends[ea] = {a, b};
            er.sig[ea] = ops[i].sign;
            er.edgeAlive[eb] = false;
            er.rot[h].clear();
            er.alive[h] = false;
        }
    }

    // compact
    std::vector<int> newId(g0.n(), -1);
    int n2 = 0;
    for (int v = 0; v < g0.n(); ++v)
        if (er.alive[v]) newId[v] = n2++;
    std::vector<std::vector<int>> rot(n2);
    for (int v = 0; v < g0.n(); ++v) {
        if (!er.alive[v]) continue;
        std::set<int> seen;
        for (int e : er.rot[v]) {
            int u = er.other(e, v);
            if (u == v) throw SurgeryCollision(p.name + ": the operation creates a loop");
            if (!seen.insert(u).second)
                throw SurgeryCollision(p.name + ": the operation creates parallel edges at " + std::to_string(v));
            rot[newId[v]].push_back(newId[u]);
        }
    }
    int ot = -1, oh = -1;
    const auto& outer = g0.face(g0.outerFace()).walk;
    for (std::size_t i = 0; i < outer.size() && ot < 0; ++i) {
        int a = outer[i], b = outer[(i + 1) % outer.size()];
        if (!er.alive[a] || !er.alive[b]) continue;
        int ra = newId[a], rb = newId[b];
        if (std::find(rot[ra].begin(), rot[ra].end(), rb) != rot[ra].end()) ot = ra, oh = rb;
    }
    if (ot < 0) {
        for (int v = 0; v < n2 && ot < 0; ++v)
            if (!rot[v].empty()) ot = v, oh = rot[v].front();
    }
    PlaneGraph g2;
    try {
        g2 = PlaneGraph(rot, ot, oh);
    } catch (const Error& e) {
        throw SurgeryCollision(p.name + ": result is not a valid plane graph (" + e.what() + ")");
    }
    SignedPlaneGraph out(g2);
    for (std::size_t e = 0; e < er.ends.size(); ++e) {
        if (!er.edgeAlive[e]) continue;
        auto [a, b] = er.ends[e];
        out.setSigma(newId[a], newId[b], er.sig[e]);
    }
    SurgeryReport r;
    r.ok = true;
    r.nBefore = g0.n();
    r.nAfter = n2;
    r.vertexDecrease = n2 < g0.n();
    bool conflict = false;
    for (int v = 0; v < g0.n(); ++v) {
        int c = sg.precolor.empty() ? 0 : sg.precolor[v];
        if (!c || removedHost[v]) continue;
        int t = newId[rep(v)];
        if (t < 0) continue;
        if (out.precolor[t] && out.precolor[t] != c) conflict = true;
        out.precolor[t] = c;
    }
    r.inG = inClassG(g2);
    r.precolorProper = !conflict && isProper(out, out.precolor);
    r.detail = r.good() ? "ok" : std::string(r.inG ? "" : "result leaves the class; ") +
                                     (r.precolorProper ? "" : "precoloring becomes improper; ") +
                                     (r.vertexDecrease ? "" : "no vertex removed");
    std::vector<int> vmap(g0.n(), -1);
    for (int v = 0; v < g0.n(); ++v)
        if (!removedHost[v]) vmap[v] = newId[rep(v)];
    return {out, r, vmap};
}

namespace {

// Cyclic vertex order of a 2-connected outerplanar block.
auto blockCycle(const std::vector<int>& verts, const std::set<std::pair<int, int>>& edgeSet, const std::string& who)
    -> std::vector<int> {
    if (verts.size() <= 3) return verts;
    std::map<int, std::set<int>> adj;
    for (int v : verts) adj[v];
    for (auto [a, b] : edgeSet) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::vector<std::array<int, 3>> removedSeq;  // (v, a, b)
    while (adj.size() > 3) {
        auto it = std::find_if(adj.begin(), adj.end(), [](const auto& kv) { return kv.second.size() == 2; });
        if (it == adj.end()) throw CatalogError(who + ": core block is not outerplanar");
        int v = it->first, a = *it->second.begin(), b = *std::next(it->second.begin());
        adj[a].erase(v);
        adj[b].erase(v);
        adj[a].insert(b);
        adj[b].insert(a);
        adj.erase(it);
        removedSeq.push_back({v, a, b});
    }
    std::vector<int> cyc;
    for (auto& kv : adj) cyc.push_back(kv.first);
    for (auto it = removedSeq.rbegin(); it != removedSeq.rend(); ++it) {
        auto [v, a, b] = *it;
        int k = static_cast<int>(cyc.size());
        bool placed = false;
        for (int i = 0; i < k && !placed; ++i) {
            int x = cyc[i], y = cyc[(i + 1) % k];
            if ((x == a && y == b) || (x == b && y == a)) {
                cyc.insert(cyc.begin() + i + 1, v);
                placed = true;
            }
        }
        if (!placed) throw CatalogError(who + ": core block is not outerplanar");
    }
    // chords must not cross
    std::map<int, int> pos;
    for (std::size_t i = 0; i < cyc.size(); ++i) pos[cyc[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> chords;
    for (auto [a, b] : edgeSet) chords.push_back(std::minmax(pos[a], pos[b]));
    for (auto [a, b] : chords)
        for (auto [c, d] : chords)
            if (a < c && c < b && b < d) throw CatalogError(who + ": core block is not outerplanar");
    return cyc;
}

struct Block {
    std::vector<int> verts;
    std::set<std::pair<int, int>> edges;
    std::vector<int> cycle;
};

// Biconnected components of the core (Hopcroft-Tarjan on the edge stack).
auto coreBlocks(const ConfigPattern& p) -> std::vector<Block> {
    int n = p.size();
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : p.edges)
        if (!p.vertices[a].attachment() && !p.vertices[b].attachment()) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> stack;
    std::vector<Block> out;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[v] = low[v] = timer++;
        for (int u : adj[v]) {
            if (u == parent) continue;
            if (disc[u] < 0) {
                stack.push_back({v, u});
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= disc[v]) {
                    Block b;
                    std::set<int> vs;
                    while (true) {
                        auto e = stack.back();
                        stack.pop_back();
                        b.edges.insert(std::minmax(e.first, e.second));
                        vs.insert(e.first);
                        vs.insert(e.second);
                        if (e == std::make_pair(v, u)) break;
                    }
                    b.verts.assign(vs.begin(), vs.end());
                    out.push_back(b);
                }
            } else if (disc[u] < disc[v]) {
                stack.push_back({v, u});
                low[v] = std::min(low[v], disc[u]);
            }
        }
    };
    int first = -1;
    for (int v = 0; v < n; ++v)
        if (!p.vertices[v].attachment()) {
            if (first < 0) {
                first = v;
                dfs(v, -1);
            } else if (disc[v] < 0) {
                throw CatalogError(p.name + ": core is disconnected");
            }
        }
    for (auto& b : out) b.cycle = blockCycle(b.verts, b.edges, p.name);
    return out;
}

// Clockwise neighbors of v inside a block drawn on a circle, starting after the outer gap.
auto blockInterval(const Block& b, int v, bool flip) -> std::vector<int> {
    int k = static_cast<int>(b.cycle.size());
    std::map<int, std::array<double, 2>> pt;
    for (int i = 0; i < k; ++i) {
        double t = 2 * std::numbers::pi * i / k * (flip ? -1 : 1);
        pt[b.cycle[i]] = {std::cos(t), std::sin(t)};
    }
    std::vector<std::pair<double, int>> ang;
    for (auto [a, c] : b.edges) {
        int u = a == v ? c : c == v ? a : -1;
        if (u < 0) continue;
        ang.push_back({std::atan2(pt[u][1] - pt[v][1], pt[u][0] - pt[v][0]), u});
    }
    std::sort(ang.begin(), ang.end(), [](auto x, auto y) { return x.first > y.first; });
    int m = static_cast<int>(ang.size());
    int start = 0;
    double best = -1;
    for (int i = 0; i < m; ++i) {
        double gap = ang[i].first - ang[(i + 1) % m].first;
        if (gap <= 0) gap += 2 * std::numbers::pi;
        if (m == 1) gap = 2 * std::numbers::pi;
        if (gap > best) best = gap, start = (i + 1) % m;
    }
    std::vector<int> out;
    for (int i = 0; i < m; ++i) out.push_back(ang[(start + i) % m].second);
    return out;
}

// Walk a face of `rot` starting with dart (t -> h).
auto traceFace(const std::vector<std::vector<int>>& rot, int t, int h) -> std::vector<int> {
    std::vector<int> walk;
    int a = t, b = h;
    do {
        walk.push_back(a);
        const auto& r = rot[b];
        auto it = std::find(r.begin(), r.end(), a);
        int c = (it + 1 == r.end()) ? r.front() : *(it + 1);
        a = b;
        b = c;
    } while (!(a == t && b == h));
    return walk;
}

} // namespace

auto realizeHost(const ConfigPattern& p, const RealizeOptions& opt) -> RealizedHost {
    validatePattern(p);
    int np = p.size();
    auto blocks = coreBlocks(p);
    std::vector<int> leafCount(np, 0);
    for (int v = 0; v < np; ++v) {
        const auto& pv = p.vertices[v];
        if (pv.attachment()) continue;
        if (pv.thetaKind == ThetaKind::ANY) leafCount[v] = p.removed(v) ? 0 : 1;
        else leafCount[v] = pv.theta - p.coreDegree(v) - static_cast<int>(p.attachmentsOf(v).size());
    }
    int totalLeaves = 0;
    for (int v = 0; v < np; ++v)
        if (!p.vertices[v].attachment()) totalLeaves += leafCount[v] + static_cast<int>(p.attachmentsOf(v).size());
    if (totalLeaves == 0) {
        for (int v = 0; v < np && totalLeaves == 0; ++v)
            if (!p.vertices[v].attachment() && p.vertices[v].thetaKind == ThetaKind::ANY) leafCount[v] = totalLeaves = 1;
        if (totalLeaves == 0) throw CatalogError(p.name + ": no room to attach the pattern to a boundary");
    }
    // flip bits only matter for blocks meeting a facial walk
    std::set<int> walkVerts;
    for (const auto& w : p.facialWalks) walkVerts.insert(w.begin(), w.end());
    std::vector<int> flippable;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (int v : blocks[i].verts)
            if (walkVerts.count(v)) {
                flippable.push_back(static_cast<int>(i));
                break;
            }
    if (flippable.size() > 16) throw CatalogError(p.name + ": too many blocks meet facial walks");

    auto coreRotation = [&](std::uint32_t mask, int& nTotal) {
        std::vector<bool> flip(blocks.size(), false);
        for (std::size_t i = 0; i < flippable.size(); ++i) flip[flippable[i]] = (mask >> i) & 1u;
        std::vector<std::vector<int>> rot(np);
        nTotal = np;
        for (int v = 0; v < np; ++v) {
            if (p.vertices[v].attachment()) continue;
            for (std::size_t i = 0; i < blocks.size(); ++i)
                if (std::binary_search(blocks[i].verts.begin(), blocks[i].verts.end(), v)) {
                    auto iv = blockInterval(blocks[i], v, flip[i]);
                    rot[v].insert(rot[v].end(), iv.begin(), iv.end());
                }
            for (int a : p.attachmentsOf(v)) {
                rot[v].push_back(a);
                rot[a].push_back(v);
            }
            for (int j = 0; j < leafCount[v]; ++j) {
                rot.emplace_back(std::vector<int>{v});
                rot[v].push_back(nTotal++);
            }
        }
        return rot;
    };
    auto walksHold = [&](const std::vector<std::vector<int>>& rot) {
        for (const auto& w : p.facialWalks) {
            // every interior vertex of the walk turns between consecutive neighbors
            bool found = true;
            for (std::size_t i = 1; i + 1 < w.size(); ++i) {
                const auto& r = rot[w[i]];
                auto ia = std::find(r.begin(), r.end(), w[i - 1]) - r.begin();
                auto ib = std::find(r.begin(), r.end(), w[i + 1]) - r.begin();
                int d = static_cast<int>(r.size());
                if ((ia + 1) % d != ib && (ib + 1) % d != ia) found = false;
            }
            if (!found) return false;
        }
        return true;
    };
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 0; mask < (1u << flippable.size()); ++mask) {
        int nt = 0;
        if (walksHold(coreRotation(mask, nt))) masks.push_back(mask);
    }
    if (masks.empty()) throw CatalogError(p.name + ": no block orientation realizes the facial walks");

    // signature: straight except one private edge per cycle chosen negative
    std::mt19937 rng(opt.seed);
    auto edgeKey = [](int a, int b) { return std::pair<int, int>(std::min(a, b), std::max(a, b)); };
    std::map<std::pair<int, int>, int> edgeUse;
    for (const auto& c : p.cycles)
        for (std::size_t i = 0; i < c.cycle.size(); ++i)
            ++edgeUse[edgeKey(c.cycle[i], c.cycle[(i + 1) % c.cycle.size()])];

    for (int attempt = 0; attempt < opt.attempts; ++attempt) {
        int nt0 = 0;
        auto rot0 = coreRotation(masks[rng() % masks.size()], nt0);
        // leaves in boundary order
        int firstLeaf = -1;
        for (int v = 0; v < nt0 && firstLeaf < 0; ++v)
            if (rot0[v].size() == 1 && (v >= np || p.vertices[v].attachment())) firstLeaf = v;
        std::vector<int> leaves;
        for (int v : traceFace(rot0, firstLeaf, rot0[firstLeaf][0]))
            if ((v >= np || p.vertices[v].attachment()) && rot0[v].size() == 1) leaves.push_back(v);
        int m = static_cast<int>(leaves.size());
        int minLen = m == 1 ? 3 : m == 2 ? 2 : 1;
        std::vector<int> len(m);
        for (int i = 0; i < m; ++i) len[i] = minLen + static_cast<int>(rng() % (std::max(opt.maxPath, minLen) - minLen + 1));

        // close the boundary: rot(L) = [owner, previous path vertex, next path vertex]
        std::vector<int> segOf;
        auto build = [&](int& outerHead) {
            auto rot = rot0;
            int nt = nt0;
            segOf.assign(nt0, -1);
            std::vector<int> next(m), prev(m);
            outerHead = -1;
            for (int i = 0; i < m; ++i) {
                int a = leaves[i], b = leaves[(i + 1) % m];
                int cur = a;
                for (int j = 1; j < len[i]; ++j) {
                    rot.emplace_back();
                    segOf.push_back(i);
                    int x = nt++;
                    if (cur == a) next[i] = x;
                    else rot[cur].push_back(x);
                    rot[x].push_back(cur);
                    cur = x;
                    if (i == 0 && j == 1) outerHead = x;
                }
                if (cur == a) next[i] = b;
                else rot[cur].push_back(b);
                prev[(i + 1) % m] = cur;
            }
            for (int i = 0; i < m; ++i) {
                rot[leaves[i]].push_back(prev[i]);
                rot[leaves[i]].push_back(next[i]);
            }
            if (outerHead < 0) outerHead = next[0];
            return rot;
        };
        auto segmentOfEdge = [&](int x, int y) {
            if (x < static_cast<int>(segOf.size()) && segOf[x] >= 0) return segOf[x];
            if (y < static_cast<int>(segOf.size()) && segOf[y] >= 0) return segOf[y];
            for (int i = 0; i < m; ++i)
                if (len[i] == 1 && std::minmax(x, y) == std::minmax(leaves[i], leaves[(i + 1) % m])) return i;
            return -1;
        };
        // lengthen a boundary segment on a forbidden cycle until none is left
        PlaneGraph g;
        bool built = false;
        for (int repair = 0; repair < 8 * m + 16; ++repair) {
            int outerHead = -1;
            auto rot = build(outerHead);
            try {
                g = PlaneGraph(rot, leaves[0], outerHead);
            } catch (const Error&) {
                break;
            }
            auto bad = forbiddenCycleCheck(g, {4, 6, 8});
            if (bad.empty()) {
                built = true;
                break;
            }
            std::vector<int> segs;
            const auto& c = bad.front();
            for (std::size_t i = 0; i < c.size(); ++i) {
                int sgm = segmentOfEdge(c[i], c[(i + 1) % c.size()]);
                if (sgm >= 0) segs.push_back(sgm);
            }
            if (segs.empty()) break;
            ++len[segs[rng() % segs.size()]];
        }
        if (!built) continue;
        SignedPlaneGraph sg(g);
        bool signOk = true;
        std::set<std::pair<int, int>> touched;
        for (const auto& c : p.cycles) {
            bool negative = c.sign == SignReq::NEG || (c.sign == SignReq::ANY && rng() % 2);
            if (!negative) continue;
            int k = static_cast<int>(c.cycle.size());
            int pick = -1;
            for (int i = 0; i < k && pick < 0; ++i) {
                auto key = edgeKey(c.cycle[i], c.cycle[(i + 1) % k]);
                if (edgeUse[key] == 1 && !touched.count(key)) pick = i;
            }
            if (pick < 0) {
                signOk = c.sign != SignReq::NEG;
                continue;
            }
            auto key = edgeKey(c.cycle[pick], c.cycle[(pick + 1) % k]);
            touched.insert(key);
            sg.setSigma(key.first, key.second, kAllPerms[1 + rng() % 5]);
        }
        if (!signOk) throw CatalogError(p.name + ": a negative cycle shares all its edges with other constrained cycles");
        for (int v = 0; v < sg.n(); ++v) sg = switchAt(sg, v, kAllPerms[rng() % 6]);
        Occurrence occ;
        occ.image.resize(np);
        for (int v = 0; v < np; ++v) occ.image[v] = v;
        if (!occurrenceHolds(sg, p, occ)) continue;
        if (opt.requireSurgeryInG && p.hasScript) {
            try {
                if (!applySurgery(sg, p, occ).report.good()) continue;
            } catch (const SurgeryCollision&) {
                continue;
            }
        }
        return {sg, occ};
    }
    throw GenerationBudgetExceeded(p.name + ": no host found in " + std::to_string(opt.attempts) + " attempts");
}

} // namespace dp3
