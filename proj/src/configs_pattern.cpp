#include "dp3/configs.hpp"

#include "dp3/errors.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace dp3 {

auto ConfigPattern::find(const std::string& n) const -> int {
    for (int i = 0; i < size(); ++i)
        if (vertices[i].name == n) return i;
    return -1;
}

auto ConfigPattern::at(const std::string& n) const -> int {
    int i = find(n);
    if (i < 0) throw CatalogError(name + ": unknown vertex '" + n + "'");
    return i;
}

auto ConfigPattern::addVertex(PatternVertex v) -> int {
    if (find(v.name) >= 0) throw CatalogError(name + ": duplicate vertex '" + v.name + "'");
    vertices.push_back(std::move(v));
    return size() - 1;
}

auto ConfigPattern::hasEdge(int a, int b) const -> bool {
    for (auto [x, y] : edges)
        if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
}

void ConfigPattern::addEdge(int a, int b) {
    if (a == b) throw CatalogError(name + ": loop at '" + vertices[a].name + "'");
    if (!hasEdge(a, b)) edges.push_back({a, b});
}

auto ConfigPattern::coreDegree(int v) const -> int {
    int d = 0;
    for (int u : neighbors(v)) d += vertices[u].attachment() ? 0 : 1;
    return d;
}

auto ConfigPattern::attachmentsOf(int v) const -> std::vector<int> {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (vertices[i].owner == v) out.push_back(i);
    return out;
}

auto ConfigPattern::neighbors(int v) const -> std::vector<int> {
    std::vector<int> out;
    for (auto [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    return out;
}

auto ConfigPattern::removed(int v) const -> bool {
    return std::find(script.remove.begin(), script.remove.end(), v) != script.remove.end();
}

static auto core(const std::string& name, ThetaKind k, int theta, bool z) -> PatternVertex {
    PatternVertex v;
    v.name = name;
    v.thetaKind = k;
    v.theta = theta;
    v.internal = z;
    return v;
}

static auto attach(const std::string& name, int owner) -> PatternVertex {
    PatternVertex v;
    v.name = name;
    v.owner = owner;
    return v;
}

static void triangle(ConfigPattern& p, int a, int b, int c, SignReq s) {
    p.addEdge(a, b);
    p.addEdge(b, c);
    p.addEdge(c, a);
    p.cycles.push_back({{a, b, c}, s});
}

auto buildI(int k) -> ConfigPattern {
    if (k < 1) throw BadK("I_k needs k >= 1, got " + std::to_string(k));
    ConfigPattern p;
    p.name = "I" + std::to_string(k);
    std::vector<int> u(k + 1), w(k + 1);
    u[0] = p.addVertex(core("u0", ThetaKind::ANY, 0, false));
    for (int i = 1; i <= k; ++i) {
        u[i] = p.addVertex(core("u" + std::to_string(i), ThetaKind::EXACT, i == k ? 3 : 4, true));
        w[i] = p.addVertex(core("w" + std::to_string(i), ThetaKind::EXACT, 3, true));
    }
    for (int i = 1; i <= k; ++i) triangle(p, u[i - 1], u[i], w[i], SignReq::NEG);
    p.ports = {u[0]};
    return p;
}

auto buildJ(int k) -> ConfigPattern {
    if (k < 1) throw BadK("J_k needs k >= 1, got " + std::to_string(k));
    ConfigPattern p;
    p.name = "J" + std::to_string(k);
    std::vector<int> u(k + 1);
    for (int i = 0; i <= k; ++i) {
        bool port = i == 0 || i == k;
        u[i] = p.addVertex(core("u" + std::to_string(i), port ? ThetaKind::ANY : ThetaKind::EXACT, port ? 0 : 4, !port));
    }
    for (int i = 1; i <= k; ++i) {
        auto s = std::to_string(i);
        int w = p.addVertex(core("w" + s, ThetaKind::EXACT, 3, true));
        int x = p.addVertex(core("x" + s, ThetaKind::EXACT, 3, true));
        int y = p.addVertex(core("y" + s, ThetaKind::EXACT, 3, true));
        int z = p.addVertex(core("z" + s, ThetaKind::EXACT, 3, true));
        triangle(p, u[i - 1], u[i], w, SignReq::ANY);
        triangle(p, x, y, z, SignReq::POS);
        p.addEdge(w, z);
    }
    p.ports = {u[0], u[k]};
    return p;
}

// I_k plus an outer neighbor for every w_i and for u_k.
static auto iWithAttachments(int k) -> ConfigPattern {
    auto p = buildI(k);
    int n = p.size();
    for (int v = 0; v < n; ++v) {
        if (v == p.ports[0]) continue;
        int a = p.addVertex(attach(p.vertices[v].name + "'", v));
        if (p.coreDegree(v) + 1 != p.vertices[v].theta) {
            p.vertices.pop_back();
            continue;
        }
        p.addEdge(v, a);
    }
    return p;
}

auto buildIPortDegree3(int k) -> ConfigPattern {
    auto p = iWithAttachments(k);
    p.name = "a-" + std::to_string(k);
    int u0 = p.ports[0];
    p.vertices[u0].thetaKind = ThetaKind::EXACT;
    p.vertices[u0].theta = 3;
    int a = p.addVertex(attach("u0'", u0));
    p.addEdge(u0, a);
    p.hasScript = true;
    for (int v = 0; v < p.size(); ++v)
        if (!p.vertices[v].attachment()) p.script.remove.push_back(v);
    return p;
}

auto buildIPortKernel(int k) -> ConfigPattern {
    auto p = iWithAttachments(k);
    p.name = "I" + std::to_string(k) + "-port";
    p.hasScript = true;
    for (int v = 0; v < p.size(); ++v)
        if (!p.vertices[v].attachment() && v != p.ports[0]) p.script.remove.push_back(v);
    p.script.goal = ReductionScript::Goal::PORT;
    p.script.goalVertex = p.ports[0];
    p.script.goalMin = 2;
    return p;
}

// Deletes vertex x, renumbering every reference. References to x must already be gone.
static auto dropVertex(const ConfigPattern& p, int x) -> ConfigPattern {
    auto q = p;
    auto f = [x](int v) { return v > x ? v - 1 : v; };
    q.vertices.erase(q.vertices.begin() + x);
    for (auto& v : q.vertices)
        if (v.owner >= 0) v.owner = f(v.owner);
    q.edges.clear();
    for (auto [a, b] : p.edges)
        if (a != x && b != x) q.edges.push_back({f(a), f(b)});
    for (auto& c : q.cycles)
        for (int& v : c.cycle) v = f(v);
    for (int& v : q.ports) v = f(v);
    for (auto& w : q.facialWalks)
        for (int& v : w) v = f(v);
    auto& s = q.script;
    for (auto& path : s.straight)
        for (int& v : path) v = f(v);
    for (int& v : s.remove) v = f(v);
    for (auto& pr : s.identify) pr = {f(pr[0]), f(pr[1])};
    for (auto& pr : s.equal) pr = {f(pr[0]), f(pr[1])};
    for (auto& e : s.insert) e.a = f(e.a), e.b = f(e.b);
    if (s.goalVertex >= 0) s.goalVertex = f(s.goalVertex);
    return q;
}

static auto referenced(const ConfigPattern& p, int x) -> bool {
    auto has = [x](const std::vector<int>& v) { return std::find(v.begin(), v.end(), x) != v.end(); };
    for (const auto& c : p.cycles)
        if (has(c.cycle)) return true;
    for (const auto& w : p.facialWalks)
        if (has(w)) return true;
    if (has(p.ports)) return true;
    const auto& s = p.script;
    for (const auto& path : s.straight)
        if (has(path)) return true;
    if (has(s.remove) || s.goalVertex == x) return true;
    for (auto pr : s.identify)
        if (pr[0] == x || pr[1] == x) return true;
    for (auto pr : s.equal)
        if (pr[0] == x || pr[1] == x) return true;
    for (const auto& e : s.insert)
        if (e.a == x || e.b == x) return true;
    return false;
}

auto extendAtI(const ConfigPattern& base, const std::string& vname, int k) -> ConfigPattern {
    if (k < 1) throw BadK("I-extension needs k >= 1");
    int v = base.find(vname);
    if (v < 0) throw ExtensionPreconditionFailed(base.name + ": no vertex '" + vname + "'");
    const auto& pv = base.vertices[v];
    if (pv.attachment() || pv.thetaKind != ThetaKind::EXACT)
        throw ExtensionPreconditionFailed(base.name + ": '" + vname + "' has no exact degree");
    if (pv.theta != base.coreDegree(v) + 1)
        throw ExtensionPreconditionFailed(base.name + ": '" + vname + "' has theta " + std::to_string(pv.theta) +
                                          " but core degree " + std::to_string(base.coreDegree(v)));
    if (base.hasScript && !base.removed(v))
        throw ExtensionPreconditionFailed(base.name + ": '" + vname + "' is not removed by the script");
    auto p = base;
    for (int a : base.attachmentsOf(v)) {
        if (referenced(p, a))
            throw ExtensionPreconditionFailed(base.name + ": the outer neighbor of '" + vname +
                                              "' is used by the script");
    }
    for (auto atts = p.attachmentsOf(v); !atts.empty(); atts = p.attachmentsOf(v)) p = dropVertex(p, atts.back());
    v = p.at(vname);
    p.vertices[v].theta += 1;
    auto ik = iWithAttachments(k);
    std::vector<int> map(ik.size(), -1);
    map[ik.ports[0]] = v;
    for (int i = 0; i < ik.size(); ++i) {
        if (i == ik.ports[0]) continue;
        auto pv2 = ik.vertices[i];
        pv2.name = vname + "." + pv2.name;
        if (pv2.owner >= 0) pv2.owner = map[pv2.owner];
        map[i] = p.addVertex(pv2);
    }
    for (auto [a, b] : ik.edges) p.addEdge(map[a], map[b]);
    for (auto c : ik.cycles) {
        for (int& x : c.cycle) x = map[x];
        p.cycles.push_back(c);
    }
    if (p.hasScript)
        for (int i = 0; i < ik.size(); ++i)
            if (i != ik.ports[0] && !ik.vertices[i].attachment()) p.script.remove.push_back(map[i]);
    p.name = base.name + "+I" + std::to_string(k) + "@" + vname;
    return p;
}

auto extendAtJ(const ConfigPattern& base, const std::string& vname, int k) -> ConfigPattern {
    if (k < 1) throw BadK("J-extension needs k >= 1");
    int v = base.find(vname);
    if (v < 0) throw ExtensionPreconditionFailed(base.name + ": no vertex '" + vname + "'");
    const auto& pv = base.vertices[v];
    if (pv.attachment() || pv.thetaKind != ThetaKind::EXACT || pv.theta != 4 || base.coreDegree(v) != 4 ||
        !base.attachmentsOf(v).empty())
        throw ExtensionPreconditionFailed(base.name + ": '" + vname + "' is not a saturated 4-vertex");
    auto nb = base.neighbors(v);
    std::sort(nb.begin(), nb.end());
    std::vector<std::array<int, 2>> tris;
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (base.hasEdge(nb[i], nb[j])) tris.push_back({nb[i], nb[j]});
    if (tris.size() != 2 || tris[0][0] == tris[1][0] || tris[0][0] == tris[1][1] || tris[0][1] == tris[1][0] ||
        tris[0][1] == tris[1][1])
        throw ExtensionPreconditionFailed(base.name + ": '" + vname + "' is not on two disjoint triangles");
    // side[x]: 1 or 2 for vertices reachable from the respective triangle in H - v
    std::vector<int> side(base.size(), 0);
    for (int s = 0; s < 2; ++s) {
        std::queue<int> q;
        for (int x : tris[s]) {
            if (side[x] && side[x] != s + 1) throw ExtensionPreconditionFailed(base.name + ": sides meet");
            side[x] = s + 1;
            q.push(x);
        }
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : base.neighbors(x)) {
                if (y == v) continue;
                if (side[y] && side[y] != s + 1)
                    throw ExtensionPreconditionFailed(base.name + ": the two triangles at '" + vname +
                                                      "' are joined outside it");
                if (!side[y]) {
                    side[y] = s + 1;
                    q.push(y);
                }
            }
        }
    }
    ConfigPattern p;
    p.name = base.name + "+J" + std::to_string(k) + "@" + vname;
    p.provenance = base.provenance;
    p.notes = base.notes;
    p.hasScript = base.hasScript;
    std::vector<int> map(base.size(), -1);
    for (int i = 0; i < base.size(); ++i) {
        if (i == v) continue;
        auto x = base.vertices[i];
        if (x.owner >= 0) x.owner = map[x.owner];
        map[i] = p.addVertex(x);
    }
    auto half = core(vname + "#1", ThetaKind::EXACT, 4, pv.internal);
    int v1 = p.addVertex(half);
    half.name = vname + "#2";
    int v2 = p.addVertex(half);
    auto img = [&](int x, int other) {
        if (x != v) return map[x];
        if (other < 0 || side[other] == 0) return -1;
        return side[other] == 1 ? v1 : v2;
    };
    for (auto [a, b] : base.edges) p.addEdge(img(a, b), img(b, a));
    for (const auto& c : base.cycles) {
        std::set<int> sides;
        for (int x : c.cycle)
            if (x != v) sides.insert(side[x]);
        if (sides.size() != 1 || *sides.begin() == 0) continue;
        CycleConstraint cc{{}, c.sign};
        for (int x : c.cycle) cc.cycle.push_back(x == v ? (*sides.begin() == 1 ? v1 : v2) : map[x]);
        p.cycles.push_back(cc);
    }
    for (int x : base.ports) {
        if (x == v) {
            p.ports.push_back(v1);
            p.ports.push_back(v2);
        } else {
            p.ports.push_back(map[x]);
        }
    }
    for (const auto& w : base.facialWalks) {
        if (std::find(w.begin(), w.end(), v) != w.end()) continue;
        std::vector<int> ww;
        for (int x : w) ww.push_back(map[x]);
        p.facialWalks.push_back(ww);
    }
    const auto& s = base.script;
    auto& t = p.script;
    t.goal = s.goal;
    t.goalMin = s.goalMin;
    if (s.goalVertex == v) throw ExtensionPreconditionFailed(base.name + ": '" + vname + "' is the goal vertex");
    t.goalVertex = s.goalVertex >= 0 ? map[s.goalVertex] : -1;
    for (const auto& path : s.straight) {
        std::vector<int> cur;
        for (std::size_t i = 0; i < path.size(); ++i) {
            int x = path[i];
            if (x != v) {
                cur.push_back(map[x]);
                continue;
            }
            int prev = i > 0 ? path[i - 1] : -1, next = i + 1 < path.size() ? path[i + 1] : -1;
            int a = prev >= 0 ? img(v, prev) : -1, b = next >= 0 ? img(v, next) : -1;
            if (a >= 0 && a == b) {
                cur.push_back(a);
                continue;
            }
            if (a >= 0) cur.push_back(a);
            if (cur.size() >= 2) t.straight.push_back(cur);
            cur.clear();
            if (b >= 0) cur.push_back(b);
        }
        if (cur.size() >= 2) t.straight.push_back(cur);
    }
    bool vRemoved = base.removed(v);
    for (int x : s.remove)
        if (x != v) t.remove.push_back(map[x]);
    auto pairs = [&](const std::vector<std::array<int, 2>>& in, std::vector<std::array<int, 2>>& out) {
        for (auto [a, b] : in) {
            if (a == v || b == v) {
                int o = a == v ? b : a;
                out.push_back({img(v, o), map[o]});
            } else if (vRemoved && side[a] && side[b] && side[a] != side[b]) {
                out.push_back({map[a], img(v, a)});
                out.push_back({map[b], img(v, b)});
            } else {
                out.push_back({map[a], map[b]});
            }
        }
    };
    pairs(s.identify, t.identify);
    pairs(s.equal, t.equal);
    for (auto e : s.insert) {
        int a = e.a == v ? img(v, e.b) : map[e.a];
        int b = e.b == v ? img(v, e.a) : map[e.b];
        t.insert.push_back({a, b, e.sign});
    }
    // the chain: ports are the two halves; pendant triangles are removed and their
    // r-vertex outer neighbors get a straight edge to the apex of the chain triangle
    auto jk = buildJ(k);
    std::vector<int> jm(jk.size(), -1);
    jm[jk.ports[0]] = v1;
    jm[jk.ports[1]] = v2;
    for (int i = 0; i < jk.size(); ++i) {
        if (jm[i] >= 0) continue;
        auto x = jk.vertices[i];
        x.name = vname + "." + x.name;
        x.internal = true;
        jm[i] = p.addVertex(x);
    }
    for (auto [a, b] : jk.edges) p.addEdge(jm[a], jm[b]);
    for (auto c : jk.cycles) {
        for (int& x : c.cycle) x = jm[x];
        p.cycles.push_back(c);
    }
    for (int i = 1; i <= k; ++i) {
        auto s2 = std::to_string(i);
        int w = jm[jk.at("w" + s2)], x = jm[jk.at("x" + s2)], y = jm[jk.at("y" + s2)], z = jm[jk.at("z" + s2)];
        int xa = p.addVertex(attach(p.vertices[x].name + "'", x));
        int ya = p.addVertex(attach(p.vertices[y].name + "'", y));
        p.addEdge(x, xa);
        p.addEdge(y, ya);
        if (p.hasScript) {
            t.remove.insert(t.remove.end(), {x, y, z});
            t.straight.push_back({w, z, x, xa});
            t.insert.push_back({xa, w, kId});
        }
    }
    return p;
}

void validatePattern(const ConfigPattern& p) {
    auto fail = [&](const std::string& m) { throw CatalogError(p.name + ": " + m); };
    int n = p.size();
    auto ok = [&](int v) { return v >= 0 && v < n; };
    std::set<std::pair<int, int>> es;
    for (auto [a, b] : p.edges) {
        if (!ok(a) || !ok(b) || a == b) fail("bad edge");
        if (!es.insert({std::min(a, b), std::max(a, b)}).second) fail("duplicate edge");
    }
    for (int v = 0; v < n; ++v) {
        const auto& pv = p.vertices[v];
        if (pv.attachment()) {
            auto nb = p.neighbors(v);
            if (!ok(pv.owner) || p.vertices[pv.owner].attachment() || nb.size() != 1 || nb[0] != pv.owner)
                fail("attachment '" + pv.name + "' must be joined to its owner only");
            continue;
        }
        int deg = p.coreDegree(v) + static_cast<int>(p.attachmentsOf(v).size());
        if (pv.thetaKind == ThetaKind::EXACT && pv.theta < deg)
            fail("theta(" + pv.name + ") = " + std::to_string(pv.theta) + " below its pattern degree");
    }
    for (const auto& c : p.cycles) {
        std::set<int> vs(c.cycle.begin(), c.cycle.end());
        if (c.cycle.size() < 3 || vs.size() != c.cycle.size()) fail("cycle constraint is not a cycle");
        for (std::size_t i = 0; i < c.cycle.size(); ++i)
            if (!ok(c.cycle[i]) || !p.hasEdge(c.cycle[i], c.cycle[(i + 1) % c.cycle.size()]))
                fail("cycle constraint uses a non-edge");
    }
    for (int v : p.ports)
        if (!ok(v)) fail("bad port");
    for (const auto& w : p.facialWalks) {
        if (w.size() < 2) fail("facial walk too short");
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (!ok(w[i]) || !p.hasEdge(w[i], w[i + 1])) fail("facial walk uses a non-edge");
    }
    if (!p.hasScript) return;
    const auto& s = p.script;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    for (const auto& path : s.straight)
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            if (!ok(path[i]) || !ok(path[i + 1]) || !p.hasEdge(path[i], path[i + 1])) fail("straight path uses a non-edge");
            int a = root(path[i]), b = root(path[i + 1]);
            if (a == b) fail("straight paths contain a cycle");
            parent[a] = b;
        }
    for (int v : s.remove) {
        if (!ok(v)) fail("bad removed vertex");
        const auto& pv = p.vertices[v];
        if (pv.attachment()) fail("attachment '" + pv.name + "' cannot be removed");
        int deg = p.coreDegree(v) + static_cast<int>(p.attachmentsOf(v).size());
        if (pv.thetaKind != ThetaKind::EXACT || pv.theta != deg)
            fail("removed vertex '" + pv.name + "' has host neighbors outside the pattern");
    }
    auto kept = [&](int v) {
        if (!ok(v)) fail("bad script vertex");
        if (p.removed(v)) fail("script pair uses removed vertex '" + p.vertices[v].name + "'");
    };
    for (auto [a, b] : s.identify) kept(a), kept(b);
    for (auto [a, b] : s.equal) kept(a), kept(b);
    for (const auto& e : s.insert) kept(e.a), kept(e.b);
    if (s.goal == ReductionScript::Goal::PORT) kept(s.goalVertex);
}

// ---------------------------------------------------------------- catalog text

static auto thetaText(ThetaKind k, int t) -> std::string {
    if (k == ThetaKind::ANY) return "*";
    return std::to_string(t) + (k == ThetaKind::AT_LEAST ? "+" : "");
}

static auto parseTheta(const std::string& s, ThetaKind& k, int& t) -> bool {
    if (s == "*") {
        k = ThetaKind::ANY;
        t = 0;
        return true;
    }
    std::string body = s;
    k = ThetaKind::EXACT;
    if (!body.empty() && body.back() == '+') {
        k = ThetaKind::AT_LEAST;
        body.pop_back();
    }
    if (body.empty() || !std::all_of(body.begin(), body.end(), ::isdigit)) return false;
    t = std::stoi(body);
    return true;
}

static auto signText(SignReq s) -> std::string { return s == SignReq::POS ? "POS" : s == SignReq::NEG ? "NEG" : "ANY"; }

auto writeCatalog(const Catalog& c) -> std::string {
    std::ostringstream o;
    for (const auto& e : c.entries) {
        o << "entry " << e.name << "\n";
        o << "provenance " << e.provenance << "\n";
        for (const auto& n : e.notes) o << "note " << n << "\n";
        if (!e.builtin.empty()) {
            o << "builtin " << e.builtin;
            if (e.builtinK) o << " " << e.builtinK;
            o << "\n";
        } else if (!e.base.empty()) {
            o << "base " << e.base << "\n";
            for (const auto& ov : e.overrides)
                o << "set " << ov.vertex << " " << thetaText(ov.thetaKind, ov.theta) << (ov.internal ? " internal" : "")
                  << "\n";
            for (const auto& st : e.steps) {
                o << "step " << st.op << " " << st.vertex;
                if (st.maxK) o << " " << st.maxK;
                o << "\n";
            }
        } else {
            const auto& p = e.pattern;
            auto nm = [&](int v) { return p.vertices[v].name; };
            auto list = [&](const std::vector<int>& vs) {
                std::string s;
                for (int v : vs) s += " " + nm(v);
                return s;
            };
            for (const auto& v : p.vertices) {
                if (v.attachment())
                    o << "attach " << v.name << " " << nm(v.owner) << "\n";
                else
                    o << "vertex " << v.name << " " << thetaText(v.thetaKind, v.theta) << (v.internal ? " internal" : "")
                      << "\n";
            }
            for (auto [a, b] : p.edges) o << "edge " << nm(a) << " " << nm(b) << "\n";
            for (const auto& cc : p.cycles) o << "cycle " << signText(cc.sign) << list(cc.cycle) << "\n";
            for (int v : p.ports) o << "port " << nm(v) << "\n";
            for (const auto& w : p.facialWalks) o << "facial" << list(w) << "\n";
            if (p.hasScript) {
                const auto& s = p.script;
                for (const auto& path : s.straight) o << "straight" << list(path) << "\n";
                if (!s.remove.empty()) o << "remove" << list(s.remove) << "\n";
                for (auto [a, b] : s.identify) o << "identify " << nm(a) << " " << nm(b) << "\n";
                for (auto [a, b] : s.equal) o << "equal " << nm(a) << " " << nm(b) << "\n";
                for (const auto& ie : s.insert) o << "insert " << nm(ie.a) << " " << nm(ie.b) << " " << toWord(ie.sign) << "\n";
                if (s.goal == ReductionScript::Goal::PORT)
                    o << "goal port " << nm(s.goalVertex) << " " << s.goalMin << "\n";
                else
                    o << "goal extend\n";
            }
        }
        o << "end\n\n";
    }
    return o.str();
}

auto parseCatalog(const std::string& text) -> Catalog {
    Catalog cat;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    CatalogEntry* cur = nullptr;
    auto err = [&](const std::string& m) { throw SyntaxError("catalog line " + std::to_string(lineNo) + ": " + m); };
    while (std::getline(in, line)) {
        ++lineNo;
        auto hash = line.find('#');
        std::string body = hash == std::string::npos ? line : line.substr(0, hash);
        std::istringstream ls(body);
        std::string kw;
        if (!(ls >> kw)) continue;
        std::vector<std::string> args;
        for (std::string a; ls >> a;) args.push_back(a);
        auto rest = [&] {
            auto pos = body.find(kw) + kw.size();
            auto s = body.substr(pos);
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
            return s;
        };
        if (kw == "entry") {
            if (cur) err("nested entry");
            if (args.size() != 1) err("entry needs a name");
            if (cat.find(args[0])) err("duplicate entry '" + args[0] + "'");
            cat.entries.emplace_back();
            cur = &cat.entries.back();
            cur->name = args[0];
            cur->pattern.name = args[0];
            continue;
        }
        if (!cur) err("'" + kw + "' outside an entry");
        auto& p = cur->pattern;
        auto v = [&](const std::string& n) {
            int i = p.find(n);
            if (i < 0) err("unknown vertex '" + n + "'");
            return i;
        };
        auto vs = [&](std::size_t from) {
            std::vector<int> out;
            for (std::size_t i = from; i < args.size(); ++i) out.push_back(v(args[i]));
            return out;
        };
        try {
            if (kw == "end") {
                p.provenance = cur->provenance;
                p.notes = cur->notes;
                if (cur->builtin.empty() && cur->base.empty()) validatePattern(p);
                cur = nullptr;
            } else if (kw == "provenance") {
                if (args.size() != 1 || (args[0] != "text-defined" && args[0] != "reconstructed-from-proof"))
                    err("provenance is text-defined or reconstructed-from-proof");
                cur->provenance = args[0];
            } else if (kw == "note") {
                cur->notes.push_back(rest());
            } else if (kw == "builtin") {
                if (args.empty() || args.size() > 2) err("builtin NAME [K]");
                if (args[0] != "I" && args[0] != "J" && args[0] != "I-port3" && args[0] != "I-kernel")
                    err("unknown builtin '" + args[0] + "'");
                cur->builtin = args[0];
                cur->builtinK = args.size() == 2 ? std::stoi(args[1]) : 0;
            } else if (kw == "base") {
                if (args.size() != 1) err("base NAME");
                cur->base = args[0];
            } else if (kw == "set") {
                VertexOverride ov;
                if (args.size() < 2 || args.size() > 3 || !parseTheta(args[1], ov.thetaKind, ov.theta)) err("set V THETA [internal]");
                ov.vertex = args[0];
                ov.internal = args.size() == 3;
                if (ov.internal && args[2] != "internal") err("expected 'internal'");
                cur->overrides.push_back(ov);
            } else if (kw == "step") {
                if (args.size() < 2 || args.size() > 3 || (args[0] != "I" && args[0] != "J")) err("step I|J V [MAXK]");
                cur->steps.push_back({args[0][0], args[1], args.size() == 3 ? std::stoi(args[2]) : 0});
            } else if (kw == "vertex") {
                PatternVertex pv;
                if (args.size() < 2 || args.size() > 3 || !parseTheta(args[1], pv.thetaKind, pv.theta))
                    err("vertex NAME THETA [internal]");
                pv.name = args[0];
                pv.internal = args.size() == 3;
                if (pv.internal && args[2] != "internal") err("expected 'internal'");
                p.addVertex(pv);
            } else if (kw == "attach") {
                if (args.size() != 2) err("attach NAME OWNER");
                p.addVertex(attach(args[0], v(args[1])));
            } else if (kw == "edge") {
                if (args.size() != 2) err("edge A B");
                int a = v(args[0]), b = v(args[1]);
                if (p.hasEdge(a, b)) err("duplicate edge");
                p.addEdge(a, b);
            } else if (kw == "cycle") {
                if (args.size() < 4) err("cycle POS|NEG|ANY V V V ...");
                SignReq s = args[0] == "POS" ? SignReq::POS : args[0] == "NEG" ? SignReq::NEG : SignReq::ANY;
                if (args[0] != "POS" && args[0] != "NEG" && args[0] != "ANY") err("bad sign '" + args[0] + "'");
                p.cycles.push_back({vs(1), s});
            } else if (kw == "port") {
                if (args.size() != 1) err("port V");
                p.ports.push_back(v(args[0]));
            } else if (kw == "facial") {
                p.facialWalks.push_back(vs(0));
            } else if (kw == "straight") {
                p.hasScript = true;
                p.script.straight.push_back(vs(0));
            } else if (kw == "remove") {
                p.hasScript = true;
                auto r = vs(0);
                p.script.remove.insert(p.script.remove.end(), r.begin(), r.end());
            } else if (kw == "identify" || kw == "equal") {
                if (args.size() != 2) err(kw + " A B");
                p.hasScript = true;
                (kw == "identify" ? p.script.identify : p.script.equal).push_back({v(args[0]), v(args[1])});
            } else if (kw == "insert") {
                if (args.size() != 3) err("insert A B PERM");
                auto s = parsePerm(args[2]);
                if (!s) err("bad permutation '" + args[2] + "'");
                p.hasScript = true;
                p.script.insert.push_back({v(args[0]), v(args[1]), *s});
            } else if (kw == "goal") {
                p.hasScript = true;
                if (args.size() == 1 && args[0] == "extend") {
                    p.script.goal = ReductionScript::Goal::EXTEND;
                } else if (args.size() == 3 && args[0] == "port") {
                    p.script.goal = ReductionScript::Goal::PORT;
                    p.script.goalVertex = v(args[1]);
                    p.script.goalMin = std::stoi(args[2]);
                } else {
                    err("goal extend | goal port V MIN");
                }
            } else {
                err("unknown keyword '" + kw + "'");
            }
        } catch (const CatalogError& e) {
            err(e.what());
        } catch (const std::invalid_argument&) {
            err("bad number");
        }
    }
    if (cur) err("missing 'end'");
    for (const auto& e : cat.entries)
        if (!e.base.empty() && !cat.find(e.base))
            throw CatalogError(e.name + ": unknown base '" + e.base + "'");
    return cat;
}

auto loadCatalog(const std::string& path) -> Catalog {
    std::ifstream f(path);
    if (!f) throw CatalogError("cannot read catalog '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parseCatalog(ss.str());
}

auto defaultCatalogPath() -> std::string { return DP3_CATALOG_PATH; }

auto Catalog::find(const std::string& n) const -> const CatalogEntry* {
    for (const auto& e : entries)
        if (e.name == n) return &e;
    return nullptr;
}

auto Catalog::instantiate(const std::string& n, int kBound) const -> std::vector<ConfigPattern> {
    const auto* e = find(n);
    if (!e) throw CatalogError("no catalog entry '" + n + "'");
    auto stamp = [&](ConfigPattern p, const std::string& suffix) {
        p.name = e->name + suffix;
        p.provenance = e->provenance;
        p.notes = e->notes;
        return p;
    };
    std::vector<ConfigPattern> out;
    if (!e->builtin.empty()) {
        int lo = e->builtinK ? e->builtinK : 1, hi = e->builtinK ? e->builtinK : kBound;
        for (int k = lo; k <= hi; ++k) {
            ConfigPattern p = e->builtin == "I"         ? buildI(k)
                              : e->builtin == "J"       ? buildJ(k)
                              : e->builtin == "I-port3" ? buildIPortDegree3(k)
                                                        : buildIPortKernel(k);
            out.push_back(stamp(p, e->builtinK ? "" : "[k=" + std::to_string(k) + "]"));
        }
        return out;
    }
    if (e->base.empty()) return {e->pattern};
    auto bases = instantiate(e->base, kBound);
    for (auto base : bases) {
        for (const auto& ov : e->overrides) {
            int v = base.at(ov.vertex);
            base.vertices[v].thetaKind = ov.thetaKind;
            base.vertices[v].theta = ov.theta;
            base.vertices[v].internal = ov.internal;
        }
        std::vector<std::pair<ConfigPattern, std::string>> cur{{base, ""}};
        for (const auto& st : e->steps) {
            int hi = st.maxK ? std::min(st.maxK, kBound) : kBound;
            std::vector<std::pair<ConfigPattern, std::string>> next;
            for (const auto& [p, tag] : cur)
                for (int k = 1; k <= hi; ++k) {
                    auto q = st.op == 'I' ? extendAtI(p, st.vertex, k) : extendAtJ(p, st.vertex, k);
                    next.push_back({q, tag + (tag.empty() ? "" : ",") + std::to_string(k)});
                }
            cur = std::move(next);
        }
        for (auto& [p, tag] : cur) {
            auto suffix = base.name == e->base ? "" : "{" + base.name + "}";
            auto q = stamp(p, suffix + (tag.empty() ? "" : "[k=" + tag + "]"));
            validatePattern(q);
            out.push_back(std::move(q));
        }
    }
    return out;
}

} // namespace dp3
