#include "dp3/configs.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace dp3 {

namespace {

// Core vertices in BFS order; parent[i] is the earlier core neighbor that seeds candidates.
struct MatchOrder {
    std::vector<int> order;
    std::vector<int> parent;
};

auto matchOrder(const ConfigPattern& p) -> MatchOrder {
    MatchOrder mo;
    std::vector<bool> seen(p.size(), false);
    for (int s = 0; s < p.size(); ++s) {
        if (seen[s] || p.vertices[s].attachment()) continue;
        std::queue<std::pair<int, int>> q;
        q.push({s, -1});
        seen[s] = true;
        while (!q.empty()) {
            auto [v, par] = q.front();
            q.pop();
            mo.order.push_back(v);
            mo.parent.push_back(par);
            for (int u : p.neighbors(v))
                if (!seen[u] && !p.vertices[u].attachment()) {
                    seen[u] = true;
                    q.push({u, v});
                }
        }
    }
    return mo;
}

auto degreeFits(const PatternVertex& pv, int deg) -> bool {
    switch (pv.thetaKind) {
    case ThetaKind::EXACT: return deg == pv.theta;
    case ThetaKind::AT_LEAST: return deg >= pv.theta;
    case ThetaKind::ANY: return true;
    }
    return false;
}

auto signFits(const SignedPlaneGraph& sg, const std::vector<int>& cyc, SignReq req) -> bool {
    if (req == SignReq::ANY) return true;
    auto s = cycleSign(sg, cyc);
    return (req == SignReq::POS) == (s == Sign::POSITIVE);
}

// The walk appears as consecutive vertices of some face walk, in either direction.
auto walkOnFace(const PlaneGraph& g, const std::vector<int>& walk) -> bool {
    auto onWalk = [&](const std::vector<int>& fw, const std::vector<int>& w) {
        int L = static_cast<int>(fw.size()), k = static_cast<int>(w.size());
        if (k > L) return false;
        for (int s = 0; s < L; ++s) {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) ok = fw[(s + i) % L] == w[i];
            if (ok) return true;
        }
        return false;
    };
    auto rev = walk;
    std::reverse(rev.begin(), rev.end());
    for (const auto& f : g.faces())
        if (onWalk(f.walk, walk) || onWalk(f.walk, rev)) return true;
    return false;
}

} // namespace

auto match(const SignedPlaneGraph& sg, const ConfigPattern& p, std::size_t limit) -> MatchResult {
    const auto& g = sg.graph;
    MatchResult res;
    auto mo = matchOrder(p);
    std::vector<int> attachments;
    for (int v = 0; v < p.size(); ++v)
        if (p.vertices[v].attachment()) attachments.push_back(v);
    std::vector<int> img(p.size(), -1);
    std::vector<bool> used(g.n(), false);
    std::set<std::vector<int>> orbitSets;
    int depth = static_cast<int>(mo.order.size());

    auto finish = [&] {
        for (const auto& c : p.cycles) {
            std::vector<int> hc;
            for (int v : c.cycle) hc.push_back(img[v]);
            if (!signFits(sg, hc, c.sign)) return;
        }
        for (const auto& w : p.facialWalks) {
            std::vector<int> hw;
            for (int v : w) hw.push_back(img[v]);
            if (!walkOnFace(g, hw)) return;
        }
        res.maps.push_back({img});
        std::vector<int> coreSet;
        for (int v : mo.order) coreSet.push_back(img[v]);
        std::sort(coreSet.begin(), coreSet.end());
        orbitSets.insert(coreSet);
    };

    std::function<void(std::size_t)> placeAttachments = [&](std::size_t i) {
        if (res.maps.size() >= limit) {
            res.truncated = true;
            return;
        }
        if (i == attachments.size()) {
            finish();
            return;
        }
        int a = attachments[i];
        for (int x : g.rotation(img[p.vertices[a].owner])) {
            if (used[x]) continue;
            used[x] = true;
            img[a] = x;
            placeAttachments(i + 1);
            img[a] = -1;
            used[x] = false;
            if (res.truncated) return;
        }
    };

    auto fits = [&](int v, int x) {
        if (used[x]) return false;
        const auto& pv = p.vertices[v];
        int deg = g.degree(x);
        if (!degreeFits(pv, deg)) return false;
        if (pv.internal && g.isExternal(x)) return false;
        if (deg < p.coreDegree(v) + static_cast<int>(p.attachmentsOf(v).size())) return false;
        for (int j = 0; j < depth; ++j) {
            int w = mo.order[j];
            if (img[w] < 0) break;
            if (p.hasEdge(v, w) != g.adjacent(x, img[w])) return false;
        }
        return true;
    };

    std::function<void(int)> placeCore = [&](int i) {
        if (res.truncated) return;
        if (i == depth) {
            placeAttachments(0);
            return;
        }
        int v = mo.order[i];
        std::vector<int> cand;
        if (mo.parent[i] >= 0) {
            cand = g.rotation(img[mo.parent[i]]);
        } else {
            cand.resize(g.n());
            for (int x = 0; x < g.n(); ++x) cand[x] = x;
        }
        for (int x : cand) {
            if (!fits(v, x)) continue;
            img[v] = x;
            used[x] = true;
            placeCore(i + 1);
            used[x] = false;
            img[v] = -1;
            if (res.truncated) return;
        }
    };
    placeCore(0);
    res.orbits = static_cast<int>(orbitSets.size());
    return res;
}

auto occurrenceHolds(const SignedPlaneGraph& sg, const ConfigPattern& p, const Occurrence& occ) -> bool {
    const auto& g = sg.graph;
    const auto& img = occ.image;
    if (static_cast<int>(img.size()) != p.size()) return false;
    std::set<int> seen;
    for (int x : img)
        if (x < 0 || x >= g.n() || !seen.insert(x).second) return false;
    for (int v = 0; v < p.size(); ++v) {
        const auto& pv = p.vertices[v];
        if (pv.attachment()) {
            if (!g.adjacent(img[v], img[pv.owner])) return false;
            continue;
        }
        if (!degreeFits(pv, g.degree(img[v])) || (pv.internal && g.isExternal(img[v]))) return false;
        for (int u = 0; u < p.size(); ++u)
            if (u != v && !p.vertices[u].attachment() && p.hasEdge(u, v) != g.adjacent(img[u], img[v])) return false;
    }
    for (const auto& c : p.cycles) {
        std::vector<int> hc;
        for (int v : c.cycle) hc.push_back(img[v]);
        if (!signFits(sg, hc, c.sign)) return false;
    }
    for (const auto& w : p.facialWalks) {
        std::vector<int> hw;
        for (int v : w) hw.push_back(img[v]);
        if (!walkOnFace(g, hw)) return false;
    }
    return true;
}

auto scanAll(const SignedPlaneGraph& sg, const Catalog& c, int maxK) -> ScanSummary {
    const auto& g = sg.graph;
    ScanSummary out;
    auto coreImage = [](const ConfigPattern& p, const Occurrence& o) {
        std::vector<int> vs;
        for (int v = 0; v < p.size(); ++v)
            if (!p.vertices[v].attachment()) vs.push_back(o.image[v]);
        std::sort(vs.begin(), vs.end());
        return vs;
    };
    auto record = [&](const std::string& entry, const ConfigPattern& p) {
        auto r = match(sg, p, 1000);
        std::set<std::vector<int>> seen;
        for (const auto& o : r.maps) {
            auto vs = coreImage(p, o);
            if (seen.insert(vs).second) out.hits.push_back({entry, p.name, vs});
        }
    };
    bool haveIPort3 = false;
    for (const auto& e : c.entries) {
        if (e.builtin == "I" || e.builtin == "J" || e.builtin == "I-kernel") continue;
        if (e.builtin == "I-port3") {
            if (haveIPort3) continue;
            haveIPort3 = true;
            for (int k = 1; k <= maxK; ++k) record(e.name, buildIPortDegree3(k));
            continue;
        }
        for (const auto& p : c.instantiate(e.name, maxK)) record(e.name, p);
    }
    if (!haveIPort3)
        for (int k = 1; k <= maxK; ++k) record("a-1", buildIPortDegree3(k));

    for (int k = 2; k <= maxK; ++k) {
        if (k == 3) continue;
        auto jp = buildJ(k);
        auto r = match(sg, jp, 1000);
        std::set<std::vector<int>> seen;
        for (const auto& o : r.maps) {
            JOccurrence jo;
            jo.k = k;
            for (int i = 0; i <= k; ++i) jo.u.push_back(o.image[jp.at("u" + std::to_string(i))]);
            auto key = jo.u;
            if (key.front() > key.back()) std::reverse(key.begin(), key.end());
            if (seen.insert(key).second) out.jOccurrences.push_back(jo);
        }
    }

    auto flag = [&](const std::string& kind, const std::string& detail, std::vector<int> vs) {
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        out.structural.push_back({kind, detail, vs});
    };
    auto b = boundaryAudit(g);
    const auto& outer = g.face(g.outerFace()).walk;
    if (b.tooLong) flag("boundary-too-long", "outer face has length " + std::to_string(b.outerLength), outer);
    if (b.outerNotCycle) flag("boundary-not-cycle", "outer walk repeats a vertex", outer);
    for (auto [u, v] : b.chords) flag("boundary-chord", "chord of the outer cycle", {u, v});
    for (int v : b.cutVertices) flag("cut-vertex", "cut vertex", {v});
    for (int v : b.lowDegreeInternal) flag("low-degree-internal", "internal vertex of degree at most 2", {v});
    for (auto& cyc : forbiddenCycleCheck(g, {4, 6, 8}))
        flag("forbidden-cycle", std::to_string(cyc.size()) + "-cycle", cyc);
    for (auto& cyc : facialCycleCheck(g))
        flag("non-facial-odd-cycle", std::to_string(cyc.size()) + "-cycle bounds no face", cyc);
    for (auto& cyc : separatingCycles(g, 12))
        flag("separating-cycle", std::to_string(cyc.size()) + "-cycle with vertices inside", cyc);
    for (auto& sv : stringLengthCheck(g)) {
        auto vs = sv.string.vertices;
        vs.insert(vs.end(), sv.string.endpoints.begin(), sv.string.endpoints.end());
        flag("long-string",
             std::to_string(sv.string.vertices.size()) + "-string on a " + std::to_string(sv.faceLength) + "-face", vs);
    }
    auto cls = classifyAll(sg);
    for (auto& jv : checkJFaceConstraints(sg, cls.nice, out.jOccurrences)) flag(jv.rule, jv.detail, jv.occurrence.u);
    return out;
}

} // namespace dp3
