#include "dp3/signing.hpp"

#include "dp3/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace dp3 {

auto SignedPlaneGraph::sigma(int u, int v) const -> Perm {
    int e = graph.edgeId(u, v);
    if (e < 0) throw InvalidRotation(std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
    return u < v ? sig[e] : invert(sig[e]);
}

void SignedPlaneGraph::setSigma(int u, int v, Perm p) {
    int e = graph.edgeId(u, v);
    if (e < 0) throw InvalidRotation(std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
    sig[e] = u < v ? p : invert(p);
}

auto switchAt(const SignedPlaneGraph& sg, int v, Perm tau) -> SignedPlaneGraph {
    SignedPlaneGraph out = sg;
    for (int a : sg.graph.rotation(v)) out.setSigma(a, v, compose(tau, sg.sigma(a, v)));
    if (out.precolor[v] != 0) out.precolor[v] = apply(tau, out.precolor[v]);
    return out;
}

auto normalizeTree(const SignedPlaneGraph& sg, const std::vector<std::array<int, 2>>& edges)
    -> Normalized {
    int n = sg.n();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        if (!sg.graph.adjacent(a, b))
            throw CyclicEdgeSet(std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
        int ra = find(a), rb = find(b);
        if (ra == rb) throw CyclicEdgeSet("edge set contains a cycle through " + std::to_string(a));
        parent[ra] = rb;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    Normalized r{sg, std::vector<Perm>(n, kId)};
    std::vector<bool> seen(n, false);
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int p = q.front();
            q.pop();
            for (int c : adj[p]) {
                if (seen[c]) continue;
                seen[c] = true;
                Perm tau = invert(r.sg.sigma(p, c));
                r.sg = switchAt(r.sg, c, tau);
                r.taus[c] = tau;
                q.push(c);
            }
        }
    }
    return r;
}

auto cycleProduct(const SignedPlaneGraph& sg, const std::vector<int>& cycle) -> Perm {
    int k = static_cast<int>(cycle.size());
    if (k < 3) throw NotACycle("a cycle needs at least 3 vertices");
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw NotACycle("repeated vertex");
    Perm prod = kId;
    for (int i = 0; i < k; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % k];
        if (a < 0 || b < 0 || a >= sg.n() || b >= sg.n() || !sg.graph.adjacent(a, b))
            throw NotACycle(std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
        prod = compose(sg.sigma(a, b), prod);
    }
    return prod;
}

auto cycleSign(const SignedPlaneGraph& sg, const std::vector<int>& cycle) -> Sign {
    return cycleProduct(sg, cycle) == kId ? Sign::POSITIVE : Sign::NEGATIVE;
}

auto violations(const SignedPlaneGraph& sg, const Coloring& phi) -> std::vector<std::array<int, 2>> {
    std::vector<std::array<int, 2>> out;
    for (int e = 0; e < sg.graph.m(); ++e) {
        auto [u, v] = sg.graph.edge(e);
        if (phi[u] == 0 || phi[v] == 0) continue;
        if (apply(sg.sig[e], phi[u]) == phi[v]) out.push_back({u, v});
    }
    return out;
}

auto isProper(const SignedPlaneGraph& sg, const Coloring& phi) -> bool {
    return violations(sg, phi).empty();
}

auto coverFromLists(const PlaneGraph& g, const std::vector<std::vector<int>>& lists) -> Cover {
    Cover c{lists, std::vector<std::vector<std::array<int, 2>>>(g.m())};
    for (auto& l : c.lists) std::sort(l.begin(), l.end());
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edge(e);
        for (int i : c.lists[u])
            if (std::binary_search(c.lists[v].begin(), c.lists[v].end(), i)) c.matchings[e].push_back({i, i});
    }
    return c;
}

auto isCoverColoring(const PlaneGraph& g, const Cover& cover, const std::vector<int>& choice) -> bool {
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edge(e);
        for (auto [a, b] : cover.matchings[e])
            if (choice[u] == a && choice[v] == b) return false;
    }
    return true;
}

auto signedFromCover(const PlaneGraph& g, const Cover& cover) -> SignedPlaneGraph {
    SignedPlaneGraph sg(g);
    std::vector<std::vector<int>> lists = cover.lists;
    for (int v = 0; v < g.n(); ++v) {
        if (lists[v].size() != 3)
            throw ListSizeNot3("vertex " + std::to_string(v) + " has " + std::to_string(lists[v].size()) +
                               " labels");
        std::sort(lists[v].begin(), lists[v].end());
    }
    auto index = [&](int v, int label) {
        auto it = std::find(lists[v].begin(), lists[v].end(), label);
        if (it == lists[v].end())
            throw InvalidCover("matching uses a label outside L(" + std::to_string(v) + ")");
        return static_cast<int>(it - lists[v].begin());
    };
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edge(e);
        std::array<int, 3> img{-1, -1, -1};
        std::array<bool, 3> usedV{false, false, false};
        for (auto [a, b] : cover.matchings[e]) {
            int i = index(u, a), j = index(v, b);
            if (img[i] >= 0 || usedV[j]) throw InvalidCover("M_e is not a matching");
            img[i] = j;
            usedV[j] = true;
        }
        for (int i = 0; i < 3; ++i) {
            if (img[i] >= 0) continue;
            for (int j = 0; j < 3; ++j)
                if (!usedV[j]) {
                    img[i] = j;
                    usedV[j] = true;
                    break;
                }
        }
        sg.sig[e] = fromImage(img[0] + 1, img[1] + 1, img[2] + 1);
    }
    return sg;
}

} // namespace dp3
