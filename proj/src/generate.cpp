#include "dp3/cli.hpp"

#include "dp3/errors.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <stdexcept>

namespace dp3 {

namespace {

constexpr int kForbidden[] = {4, 6, 8};

// Lengths of simple a-b paths with at most `maxLen` edges, as a bitmask.
auto pathLengths(const std::vector<std::vector<int>>& rot, int a, int b, int maxLen) -> unsigned {
    unsigned found = 0;
    std::vector<bool> used(rot.size(), false);
    auto dfs = [&](auto&& self, int v, int len) -> void {
        if (v == b) {
            found |= 1u << len;
            return;
        }
        if (len == maxLen) return;
        used[v] = true;
        for (int w : rot[v])
            if (!used[w]) self(self, w, len + 1);
        used[v] = false;
    };
    dfs(dfs, a, 0);
    return found;
}

auto pick(std::mt19937_64& rng, int lo, int hi) -> int {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

} // namespace

auto generate(int n, std::uint64_t seed, const GenOptions& opt) -> SignedPlaneGraph {
    if (n > opt.maxN) throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(opt.maxN));
    std::mt19937_64 rng(seed);
    auto pickBoundary = [&]() {
        // A 3-cycle can only grow by paths of 8 or more edges.
        std::vector<int> allowed;
        for (int c : {3, 5, 7, 9, 10, 11, 12})
            if (c <= n && (c != 3 || n == 3 || n >= 10)) allowed.push_back(c);
        if (allowed.empty()) throw std::invalid_argument("n must be at least 3");
        return allowed[pick(rng, 0, static_cast<int>(allowed.size()) - 1)];
    };
    int L = opt.boundary;
    if (L != 0 && (L < 3 || L > 12 || L == 4 || L == 6 || L == 8))
        throw std::invalid_argument("boundary length " + std::to_string(L) + " is not an allowed cycle length");
    if (L > n) throw std::invalid_argument("n is smaller than the boundary length");

    std::vector<std::vector<int>> rot;
    std::vector<bool> external;
    PlaneGraph g;
    const int outerTail = 0, outerHead = 1;

    auto tryAddPath = [&](int len) -> bool {
        std::vector<int> inner;
        for (const auto& f : g.faces())
            if (f.id != g.outerFace()) inner.push_back(f.id);
        const auto& walk = g.face(inner[pick(rng, 0, static_cast<int>(inner.size()) - 1)]).walk;
        int d = static_cast<int>(walk.size());
        int i = pick(rng, 0, d - 1);
        std::vector<int> low;
        for (int k = 0; k < d; ++k)
            if (rot[walk[k]].size() == 2) low.push_back(k);
        if (!low.empty() && pick(rng, 0, 9) < 7) i = low[pick(rng, 0, static_cast<int>(low.size()) - 1)];
        int s = std::min(d - 1, 1 + static_cast<int>(std::geometric_distribution<int>(0.45)(rng)));
        int j = (i + s) % d;
        int a = walk[i], b = walk[j];
        if (a == b) return false;
        if (len == 1 && (g.adjacent(a, b) || (external[a] && external[b]))) return false;
        unsigned lens = pathLengths(rot, a, b, 8 - len);
        for (int c : kForbidden)
            if (c - len >= 1 && (lens >> (c - len) & 1)) return false;

        int base = static_cast<int>(rot.size());
        std::vector<int> path{a};
        for (int k = 1; k < len; ++k) path.push_back(base + k - 1);
        path.push_back(b);
        auto insertAfter = [&](int v, int prev, int x) {
            auto& r = rot[v];
            r.insert(std::find(r.begin(), r.end(), prev) + 1, x);
        };
        auto before = rot;
        rot.resize(base + len - 1);
        external.resize(base + len - 1, false);
        for (int k = 1; k < len; ++k) rot[path[k]] = {path[k - 1], path[k + 1]};
        insertAfter(a, walk[(i + d - 1) % d], path[1]);
        insertAfter(b, walk[(j + d - 1) % d], path[len - 1]);
        try {
            g = PlaneGraph(rot, outerTail, outerHead);
        } catch (const Error&) {
            rot = std::move(before);
            external.resize(base);
            g = PlaneGraph(rot, outerTail, outerHead);
            return false;
        }
        return true;
    };

    bool grown = false;
    for (int restart = 0; restart < 50 && !grown; ++restart) {
        if (opt.boundary == 0) L = pickBoundary();
        rot.assign(L, {});
        for (int i = 0; i < L; ++i) rot[i] = {(i + L - 1) % L, (i + 1) % L};
        external.assign(L, true);
        g = PlaneGraph(rot, outerTail, outerHead);
        long budget = 40L * n + 200;
        while (g.n() < n && budget-- > 0) {
            int room = n - g.n();
            int cap = pick(rng, 0, 4) == 0 ? 9 : 6;
            if (tryAddPath(pick(rng, 2, std::min(room + 1, cap))))
                for (int k = 0; k < 6; ++k) tryAddPath(1);
        }
        grown = g.n() == n;
    }
    if (!grown) throw GenerationBudgetExceeded("could not grow to " + std::to_string(n) + " vertices");
    for (int k = 0; k < 12 * n; ++k) tryAddPath(1);

    SignedPlaneGraph sg(g);
    std::vector<bool> seen(n, false);
    std::vector<bool> tree(g.m(), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.rotation(v))
            if (!seen[w]) {
                seen[w] = true;
                tree[g.edgeId(v, w)] = true;
                q.push(w);
            }
    }
    for (int e = 0; e < g.m(); ++e)
        if (!tree[e]) {
            auto [u, v] = g.edge(e);
            sg.setSigma(u, v, kAllPerms[pick(rng, 0, 5)]);
        }

    if (opt.precolorBoundary) {
        const auto& walk = g.face(g.outerFace()).walk;
        for (int tries = 0;; ++tries) {
            if (tries == 100000) throw GenerationBudgetExceeded("no proper boundary precoloring found");
            Coloring phi(n, 0);
            for (int v : walk) phi[v] = pick(rng, 1, 3);
            if (isProper(sg, phi)) {
                sg.precolor = phi;
                break;
            }
        }
    }
    return sg;
}

} // namespace dp3
