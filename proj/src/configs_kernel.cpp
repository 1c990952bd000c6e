#include "dp3/configs.hpp"

#include "dp3/errors.hpp"
#include "dp3/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>

namespace dp3 {

namespace {

constexpr std::size_t kMaxStoredFailures = 20;

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    auto find(int x) -> int {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
};

auto estimate(double b, std::size_t e) -> double { return std::pow(b, static_cast<double>(e)); }

void checkBudget(const std::string& name, double est, std::uint64_t budget) {
    if (est <= static_cast<double>(budget)) return;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", est);
    throw EnumerationBudgetExceeded(name + ": about " + buf + " checks exceed the budget of " + std::to_string(budget));
}

// Advances a base-`radix` odometer; false once it wraps.
auto advance(std::vector<int>& digits, int radix) -> bool {
    for (int& d : digits) {
        if (++d < radix) return true;
        d = 0;
    }
    return false;
}

// The pattern as a kernel model: a spanning forest fixed straight, the rest enumerated.
struct Model {
    const ConfigPattern& p;
    int n;
    std::vector<std::array<int, 2>> edges;
    std::vector<bool> tree;
    std::vector<int> cotree;
    std::vector<bool> removed;
    std::vector<bool> frontier;  // kept and not the port goal
    std::vector<int> compOf;     // removed component of each removed vertex
    int comps = 0;
    std::vector<int> groupOf;    // co-tree edge position -> component, or `comps` for the frontier group
    std::vector<std::array<int, 3>> pairs;  // equality (a, b, -1) or insert (a, b, perm)
    std::vector<int> cls;        // frontier equality class of each frontier vertex

    explicit Model(const ConfigPattern& pat) : p(pat), n(pat.size()), edges(pat.edges) {
        const auto& s = p.script;
        removed.assign(n, false);
        for (int v : s.remove) removed[v] = true;
        frontier.assign(n, false);
        for (int v = 0; v < n; ++v)
            frontier[v] = !removed[v] && !(s.goal == ReductionScript::Goal::PORT && v == s.goalVertex);
        for (auto [a, b] : s.identify) pairs.push_back({a, b, -1});
        for (auto [a, b] : s.equal) pairs.push_back({a, b, -1});
        for (const auto& e : s.insert) pairs.push_back({e.a, e.b, static_cast<int>(e.sign)});
        for (auto [a, b, _] : pairs)
            if (!frontier[a] || !frontier[b])
                throw CatalogError(p.name + ": script pair must join two frontier vertices");
        buildForest();
        buildGroups();
        UnionFind eq(n);
        for (auto [a, b, s2] : pairs)
            if (s2 < 0) eq.parent[eq.find(a)] = eq.find(b);
        cls.assign(n, -1);
        for (int v = 0; v < n; ++v)
            if (frontier[v]) cls[v] = eq.find(v);
    }

    auto edgeIndex(int a, int b) const -> int {
        for (std::size_t e = 0; e < edges.size(); ++e)
            if ((edges[e][0] == a && edges[e][1] == b) || (edges[e][0] == b && edges[e][1] == a))
                return static_cast<int>(e);
        return -1;
    }

    void buildForest() {
        tree.assign(edges.size(), false);
        UnionFind uf(n);
        for (const auto& path : p.script.straight)
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                int e = edgeIndex(path[i], path[i + 1]);
                int a = uf.find(path[i]), b = uf.find(path[i + 1]);
                if (a == b) throw CyclicEdgeSet(p.name + ": straight paths close a cycle");
                uf.parent[a] = b;
                tree[e] = true;
            }
        // a component may be switched as a whole when no script pair leaves it and
        // every insert inside it is straight
        std::vector<bool> freeRoot(n, true);
        for (auto [a, b, s] : pairs) {
            int ra = uf.find(a), rb = uf.find(b);
            if (ra != rb || (s >= 0 && static_cast<Perm>(s) != kId)) freeRoot[ra] = freeRoot[rb] = false;
        }
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (tree[e]) continue;
            int a = uf.find(edges[e][0]), b = uf.find(edges[e][1]);
            if (a == b || !(freeRoot[a] || freeRoot[b])) continue;
            bool merged = freeRoot[a] && freeRoot[b];
            uf.parent[a] = b;
            freeRoot[b] = merged;
            tree[e] = true;
        }
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (!tree[e]) cotree.push_back(static_cast<int>(e));
    }

    void buildGroups() {
        compOf.assign(n, -1);
        for (int s = 0; s < n; ++s) {
            if (!removed[s] || compOf[s] >= 0) continue;
            std::queue<int> q;
            q.push(s);
            compOf[s] = comps;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int u : p.neighbors(v))
                    if (removed[u] && compOf[u] < 0) {
                        compOf[u] = comps;
                        q.push(u);
                    }
            }
            ++comps;
        }
        for (int e : cotree) {
            auto [a, b] = edges[e];
            groupOf.push_back(compOf[a] >= 0 ? compOf[a] : compOf[b] >= 0 ? compOf[b] : comps);
        }
    }

    // σ along a -> b for edge e under `sig` (indexed by edge).
    static auto dir(const std::vector<Perm>& sig, const std::array<int, 2>& ed, int e, int a) -> Perm {
        return ed[0] == a ? sig[e] : invert(sig[e]);
    }

    auto cycleOk(const CycleConstraint& c, const std::vector<Perm>& sig) const -> bool {
        if (c.sign == SignReq::ANY) return true;
        Perm prod = kId;
        int k = static_cast<int>(c.cycle.size());
        for (int i = 0; i < k; ++i) {
            int a = c.cycle[i], b = c.cycle[(i + 1) % k];
            int e = edgeIndex(a, b);
            prod = compose(dir(sig, edges[e], e, a), prod);
        }
        return (prod == kId) == (c.sign == SignReq::POS);
    }

    // Groups of the co-tree edges on a cycle constraint.
    auto cycleGroups(const CycleConstraint& c) const -> std::set<int> {
        std::set<int> g;
        int k = static_cast<int>(c.cycle.size());
        for (int i = 0; i < k; ++i) {
            int e = edgeIndex(c.cycle[i], c.cycle[(i + 1) % k]);
            auto it = std::find(cotree.begin(), cotree.end(), e);
            if (it != cotree.end()) g.insert(groupOf[it - cotree.begin()]);
        }
        return g;
    }

    auto edgeName(int e) const -> std::string {
        return p.vertices[edges[e][0]].name + "-" + p.vertices[edges[e][1]].name;
    }
};

// Frontier constraint system over equality classes for a fixed signature.
struct FrontierCsp {
    std::vector<int> reps;            // class representatives
    std::map<int, int> index;         // representative -> variable
    std::optional<ColoringProblem> csp;
    bool empty = false;

    FrontierCsp(const Model& m, const std::vector<Perm>& sig) {
        for (int v = 0; v < m.n; ++v)
            if (m.frontier[v] && m.cls[v] == v) {
                index[v] = static_cast<int>(reps.size());
                reps.push_back(v);
            }
        csp.emplace(static_cast<int>(reps.size()));
        auto arc = [&](int a, int b, Perm s) {
            int ra = index.at(m.cls[a]), rb = index.at(m.cls[b]);
            if (ra != rb) {
                csp->addArc(ra, rb, s);
                return;
            }
            unsigned mask = 0;
            for (int c = 1; c <= 3; ++c)
                if (apply(s, c) != c) mask |= 1u << (c - 1);
            csp->restrict(ra, mask);
            if (csp->domain(ra) == 0) empty = true;
        };
        for (std::size_t e = 0; e < m.edges.size(); ++e) {
            auto [a, b] = m.edges[e];
            if (m.frontier[a] && m.frontier[b]) arc(a, b, sig[e]);
        }
        for (auto [a, b, s] : m.pairs)
            if (s >= 0) arc(a, b, static_cast<Perm>(s));
    }

    auto colorOf(const Coloring& c, int v) const -> int { return c[index.at(v)]; }
};

struct Verifier {
    const Model& m;
    std::uint64_t budget;
    KernelReport& rep;

    auto describe(const std::vector<int>& cot, const std::vector<Perm>& sig, const Coloring& full,
                  const std::vector<int>& shown, const std::string& detail) -> KernelFailure {
        KernelFailure f;
        for (int e : cot) f.signature[m.edgeName(e)] = toWord(sig[e]);
        for (int v : shown)
            if (full[v]) f.coloring[m.p.vertices[v].name] = full[v];
        f.detail = detail;
        return f;
    }

    void fail(KernelFailure f) {
        ++rep.failureCount;
        if (rep.failures.size() < kMaxStoredFailures) rep.failures.push_back(std::move(f));
    }

    // Valid assignments of the co-tree edges in `cot` under the given constraints.
    auto assignments(const std::vector<int>& cot, const std::vector<const CycleConstraint*>& cons)
        -> std::vector<std::vector<Perm>> {
        std::vector<std::vector<Perm>> out;
        std::vector<int> digits(cot.size(), 0);
        std::vector<Perm> sig(m.edges.size(), kId);
        do {
            for (std::size_t i = 0; i < cot.size(); ++i) sig[cot[i]] = kAllPerms[digits[i]];
            bool ok = true;
            for (const auto* c : cons) ok = ok && m.cycleOk(*c, sig);
            if (ok) out.push_back(sig);
        } while (advance(digits, 6));
        return out;
    }

    // Proper extension to the non-frontier vertices with the frontier colors fixed.
    auto extends(const std::vector<Perm>& sig, const Coloring& frontierColors, int goalColor) -> bool {
        ColoringProblem cp(m.n);
        for (std::size_t e = 0; e < m.edges.size(); ++e) cp.addArc(m.edges[e][0], m.edges[e][1], sig[e]);
        for (int v = 0; v < m.n; ++v)
            if (frontierColors[v]) cp.fix(v, frontierColors[v]);
        if (goalColor) cp.fix(m.p.script.goalVertex, goalColor);
        return cp.solve().has_value();
    }

    void global() {
        std::uint64_t classes = 0;
        for (int v = 0; v < m.n; ++v) classes += m.frontier[v] && m.cls[v] == v;
        bool port = m.p.script.goal == ReductionScript::Goal::PORT;
        checkBudget(m.p.name, estimate(6, m.cotree.size()) * estimate(3, classes), budget);
        std::vector<const CycleConstraint*> cons;
        for (const auto& c : m.p.cycles) cons.push_back(&c);
        auto sigs = assignments(m.cotree, cons);
        rep.signatures = sigs.size();
        if (sigs.empty()) {
            rep.vacuous = true;
            return;
        }
        std::vector<int> shown;
        for (int v = 0; v < m.n; ++v)
            if (m.frontier[v]) shown.push_back(v);
        for (const auto& sig : sigs) {
            FrontierCsp fc(m, sig);
            if (fc.empty) continue;
            fc.csp->forEach([&](const Coloring& c) {
                ++rep.checks;
                Coloring fcol(m.n, 0);
                for (int v : shown) fcol[v] = fc.colorOf(c, m.cls[v]);
                if (!port) {
                    if (!extends(sig, fcol, 0)) fail(describe(m.cotree, sig, fcol, shown, "no extension"));
                    return true;
                }
                int good = 0;
                for (int col = 1; col <= 3; ++col) good += extends(sig, fcol, col);
                if (good < m.p.script.goalMin)
                    fail(describe(m.cotree, sig, fcol, shown,
                                  std::to_string(good) + " colors of " + m.p.vertices[m.p.script.goalVertex].name +
                                      " extend"));
                return true;
            });
        }
    }

    void local() {
        rep.decomposed = true;
        int groups = m.comps + 1;
        std::vector<std::vector<int>> cot(groups);
        for (std::size_t i = 0; i < m.cotree.size(); ++i) cot[m.groupOf[i]].push_back(m.cotree[i]);
        std::vector<std::vector<const CycleConstraint*>> cons(groups);
        for (const auto& c : m.p.cycles) {
            auto g = m.cycleGroups(c);
            if (!g.empty()) cons[*g.begin()].push_back(&c);
        }
        std::vector<std::vector<int>> nb(m.comps);
        for (int v = 0; v < m.n; ++v)
            if (m.compOf[v] >= 0)
                for (int u : m.p.neighbors(v))
                    if (m.frontier[u]) nb[m.compOf[v]].push_back(u);
        double bound = 0;
        for (int c = 0; c < m.comps; ++c) {
            auto& N = nb[c];
            std::sort(N.begin(), N.end());
            N.erase(std::unique(N.begin(), N.end()), N.end());
            bound += estimate(6, cot[c].size()) * estimate(3, N.size());
        }
        checkBudget(m.p.name, std::max(bound, estimate(6, cot[m.comps].size())), budget);
        auto frontierSigs = assignments(cot[m.comps], cons[m.comps]);
        std::vector<std::vector<std::vector<Perm>>> localSigs(m.comps);
        bool vacuous = frontierSigs.empty();
        for (int c = 0; c < m.comps; ++c) {
            localSigs[c] = assignments(cot[c], cons[c]);
            vacuous = vacuous || localSigs[c].empty();
            rep.signatures += localSigs[c].size();
        }
        if (vacuous) {
            rep.vacuous = true;
            return;
        }
        std::vector<FrontierCsp> fcsps;
        for (const auto& s : frontierSigs) fcsps.emplace_back(m, s);

        for (int c = 0; c < m.comps; ++c) {
            const auto& N = nb[c];
            auto tuples = localTuples(N);
            std::map<std::vector<int>, bool> realizable;
            auto isRealizable = [&](const std::vector<int>& t) {
                auto it = realizable.find(t);
                if (it != realizable.end()) return it->second;
                bool ok = false;
                for (auto& fc : fcsps) {
                    if (fc.empty) continue;
                    ColoringProblem cp = *fc.csp;
                    for (std::size_t i = 0; i < N.size(); ++i) cp.fix(fc.index.at(m.cls[N[i]]), t[i]);
                    bool clash = false;
                    for (std::size_t i = 0; i < N.size(); ++i) clash = clash || cp.domain(fc.index.at(m.cls[N[i]])) == 0;
                    if (!clash && cp.solve()) {
                        ok = true;
                        break;
                    }
                }
                return realizable[t] = ok;
            };
            for (const auto& sig : localSigs[c]) {
                for (const auto& t : tuples) {
                    ++rep.checks;
                    Coloring fcol(m.n, 0);
                    for (std::size_t i = 0; i < N.size(); ++i) fcol[N[i]] = t[i];
                    if (extendsLocal(sig, fcol, c)) continue;
                    if (!isRealizable(t)) continue;
                    fail(describe(cot[c], sig, fcol, N, "no extension of removed component " + std::to_string(c)));
                }
            }
        }
    }

    // Colorings of N consistent with the script pairs and straight edges among N.
    auto localTuples(const std::vector<int>& N) -> std::vector<std::vector<int>> {
        std::vector<std::vector<int>> out;
        std::vector<int> digits(N.size(), 0);
        do {
            auto col = [&](int v) {
                auto it = std::find(N.begin(), N.end(), v);
                return it == N.end() ? 0 : digits[it - N.begin()] + 1;
            };
            bool ok = true;
            for (std::size_t i = 0; i < N.size() && ok; ++i)
                for (std::size_t j = i + 1; j < N.size() && ok; ++j)
                    if (m.cls[N[i]] == m.cls[N[j]] && digits[i] != digits[j]) ok = false;
            for (auto [a, b, s] : m.pairs)
                if (s >= 0 && col(a) && col(b) && apply(static_cast<Perm>(s), col(a)) == col(b)) ok = false;
            for (std::size_t e = 0; e < m.edges.size() && ok; ++e) {
                auto [a, b] = m.edges[e];
                if (m.tree[e] && col(a) && col(b) && col(a) == col(b)) ok = false;
            }
            if (ok) {
                std::vector<int> t;
                for (int d : digits) t.push_back(d + 1);
                out.push_back(t);
            }
        } while (advance(digits, 3));
        return out;
    }

    auto extendsLocal(const std::vector<Perm>& sig, const Coloring& fcol, int c) -> bool {
        ColoringProblem cp(m.n);
        for (std::size_t e = 0; e < m.edges.size(); ++e) {
            auto [a, b] = m.edges[e];
            if (m.compOf[a] == c || m.compOf[b] == c) cp.addArc(a, b, sig[e]);
        }
        for (int v = 0; v < m.n; ++v) {
            if (fcol[v]) cp.fix(v, fcol[v]);
            else if (m.compOf[v] != c) cp.fix(v, 1);  // unrelated vertices carry no arcs
        }
        return cp.solve().has_value();
    }
};

} // namespace

auto verifyKernel(const ConfigPattern& p, std::uint64_t budget) -> KernelReport {
    auto t0 = std::chrono::steady_clock::now();
    if (!p.hasScript) throw CatalogError(p.name + ": no reduction script");
    validatePattern(p);
    KernelReport rep;
    rep.name = p.name;
    Model m(p);
    Verifier ver{m, budget, rep};
    bool spanning = p.script.goal == ReductionScript::Goal::PORT;
    for (const auto& c : p.cycles) {
        if (c.sign == SignReq::ANY) continue;
        auto g = m.cycleGroups(c);
        if (g.size() > 1) spanning = true;
        if (g.empty() && c.sign == SignReq::NEG) rep.vacuous = true;  // an all-straight cycle is positive
    }
    if (!rep.vacuous) {
        if (spanning)
            ver.global();
        else
            ver.local();
    }
    rep.pass = rep.failureCount == 0;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

auto triangleRecolorKernel() -> RecolorReport {
    RecolorReport r;
    // u'-u, u-w, w-v, v-v' straight; σ = σ(u,v) ranges over S3
    for (Perm s : kAllPerms)
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) {
                ++r.cases;
                int free = 0;
                for (int c = 1; c <= 3; ++c) {
                    bool ok = false;
                    for (int x = 1; x <= 3 && !ok; ++x)
                        for (int y = 1; y <= 3 && !ok; ++y)
                            ok = x != a && x != c && y != b && y != c && y != apply(s, x);
                    free += ok;
                }
                if (s == kId && a != b) {
                    ++r.part1Cases;
                    if (free != 3) ++r.failures;
                }
                if (s != kId) {
                    ++r.part2Cases;
                    if (free < 2) ++r.failures;
                }
            }
    return r;
}

} // namespace dp3
