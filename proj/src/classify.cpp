#include "dp3/classify.hpp"

#include "dp3/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace dp3 {

auto roleName(Role r) -> std::string {
    switch (r) {
        case Role::TWO: return "2";
        case Role::THREE_DELTA_PLUS: return "3D+";
        case Role::THREE_DELTA_MINUS: return "3D-";
        case Role::THREE_DELTA_CIRC: return "3Do";
        case Role::FOUR_BOWTIE: return "4B";
        case Role::C_VERTEX: return "C";
    }
    return "?";
}

auto internalTriangles(const PlaneGraph& g, int v) -> std::vector<int> {
    std::vector<int> out;
    for (int f : g.facesAt(v))
        if (f != g.outerFace() && g.face(f).length() == 3) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

auto facesShareEdge(const PlaneGraph& g, int f, int h) -> bool {
    for (int d : g.face(f).darts)
        for (int e : g.face(h).darts)
            if ((d >> 1) == (e >> 1)) return true;
    return false;
}

auto isFourBowtie(const PlaneGraph& g, int v) -> bool {
    if (g.isExternal(v) || g.degree(v) != 4) return false;
    auto tri = internalTriangles(g, v);
    for (std::size_t i = 0; i < tri.size(); ++i)
        for (std::size_t j = i + 1; j < tri.size(); ++j)
            if (!facesShareEdge(g, tri[i], tri[j])) return true;
    return false;
}

static auto isThreeDeltaVertex(const PlaneGraph& g, int v) -> bool {
    return !g.isExternal(v) && g.degree(v) == 3 && !internalTriangles(g, v).empty();
}

auto outerNeighbor(const PlaneGraph& g, int u) -> int {
    if (!isThreeDeltaVertex(g, u)) throw NotThreeDelta("vertex " + std::to_string(u) + " is not a 3Δ-vertex");
    const auto& walk = g.face(internalTriangles(g, u).front()).walk;
    for (int x : g.rotation(u))
        if (std::find(walk.begin(), walk.end(), x) == walk.end()) return x;
    throw NotThreeDelta("vertex " + std::to_string(u) + " has no neighbor off its 3-face");
}

auto classifyVertices(const SignedPlaneGraph& sg) -> std::vector<VertexRole> {
    const auto& g = sg.graph;
    int n = g.n();
    std::vector<VertexRole> roles(n);
    std::vector<bool> td(n, false);
    for (int v = 0; v < n; ++v) {
        roles[v].external = g.isExternal(v);
        td[v] = isThreeDeltaVertex(g, v);
    }
    auto triangleSign = [&](int f) { return cycleSign(sg, g.face(f).walk); };
    for (int v = 0; v < n; ++v) {
        for (int f : internalTriangles(g, v)) {
            bool all3 = true;
            for (int x : g.face(f).walk) all3 = all3 && !g.isExternal(x) && g.degree(x) == 3;
            if (all3 && triangleSign(f) == Sign::POSITIVE) roles[v].bad = true;
        }
    }
    for (int v = 0; v < n; ++v) {
        auto& r = roles[v];
        if (g.degree(v) == 2) {
            r.role = Role::TWO;
        } else if (td[v]) {
            r.triFace = internalTriangles(g, v).front();
            r.outer = outerNeighbor(g, v);
            int cnt = 0;
            for (int x : g.face(r.triFace).walk) cnt += td[x] ? 1 : 0;
            if (cnt >= 2)
                r.role = triangleSign(r.triFace) == Sign::POSITIVE ? Role::THREE_DELTA_PLUS
                                                                   : Role::THREE_DELTA_MINUS;
            else
                r.role = Role::THREE_DELTA_CIRC;
        } else if (isFourBowtie(g, v)) {
            r.role = Role::FOUR_BOWTIE;
        } else {
            r.role = Role::C_VERTEX;
        }
    }
    for (auto& r : roles)
        if (r.role == Role::THREE_DELTA_CIRC) r.star = !roles[r.outer].bad;
    return roles;
}

auto bowtieConnected(const PlaneGraph& g, const std::vector<VertexRole>& roles, int a, int b) -> bool {
    if (a == b) return true;
    std::vector<bool> seen(g.n(), false);
    std::queue<int> q;
    q.push(a);
    seen[a] = true;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.rotation(x)) {
            if (y == b) return true;
            if (seen[y] || roles[y].role != Role::FOUR_BOWTIE) continue;
            seen[y] = true;
            q.push(y);
        }
    }
    return false;
}

static auto faceVertices(const PlaneGraph& g, const std::vector<int>& faces) -> std::vector<int> {
    std::set<int> vs;
    for (int f : faces)
        for (int x : g.face(f).walk) vs.insert(x);
    return {vs.begin(), vs.end()};
}

auto checkSnowflake(const SignedPlaneGraph& sg, const std::vector<VertexRole>& roles,
                    const std::vector<int>& faces) -> std::optional<RejectedComponent> {
    const auto& g = sg.graph;
    for (int f : faces)
        if (f == g.outerFace() || g.face(f).length() != 3)
            return RejectedComponent{faces, 0, "face " + std::to_string(f) + " is not an internal 3-face"};
    std::set<int> fs(faces.begin(), faces.end());
    auto verts = faceVertices(g, faces);
    for (int w : verts) {
        if (roles[w].role != Role::FOUR_BOWTIE) continue;
        for (int f : internalTriangles(g, w))
            if (!fs.count(f))
                return RejectedComponent{faces, 1,
                                         "4B-vertex " + std::to_string(w) + " has 3-face " + std::to_string(f) +
                                             " outside the set"};
    }
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            int a = verts[i], b = verts[j];
            if (g.adjacent(a, b)) continue;
            if (!bowtieConnected(g, roles, a, b))
                return RejectedComponent{faces, 2,
                                         std::to_string(a) + " and " + std::to_string(b) + " are not 4B-connected"};
        }
    return std::nullopt;
}

auto buildSnowflake(const SignedPlaneGraph& sg, const std::vector<VertexRole>& roles, std::vector<int> faces)
    -> Snowflake {
    const auto& g = sg.graph;
    std::sort(faces.begin(), faces.end());
    Snowflake s;
    s.faces = faces;
    s.vertices = faceVertices(g, faces);
    auto& st = s.stats;
    st.faces = static_cast<int>(faces.size());
    for (int v : s.vertices) {
        const auto& r = roles[v];
        if (r.threeDelta()) {
            s.threeDelta.push_back(v);
            ++st.threeDelta;
            if (r.role == Role::THREE_DELTA_PLUS) ++st.plus;
            if (r.role == Role::THREE_DELTA_MINUS) ++st.minus;
            if (r.role == Role::THREE_DELTA_CIRC) ++st.circ;
            if (r.star) ++st.star;
        } else if (r.role == Role::FOUR_BOWTIE) {
            s.bowtie.push_back(v);
            ++st.bowtie;
        } else if (r.role == Role::TWO) {
            ++st.twoVertices;
        } else {
            s.cVertices.push_back(v);
            int t = 0;
            for (int f : faces) {
                const auto& w = g.face(f).walk;
                t += std::count(w.begin(), w.end(), v) > 0 ? 1 : 0;
            }
            st.t[v] = t;
            bool ext3 = g.isExternal(v) && g.degree(v) == 3;
            bool ext4 = false;
            if (g.isExternal(v) && g.degree(v) == 4) {
                auto tri = internalTriangles(g, v);
                for (std::size_t i = 0; i < tri.size(); ++i)
                    for (std::size_t j = i + 1; j < tri.size(); ++j)
                        ext4 = ext4 || !facesShareEdge(g, tri[i], tri[j]);
            }
            if (ext3 || ext4) {
                st.c1.push_back(v);
                st.t1 += t;
            } else {
                st.c2.push_back(v);
                st.t2 += t;
            }
        }
    }
    return s;
}

auto snowflakes(const SignedPlaneGraph& sg, const std::vector<VertexRole>& roles) -> SnowflakeSet {
    const auto& g = sg.graph;
    int F = static_cast<int>(g.faces().size());
    SnowflakeSet out;
    out.faceOwner.assign(F, -1);
    std::vector<int> comp(F, -1);
    std::vector<bool> tri(F, false);
    for (int f = 0; f < F; ++f) tri[f] = f != g.outerFace() && g.face(f).length() == 3;
    for (int f0 = 0; f0 < F; ++f0) {
        if (!tri[f0] || comp[f0] >= 0) continue;
        std::vector<int> faces{f0};
        comp[f0] = f0;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            for (int x : g.face(faces[i]).walk) {
                if (roles[x].role != Role::FOUR_BOWTIE) continue;
                for (int h : internalTriangles(g, x))
                    if (comp[h] < 0) {
                        comp[h] = f0;
                        faces.push_back(h);
                    }
            }
        }
        std::sort(faces.begin(), faces.end());
        if (auto rej = checkSnowflake(sg, roles, faces)) {
            out.rejected.push_back(*rej);
            continue;
        }
        for (int f : faces) out.faceOwner[f] = static_cast<int>(out.accepted.size());
        out.accepted.push_back(buildSnowflake(sg, roles, faces));
    }
    return out;
}

auto snowflakeGraphH(const PlaneGraph& g, const std::vector<VertexRole>& roles, const Snowflake& s)
    -> std::vector<std::array<int, 2>> {
    std::vector<std::array<int, 2>> out;
    for (std::size_t i = 0; i < s.faces.size(); ++i)
        for (std::size_t j = i + 1; j < s.faces.size(); ++j) {
            const auto& a = g.face(s.faces[i]).walk;
            const auto& b = g.face(s.faces[j]).walk;
            for (int x : a)
                if (roles[x].role == Role::FOUR_BOWTIE && std::find(b.begin(), b.end(), x) != b.end())
                    out.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
    return out;
}

auto niceFaces(const SignedPlaneGraph& sg, const std::vector<VertexRole>& roles, const SnowflakeSet& snow)
    -> std::vector<NiceFaceRecord> {
    const auto& g = sg.graph;
    std::vector<NiceFaceRecord> out;
    auto B = [&](int v) { return roles[v].role == Role::FOUR_BOWTIE; };
    auto D = [&](int v) { return roles[v].threeDelta(); };
    auto bad = [&](int v) { return roles[v].bad; };
    auto big4 = [&](int v) { return g.degree(v) >= 4 || (g.degree(v) == 3 && g.isExternal(v)); };
    for (const auto& f : g.faces()) {
        if (f.id == g.outerFace() || f.length() != 9) continue;
        std::set<int> distinct(f.walk.begin(), f.walk.end());
        if (distinct.size() != 9) continue;
        NiceFaceRecord rec;
        rec.face = f.id;
        std::map<int, int> nice;  // vertex -> clause that made it nice (first)
        bool clause1 = false;
        for (int dir = 0; dir < 2; ++dir)
            for (int s = 0; s < 9; ++s) {
                std::array<int, 10> v{};
                for (int i = 1; i <= 9; ++i) {
                    int idx = dir == 0 ? (s + i - 1) % 9 : (s - (i - 1) + 18) % 9;
                    v[i] = f.walk[idx];
                }
                std::vector<int> xs;
                int clause = 0;
                if (B(v[2]) && B(v[3]) && B(v[4]) && B(v[5]) && D(v[1]) && D(v[6])) {
                    if (g.degree(v[8]) >= 5) xs.push_back(v[8]);
                    if (big4(v[7])) xs.push_back(v[7]);
                    if (big4(v[9])) xs.push_back(v[9]);
                    if (!xs.empty()) {
                        clause = 1;
                        clause1 = true;
                    }
                }
                if (xs.empty() && B(v[4]) && D(v[3]) && D(v[5]) && bad(v[1]) && bad(v[2]) && bad(v[6]) &&
                    bad(v[7])) {
                    if (big4(v[8])) xs.push_back(v[8]);
                    if (big4(v[9])) xs.push_back(v[9]);
                    if (!xs.empty()) clause = 2;
                }
                if (xs.empty() && B(v[4]) && B(v[5]) && D(v[3]) && D(v[6]) && bad(v[1]) && bad(v[2]) &&
                    bad(v[7]) && bad(v[8])) {
                    if (big4(v[9])) xs.push_back(v[9]);
                    if (!xs.empty()) clause = 3;
                }
                if (clause == 0) continue;
                if (rec.clause == 0 || clause < rec.clause) {
                    rec.clause = clause;
                    rec.labeling.assign(v.begin() + 1, v.end());
                }
                for (int x : xs) nice.emplace(x, clause);
            }
        if (rec.clause == 0) continue;
        for (auto [x, c] : nice) rec.niceVertices.push_back({x, clause1 ? 2 : 1});
        int v4 = rec.labeling[3];
        for (int t : internalTriangles(g, v4))
            if (snow.faceOwner.size() > static_cast<std::size_t>(t) && snow.faceOwner[t] >= 0) {
                rec.relatedSnowflake = snow.faceOwner[t];
                break;
            }
        out.push_back(std::move(rec));
    }
    return out;
}

auto checkJFaceConstraints(const SignedPlaneGraph& sg, const std::vector<NiceFaceRecord>& nice,
                      const std::vector<JOccurrence>& occurrences) -> std::vector<JFaceViolation> {
    const auto& g = sg.graph;
    std::vector<JFaceViolation> out;
    std::set<int> niceIds;
    for (const auto& r : nice) niceIds.insert(r.face);
    for (const auto& occ : occurrences) {
        if (occ.k == 2) {
            int mid = occ.u[1];
            for (int f : g.facesAt(mid)) {
                if (g.face(f).length() == 3) continue;
                if (g.face(f).length() != 9)
                    out.push_back({occ, "J2-faces",
                                   "middle vertex " + std::to_string(mid) + " lies on a " +
                                       std::to_string(g.face(f).length()) + "-face"});
            }
        } else if (occ.k >= 4) {
            std::set<int> found;
            for (int i = 1; i < occ.k; ++i)
                for (int f : g.facesAt(occ.u[i]))
                    if (niceIds.count(f)) found.insert(f);
            if (static_cast<int>(found.size()) < occ.k - 2)
                out.push_back({occ, "J-nice-count",
                               std::to_string(found.size()) + " nice 9-faces, need " + std::to_string(occ.k - 2)});
        }
    }
    return out;
}

auto classifyAll(const SignedPlaneGraph& sg) -> Classification {
    Classification c;
    c.roles = classifyVertices(sg);
    c.snow = snowflakes(sg, c.roles);
    c.nice = niceFaces(sg, c.roles, c.snow);
    return c;
}

} // namespace dp3
