#include "dp3/discharge.hpp"

#include "dp3/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace dp3 {

namespace {

using i128 = __int128;

auto fit(i128 v) -> std::int64_t {
    if (v > INT64_MAX || v < INT64_MIN) throw RationalOverflow("value does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

auto gcd128(i128 a, i128 b) -> i128 {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

auto make(i128 n, i128 d) -> Rational {
    if (d == 0) throw RationalOverflow("zero denominator");
    if (d < 0) n = -n, d = -d;
    i128 g = gcd128(n, d);
    if (g > 1) n /= g, d /= g;
    return Rational(fit(n), fit(d));
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw RationalOverflow("zero denominator");
    i128 nn = n, dd = d;
    if (dd < 0) nn = -nn, dd = -dd;
    i128 g = gcd128(nn, dd);
    if (g > 1) nn /= g, dd /= g;
    n_ = fit(nn);
    d_ = fit(dd);
}

auto Rational::str() const -> std::string {
    return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
}

auto operator+(Rational a, Rational b) -> Rational {
    return make(static_cast<i128>(a.n_) * b.d_ + static_cast<i128>(b.n_) * a.d_, static_cast<i128>(a.d_) * b.d_);
}
auto operator-(Rational a) -> Rational { return make(-static_cast<i128>(a.n_), a.d_); }
auto operator-(Rational a, Rational b) -> Rational { return a + (-b); }
auto operator*(Rational a, Rational b) -> Rational {
    return make(static_cast<i128>(a.n_) * b.n_, static_cast<i128>(a.d_) * b.d_);
}
auto operator/(Rational a, Rational b) -> Rational {
    if (b.n_ == 0) throw RationalOverflow("division by zero");
    return make(static_cast<i128>(a.n_) * b.d_, static_cast<i128>(a.d_) * b.n_);
}
auto Rational::operator+=(Rational b) -> Rational& { return *this = *this + b; }
auto Rational::operator-=(Rational b) -> Rational& { return *this = *this - b; }
auto operator<=>(Rational a, Rational b) -> std::strong_ordering {
    i128 l = static_cast<i128>(a.n_) * b.d_, r = static_cast<i128>(b.n_) * a.d_;
    return l < r ? std::strong_ordering::less : l > r ? std::strong_ordering::greater : std::strong_ordering::equal;
}

auto Element::name() const -> std::string {
    const char* p = kind == ElementKind::VERTEX ? "v" : kind == ElementKind::FACE ? "f" : "S";
    return p + std::to_string(id);
}

void ChargeLedger::move(const std::string& rule, Element from, Element to, Rational amount, int via) {
    accounts[from] -= amount;
    accounts[to] += amount;
    transfers.push_back({rule, from, to, amount, via});
}

auto ChargeLedger::at(Element e) const -> Rational {
    auto it = accounts.find(e);
    return it == accounts.end() ? Rational() : it->second;
}

auto ChargeLedger::total() const -> Rational {
    Rational t;
    for (const auto& [e, c] : accounts) t += c;
    return t;
}

auto initialCharges(const SignedPlaneGraph& sg, const Classification& cls) -> ChargeLedger {
    const auto& g = sg.graph;
    ChargeLedger l;
    for (int v = 0; v < g.n(); ++v) l.accounts[vertexEl(v)] = Rational(g.degree(v) - 4);
    for (const auto& f : g.faces())
        l.accounts[faceEl(f.id)] = Rational(f.length() + (f.id == g.outerFace() ? 4 : -4));
    for (std::size_t s = 0; s < cls.snow.accepted.size(); ++s) l.accounts[snowEl(static_cast<int>(s))] = Rational();
    return l;
}

auto applyRules(const SignedPlaneGraph& sg, const Classification& cls, const ChargeLedger& initial) -> RuleOutcome {
    const auto& g = sg.graph;
    const auto& roles = cls.roles;
    RuleOutcome out{initial, {}};
    auto& l = out.ledger;
    int f0 = g.outerFace();

    for (int v : g.face(f0).walk) l.move("R1", faceEl(f0), vertexEl(v), Rational(4, 3));

    for (int v = 0; v < g.n(); ++v) {
        if (roles[v].role != Role::C_VERTEX) continue;
        auto tri = internalTriangles(g, v);
        bool light = g.isExternal(v) && (g.degree(v) == 3 || (g.degree(v) == 4 && tri.size() == 2));
        for (int f : tri) l.move("R2", vertexEl(v), faceEl(f), light ? Rational(5, 9) : Rational(1));
    }

    for (const auto& f : g.faces()) {
        if (f.id == f0 || f.length() < 5) continue;
        for (int v : f.walk) l.move("R3", faceEl(f.id), vertexEl(v), Rational(f.length() - 4, f.length()));
    }

    auto isC = [&](int x) { return roles[x].role == Role::C_VERTEX; };
    auto isCirc = [&](int x) { return roles[x].role == Role::THREE_DELTA_CIRC; };
    for (std::size_t s = 0; s < cls.snow.accepted.size(); ++s) {
        const auto& S = cls.snow.accepted[s];
        for (int u : S.threeDelta) {
            int up = roles[u].outer;
            if (up < 0 || std::binary_search(S.vertices.begin(), S.vertices.end(), up)) continue;
            const auto& r = roles[u];
            if (r.bad && (isCirc(up) || isC(up))) {
                l.move("R4(1)", vertexEl(up), vertexEl(u), Rational(2, 9));
            } else if (r.role == Role::THREE_DELTA_PLUS && !r.bad &&
                       (roles[up].role == Role::THREE_DELTA_MINUS || isCirc(up) || isC(up))) {
                l.move("R4(2)", vertexEl(up), vertexEl(u), Rational(2, 27));
            } else if (r.role == Role::THREE_DELTA_MINUS && (isCirc(up) || isC(up))) {
                l.move("R4(3)", vertexEl(up), vertexEl(u), Rational(2, 27));
            }
        }
    }
    for (const auto& rej : cls.snow.rejected) {
        bool hasThreeDelta = false;
        for (int f : rej.faces)
            for (int x : g.face(f).walk) hasThreeDelta = hasThreeDelta || roles[x].threeDelta();
        if (!hasThreeDelta) continue;
        std::string fs;
        for (int f : rej.faces) fs += (fs.empty() ? "f" : " f") + std::to_string(f);
        out.unmodeled.push_back("rejected component {" + fs + "} (condition " + std::to_string(rej.condition) +
                                ": " + rej.detail + ") has 3-delta vertices left out of the snowflake rules");
    }

    for (const auto& rec : cls.nice) {
        if (rec.relatedSnowflake < 0) {
            out.unmodeled.push_back("nice face f" + std::to_string(rec.face) + " is related to no accepted snowflake");
            continue;
        }
        for (const auto& nv : rec.niceVertices)
            l.move(nv.kind == 2 ? "R5(2)" : "R5(1)", vertexEl(nv.vertex), snowEl(rec.relatedSnowflake),
                   nv.kind == 2 ? Rational(4, 27) : Rational(2, 27), rec.face);
    }

    auto ss = strings(g);
    for (std::size_t i = 0; i < ss.size(); ++i) {
        const auto& s = ss[i];
        int d = g.face(s.face).length();
        if (s.face == f0 || d > 11) continue;
        for (int u : s.endpoints)
            for (int x : s.vertices)
                l.move("R6", vertexEl(u), vertexEl(x), Rational(12 - d, 6 * d), static_cast<int>(i));
    }
    return out;
}

auto snowflakeCharge(const Classification& cls, int s, const ChargeLedger& ledger, Phase phase) -> SnowflakeCharge {
    const auto& S = cls.snow.accepted.at(s);
    Rational members;
    for (int v : S.threeDelta) members += ledger.at(vertexEl(v));
    for (int v : S.bowtie) members += ledger.at(vertexEl(v));
    for (int f : S.faces) members += ledger.at(faceEl(f));
    members += ledger.at(snowEl(s));
    SnowflakeCharge out;
    out.memberSum = members;
    if (phase == Phase::INITIAL) {
        out.value = Rational(-static_cast<std::int64_t>(S.threeDelta.size()) - static_cast<std::int64_t>(S.faces.size()));
        out.consistent = out.value == members;
    } else {
        out.value = members;
    }
    return out;
}

auto ClaimReport::allPass() const -> bool {
    return std::all_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.pass; });
}

auto ClaimReport::failures() const -> std::vector<ClaimResult> {
    std::vector<ClaimResult> out;
    for (const auto& r : results)
        if (!r.pass) out.push_back(r);
    return out;
}

auto verifyClaims(const SignedPlaneGraph& sg, const Classification& cls, const ChargeLedger& finalLedger)
    -> ClaimReport {
    const auto& g = sg.graph;
    ClaimReport rep;
    Rational zero;
    for (std::size_t s = 0; s < cls.snow.accepted.size(); ++s) {
        auto v = snowflakeCharge(cls, static_cast<int>(s), finalLedger, Phase::FINAL).value;
        rep.results.push_back({"snowflake-nonnegative", snowEl(static_cast<int>(s)), v, v >= zero});
    }
    for (int v = 0; v < g.n(); ++v) {
        auto c = finalLedger.at(vertexEl(v));
        const auto& r = cls.roles[v];
        if (r.role == Role::C_VERTEX && !g.isExternal(v)) {
            rep.results.push_back({"internal-c-nonnegative", vertexEl(v), c, c >= zero});
        } else if (r.role == Role::C_VERTEX) {
            ClaimResult cr{"external-c-positive", vertexEl(v), c, c > zero, c == zero};
            rep.externalEqualities += cr.equality;
            rep.results.push_back(cr);
        } else if (r.role == Role::TWO) {
            rep.results.push_back({"two-vertex-nonnegative", vertexEl(v), c, c >= zero});
        }
    }
    for (const auto& f : g.faces()) {
        auto c = finalLedger.at(faceEl(f.id));
        if (f.id == g.outerFace()) {
            bool exact = c == Rational(4) - Rational(f.length(), 3);
            rep.results.push_back({"outer-face-exact", faceEl(f.id), c, exact && f.length() <= 12});
        } else if (f.length() >= 5) {
            rep.results.push_back({"inner-face-zero", faceEl(f.id), c, c == zero});
        }
    }
    return rep;
}

auto R6CapReport::pass() const -> bool {
    return std::all_of(entries.begin(), entries.end(), [](const R6CapEntry& e) { return e.pass; });
}

auto r6CapCheck(const ChargeLedger& finalLedger) -> R6CapReport {
    std::map<std::pair<int, int>, Rational> flow;
    for (const auto& t : finalLedger.transfers)
        if (t.rule == "R6") flow[{t.from.id, t.via}] += t.amount;
    R6CapReport rep;
    for (const auto& [key, amt] : flow) rep.entries.push_back({key.first, key.second, amt, amt <= Rational(1, 4)});
    return rep;
}

namespace {

auto elementVertices(const SignedPlaneGraph& sg, const Classification& cls, Element e) -> std::vector<int> {
    switch (e.kind) {
    case ElementKind::VERTEX: return {e.id};
    case ElementKind::FACE: return sg.graph.face(e.id).walk;
    case ElementKind::SNOWFLAKE: return cls.snow.accepted.at(e.id).vertices;
    }
    return {};
}

auto ball(const PlaneGraph& g, const std::vector<int>& seeds, int radius) -> std::vector<bool> {
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    for (int v : seeds)
        if (dist[v] < 0) {
            dist[v] = 0;
            q.push(v);
        }
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (dist[x] == radius) continue;
        for (int y : g.rotation(x))
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
    }
    std::vector<bool> in(g.n());
    for (int v = 0; v < g.n(); ++v) in[v] = dist[v] >= 0;
    return in;
}

} // namespace

auto witness(const SignedPlaneGraph& sg, const Classification& cls, const ClaimReport& claims,
             const Catalog& catalog, const WitnessOptions& opt) -> WitnessVerdict {
    WitnessVerdict w;
    auto fails = claims.failures();
    if (!fails.empty()) w.scan = scanAll(sg, catalog, opt.maxK);
    for (const auto& f : fails) {
        auto in = ball(sg.graph, elementVertices(sg, cls, f.element), opt.radius);
        auto near = [&](const std::vector<int>& vs) {
            return std::any_of(vs.begin(), vs.end(), [&](int v) { return in[v]; });
        };
        Explanation ex{f, {}};
        for (const auto& h : w.scan.hits)
            if (near(h.vertices)) ex.reasons.push_back("configuration " + h.pattern);
        for (const auto& s : w.scan.structural)
            if (near(s.vertices)) ex.reasons.push_back(s.kind + ": " + s.detail);
        std::sort(ex.reasons.begin(), ex.reasons.end());
        ex.reasons.erase(std::unique(ex.reasons.begin(), ex.reasons.end()), ex.reasons.end());
        if (ex.reasons.empty()) w.unexplained.push_back(f);
        else w.explained.push_back(std::move(ex));
    }
    w.pass = w.unexplained.empty();
    return w;
}

auto witness(const SignedPlaneGraph& sg, const Catalog& catalog, const WitnessOptions& opt) -> WitnessVerdict {
    auto r = discharge(sg);
    return witness(sg, r.cls, r.claims, catalog, opt);
}

auto DischargeReport::conserved() const -> bool {
    return initial.total() == Rational() && final.total() == Rational();
}

auto discharge(const SignedPlaneGraph& sg) -> DischargeReport {
    DischargeReport r;
    r.cls = classifyAll(sg);
    r.initial = initialCharges(sg, r.cls);
    auto outcome = applyRules(sg, r.cls, r.initial);
    r.final = std::move(outcome.ledger);
    r.unmodeled = std::move(outcome.unmodeled);
    r.claims = verifyClaims(sg, r.cls, r.final);
    r.r6 = r6CapCheck(r.final);
    for (std::size_t s = 0; s < r.cls.snow.accepted.size(); ++s) {
        r.snowInitial.push_back(snowflakeCharge(r.cls, static_cast<int>(s), r.initial, Phase::INITIAL));
        r.snowFinal.push_back(snowflakeCharge(r.cls, static_cast<int>(s), r.final, Phase::FINAL));
    }
    return r;
}

auto toJson(const DischargeReport& r, const WitnessVerdict* w) -> std::string {
    using nlohmann::json;
    auto rat = [](Rational q) { return json{{"num", q.num()}, {"den", q.den()}}; };
    json j;
    auto accounts = [&](const ChargeLedger& l) {
        json a = json::array();
        for (const auto& [e, c] : l.accounts) a.push_back({{"element", e.name()}, {"num", c.num()}, {"den", c.den()}});
        return a;
    };
    j["initial"] = accounts(r.initial);
    j["accounts"] = accounts(r.final);
    json tr = json::array();
    for (const auto& t : r.final.transfers) {
        json x{{"rule", t.rule},
               {"from", t.from.name()},
               {"to", t.to.name()},
               {"num", t.amount.num()},
               {"den", t.amount.den()}};
        if (t.via >= 0) x["via"] = t.via;
        tr.push_back(x);
    }
    j["transfers"] = tr;
    json cl = json::array();
    for (const auto& c : r.claims.results)
        cl.push_back({{"id", c.id}, {"element", c.element.name()}, {"value", rat(c.value)}, {"pass", c.pass}});
    j["claims"] = cl;
    j["externalEqualities"] = r.claims.externalEqualities;
    json sn = json::array();
    for (std::size_t s = 0; s < r.snowInitial.size(); ++s) {
        const auto& S = r.cls.snow.accepted[s];
        sn.push_back({{"element", snowEl(static_cast<int>(s)).name()},
                      {"faces", S.faces},
                      {"initial", rat(r.snowInitial[s].value)},
                      {"initialConsistent", r.snowInitial[s].consistent},
                      {"final", rat(r.snowFinal[s].value)}});
    }
    j["snowflakes"] = sn;
    json r6 = json::array();
    for (const auto& e : r.r6.entries)
        r6.push_back({{"vertex", e.vertex}, {"string", e.string}, {"outflow", rat(e.outflow)}, {"pass", e.pass}});
    j["r6Cap"] = r6;
    j["unmodeled"] = r.unmodeled;
    j["conserved"] = r.conserved();
    j["total"] = rat(r.final.total());
    if (w) {
        json wj;
        wj["pass"] = w->pass;
        json ex = json::array();
        for (const auto& e : w->explained)
            ex.push_back({{"claim", e.failure.id}, {"element", e.failure.element.name()}, {"reasons", e.reasons}});
        wj["explained"] = ex;
        json un = json::array();
        for (const auto& c : w->unexplained)
            un.push_back({{"claim", c.id}, {"element", c.element.name()}, {"value", rat(c.value)}});
        wj["unexplained"] = un;
        j["witness"] = wj;
    }
    return j.dump(2) + "\n";
}

} // namespace dp3
