#include "doctest.h"
#include "fixtures.hpp"

#include "dp3/configs.hpp"
#include "dp3/discharge.hpp"
#include "dp3/errors.hpp"

#include <algorithm>

using namespace dp3;

namespace {

auto pattern(const std::string& body) -> ConfigPattern {
    return parseCatalog("entry t\n" + body + "end\n").entries.front().pattern;
}

auto host(const ConfigPattern& p, unsigned seed = 1) -> RealizedHost {
    RealizeOptions o;
    o.seed = seed;
    return realizeHost(p, o);
}

// Hub 9 joined to a ring 0,2..8; vertex 1 hangs off 0 and 2. The outer face is
// the quadrilateral 9,0,1,2, so 0..8 bounds an inner 9-face with 1 as a 1-string.
auto stringOnNineFace() -> PlaneGraph {
    fx::Pts p(10);
    const double deg = std::numbers::pi / 180;
    std::vector<std::pair<int, double>> ring{{0, 60}, {2, 120}, {3, 165}, {4, 210},
                                             {5, 255}, {6, 300}, {7, 345}, {8, 30}};
    for (auto [v, a] : ring) p[v] = {std::cos(a * deg), std::sin(a * deg)};
    p[1] = {0, 2};
    p[9] = {0, 0};
    fx::Edges e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}};
    for (int v : {0, 2, 3, 4, 5, 6, 7, 8}) e.push_back({9, v});
    auto drawn = fromDrawing(p, e);
    std::vector<std::vector<int>> rot;
    for (int v = 0; v < drawn.n(); ++v) rot.push_back(drawn.rotation(v));
    try {
        return PlaneGraph::withOuterWalk(rot, {9, 0, 1, 2});
    } catch (const Error&) {
        return PlaneGraph::withOuterWalk(rot, {9, 2, 1, 0});
    }
}

auto nineFace(const PlaneGraph& g) -> int {
    for (const auto& f : g.faces())
        if (f.length() == 9) return f.id;
    return -1;
}

} // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    CHECK(Rational(3, -9) == Rational(-1, 3));
    CHECK(Rational(1, 18) + Rational(1, 18) == Rational(1, 9));
    CHECK(Rational(5, 9) * Rational(9, 5) == Rational(1));
    CHECK(Rational(2, 27) < Rational(1, 9));
    CHECK((Rational(1, 3) - Rational(1, 2)).str() == "-1/6");
    CHECK_THROWS_AS(Rational(1, 0), RationalOverflow);
    CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(1), RationalOverflow);
}

TEST_CASE("initial charges") {
    auto k = SignedPlaneGraph(fx::k4());
    auto cls = classifyAll(k);
    auto l = initialCharges(k, cls);
    CHECK(l.at(vertexEl(3)) == Rational(-1));
    CHECK(l.total() == Rational());

    auto c = SignedPlaneGraph(fx::cycle(12));
    auto lc = initialCharges(c, classifyAll(c));
    CHECK(lc.at(faceEl(c.graph.outerFace())) == Rational(16));
    CHECK(lc.total() == Rational());
}

TEST_CASE("a 12-cycle discharges to zero everywhere") {
    auto c = SignedPlaneGraph(fx::cycle(12));
    auto r = discharge(c);
    CHECK(r.conserved());
    CHECK(r.final.at(faceEl(c.graph.outerFace())) == Rational());
    for (int v = 0; v < 12; ++v) CHECK(r.final.at(vertexEl(v)) == Rational());
    CHECK(r.claims.allPass());
    CHECK(r.r6.entries.empty());
    CHECK(r.r6.pass());
}

TEST_CASE("a 1-string on a 9-face") {
    auto g = stringOnNineFace();
    REQUIRE(g.degree(1) == 2);
    REQUIRE(g.face(g.outerFace()).length() == 4);
    int nf = nineFace(g);
    REQUIRE(nf >= 0);
    auto sg = SignedPlaneGraph(g);
    auto r = discharge(sg);
    CHECK(r.conserved());

    int r3 = 0;
    for (const auto& t : r.final.transfers)
        if (t.rule == "R3" && t.from == faceEl(nf)) {
            CHECK(t.amount == Rational(5, 9));
            ++r3;
        }
    CHECK(r3 == 9);

    std::vector<int> senders;
    for (const auto& t : r.final.transfers)
        if (t.rule == "R6") {
            CHECK(t.to == vertexEl(1));
            CHECK(t.amount == Rational(1, 18));
            senders.push_back(t.from.id);
        }
    std::sort(senders.begin(), senders.end());
    CHECK(senders == std::vector<int>{0, 2});

    CHECK(r.final.at(faceEl(nf)) == Rational());
    CHECK(r.final.at(vertexEl(1)) == Rational());
    CHECK(r.final.at(faceEl(g.outerFace())) == Rational(4) - Rational(4, 3));
    for (const auto& c : r.claims.results)
        if (c.id == "inner-face-zero" || c.id == "outer-face-exact" || c.id == "two-vertex-nonnegative") CHECK(c.pass);
    REQUIRE(r.r6.entries.size() == 2);
    for (const auto& e : r.r6.entries) CHECK(e.outflow == Rational(1, 18));
}

TEST_CASE("the R6 cap aggregates per vertex and string") {
    ChargeLedger l;
    for (int x : {1, 2, 3}) l.move("R6", vertexEl(0), vertexEl(x), Rational(1, 18), 0);
    l.move("R6", vertexEl(0), vertexEl(9), Rational(1, 66), 1);
    auto rep = r6CapCheck(l);
    REQUIRE(rep.entries.size() == 2);
    CHECK(rep.entries[0].outflow == Rational(1, 6));
    CHECK(rep.entries[1].outflow == Rational(1, 66));
    CHECK(rep.pass());
    for (int x : {4, 5}) l.move("R6", vertexEl(0), vertexEl(x), Rational(1, 18), 0);
    CHECK_FALSE(r6CapCheck(l).pass());
    CHECK(r6CapCheck(ChargeLedger{}).pass());
}

TEST_CASE("snowflake charges") {
    auto tri = pattern(R"(vertex a 3 internal
vertex b 3 internal
vertex c 3 internal
attach a' a
attach b' b
attach c' c
edge a b
edge b c
edge c a
edge a a'
edge b b'
edge c c'
cycle NEG a b c
)");
    auto h = host(tri);
    auto r = discharge(h.sg);
    REQUIRE(r.snowInitial.size() == 1);
    CHECK(r.snowInitial[0].value == Rational(-4));
    CHECK(r.snowInitial[0].consistent);
    CHECK(r.conserved());

    auto cat = loadCatalog(defaultCatalogPath());
    auto b1 = cat.instantiate("b-1", 1).front();
    auto hb = host(b1);
    auto rb = discharge(hb.sg);
    REQUIRE(rb.snowInitial.size() == 1);
    CHECK(rb.snowInitial[0].value == Rational(-6));
    CHECK(rb.snowInitial[0].consistent);
    CHECK(rb.conserved());

    auto credits = rb.final.at(snowEl(0));
    auto fin = snowflakeCharge(rb.cls, 0, rb.final, Phase::FINAL);
    CHECK(fin.value == fin.memberSum);
    if (credits == Rational()) {
        Rational plain;
        const auto& S = rb.cls.snow.accepted[0];
        for (int v : S.threeDelta) plain += rb.final.at(vertexEl(v));
        for (int v : S.bowtie) plain += rb.final.at(vertexEl(v));
        for (int f : S.faces) plain += rb.final.at(faceEl(f));
        CHECK(fin.value == plain);
    }
}

TEST_CASE("every transfer cites a rule and moves a positive amount") {
    auto cat = loadCatalog(defaultCatalogPath());
    for (const char* name : {"b-1", "d-1", "e-1", "g-1", "h-1"}) {
        auto p = cat.instantiate(name, 2).front();
        auto h = host(p, 11);
        auto r = discharge(h.sg);
        CHECK(r.conserved());
        for (const auto& t : r.final.transfers) {
            CHECK(t.rule.front() == 'R');
            CHECK(t.amount > Rational());
        }
        for (const auto& f : h.sg.graph.faces())
            if (f.id != h.sg.graph.outerFace() && f.length() >= 5) CHECK(r.final.at(faceEl(f.id)) == Rational());
    }
}

TEST_CASE("witness explains failing claims on a gadget host") {
    auto cat = loadCatalog(defaultCatalogPath());
    auto b1 = cat.instantiate("b-1", 1).front();
    int checkedFailures = 0;
    for (unsigned seed = 1; seed <= 4; ++seed) {
        auto h = host(b1, seed);
        auto r = discharge(h.sg);
        auto w = witness(h.sg, r.cls, r.claims, cat);
        CHECK(w.pass);
        CHECK(w.unexplained.empty());
        if (r.claims.failures().empty()) {
            CHECK(w.explained.empty());
            continue;
        }
        checkedFailures += static_cast<int>(r.claims.failures().size());
        bool listsB1 = std::any_of(w.scan.hits.begin(), w.scan.hits.end(),
                                   [](const ScanHit& x) { return x.entry == "b-1"; });
        CHECK(listsB1);
    }
    MESSAGE("failing claims explained: " << checkedFailures);
}

TEST_CASE("clean instance passes the witness with nothing to explain") {
    auto c = SignedPlaneGraph(fx::cycle(12));
    auto cat = loadCatalog(defaultCatalogPath());
    auto w = witness(c, cat);
    CHECK(w.pass);
    CHECK(w.explained.empty());
    CHECK(w.scan.hits.empty());
}

TEST_CASE("json report carries accounts, transfers and claims") {
    auto sg = SignedPlaneGraph(stringOnNineFace());
    auto r = discharge(sg);
    auto s = toJson(r);
    CHECK(s.find("\"accounts\"") != std::string::npos);
    CHECK(s.find("\"rule\": \"R6\"") != std::string::npos);
    CHECK(s.find("\"inner-face-zero\"") != std::string::npos);
    CHECK(s.find("\"conserved\": true") != std::string::npos);
}
