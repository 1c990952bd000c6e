#include "doctest.h"
#include "fixtures.hpp"

#include "dp3/errors.hpp"
#include "dp3/signing.hpp"

#include <random>

using namespace dp3;

static auto P(const char* w) -> Perm { return *parsePerm(w); }

TEST_CASE("perm words and group laws") {
    for (Perm p : kAllPerms) CHECK(parsePerm(toWord(p)) == p);
    CHECK_FALSE(parsePerm("122"));
    CHECK_FALSE(parsePerm("12"));
    CHECK(compose(P("231"), P("312")) == kId);
    CHECK(invert(P("231")) == P("312"));
    CHECK(apply(P("213"), 3) == 3);
    for (Perm p : kAllPerms) {
        CHECK(compose(p, invert(p)) == kId);
        CHECK(compose(kId, p) == p);
        for (Perm q : kAllPerms) {
            for (int c = 1; c <= 3; ++c) CHECK(apply(compose(p, q), c) == apply(p, apply(q, c)));
            for (Perm r : kAllPerms) CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
        }
    }
}

static auto triangle() -> SignedPlaneGraph { return SignedPlaneGraph(fx::cycle(3)); }

static auto star(int leaves) -> SignedPlaneGraph {
    fx::Pts p = fx::ring(leaves);
    p.push_back({0, 0});
    fx::Edges e;
    for (int i = 0; i < leaves; ++i) e.push_back({i, leaves});
    return SignedPlaneGraph(fromDrawing(p, e));
}

TEST_CASE("signature stores inverse on reverse arc") {
    auto sg = triangle();
    sg.setSigma(2, 0, P("231"));
    CHECK(sg.sigma(2, 0) == P("231"));
    CHECK(sg.sigma(0, 2) == P("312"));
}

TEST_CASE("switching") {
    auto sg = triangle();
    sg.setSigma(0, 1, P("213"));
    auto same = switchAt(sg, 1, kId);
    CHECK(same.sig == sg.sig);

    auto st = star(4);
    auto sw = switchAt(st, 4, P("231"));
    for (int i = 0; i < 4; ++i) CHECK(sw.sigma(i, 4) == P("231"));

    // properness is preserved under renaming, over all 27 colorings of a triangle
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        SignedPlaneGraph t = triangle();
        for (auto& s : t.sig) s = kAllPerms[rng() % 6];
        int v = static_cast<int>(rng() % 3);
        Perm tau = kAllPerms[rng() % 6];
        auto t2 = switchAt(t, v, tau);
        for (int c = 0; c < 27; ++c) {
            Coloring phi{c % 3 + 1, c / 3 % 3 + 1, c / 9 + 1};
            Coloring psi = phi;
            psi[v] = apply(tau, phi[v]);
            CHECK(isProper(t, phi) == isProper(t2, psi));
        }
    }
}

TEST_CASE("switching carries the precoloring") {
    auto sg = triangle();
    sg.precolor = {1, 2, 0};
    auto sw = switchAt(sg, 0, P("231"));
    CHECK(sw.precolor[0] == 2);
    CHECK(isProper(sg, sg.precolor) == isProper(sw, sw.precolor));
}

TEST_CASE("cycle signs") {
    auto sg = triangle();
    CHECK(cycleSign(sg, {0, 1, 2}) == Sign::POSITIVE);
    sg.setSigma(2, 0, P("213"));
    CHECK(cycleSign(sg, {0, 1, 2}) == Sign::NEGATIVE);
    CHECK(cycleSign(sg, {2, 1, 0}) == Sign::NEGATIVE);

    SignedPlaneGraph c4(fx::cycle(4));
    c4.setSigma(0, 1, P("231"));
    c4.setSigma(1, 2, P("312"));
    CHECK(cycleSign(c4, {0, 1, 2, 3}) == Sign::POSITIVE);

    CHECK_THROWS_AS(cycleSign(c4, {0, 2, 1, 3}), NotACycle);
    CHECK_THROWS_AS(cycleSign(c4, {0, 1}), NotACycle);
    CHECK_THROWS_AS(cycleSign(c4, {0, 1, 2, 1}), NotACycle);
}

TEST_CASE("cycle sign is invariant under every switching") {
    auto g = fx::k4();
    std::mt19937 rng(11);
    SignedPlaneGraph sg(g);
    for (auto& s : sg.sig) s = kAllPerms[rng() % 6];
    std::vector<std::vector<int>> cycles = cyclesUpTo(g, 4);
    for (int v = 0; v < 4; ++v)
        for (Perm tau : kAllPerms) {
            auto sw = switchAt(sg, v, tau);
            for (auto& c : cycles) CHECK(cycleSign(sg, c) == cycleSign(sw, c));
        }
}

TEST_CASE("normalizeTree") {
    auto g = fx::k4();
    std::mt19937 rng(5);
    SignedPlaneGraph sg(g);
    for (auto& s : sg.sig) s = kAllPerms[rng() % 6];
    std::vector<std::array<int, 2>> tree{{3, 0}, {3, 1}, {3, 2}};
    auto r = normalizeTree(sg, tree);
    for (auto [a, b] : tree) CHECK(r.sg.sigma(a, b) == kId);
    for (auto& c : cyclesUpTo(g, 4)) CHECK(cycleSign(sg, c) == cycleSign(r.sg, c));

    // a straight tree is left alone
    SignedPlaneGraph st(g);
    auto r2 = normalizeTree(st, tree);
    CHECK(r2.sg.sig == st.sig);

    // triangle: two straight edges leave the cycle product on the third
    auto t = triangle();
    for (auto& s : t.sig) s = kAllPerms[rng() % 6];
    Perm prod = cycleProduct(t, {0, 1, 2});
    auto r3 = normalizeTree(t, {{0, 1}, {1, 2}});
    CHECK(r3.sg.sigma(2, 0) == cycleProduct(r3.sg, {0, 1, 2}));
    CHECK((r3.sg.sigma(2, 0) == kId) == (prod == kId));

    CHECK_THROWS_AS(normalizeTree(t, {{0, 1}, {1, 2}, {2, 0}}), CyclicEdgeSet);
}

TEST_CASE("isProper examples") {
    SignedPlaneGraph sg(fx::cycle(3));
    CHECK_FALSE(isProper(sg, {1, 1, 0}));
    sg.setSigma(0, 1, P("231"));
    CHECK_FALSE(isProper(sg, {1, 2, 0}));
    CHECK(isProper(sg, {1, 3, 0}));
    CHECK(violations(sg, {1, 2, 2}).size() == 2);
}

TEST_CASE("covers") {
    auto g = fx::cycle(3);
    auto c = coverFromLists(g, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}});
    for (auto& m : c.matchings) CHECK(m.size() == 3);
    auto sg = signedFromCover(g, c);
    for (Perm s : sg.sig) CHECK(s == kId);

    auto d = coverFromLists(g, {{1, 2}, {3, 4}, {2, 3}});
    int e01 = g.edgeId(0, 1), e12 = g.edgeId(1, 2), e02 = g.edgeId(0, 2);
    CHECK(d.matchings[e01].empty());
    CHECK(d.matchings[e12].size() == 1);
    CHECK(d.matchings[e02].size() == 1);
    CHECK(d.matchings[e02][0] == std::array<int, 2>{2, 2});

    // L'-colorability equals (L,M)-colorability: compare on all choices
    std::vector<std::vector<int>> lists{{1, 2}, {2, 3}, {1, 3}};
    auto cv = coverFromLists(g, lists);
    for (int a : lists[0])
        for (int b : lists[1])
            for (int x : lists[2]) {
                bool plain = a != b && b != x && a != x;
                CHECK(plain == isCoverColoring(g, cv, {a, b, x}));
            }
}

TEST_CASE("signedFromCover") {
    auto g = fx::cycle(3);
    Cover c{{{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}, std::vector<std::vector<std::array<int, 2>>>(3)};
    int e = g.edgeId(0, 1);
    c.matchings[e] = {{1, 2}, {2, 3}, {3, 1}};
    auto sg = signedFromCover(g, c);
    CHECK(sg.sigma(0, 1) == P("231"));

    // sizes other than 3 are rejected
    Cover bad{{{1, 2}, {1, 2, 3}, {1, 2, 3}}, std::vector<std::vector<std::array<int, 2>>>(3)};
    CHECK_THROWS_AS(signedFromCover(g, bad), ListSizeNot3);

    // a partial matching that conflicts with completion still implies properness
    Cover part{{{4, 5, 6}, {7, 8, 9}, {1, 2, 3}}, std::vector<std::vector<std::array<int, 2>>>(3)};
    part.matchings[e] = {{5, 9}};
    auto sg3 = signedFromCover(g, part);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            Coloring phi{a + 1, b + 1, 0};
            std::vector<int> choice{4 + a, 7 + b, 1};
            if (isProper(sg3, phi)) CHECK(isCoverColoring(g, part, choice));
        }
}

TEST_CASE("cover of full lists round-trips to straight") {
    auto g = fx::k4();
    auto sg = signedFromCover(g, coverFromLists(g, std::vector<std::vector<int>>(4, {1, 2, 3})));
    for (Perm s : sg.sig) CHECK(s == kId);
}
