#pragma once

#include "dp3/perm.hpp"
#include "dp3/plane_graph.hpp"

#include <array>
#include <utility>
#include <vector>

namespace dp3 {

// Partial coloring: entry v is 0 (uncolored) or a color in 1..3.
using Coloring = std::vector<int>;

// Plane graph with an S3 signature and an optional precoloring. The signature is
// stored per edge in the min -> max direction; the reverse arc carries the inverse.
struct SignedPlaneGraph {
    PlaneGraph graph;
    std::vector<Perm> sig;
    Coloring precolor;

    SignedPlaneGraph() = default;
    explicit SignedPlaneGraph(PlaneGraph g)
        : graph(std::move(g)), sig(graph.m(), kId), precolor(graph.n(), 0) {}

    auto n() const -> int { return graph.n(); }
    // σ(u,v): a color c at u forbids σ(u,v)(c) at v.
    auto sigma(int u, int v) const -> Perm;
    void setSigma(int u, int v, Perm p);
};

enum class Sign { POSITIVE, NEGATIVE };

auto switchAt(const SignedPlaneGraph& sg, int v, Perm tau) -> SignedPlaneGraph;

struct Normalized {
    SignedPlaneGraph sg;
    std::vector<Perm> taus;  // switching applied at each vertex
};
// Switches so that every edge of the (acyclic) set becomes straight.
auto normalizeTree(const SignedPlaneGraph& sg, const std::vector<std::array<int, 2>>& edges)
    -> Normalized;

// Product of the signature along the closed walk cycle[0] -> cycle[1] -> ... -> cycle[0].
auto cycleProduct(const SignedPlaneGraph& sg, const std::vector<int>& cycle) -> Perm;
auto cycleSign(const SignedPlaneGraph& sg, const std::vector<int>& cycle) -> Sign;

// Edges uv with both ends colored and φ(v) = σ(u,v)(φ(u)).
auto violations(const SignedPlaneGraph& sg, const Coloring& phi) -> std::vector<std::array<int, 2>>;
auto isProper(const SignedPlaneGraph& sg, const Coloring& phi) -> bool;

// A cover (L, M). Labels are (color, vertex) pairs, kept per vertex as colors so the
// lists are disjoint by construction. matchings[e] pairs a color at edge(e)[0] with
// a color at edge(e)[1].
struct Cover {
    std::vector<std::vector<int>> lists;
    std::vector<std::vector<std::array<int, 2>>> matchings;
};

auto coverFromLists(const PlaneGraph& g, const std::vector<std::vector<int>>& lists) -> Cover;
// Chosen label per vertex; proper iff no matched pair is used on an edge.
auto isCoverColoring(const PlaneGraph& g, const Cover& cover, const std::vector<int>& choice) -> bool;
// Lists are mapped to 1..3 in sorted order; partial matchings are completed greedily.
auto signedFromCover(const PlaneGraph& g, const Cover& cover) -> SignedPlaneGraph;

} // namespace dp3
