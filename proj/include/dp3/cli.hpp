#pragma once

#include "dp3/classify.hpp"
#include "dp3/signing.hpp"

#include <cstdint>
#include <string>

namespace dp3 {

// Line-oriented instance format:
//   spg 1                 header, first non-comment line
//   n N                   vertex count
//   rot v a b c ...       clockwise rotation of v, one line per vertex
//   outer u v             the outer face contains dart u -> v
//   sign u v WORD         σ(u,v) as an image word; unlisted edges are straight
//   precolor v c          fixed color c in 1..3
// '#' starts a comment. Throws SyntaxError with the line number.
auto parseSpg(const std::string& text) -> SignedPlaneGraph;
auto emitSpg(const SignedPlaneGraph& sg) -> std::string;
auto loadSpg(const std::string& path) -> SignedPlaneGraph;

struct GenOptions {
    int boundary = 0;                 // outer cycle length; 0 picks one at random
    bool precolorBoundary = false;    // random proper coloring of the outer cycle
    int maxN = 64;
};
// Random instance with n vertices and no 4-, 6- or 8-cycles: an outer cycle grown
// by paths drawn inside inner faces. The outer cycle is chordless. Tree edges of a
// BFS tree are straight and co-tree edges get uniform permutations.
auto generate(int n, std::uint64_t seed, const GenOptions& opt = {}) -> SignedPlaneGraph;

auto classificationJson(const SignedPlaneGraph& sg, const Classification& cls) -> std::string;

} // namespace dp3
