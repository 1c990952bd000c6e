#pragma once

#include <array>
#include <set>
#include <vector>

namespace dp3 {

struct FaceWalk {
    int id = -1;
    std::vector<int> walk;   // cyclic vertex sequence
    std::vector<int> darts;  // darts[i] goes walk[i] -> walk[i+1]
    auto length() const -> int { return static_cast<int>(walk.size()); }
};

// Combinatorial plane graph given by a clockwise rotation system. Darts are numbered
// 2e (min -> max) and 2e+1 (max -> min). Face tracing follows dart (u,v) by (v,w) where
// w is the clockwise successor of u around v.
class PlaneGraph {
public:
    PlaneGraph() = default;
    // The outer face is the face containing dart (outerTail -> outerHead).
    PlaneGraph(std::vector<std::vector<int>> rotation, int outerTail, int outerHead);
    // The outer face must trace exactly `outerWalk` (up to a cyclic shift).
    static auto withOuterWalk(std::vector<std::vector<int>> rotation, const std::vector<int>& outerWalk)
        -> PlaneGraph;

    auto n() const -> int { return static_cast<int>(rot_.size()); }
    auto m() const -> int { return static_cast<int>(edges_.size()); }
    auto rotation(int v) const -> const std::vector<int>& { return rot_[v]; }
    auto rotations() const -> const std::vector<std::vector<int>>& { return rot_; }
    auto degree(int v) const -> int { return static_cast<int>(rot_[v].size()); }
    auto edgeId(int u, int v) const -> int;
    auto adjacent(int u, int v) const -> bool { return edgeId(u, v) >= 0; }
    auto edge(int e) const -> std::array<int, 2> { return edges_[e]; }
    auto dart(int u, int v) const -> int;
    auto dartTail(int d) const -> int { return (d & 1) ? edges_[d >> 1][1] : edges_[d >> 1][0]; }
    auto dartHead(int d) const -> int { return (d & 1) ? edges_[d >> 1][0] : edges_[d >> 1][1]; }
    // Clockwise successor of neighbor u in the rotation of v.
    auto succ(int v, int u) const -> int;

    auto faces() const -> const std::vector<FaceWalk>& { return faces_; }
    auto face(int f) const -> const FaceWalk& { return faces_[f]; }
    auto faceOfDart(int d) const -> int { return dartFace_[d]; }
    auto outerFace() const -> int { return outer_; }
    auto isExternal(int v) const -> bool { return external_[v]; }
    // Distinct faces around v in rotation order.
    auto facesAt(int v) const -> std::vector<int>;

private:
    void build(int outerDart);

    std::vector<std::vector<int>> rot_;
    std::vector<std::array<int, 2>> edges_;
    std::vector<std::vector<int>> incEdge_;  // incEdge_[v][i] = edge to rot_[v][i]
    std::vector<FaceWalk> faces_;
    std::vector<int> dartFace_;
    std::vector<bool> external_;
    int outer_ = -1;
};

auto traceFaces(const PlaneGraph& g) -> const std::vector<FaceWalk>&;

// Rotation system of a straight-line drawing (y axis up). The outer face is the face
// with the most negative signed area.
auto fromDrawing(const std::vector<std::array<double, 2>>& points,
                 const std::vector<std::array<int, 2>>& edges) -> PlaneGraph;

struct StringRecord {
    std::vector<int> vertices;  // consecutive 2-vertices
    std::vector<int> endpoints; // the (at most two) adjacent non-2-vertices
    int face = -1;              // a face other than f0 containing the string
};

struct StringViolation {
    StringRecord string;
    int faceLength = 0;
    int bound = 0;  // t must be < bound
};

struct CycleSides {
    std::vector<int> interior;
    std::vector<int> exterior;
};

struct BoundaryReport {
    int outerLength = 0;
    bool tooLong = false;
    bool outerNotCycle = false;
    std::vector<std::array<int, 2>> chords;
    std::vector<int> cutVertices;
    std::vector<int> lowDegreeInternal;
    auto clean() const -> bool {
        return !tooLong && !outerNotCycle && chords.empty() && cutVertices.empty() &&
               lowDegreeInternal.empty();
    }
};

// All simple cycles of length <= maxLen, each listed once: starts at its smallest
// vertex and the second vertex is smaller than the last.
auto cyclesUpTo(const PlaneGraph& g, int maxLen) -> std::vector<std::vector<int>>;
auto canonicalCycle(std::vector<int> cycle) -> std::vector<int>;

auto forbiddenCycleCheck(const PlaneGraph& g, const std::set<int>& lengths)
    -> std::vector<std::vector<int>>;
auto inClassG(const PlaneGraph& g) -> bool;
auto facialCycleCheck(const PlaneGraph& g) -> std::vector<std::vector<int>>;
auto cycleSides(const PlaneGraph& g, const std::vector<int>& cycle) -> CycleSides;
auto separatingCycles(const PlaneGraph& g, int maxLen) -> std::vector<std::vector<int>>;
auto strings(const PlaneGraph& g) -> std::vector<StringRecord>;
auto stringLengthCheck(const PlaneGraph& g) -> std::vector<StringViolation>;
auto cutVertices(const PlaneGraph& g) -> std::vector<int>;
auto boundaryAudit(const PlaneGraph& g) -> BoundaryReport;

} // namespace dp3
