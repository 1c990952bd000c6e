#pragma once

#include "dp3/signing.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dp3 {

enum class Role : std::uint8_t {
    TWO,
    THREE_DELTA_PLUS,
    THREE_DELTA_MINUS,
    THREE_DELTA_CIRC,
    FOUR_BOWTIE,
    C_VERTEX
};
auto roleName(Role r) -> std::string;

struct VertexRole {
    Role role = Role::C_VERTEX;
    bool bad = false;
    bool star = false;
    bool external = false;
    int triFace = -1;  // 3Δ-vertices: their 3-face
    int outer = -1;    // 3Δ-vertices: outer neighbor
    auto threeDelta() const -> bool {
        return role == Role::THREE_DELTA_PLUS || role == Role::THREE_DELTA_MINUS ||
               role == Role::THREE_DELTA_CIRC;
    }
};

// 3-faces other than f0 incident with v, lowest id first.
auto internalTriangles(const PlaneGraph& g, int v) -> std::vector<int>;
auto facesShareEdge(const PlaneGraph& g, int f, int h) -> bool;
// An internal 4-vertex on two 3-faces that share no edge.
auto isFourBowtie(const PlaneGraph& g, int v) -> bool;

auto classifyVertices(const SignedPlaneGraph& sg) -> std::vector<VertexRole>;
// Neighbor of the 3Δ-vertex u off its (lowest-id) 3-face.
auto outerNeighbor(const PlaneGraph& g, int u) -> int;

struct SnowflakeStats {
    int faces = 0;
    int threeDelta = 0, plus = 0, minus = 0, circ = 0, star = 0;
    int bowtie = 0;
    std::map<int, int> t;  // C(S) vertex -> number of faces of S containing it
    std::vector<int> c1, c2;
    int t1 = 0, t2 = 0;
    int twoVertices = 0;
    auto eq3Holds() const -> bool { return 3 * faces == threeDelta + 2 * bowtie + t1 + t2; }
    auto eq4Holds() const -> bool { return bowtie >= faces - 1; }
    // A single face with three 3Δ-vertices.
    auto tripleFace() const -> bool { return faces == 1 && threeDelta == 3; }
};

struct Snowflake {
    std::vector<int> faces;
    std::vector<int> vertices;
    std::vector<int> threeDelta, bowtie, cVertices;
    SnowflakeStats stats;
};

struct RejectedComponent {
    std::vector<int> faces;
    int condition = 0;  // 0: not a set of internal 3-faces; 1, 2: defining conditions
    std::string detail;
};

struct SnowflakeSet {
    std::vector<Snowflake> accepted;
    std::vector<RejectedComponent> rejected;
    std::vector<int> faceOwner;  // face id -> accepted index, or -1
};

auto bowtieConnected(const PlaneGraph& g, const std::vector<VertexRole>& roles, int a, int b) -> bool;
auto checkSnowflake(const SignedPlaneGraph& sg, const std::vector<VertexRole>& roles,
                    const std::vector<int>& faces) -> std::optional<RejectedComponent>;
auto buildSnowflake(const SignedPlaneGraph& sg, const std::vector<VertexRole>& roles,
                    std::vector<int> faces) -> Snowflake;
auto snowflakes(const SignedPlaneGraph& sg, const std::vector<VertexRole>& roles) -> SnowflakeSet;
// Edges between indices of S.faces whose faces meet at a 4⋈-vertex.
auto snowflakeGraphH(const PlaneGraph& g, const std::vector<VertexRole>& roles, const Snowflake& s)
    -> std::vector<std::array<int, 2>>;

struct NiceVertex {
    int vertex = -1;
    int kind = 1;  // 1-nice or 2-nice
};
struct NiceFaceRecord {
    int face = -1;
    int clause = 0;                   // first clause matched
    std::vector<int> labeling;        // v1..v9 of that match
    std::vector<NiceVertex> niceVertices;
    int relatedSnowflake = -1;        // accepted snowflake containing v4
};
auto niceFaces(const SignedPlaneGraph& sg, const std::vector<VertexRole>& roles, const SnowflakeSet& snow)
    -> std::vector<NiceFaceRecord>;

struct JOccurrence {
    int k = 0;
    std::vector<int> u;  // u0 .. uk along the chain; u0 and uk are the ports
};
struct JFaceViolation {
    JOccurrence occurrence;
    std::string rule;    // "J2-faces" or "J-nice-count"
    std::string detail;
};
auto checkJFaceConstraints(const SignedPlaneGraph& sg, const std::vector<NiceFaceRecord>& nice,
                      const std::vector<JOccurrence>& occurrences) -> std::vector<JFaceViolation>;

struct Classification {
    std::vector<VertexRole> roles;
    SnowflakeSet snow;
    std::vector<NiceFaceRecord> nice;
};
auto classifyAll(const SignedPlaneGraph& sg) -> Classification;

} // namespace dp3
