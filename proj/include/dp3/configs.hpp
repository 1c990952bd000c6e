#pragma once

#include "dp3/classify.hpp"
#include "dp3/signing.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dp3 {

enum class ThetaKind : std::uint8_t { EXACT, AT_LEAST, ANY };
enum class SignReq : std::uint8_t { ANY, POS, NEG };

struct PatternVertex {
    std::string name;
    ThetaKind thetaKind = ThetaKind::ANY;
    int theta = 0;
    bool internal = false;  // member of Z
    int owner = -1;         // attachments: the core vertex whose outer neighbor this is
    auto attachment() const -> bool { return owner >= 0; }
    auto operator==(const PatternVertex&) const -> bool = default;
};

struct CycleConstraint {
    std::vector<int> cycle;
    SignReq sign = SignReq::ANY;
    auto operator==(const CycleConstraint&) const -> bool = default;
};

struct InsertEdge {
    int a = -1, b = -1;
    Perm sign = kId;
    auto operator==(const InsertEdge&) const -> bool = default;
};

struct ReductionScript {
    enum class Goal : std::uint8_t { EXTEND, PORT };
    std::vector<std::vector<int>> straight;  // paths made straight by switching
    std::vector<int> remove;
    std::vector<std::array<int, 2>> identify;
    std::vector<std::array<int, 2>> equal;  // color equalities beyond identifications
    std::vector<InsertEdge> insert;
    Goal goal = Goal::EXTEND;
    int goalVertex = -1;
    int goalMin = 1;
    auto operator==(const ReductionScript&) const -> bool = default;
};

// A configuration (H, τ, θ, Z): core vertices plus named outer neighbors
// ("attachments"). Attachments do not count toward deg_H and need not be induced.
struct ConfigPattern {
    std::string name;
    std::string provenance = "text-defined";
    std::vector<std::string> notes;
    std::vector<PatternVertex> vertices;
    std::vector<std::array<int, 2>> edges;
    std::vector<CycleConstraint> cycles;
    std::vector<int> ports;
    std::vector<std::vector<int>> facialWalks;
    ReductionScript script;
    bool hasScript = false;

    auto operator==(const ConfigPattern&) const -> bool = default;
    auto size() const -> int { return static_cast<int>(vertices.size()); }
    auto find(const std::string& name) const -> int;
    auto at(const std::string& name) const -> int;  // throws CatalogError
    auto addVertex(PatternVertex v) -> int;
    auto hasEdge(int a, int b) const -> bool;
    void addEdge(int a, int b);
    auto coreDegree(int v) const -> int;
    auto attachmentsOf(int v) const -> std::vector<int>;
    auto neighbors(int v) const -> std::vector<int>;
    auto removed(int v) const -> bool;
};

auto buildI(int k) -> ConfigPattern;
auto buildJ(int k) -> ConfigPattern;
// I_k whose port has host degree 3, with the script removing all of it (a-1 for k = 1).
auto buildIPortDegree3(int k) -> ConfigPattern;
// I_k with attachments and the port goal: at least two port colors extend.
auto buildIPortKernel(int k) -> ConfigPattern;
auto extendAtI(const ConfigPattern& base, const std::string& v, int k) -> ConfigPattern;
auto extendAtJ(const ConfigPattern& base, const std::string& v, int k) -> ConfigPattern;
// Checks the pattern and script invariants; throws CatalogError.
void validatePattern(const ConfigPattern& p);

struct DeriveStep {
    char op = 'I';  // 'I' or 'J'
    std::string vertex;
    int maxK = 0;   // 0: bounded only by the caller
    auto operator==(const DeriveStep&) const -> bool = default;
};
struct VertexOverride {
    std::string vertex;
    ThetaKind thetaKind = ThetaKind::ANY;
    int theta = 0;
    bool internal = false;
    auto operator==(const VertexOverride&) const -> bool = default;
};
// Base entries carry a pattern; derived entries name a base plus extension steps;
// builtin entries name a parametric builder.
struct CatalogEntry {
    std::string name;
    std::string provenance = "text-defined";
    std::vector<std::string> notes;
    std::string builtin;  // "I", "J", "I-port3", "I-kernel"
    int builtinK = 0;     // 0: parametric
    std::string base;
    std::vector<VertexOverride> overrides;
    std::vector<DeriveStep> steps;
    ConfigPattern pattern;
    auto operator==(const CatalogEntry&) const -> bool = default;
};
struct Catalog {
    std::vector<CatalogEntry> entries;
    auto operator==(const Catalog&) const -> bool = default;
    auto find(const std::string& name) const -> const CatalogEntry*;
    // Concrete patterns of an entry, every extension parameter ranging over 1..kBound
    // (further capped per step).
    auto instantiate(const std::string& name, int kBound) const -> std::vector<ConfigPattern>;
};
auto parseCatalog(const std::string& text) -> Catalog;
auto writeCatalog(const Catalog& c) -> std::string;
auto loadCatalog(const std::string& path) -> Catalog;
auto defaultCatalogPath() -> std::string;

struct Occurrence {
    std::vector<int> image;  // pattern vertex -> host vertex
};
struct MatchResult {
    std::vector<Occurrence> maps;
    int orbits = 0;  // distinct core image sets
    bool truncated = false;
};
auto match(const SignedPlaneGraph& sg, const ConfigPattern& p, std::size_t limit = 100000) -> MatchResult;
// Whether one given map satisfies every matching condition.
auto occurrenceHolds(const SignedPlaneGraph& sg, const ConfigPattern& p, const Occurrence& occ) -> bool;

struct KernelFailure {
    std::map<std::string, std::string> signature;  // co-tree edge "a-b" -> image word
    std::map<std::string, int> coloring;           // frontier vertex -> color
    std::string detail;
};
struct KernelReport {
    std::string name;
    bool pass = false;
    bool vacuous = false;       // the sign constraints admit no signature
    bool decomposed = false;    // verified per removed component
    std::uint64_t signatures = 0;
    std::uint64_t checks = 0;
    std::uint64_t failureCount = 0;
    std::vector<KernelFailure> failures;  // first few
    double seconds = 0;
};
inline constexpr std::uint64_t kDefaultKernelBudget = 50'000'000;
// Throws EnumerationBudgetExceeded when the enumeration would exceed `budget` checks.
auto verifyKernel(const ConfigPattern& p, std::uint64_t budget = kDefaultKernelBudget) -> KernelReport;

// Triangle [u v w] with 3-vertices u, v and outer neighbors u', v': over all σ and
// all colorings of u', v', counts the colors of w that extend.
struct RecolorReport {
    int cases = 0;
    int part1Cases = 0;  // uv straight, φ(u') ≠ φ(v'): all three colors of w extend
    int part2Cases = 0;  // triangle negative: at least two colors extend
    int failures = 0;
};
auto triangleRecolorKernel() -> RecolorReport;

struct SurgeryReport {
    bool ok = false;  // the script could be carried out
    std::string detail;
    bool inG = false;
    bool precolorProper = false;
    bool vertexDecrease = false;
    int nBefore = 0, nAfter = 0;
    auto good() const -> bool { return ok && inG && precolorProper && vertexDecrease; }
};
struct SurgeryResult {
    SignedPlaneGraph graph;
    SurgeryReport report;
    std::vector<int> vertexMap;  // host vertex -> result vertex, -1 if removed
};
// Throws SurgeryCollision when the script cannot be applied at this occurrence.
auto applySurgery(const SignedPlaneGraph& sg, const ConfigPattern& p, const Occurrence& occ) -> SurgeryResult;

// A host containing the pattern: core vertices keep their pattern ids, the
// attachments (plus leaves padding θ) are joined by paths into the outer cycle.
struct RealizeOptions {
    unsigned seed = 1;
    int maxPath = 4;
    int attempts = 400;
    bool requireSurgeryInG = true;
};
struct RealizedHost {
    SignedPlaneGraph sg;
    Occurrence occ;
};
auto realizeHost(const ConfigPattern& p, const RealizeOptions& opt = {}) -> RealizedHost;

struct ScanHit {
    std::string entry;
    std::string pattern;
    std::vector<int> vertices;  // core image, sorted
};
struct StructuralFlag {
    std::string kind;
    std::string detail;
    std::vector<int> vertices;
};
struct ScanSummary {
    std::vector<ScanHit> hits;
    std::vector<StructuralFlag> structural;
    std::vector<JOccurrence> jOccurrences;
    auto empty() const -> bool { return hits.empty() && structural.empty(); }
};
auto scanAll(const SignedPlaneGraph& sg, const Catalog& c, int maxK = 5) -> ScanSummary;

} // namespace dp3
