#pragma once

#include "dp3/classify.hpp"
#include "dp3/configs.hpp"
#include "dp3/signing.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dp3 {

// Exact rational with a normalized 64-bit numerator and positive denominator.
// Intermediates use 128 bits; results that do not fit raise RationalOverflow.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1);
    auto num() const -> std::int64_t { return n_; }
    auto den() const -> std::int64_t { return d_; }
    auto str() const -> std::string;
    auto sign() const -> int { return n_ > 0 ? 1 : n_ < 0 ? -1 : 0; }

    friend auto operator+(Rational a, Rational b) -> Rational;
    friend auto operator-(Rational a, Rational b) -> Rational;
    friend auto operator*(Rational a, Rational b) -> Rational;
    friend auto operator/(Rational a, Rational b) -> Rational;
    friend auto operator-(Rational a) -> Rational;
    auto operator+=(Rational b) -> Rational&;
    auto operator-=(Rational b) -> Rational&;
    friend auto operator==(Rational a, Rational b) -> bool = default;
    friend auto operator<=>(Rational a, Rational b) -> std::strong_ordering;

private:
    std::int64_t n_ = 0, d_ = 1;
};

enum class ElementKind : std::uint8_t { VERTEX, FACE, SNOWFLAKE };
struct Element {
    ElementKind kind = ElementKind::VERTEX;
    int id = -1;
    auto operator<=>(const Element&) const = default;
    auto name() const -> std::string;  // "v3", "f7", "S0"
};
inline auto vertexEl(int v) -> Element { return {ElementKind::VERTEX, v}; }
inline auto faceEl(int f) -> Element { return {ElementKind::FACE, f}; }
inline auto snowEl(int s) -> Element { return {ElementKind::SNOWFLAKE, s}; }

struct Transfer {
    std::string rule;  // "R1", "R2", "R3", "R4(1)".."R4(3)", "R5(1)", "R5(2)", "R6"
    Element from, to;
    Rational amount;
    int via = -1;      // R5: the nice face; R6: index into strings(g)
};

struct ChargeLedger {
    std::map<Element, Rational> accounts;
    std::vector<Transfer> transfers;
    void move(const std::string& rule, Element from, Element to, Rational amount, int via = -1);
    auto at(Element e) const -> Rational;
    auto total() const -> Rational;
};

// Vertices and faces at d - 4 (the outer face at d + 4); snowflake accounts at 0.
auto initialCharges(const SignedPlaneGraph& sg, const Classification& cls) -> ChargeLedger;

struct RuleOutcome {
    ChargeLedger ledger;
    std::vector<std::string> unmodeled;  // rejected components touched by the snowflake rules
};
auto applyRules(const SignedPlaneGraph& sg, const Classification& cls, const ChargeLedger& initial) -> RuleOutcome;

enum class Phase : std::uint8_t { INITIAL, FINAL };
struct SnowflakeCharge {
    Rational value;
    Rational memberSum;      // summed member accounts (plus credits in the final phase)
    bool consistent = true;  // initial phase: formula equals the member sum
};
// INITIAL: -|3Δ(S)| - |T(S)| checked against the member accounts of `ledger`.
// FINAL: member vertex and face accounts plus the snowflake's own credits.
auto snowflakeCharge(const Classification& cls, int s, const ChargeLedger& ledger, Phase phase) -> SnowflakeCharge;

struct ClaimResult {
    std::string id;
    Element element;
    Rational value;
    bool pass = false;
    bool equality = false;  // external C-vertex ending at exactly 0
};
struct ClaimReport {
    std::vector<ClaimResult> results;
    int externalEqualities = 0;
    auto allPass() const -> bool;
    auto failures() const -> std::vector<ClaimResult>;
};
// Claim ids: snowflake-nonnegative, internal-c-nonnegative, external-c-positive,
// two-vertex-nonnegative, outer-face-exact, inner-face-zero.
auto verifyClaims(const SignedPlaneGraph& sg, const Classification& cls, const ChargeLedger& finalLedger)
    -> ClaimReport;

struct R6CapEntry {
    int vertex = -1;
    int string = -1;  // index into strings(g)
    Rational outflow;
    bool pass = true;
};
struct R6CapReport {
    std::vector<R6CapEntry> entries;
    auto pass() const -> bool;
};
auto r6CapCheck(const ChargeLedger& finalLedger) -> R6CapReport;

struct Explanation {
    ClaimResult failure;
    std::vector<std::string> reasons;  // hits and structural flags near the element
};
struct WitnessVerdict {
    bool pass = false;
    std::vector<Explanation> explained;
    std::vector<ClaimResult> unexplained;
    ScanSummary scan;
};
struct WitnessOptions {
    int maxK = 5;
    int radius = 2;
};
// Every failing claim must have a catalog occurrence or structural flag within
// `radius` of the failing element's vertices.
auto witness(const SignedPlaneGraph& sg, const Catalog& catalog, const WitnessOptions& opt = {}) -> WitnessVerdict;
auto witness(const SignedPlaneGraph& sg, const Classification& cls, const ClaimReport& claims,
             const Catalog& catalog, const WitnessOptions& opt = {}) -> WitnessVerdict;

struct DischargeReport {
    Classification cls;
    ChargeLedger initial;
    ChargeLedger final;
    std::vector<std::string> unmodeled;
    ClaimReport claims;
    R6CapReport r6;
    std::vector<SnowflakeCharge> snowInitial, snowFinal;
    auto conserved() const -> bool;
};
auto discharge(const SignedPlaneGraph& sg) -> DischargeReport;
auto toJson(const DischargeReport& r, const WitnessVerdict* w = nullptr) -> std::string;

} // namespace dp3
