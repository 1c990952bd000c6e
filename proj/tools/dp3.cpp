#include "dp3/classify.hpp"
#include "dp3/cli.hpp"
#include "dp3/configs.hpp"
#include "dp3/discharge.hpp"
#include "dp3/errors.hpp"
#include "dp3/plane_graph.hpp"
#include "dp3/solver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace dp3;

namespace {

constexpr int kOk = 0, kViolation = 1, kInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

auto load(const std::string& path, int maxN) -> SignedPlaneGraph {
    auto sg = loadSpg(path);
    if (sg.n() > maxN)
        throw InputError(path + " has " + std::to_string(sg.n()) + " vertices, above the cap " + std::to_string(maxN));
    return sg;
}

auto list(const std::vector<int>& vs) -> std::string {
    std::string s;
    for (int v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
}

auto coloringText(const Coloring& c) -> std::string {
    std::string s;
    for (std::size_t v = 0; v < c.size(); ++v) s += (v ? " " : "") + std::to_string(v) + ":" + std::to_string(c[v]);
    return s;
}

auto writeFile(const std::string& path, const std::string& text) -> void {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

auto cmdCheck(const SignedPlaneGraph& sg) -> int {
    const auto& g = sg.graph;
    int bad = 0;
    auto audit = boundaryAudit(g);
    std::cout << "outer face length " << audit.outerLength << "\n";
    if (audit.tooLong) std::cout << "VIOLATION boundary longer than 12\n", ++bad;
    if (audit.outerNotCycle) std::cout << "VIOLATION outer face is not a cycle\n", ++bad;
    for (auto [a, b] : audit.chords) std::cout << "VIOLATION chord " << a << "-" << b << "\n", ++bad;
    for (int v : audit.cutVertices) std::cout << "VIOLATION cut vertex " << v << "\n", ++bad;
    for (int v : audit.lowDegreeInternal) std::cout << "VIOLATION internal vertex " << v << " of degree < 3\n", ++bad;
    for (const auto& c : forbiddenCycleCheck(g, {4, 6, 8}))
        std::cout << "VIOLATION forbidden " << c.size() << "-cycle " << list(c) << "\n", ++bad;
    for (const auto& c : facialCycleCheck(g))
        std::cout << "VIOLATION non-facial " << c.size() << "-cycle " << list(c) << "\n", ++bad;
    for (const auto& s : stringLengthCheck(g))
        std::cout << "VIOLATION string " << list(s.string.vertices) << " on a " << s.faceLength << "-face (needs fewer than "
                  << s.bound << ")\n",
            ++bad;
    std::cout << (bad ? "FAIL " : "PASS ") << bad << " violations\n";
    return bad ? kViolation : kOk;
}

auto cmdSolve(const SignedPlaneGraph& sg, bool doCount, bool extend) -> int {
    if (extend) {
        auto r = extendBoundary(sg);
        std::cout << "boundary length " << r.boundaryLength << ", " << r.boundaryColorings << " boundary colorings"
                  << (r.usedProvidedPrecolor ? " (given precoloring)" : "") << ", " << r.failures.size()
                  << " without extension\n";
        for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i)
            std::cout << "no extension for " << coloringText(r.failures[i]) << "\n";
        std::cout << (r.failures.empty() ? "PASS\n" : "FAIL\n");
        return r.failures.empty() ? kOk : kViolation;
    }
    if (doCount) {
        std::cout << "colorings " << count(sg) << "\n";
        return kOk;
    }
    auto c = solve(sg);
    if (!c) {
        std::cout << "UNSAT\n";
        return kViolation;
    }
    std::cout << "SAT " << coloringText(*c) << "\n";
    return kOk;
}

auto cmdClassify(const SignedPlaneGraph& sg, bool json) -> int {
    auto cls = classifyAll(sg);
    if (json) {
        std::cout << classificationJson(sg, cls);
        return kOk;
    }
    for (int v = 0; v < sg.n(); ++v) {
        const auto& r = cls.roles[v];
        std::cout << "vertex " << v << " " << roleName(r.role) << (r.bad ? " bad" : "") << (r.external ? " external" : "");
        if (r.threeDelta()) std::cout << " outer " << r.outer;
        std::cout << "\n";
    }
    for (std::size_t s = 0; s < cls.snow.accepted.size(); ++s) {
        const auto& S = cls.snow.accepted[s];
        std::cout << "snowflake " << s << " faces " << list(S.faces) << " 3delta " << S.stats.threeDelta << " bowtie "
                  << S.stats.bowtie << " H-edges " << snowflakeGraphH(sg.graph, cls.roles, S).size()
                  << (S.stats.eq3Holds() ? "" : " eq3-fails") << (S.stats.eq4Holds() ? "" : " eq4-fails") << "\n";
    }
    for (const auto& r : cls.snow.rejected)
        std::cout << "rejected faces " << list(r.faces) << " condition " << r.condition << ": " << r.detail << "\n";
    for (const auto& r : cls.nice) {
        std::cout << "nice face " << r.face << " clause " << r.clause << " snowflake " << r.relatedSnowflake;
        for (const auto& v : r.niceVertices) std::cout << " v" << v.vertex << "(" << v.kind << "-nice)";
        std::cout << "\n";
    }
    return kOk;
}

auto cmdMatch(const SignedPlaneGraph& sg, const std::string& catalogPath, int maxK) -> int {
    auto cat = loadCatalog(catalogPath);
    auto scan = scanAll(sg, cat, maxK);
    for (const auto& h : scan.hits) std::cout << "hit " << h.pattern << " at " << list(h.vertices) << "\n";
    for (const auto& f : scan.structural) std::cout << "structural " << f.kind << ": " << f.detail << "\n";
    std::cout << scan.hits.size() << " hits, " << scan.structural.size() << " structural flags\n";
    return scan.empty() ? kOk : kViolation;
}

auto cmdDischarge(const SignedPlaneGraph& sg, const std::string& reportPath, const std::string& catalogPath) -> int {
    auto r = discharge(sg);
    auto cat = loadCatalog(catalogPath);
    auto w = witness(sg, r.cls, r.claims, cat);
    std::cout << "total " << r.final.total().str() << (r.conserved() ? " conserved" : " NOT conserved") << "\n";
    for (const auto& c : r.claims.failures())
        std::cout << "claim " << c.id << " fails at " << c.element.name() << " with " << c.value.str() << "\n";
    std::cout << "claims " << r.claims.results.size() - r.claims.failures().size() << "/" << r.claims.results.size()
              << " pass, external C-vertices at 0: " << r.claims.externalEqualities << "\n";
    std::cout << "R6 cap " << (r.r6.pass() ? "PASS" : "FAIL") << " over " << r.r6.entries.size() << " pairs\n";
    for (const auto& u : r.unmodeled) std::cout << "unmodeled " << u << "\n";
    for (const auto& e : w.explained) {
        std::cout << "explained " << e.failure.element.name() << " by";
        for (const auto& why : e.reasons) std::cout << " [" << why << "]";
        std::cout << "\n";
    }
    for (const auto& c : w.unexplained) std::cout << "UNEXPLAINED " << c.id << " at " << c.element.name() << "\n";
    bool ok = r.conserved() && r.r6.pass() && w.pass;
    std::cout << "witness " << (w.pass ? "PASS" : "FAIL") << "\n" << (ok ? "PASS\n" : "FAIL\n");
    if (!reportPath.empty()) writeFile(reportPath, toJson(r, &w));
    return ok ? kOk : kViolation;
}

auto cmdVerifyKernel(const std::string& which, const std::string& catalogPath, int maxK, std::uint64_t budget) -> int {
    if (which == "lemma7") {
        auto r = triangleRecolorKernel();
        std::cout << "triangle recoloring: " << r.cases << " cases, " << r.part1Cases << " with three free colors, "
                  << r.part2Cases << " with at least two, " << r.failures << " failures\n"
                  << (r.failures ? "FAIL\n" : "PASS\n");
        return r.failures ? kViolation : kOk;
    }
    auto cat = loadCatalog(catalogPath);
    std::vector<std::string> names;
    if (which == "all") {
        for (const auto& e : cat.entries) names.push_back(e.name);
    } else {
        if (!cat.find(which)) throw InputError("unknown catalog entry " + which);
        names.push_back(which);
    }
    int bad = 0;
    for (const auto& name : names) {
        for (const auto& p : cat.instantiate(name, maxK)) {
            if (!p.hasScript) {
                std::cout << p.name << " SKIP no reduction script\n";
                continue;
            }
            try {
                auto r = verifyKernel(p, budget);
                std::cout << p.name << (r.pass ? " PASS " : " FAIL ") << r.signatures << " signatures, " << r.checks
                          << " checks, " << r.failureCount << " failures" << (r.vacuous ? ", vacuous" : "")
                          << (r.decomposed ? ", per component" : "") << ", " << r.seconds << " s\n";
                for (const auto& f : r.failures) std::cout << "  " << f.detail << "\n";
                bad += !r.pass;
            } catch (const EnumerationBudgetExceeded& e) {
                std::cout << p.name << " UNVERIFIED " << e.what() << "\n";
                ++bad;
            }
        }
    }
    return bad ? kViolation : kOk;
}

} // namespace

auto main(int argc, char** argv) -> int {
    CLI::App app{"Signed plane graph 3-coloring toolkit for graphs without 4-, 6- and 8-cycles"};
    app.require_subcommand(1);
    int maxN = 64;
    app.add_option("--max-n", maxN, "Largest accepted instance")->capture_default_str();
    std::string catalogPath = defaultCatalogPath();

    std::string file;
    auto* check = app.add_subcommand("check", "Audit the boundary, forbidden cycles, facial cycles and strings");
    check->add_option("file", file)->required();

    bool doCount = false, extend = false;
    auto* solveCmd = app.add_subcommand("solve", "Find or count colorings, or check boundary extension");
    solveCmd->add_option("file", file)->required();
    solveCmd->add_flag("--count", doCount);
    solveCmd->add_flag("--extend-boundary", extend);

    bool json = false;
    auto* classify = app.add_subcommand("classify", "Vertex roles, snowflakes and nice faces");
    classify->add_option("file", file)->required();
    classify->add_flag("--json", json);

    int maxK = 5;
    auto* matchCmd = app.add_subcommand("match", "Scan for catalog configurations");
    matchCmd->add_option("file", file)->required();
    matchCmd->add_option("--catalog", catalogPath)->capture_default_str();
    matchCmd->add_option("--max-k", maxK)->capture_default_str();

    std::string report;
    auto* dis = app.add_subcommand("discharge", "Replay the discharging rules and check the charge claims");
    dis->add_option("file", file)->required();
    dis->add_option("--report", report, "Write the JSON ledger here");
    dis->add_option("--catalog", catalogPath)->capture_default_str();

    std::string which;
    int kernelK = 2;
    std::uint64_t budget = kDefaultKernelBudget;
    auto* vk = app.add_subcommand("verify-kernel", "Verify reducibility kernels (entry name, all, or lemma7)");
    vk->add_option("entry", which)->required();
    vk->add_option("--max-k", kernelK)->capture_default_str();
    vk->add_option("--budget", budget)->capture_default_str();
    vk->add_option("--catalog", catalogPath)->capture_default_str();

    int genN = 0;
    std::uint64_t seed = 0;
    GenOptions gopt;
    std::string out;
    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    gen->add_option("--n", genN)->required();
    gen->add_option("--seed", seed)->required();
    gen->add_option("--boundary", gopt.boundary, "Outer cycle length (3..12, not 4, 6 or 8)");
    gen->add_flag("--precolor", gopt.precolorBoundary, "Add a random proper boundary precoloring");
    gen->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*check) return cmdCheck(load(file, maxN));
        if (*solveCmd) return cmdSolve(load(file, maxN), doCount, extend);
        if (*classify) return cmdClassify(load(file, maxN), json);
        if (*matchCmd) return cmdMatch(load(file, maxN), catalogPath, maxK);
        if (*dis) return cmdDischarge(load(file, maxN), report, catalogPath);
        if (*vk) return cmdVerifyKernel(which, catalogPath, kernelK, budget);
        if (*gen) {
            gopt.maxN = maxN;
            auto text = emitSpg(generate(genN, seed, gopt));
            if (out.empty()) std::cout << text;
            else writeFile(out, text);
            return kOk;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const GenerationBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kViolation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
