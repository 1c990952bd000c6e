#include "dp3/cli.hpp"

#include "dp3/errors.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace dp3 {

namespace {

auto syntax(int line, const std::string& msg) -> SyntaxError {
    return SyntaxError("line " + std::to_string(line) + ": " + msg);
}

auto toInt(const std::string& tok, int line) -> int {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw syntax(line, "expected an integer, got '" + tok + "'");
    }
}

} // namespace

auto parseSpg(const std::string& text) -> SignedPlaneGraph {
    std::istringstream in(text);
    std::string raw;
    int lineNo = 0;
    bool header = false;
    int n = -1;
    std::vector<std::vector<int>> rot;
    std::vector<bool> seenRot;
    std::optional<std::pair<int, int>> outer;
    struct SignLine { int u, v; Perm p; int line; };
    struct ColorLine { int v, c, line; };
    std::vector<SignLine> signs;
    std::vector<ColorLine> colors;

    auto vertex = [&](const std::string& tok, int line) {
        int v = toInt(tok, line);
        if (n < 0) throw syntax(line, "vertex before the 'n' line");
        if (v < 0 || v >= n) throw syntax(line, "vertex " + tok + " out of range");
        return v;
    };

    while (std::getline(in, raw)) {
        ++lineNo;
        if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const auto& key = tok[0];
        if (!header) {
            if (key != "spg" || tok.size() != 2 || tok[1] != "1") throw syntax(lineNo, "expected header 'spg 1'");
            header = true;
            continue;
        }
        if (key == "n") {
            if (n >= 0) throw syntax(lineNo, "duplicate 'n' line");
            if (tok.size() != 2) throw syntax(lineNo, "'n' takes one value");
            n = toInt(tok[1], lineNo);
            if (n < 0) throw syntax(lineNo, "negative vertex count");
            rot.assign(n, {});
            seenRot.assign(n, false);
        } else if (key == "rot") {
            if (tok.size() < 2) throw syntax(lineNo, "'rot' needs a vertex");
            int v = vertex(tok[1], lineNo);
            if (seenRot[v]) throw syntax(lineNo, "duplicate rotation for vertex " + tok[1]);
            seenRot[v] = true;
            for (std::size_t i = 2; i < tok.size(); ++i) rot[v].push_back(vertex(tok[i], lineNo));
        } else if (key == "outer") {
            if (outer) throw syntax(lineNo, "duplicate 'outer' line");
            if (tok.size() != 3) throw syntax(lineNo, "'outer' takes two vertices");
            outer = std::pair{vertex(tok[1], lineNo), vertex(tok[2], lineNo)};
        } else if (key == "sign") {
            if (tok.size() != 4) throw syntax(lineNo, "'sign' takes two vertices and a permutation");
            auto p = parsePerm(tok[3]);
            if (!p) throw syntax(lineNo, "bad permutation '" + tok[3] + "'");
            signs.push_back({vertex(tok[1], lineNo), vertex(tok[2], lineNo), *p, lineNo});
        } else if (key == "precolor") {
            if (tok.size() != 3) throw syntax(lineNo, "'precolor' takes a vertex and a color");
            int v = vertex(tok[1], lineNo);
            int c = toInt(tok[2], lineNo);
            if (c < 1 || c > 3) throw syntax(lineNo, "color must be 1, 2 or 3");
            colors.push_back({v, c, lineNo});
        } else {
            throw syntax(lineNo, "unknown keyword '" + key + "'");
        }
    }
    if (!header) throw syntax(lineNo, "missing header 'spg 1'");
    if (n < 0) throw syntax(lineNo, "missing 'n' line");
    for (int v = 0; v < n; ++v)
        if (!seenRot[v]) throw syntax(lineNo, "missing rotation for vertex " + std::to_string(v));
    if (!outer) throw syntax(lineNo, "missing 'outer' line");

    SignedPlaneGraph sg(PlaneGraph(rot, outer->first, outer->second));
    std::vector<bool> signed_(sg.graph.m(), false);
    for (const auto& s : signs) {
        int e = sg.graph.edgeId(s.u, s.v);
        if (e < 0) throw syntax(s.line, "sign on a non-edge");
        if (signed_[e]) throw syntax(s.line, "duplicate sign for an edge");
        signed_[e] = true;
        sg.setSigma(s.u, s.v, s.p);
    }
    std::vector<bool> colored(n, false);
    for (const auto& c : colors) {
        if (colored[c.v]) throw syntax(c.line, "duplicate precolor for a vertex");
        colored[c.v] = true;
        sg.precolor[c.v] = c.c;
    }
    return sg;
}

auto emitSpg(const SignedPlaneGraph& sg) -> std::string {
    const auto& g = sg.graph;
    std::ostringstream out;
    out << "spg 1\nn " << g.n() << "\n";
    for (int v = 0; v < g.n(); ++v) {
        out << "rot " << v;
        for (int u : g.rotation(v)) out << ' ' << u;
        out << "\n";
    }
    const auto& w = g.face(g.outerFace()).walk;
    out << "outer " << w[0] << ' ' << w[1 % w.size()] << "\n";
    for (int e = 0; e < g.m(); ++e) {
        auto [a, b] = g.edge(e);
        int u = std::min(a, b), v = std::max(a, b);
        if (Perm p = sg.sigma(u, v); p != kId) out << "sign " << u << ' ' << v << ' ' << toWord(p) << "\n";
    }
    for (int v = 0; v < g.n(); ++v)
        if (v < static_cast<int>(sg.precolor.size()) && sg.precolor[v]) out << "precolor " << v << ' ' << sg.precolor[v] << "\n";
    return out.str();
}

auto loadSpg(const std::string& path) -> SignedPlaneGraph {
    std::ifstream f(path);
    if (!f) throw SyntaxError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parseSpg(ss.str());
}

} // namespace dp3
