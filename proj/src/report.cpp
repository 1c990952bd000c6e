#include "dp3/cli.hpp"

#include <json.hpp>

namespace dp3 {

auto classificationJson(const SignedPlaneGraph& sg, const Classification& cls) -> std::string {
    using nlohmann::json;
    const auto& g = sg.graph;
    json j;
    json roles = json::array();
    for (int v = 0; v < g.n(); ++v) {
        const auto& r = cls.roles[v];
        json x{{"vertex", v}, {"role", roleName(r.role)}, {"external", r.external}};
        if (r.threeDelta()) {
            x["bad"] = r.bad;
            x["star"] = r.star;
            x["triFace"] = r.triFace;
            x["outer"] = r.outer;
        }
        roles.push_back(x);
    }
    j["roles"] = roles;

    json snow = json::array();
    for (const auto& s : cls.snow.accepted) {
        const auto& st = s.stats;
        json h = json::array();
        for (auto [a, b] : snowflakeGraphH(g, cls.roles, s)) h.push_back({s.faces[a], s.faces[b]});
        snow.push_back({{"faces", s.faces},
                        {"vertices", s.vertices},
                        {"threeDelta", s.threeDelta},
                        {"bowtie", s.bowtie},
                        {"cVertices", s.cVertices},
                        {"H", h},
                        {"stats",
                         {{"plus", st.plus},
                          {"minus", st.minus},
                          {"circ", st.circ},
                          {"star", st.star},
                          {"t1", st.t1},
                          {"t2", st.t2},
                          {"twoVertices", st.twoVertices},
                          {"eq3", st.eq3Holds()},
                          {"eq4", st.eq4Holds()}}}});
    }
    j["snowflakes"] = snow;

    json rej = json::array();
    for (const auto& r : cls.snow.rejected)
        rej.push_back({{"faces", r.faces}, {"condition", r.condition}, {"detail", r.detail}});
    j["rejected"] = rej;

    json nice = json::array();
    for (const auto& r : cls.nice) {
        json nv = json::array();
        for (const auto& v : r.niceVertices) nv.push_back({{"vertex", v.vertex}, {"kind", v.kind}});
        nice.push_back({{"face", r.face},
                        {"clause", r.clause},
                        {"labeling", r.labeling},
                        {"niceVertices", nv},
                        {"relatedSnowflake", r.relatedSnowflake}});
    }
    j["niceFaces"] = nice;
    return j.dump(2) + "\n";
}

} // namespace dp3
