#include "planar/io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <sstream>

namespace planar {

namespace {

std::string strip_comment(const std::string &line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

} // namespace

Graph read_edge_list(std::istream &in) {
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> pairs;
    while (std::getline(in, line)) {
        std::istringstream ls(strip_comment(line));
        if (n < 0) {
            if (ls >> n >> m) {
                if (n < 0 || m < 0) throw std::invalid_argument("bad header in edge list");
            } else if (!ls.eof()) {
                throw std::invalid_argument("bad header in edge list");
            }
            continue;
        }
        int u, v;
        if (ls >> u >> v) {
            pairs.emplace_back(u, v);
        } else if (!std::all_of(line.begin(), line.end(),
                                [](unsigned char c) { return std::isspace(c) || c == '#'; })) {
            std::string rest = strip_comment(line);
            if (!std::all_of(rest.begin(), rest.end(),
                             [](unsigned char c) { return std::isspace(c); }))
                throw std::invalid_argument("bad edge line: " + line);
        }
    }
    if (n < 0) throw std::invalid_argument("empty edge-list input");
    if (static_cast<int>(pairs.size()) != m)
        throw std::invalid_argument("edge count mismatch: header says " + std::to_string(m) +
                                    ", found " + std::to_string(pairs.size()));
    return Graph::build(n, pairs);
}

std::string write_edge_list(const Graph &g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int e = 0; e < g.edge_count(); ++e)
        out << g.edge(e).u << ' ' << g.edge(e).v << '\n';
    return out.str();
}

Graph read_dot(std::istream &in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    // strip // and # comments
    std::string cleaned;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else {
            cleaned.push_back(text[i]);
        }
    }
    if (cleaned.find("digraph") != std::string::npos || cleaned.find("->") != std::string::npos)
        throw std::invalid_argument("directed DOT input is not supported");
    auto brace = cleaned.find('{');
    auto close = cleaned.rfind('}');
    if (cleaned.find("graph") == std::string::npos || brace == std::string::npos ||
        close == std::string::npos || close < brace)
        throw std::invalid_argument("not an undirected DOT graph");
    std::string body = cleaned.substr(brace + 1, close - brace - 1);

    std::map<std::string, int> id_of;
    std::vector<std::pair<int, int>> pairs;
    auto intern = [&](const std::string &name) {
        auto it = id_of.find(name);
        if (it != id_of.end()) return it->second;
        int id = static_cast<int>(id_of.size());
        id_of[name] = id;
        return id;
    };
    std::istringstream bs(body);
    std::string stmt;
    while (std::getline(bs, stmt, ';')) {
        // ignore attribute blocks
        auto bracket = stmt.find('[');
        if (bracket != std::string::npos) stmt = stmt.substr(0, bracket);
        std::vector<std::string> names;
        std::string cur;
        for (std::size_t i = 0; i <= stmt.size(); ++i) {
            bool split = i == stmt.size() || std::isspace(static_cast<unsigned char>(stmt[i]));
            bool dash = i + 1 < stmt.size() && stmt[i] == '-' && stmt[i + 1] == '-';
            if (dash) {
                if (!cur.empty()) names.push_back(cur);
                cur.clear();
                ++i;
            } else if (split) {
                if (!cur.empty()) names.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(stmt[i]);
            }
        }
        if (names.empty()) continue;
        if (names.size() == 1) {
            intern(names[0]);
            continue;
        }
        // chain a -- b -- c
        std::string joined;
        for (auto &s : names) joined += s;
        for (std::size_t i = 0; i + 1 < names.size(); ++i)
            pairs.emplace_back(intern(names[i]), intern(names[i + 1]));
    }
    return Graph::build(static_cast<int>(id_of.size()), pairs);
}

Graph read_graph_json(std::istream &in) {
    nlohmann::json j;
    in >> j;
    if (!j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
    std::vector<std::pair<int, int>> pairs;
    for (const auto &e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph JSON edges must be [u,v] pairs");
        pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::build(j["n"].get<int>(), pairs);
}

nlohmann::json graph_to_json(const Graph &g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (int e = 0; e < g.edge_count(); ++e)
        edges.push_back({g.edge(e).u, g.edge(e).v});
    j["edges"] = edges;
    return j;
}

nlohmann::json embedding_to_json(const Graph &g, const PlanarEmbedding &pe) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["rotation"] = pe.rotation;
    j["faces"] = pe.faces;
    j["external"] = pe.external;
    return j;
}

PlanarEmbedding embedding_from_json(const nlohmann::json &j) {
    PlanarEmbedding pe;
    pe.rotation = j.at("rotation").get<std::vector<std::vector<int>>>();
    pe.faces = j.at("faces").get<std::vector<std::vector<int>>>();
    pe.external = j.value("external", 0);
    return pe;
}

nlohmann::json minor_to_json(const MinorModel &m) {
    nlohmann::json j;
    j["kind"] = m.kind == MinorModel::Kind::K5 ? "K5" : "K33";
    j["branch_sets"] = m.branch_sets;
    j["paths"] = m.paths;
    return j;
}

MinorModel minor_from_json(const nlohmann::json &j) {
    MinorModel m;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "K5")
        m.kind = MinorModel::Kind::K5;
    else if (kind == "K33")
        m.kind = MinorModel::Kind::K33;
    else
        throw std::invalid_argument("minor kind must be K5 or K33");
    m.branch_sets = j.at("branch_sets").get<std::vector<std::vector<int>>>();
    m.paths = j.value("paths", std::vector<std::vector<int>>{});
    return m;
}

nlohmann::json evidence_to_json(const NonPlanarEvidence &ev) {
    nlohmann::json j;
    switch (ev.reason) {
    case NonPlanarEvidence::Reason::NoFundamentalFace:
        j["reason"] = "no-fundamental-face";
        break;
    case NonPlanarEvidence::Reason::NonbipartiteConflict:
        j["reason"] = "nonbipartite-conflict";
        break;
    case NonPlanarEvidence::Reason::FaceCheckFailed:
        j["reason"] = "face-check-failed";
        break;
    }
    switch (ev.defect) {
    case NonPlanarEvidence::FaceDefect::None:
        break;
    case NonPlanarEvidence::FaceDefect::EdgeCountWrong:
        j["defect"] = "edge-count";
        break;
    case NonPlanarEvidence::FaceDefect::NotACycle:
        j["defect"] = "not-a-cycle";
        break;
    case NonPlanarEvidence::FaceDefect::NotInduced:
        j["defect"] = "not-induced";
        break;
    case NonPlanarEvidence::FaceDefect::Separating:
        j["defect"] = "separating";
        break;
    case NonPlanarEvidence::FaceDefect::NotOrientable:
        j["defect"] = "not-orientable";
        break;
    case NonPlanarEvidence::FaceDefect::EulerViolated:
        j["defect"] = "euler-violated";
        break;
    }
    auto ctx = nlohmann::json::array();
    for (const auto &e : ev.context.edges) ctx.push_back({e[0], e[1], e[2]});
    j["context"] = {{"n", ev.context.n}, {"edges", ctx}};
    if (!ev.vertex_map.empty()) j["vertex_map"] = ev.vertex_map;
    if (!ev.cycle.empty()) j["cycle"] = ev.cycle;
    if (!ev.odd_walk.empty()) j["odd_walk"] = ev.odd_walk;
    if (ev.offending_edge[0] >= 0)
        j["offending_edge"] = {ev.offending_edge[0], ev.offending_edge[1]};
    if (!ev.faces.empty()) j["candidate_faces"] = ev.faces;
    if (!ev.detail.empty()) j["detail"] = ev.detail;
    return j;
}

nlohmann::json decompose_to_json(const Graph &g) {
    BlockCutTree bct = blocks(g);
    nlohmann::json j;
    auto jblocks = nlohmann::json::array();
    for (std::size_t b = 0; b < bct.block_edges.size(); ++b) {
        nlohmann::json jb;
        jb["edges"] = bct.block_edges[b];
        jb["vertices"] = bct.block_vertices[b];
        jblocks.push_back(jb);
    }
    j["blocks"] = jblocks;
    j["cut_vertices"] = bct.cut_vertices;

    auto jtrees = nlohmann::json::array();
    for (std::size_t b = 0; b < bct.block_edges.size(); ++b) {
        const auto &bverts = bct.block_vertices[b];
        const auto &bedges = bct.block_edges[b];
        if (bverts.size() < 3) continue;
        std::map<int, int> local;
        for (std::size_t i = 0; i < bverts.size(); ++i) local[bverts[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> lpairs;
        for (int e : bedges) lpairs.emplace_back(local[g.edge(e).u], local[g.edge(e).v]);
        Graph lb = Graph::build(static_cast<int>(bverts.size()), lpairs);
        SeparationTree st = triconnected_components(lb);

        nlohmann::json jt;
        jt["block"] = b;
        auto jcomps = nlohmann::json::array();
        for (const auto &comp : st.components) {
            nlohmann::json jc;
            jc["type"] = std::string(1, comp.type);
            std::vector<int> vs;
            for (int v : comp.vertices) vs.push_back(bverts[v]);
            jc["vertices"] = vs;
            auto jes = nlohmann::json::array();
            for (const auto &e : comp.edges)
                jes.push_back({bverts[e.u], bverts[e.v],
                               e.graph_edge >= 0 ? bedges[e.graph_edge] : -1});
            jc["edges"] = jes;
            jcomps.push_back(jc);
        }
        jt["components"] = jcomps;
        auto jpairs = nlohmann::json::array();
        for (const auto &vp : st.pairs) {
            nlohmann::json jp;
            jp["components"] = {vp.comp_a, vp.comp_b};
            jp["edge_indices"] = {vp.edge_a, vp.edge_b};
            jp["pair"] = {bverts[vp.u], bverts[vp.v]};
            jpairs.push_back(jp);
        }
        jt["virtual_pairs"] = jpairs;
        jtrees.push_back(jt);
    }
    j["separation_trees"] = jtrees;
    return j;
}

} // namespace planar
