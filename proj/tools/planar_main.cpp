#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "planar/draw.hpp"
#include "planar/io.hpp"
#include "planar/kuratowski.hpp"
#include "planar/oracle.hpp"

using namespace planar;

namespace {

constexpr int kExitPlanar = 0;
constexpr int kExitNonPlanar = 1;
constexpr int kExitInputError = 2;
constexpr int kExitGuard = 3;

Graph load_graph(const std::string &path, const std::string &format) {
    std::ifstream file;
    std::istream *in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open input: " + path);
        in = &file;
    }
    if (format == "edgelist") return read_edge_list(*in);
    if (format == "dot") return read_dot(*in);
    if (format == "json") return read_graph_json(*in);
    throw std::invalid_argument("unknown format: " + format);
}

void write_output(const std::string &path, const std::string &content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output: " + path);
    out << content;
}

bool env_guard_override() {
    const char *v = std::getenv("PLANAR_GUARD_OVERRIDE");
    return v && std::string(v) == "1";
}

struct CommonOpts {
    std::string input = "-";
    std::string format = "edgelist";
    std::string output = "-";
};

void add_common(CLI::App *cmd, CommonOpts &o) {
    cmd->add_option("-i,--input", o.input, "input path, - for stdin");
    cmd->add_option("-f,--format", o.format, "edgelist | dot | json")
        ->check(CLI::IsMember({"edgelist", "dot", "json"}));
    cmd->add_option("-o,--output", o.output, "output path, - for stdout");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"planarity testing, combinatorial embedding and Kuratowski minors"};
    app.require_subcommand(1);

    CommonOpts test_o, embed_o, kur_o, dec_o, vemb_o, vmin_o, gen_o, draw_o, conf_o;
    bool strict = true;
    bool override_guards = false;

    auto *cmd_test = app.add_subcommand("test", "planarity verdict (exit 0 planar, 1 not)");
    add_common(cmd_test, test_o);

    auto *cmd_embed = app.add_subcommand("embed", "embedding JSON, or evidence on exit 1");
    add_common(cmd_embed, embed_o);

    auto *cmd_kur = app.add_subcommand("kuratowski", "K5/K33 minor JSON for non-planar input");
    add_common(cmd_kur, kur_o);

    auto *cmd_dec = app.add_subcommand("decompose", "block-cut tree and separation trees JSON");
    add_common(cmd_dec, dec_o);

    std::string vemb_graph, vmin_graph;
    auto *cmd_vemb =
        app.add_subcommand("verify-embedding", "check an embedding JSON against a graph");
    add_common(cmd_vemb, vemb_o);
    cmd_vemb->add_option("--graph", vemb_graph, "graph file (edge list)")->required();

    auto *cmd_vmin = app.add_subcommand("verify-minor", "check a minor JSON against a graph");
    add_common(cmd_vmin, vmin_o);
    cmd_vmin->add_option("--graph", vmin_graph, "graph file (edge list)")->required();

    std::string gen_kind = "triangulation", gen_name = "K5";
    int gen_n = 10, gen_m = 15;
    std::uint64_t gen_seed = 0;
    auto *cmd_gen = app.add_subcommand("gen", "emit a generated graph as an edge list");
    cmd_gen->add_option("-o,--output", gen_o.output, "output path, - for stdout");
    cmd_gen->add_option("--kind", gen_kind, "triangulation | gnm | canonical")
        ->check(CLI::IsMember({"triangulation", "gnm", "canonical"}));
    cmd_gen->add_option("--n", gen_n, "vertex count");
    cmd_gen->add_option("--m", gen_m, "edge count (gnm)");
    cmd_gen->add_option("--name", gen_name, "canonical name, e.g. K5, W5, grid(3,3)");
    cmd_gen->add_option("--seed", gen_seed, "random seed");

    bool draw_labels = false;
    auto *cmd_draw = app.add_subcommand("draw", "SVG straight-line drawing of a planar input");
    add_common(cmd_draw, draw_o);
    cmd_draw->add_flag("--labels", draw_labels, "draw vertex labels");

    std::string conf_cycle;
    auto *cmd_conf = app.add_subcommand("conflict", "dump the conflict graph of a cycle");
    add_common(cmd_conf, conf_o);
    cmd_conf->add_option("--cycle", conf_cycle, "comma-separated cyclic vertex list")->required();

    app.add_flag("--no-strict", [&strict](std::int64_t) { strict = false; },
                 "skip the induced/non-separating face checks");
    app.add_flag("--override-guards", override_guards, "lift oracle size guards");

    CLI11_PARSE(app, argc, argv);
    override_guards = override_guards || env_guard_override();

    try {
        if (*cmd_test) {
            Graph g = load_graph(test_o.input, test_o.format);
            EmbedResult r = embed(g, strict);
            nlohmann::json j;
            j["planar"] = is_planar_result(r);
            j["n"] = g.vertex_count();
            j["m"] = g.edge_count();
            if (!is_planar_result(r)) j["evidence"] = evidence_to_json(std::get<NonPlanarEvidence>(r));
            std::ostringstream out;
            out << (is_planar_result(r) ? "planar" : "non-planar") << "\n" << j.dump(2) << "\n";
            write_output(test_o.output, out.str());
            return is_planar_result(r) ? kExitPlanar : kExitNonPlanar;
        }
        if (*cmd_embed) {
            Graph g = load_graph(embed_o.input, embed_o.format);
            EmbedResult r = embed(g, strict);
            if (is_planar_result(r)) {
                write_output(embed_o.output,
                             embedding_to_json(g, std::get<PlanarEmbedding>(r)).dump(2) + "\n");
                return kExitPlanar;
            }
            write_output(embed_o.output,
                         evidence_to_json(std::get<NonPlanarEvidence>(r)).dump(2) + "\n");
            return kExitNonPlanar;
        }
        if (*cmd_kur) {
            Graph g = load_graph(kur_o.input, kur_o.format);
            if (is_planar_result(embed(g))) {
                std::cerr << "error: input graph is planar, no Kuratowski minor exists\n";
                return kExitInputError;
            }
            KuratowskiMinor m = find_kuratowski(g);
            write_output(kur_o.output, minor_to_json(m).dump(2) + "\n");
            return kExitPlanar;
        }
        if (*cmd_dec) {
            Graph g = load_graph(dec_o.input, dec_o.format);
            write_output(dec_o.output, decompose_to_json(g).dump(2) + "\n");
            return kExitPlanar;
        }
        if (*cmd_vemb) {
            std::ifstream gf(vemb_graph);
            if (!gf) throw std::invalid_argument("cannot open graph: " + vemb_graph);
            Graph g = read_edge_list(gf);
            std::ifstream file;
            std::istream *in = &std::cin;
            if (vemb_o.input != "-") {
                file.open(vemb_o.input);
                if (!file) throw std::invalid_argument("cannot open input: " + vemb_o.input);
                in = &file;
            }
            nlohmann::json j;
            *in >> j;
            bool ok = verify_embedding(g, embedding_from_json(j));
            write_output(vemb_o.output, std::string(ok ? "valid" : "invalid") + "\n");
            return ok ? kExitPlanar : kExitNonPlanar;
        }
        if (*cmd_vmin) {
            std::ifstream gf(vmin_graph);
            if (!gf) throw std::invalid_argument("cannot open graph: " + vmin_graph);
            Graph g = read_edge_list(gf);
            std::ifstream file;
            std::istream *in = &std::cin;
            if (vmin_o.input != "-") {
                file.open(vmin_o.input);
                if (!file) throw std::invalid_argument("cannot open input: " + vmin_o.input);
                in = &file;
            }
            nlohmann::json j;
            *in >> j;
            bool ok = verify_minor(g, minor_from_json(j));
            write_output(vmin_o.output, std::string(ok ? "valid" : "invalid") + "\n");
            return ok ? kExitPlanar : kExitNonPlanar;
        }
        if (*cmd_gen) {
            Graph g;
            if (gen_kind == "triangulation") {
                g = gen_triangulation(gen_n, gen_seed).first;
            } else if (gen_kind == "gnm") {
                g = gen_gnm(gen_n, gen_m, gen_seed);
            } else {
                g = canonical_graph(gen_name);
            }
            write_output(gen_o.output, write_edge_list(g));
            return kExitPlanar;
        }
        if (*cmd_draw) {
            Graph g = load_graph(draw_o.input, draw_o.format);
            EmbedResult r = embed(g, strict);
            if (!is_planar_result(r)) {
                write_output(draw_o.output,
                             evidence_to_json(std::get<NonPlanarEvidence>(r)).dump(2) + "\n");
                return kExitNonPlanar;
            }
            DrawOptions dopt;
            dopt.labels = draw_labels;
            write_output(draw_o.output, draw_svg(g, std::get<PlanarEmbedding>(r), dopt));
            return kExitPlanar;
        }
        if (*cmd_conf) {
            Graph g = load_graph(conf_o.input, conf_o.format);
            std::vector<int> order;
            std::istringstream cs(conf_cycle);
            std::string tok;
            while (std::getline(cs, tok, ',')) order.push_back(std::stoi(tok));
            Cycle c = cycle_from_vertices(g, order);
            auto bridges = bridges_of_cycle(g, c);
            ConflictGraph h = conflict_graph_of_bridges(bridges, c);
            nlohmann::json j;
            auto jb = nlohmann::json::array();
            for (const auto &b : bridges) {
                nlohmann::json e;
                e["kind"] = b.kind == Bridge::Kind::Chord ? "chord" : "component";
                e["vertices"] = b.vertices;
                e["attachments"] = b.attachments;
                e["edges"] = b.edges.ids();
                jb.push_back(e);
            }
            j["bridges"] = jb;
            auto je = nlohmann::json::array();
            for (const auto &e : h.edges) {
                nlohmann::json w;
                w["a"] = e.a;
                w["b"] = e.b;
                w["mode"] =
                    e.witness.mode == ConflictWitness::Mode::Interleave ? "interleave" : "shared3";
                w["points"] = e.witness.points;
                je.push_back(w);
            }
            j["conflicts"] = je;
            write_output(conf_o.output, j.dump(2) + "\n");
            return kExitPlanar;
        }
    } catch (const GuardExceeded &ex) {
        std::cerr << "guard violation: " << ex.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const nlohmann::json::exception &ex) {
        std::cerr << "error: bad JSON input: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const std::exception &ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
