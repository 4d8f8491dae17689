// Command-line front end: instance generators, decomposition, cover
// construction, verification and the star lower bound.
//
// Exit codes: 0 success / certificate pass, 1 certificate failure,
// 2 structural or parse error.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dagcover/config.hpp"
#include "dagcover/decomposition.hpp"
#include "dagcover/generators.hpp"
#include "dagcover/graph.hpp"
#include "dagcover/io.hpp"
#include "dagcover/planar_cover.hpp"
#include "dagcover/star_bound.hpp"
#include "dagcover/tw_nonsteiner.hpp"
#include "dagcover/tw_steiner.hpp"

using namespace dagcover;
using ordered_json = nlohmann::ordered_json;

namespace {

struct GenOptions {
    std::string kind;
    int n = 7;
    int k = 2;
    int rows = 4, cols = 4;
    double max_weight = 4.0;
    double keep_prob = 0.75;
    uint64_t seed = 1;
    std::string out, td_out, emb_out;
};

int run_gen(const GenOptions& opt) {
    WeightedDigraph graph;
    if (opt.kind == "star") {
        graph = make_bidirected_star(opt.n);
        if (!opt.td_out.empty()) spit_file(opt.td_out, write_td(star_tree_decomposition(opt.n), opt.n));
    } else if (opt.kind == "ktree") {
        KTreeInstance inst = make_random_partial_ktree(opt.n, opt.k, opt.seed, opt.keep_prob,
                                                       opt.max_weight);
        graph = inst.graph;
        if (!opt.td_out.empty()) spit_file(opt.td_out, write_td(inst.td, opt.n));
    } else if (opt.kind == "grid") {
        PlanarInstance inst = make_grid(opt.rows, opt.cols, opt.seed, opt.max_weight);
        graph = inst.graph;
        if (!opt.emb_out.empty()) spit_file(opt.emb_out, write_embedding(inst.embedding));
    } else if (opt.kind == "dicycle") {
        PlanarInstance inst = make_dicycle(opt.n, opt.seed, opt.max_weight);
        graph = inst.graph;
        if (!opt.emb_out.empty()) spit_file(opt.emb_out, write_embedding(inst.embedding));
    } else {
        throw input_error("unknown kind: " + opt.kind);
    }
    std::string text = write_graph_text(graph);
    if (opt.out.empty())
        std::cout << text;
    else
        spit_file(opt.out, text);
    return 0;
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty())
        std::cout << content;
    else
        spit_file(path, content);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DAG covers of weighted digraphs: constructions and certification"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "parallelism cap for distance computations");

    GenOptions gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate benchmark instances");
    cmd_gen->add_option("--kind", gen.kind, "star | ktree | grid | dicycle")->required();
    cmd_gen->add_option("--n", gen.n, "vertex count (star, ktree, dicycle)");
    cmd_gen->add_option("--k", gen.k, "k-tree parameter");
    cmd_gen->add_option("--rows", gen.rows, "grid rows");
    cmd_gen->add_option("--cols", gen.cols, "grid columns");
    cmd_gen->add_option("--max-weight", gen.max_weight, "maximum edge weight");
    cmd_gen->add_option("--keep-prob", gen.keep_prob, "k-tree edge keep probability");
    cmd_gen->add_option("--seed", gen.seed, "generator seed");
    cmd_gen->add_option("--out", gen.out, "graph output path (stdout if omitted)");
    cmd_gen->add_option("--td", gen.td_out, "decomposition output path");
    cmd_gen->add_option("--emb", gen.emb_out, "embedding output path");

    std::string graph_path, td_path, emb_path, cover_path, out_path, pd1_path, pd2_path;
    std::string pathcover_path, dot_prefix;
    double eps = 0.5;
    double t_override = -1.0;

    CLI::App* cmd_dec = app.add_subcommand("decompose", "min-fill tree decomposition");
    cmd_dec->add_option("--graph", graph_path)->required();
    cmd_dec->add_option("--out", out_path, "decomposition output path (stdout if omitted)");

    CLI::App* cmd_cover = app.add_subcommand("cover", "build a DAG cover");
    cmd_cover->require_subcommand(1);
    CLI::App* cov_tw = cmd_cover->add_subcommand("tw-steiner", "exact 2-DAG Steiner cover");
    cov_tw->add_option("--graph", graph_path)->required();
    cov_tw->add_option("--td", td_path, "decomposition path (min-fill if omitted)");
    cov_tw->add_option("--out", out_path, "cover JSON output");
    cov_tw->add_option("--pd1", pd1_path, "path decomposition of dag 0");
    cov_tw->add_option("--pd2", pd2_path, "path decomposition of dag 1");
    cov_tw->add_option("--dot", dot_prefix, "write <prefix><i>.dot per dag");
    CLI::App* cov_ns = cmd_cover->add_subcommand("tw-nonsteiner", "exact O(log n)-DAG cover");
    cov_ns->add_option("--graph", graph_path)->required();
    cov_ns->add_option("--td", td_path, "decomposition path (min-fill if omitted)");
    cov_ns->add_option("--out", out_path, "cover JSON output");
    cov_ns->add_option("--dot", dot_prefix, "write <prefix><i>.dot per dag");
    CLI::App* cov_pl = cmd_cover->add_subcommand("planar", "(1+eps) 2-DAG Steiner cover");
    cov_pl->add_option("--graph", graph_path)->required();
    cov_pl->add_option("--emb", emb_path)->required();
    cov_pl->add_option("--eps", eps, "accuracy parameter in (0,1)");
    cov_pl->add_option("--out", out_path, "cover JSON output");
    cov_pl->add_option("--pathcover", pathcover_path, "path cover JSON output");
    cov_pl->add_option("--dot", dot_prefix, "write <prefix><i>.dot per dag");

    CLI::App* cmd_verify = app.add_subcommand("verify", "certify a cover against its graph");
    cmd_verify->add_option("--graph", graph_path)->required();
    cmd_verify->add_option("--cover", cover_path)->required();
    cmd_verify->add_option("--t", t_override, "override the stretch target");
    cmd_verify->add_option("--report", out_path, "report JSON path (stdout if omitted)");

    CLI::App* cmd_bound = app.add_subcommand("bound", "lower-bound tools");
    cmd_bound->require_subcommand(1);
    CLI::App* bound_star = cmd_bound->add_subcommand("star-lb", "bidirected-star bound");
    int star_n = 5;
    int64_t star_mu = 0;
    bool star_mu_set = false;
    bound_star->add_option("--n", star_n, "star vertex count")->required();
    CLI::Option* mu_opt = bound_star->add_option("--mu", star_mu, "extra edge budget");
    bound_star->add_option("--cover", cover_path, "analyze a concrete star cover JSON");
    bound_star->add_option("--out", out_path, "report JSON path (stdout if omitted)");

    CLI::App* cmd_stats = app.add_subcommand("stats", "graph statistics");
    cmd_stats->add_option("--graph", graph_path)->required();
    cmd_stats->add_option("--out", out_path, "report JSON path (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_gen) return run_gen(gen);

        if (*cmd_dec) {
            WeightedDigraph g = read_graph_text(slurp_file(graph_path));
            TreeDecomposition td = heuristic_tree_decomposition(g);
            emit(out_path, write_td(td, g.n()));
            return 0;
        }

        if (*cmd_cover) {
            WeightedDigraph g = read_graph_text(slurp_file(graph_path));
            DagCover cover;
            if (*cov_tw || *cov_ns) {
                TreeDecomposition td = td_path.empty()
                                           ? heuristic_tree_decomposition(g)
                                           : read_td(slurp_file(td_path));
                if (*cov_tw) {
                    PathwidthFriendlyOrder order = pathwidth_friendly_permutation(g, td);
                    TwSteinerCover res = build_tw_steiner_cover(g, td, order);
                    cover = std::move(res.cover);
                    if (!pd1_path.empty())
                        spit_file(pd1_path, write_td(res.path_decs[0].as_tree(),
                                                     cover.dags[0].vertex_count()));
                    if (!pd2_path.empty())
                        spit_file(pd2_path, write_td(res.path_decs[1].as_tree(),
                                                     cover.dags[1].vertex_count()));
                } else {
                    cover = build_tw_nonsteiner_cover(g, td);
                }
            } else {
                PlanarEmbedding emb = read_embedding(slurp_file(emb_path));
                PlanarCoverResult res = build_planar_cover(g, emb, eps);
                cover = std::move(res.cover);
                if (!pathcover_path.empty())
                    spit_file(pathcover_path, write_path_cover_json(res.path_cover));
            }
            emit(out_path, write_cover_json(cover, g.n()));
            if (!dot_prefix.empty())
                for (size_t i = 0; i < cover.dags.size(); ++i)
                    spit_file(dot_prefix + std::to_string(i) + ".dot",
                              write_dag_dot(cover.dags[i], "dag" + std::to_string(i)));
            return 0;
        }

        if (*cmd_verify) {
            WeightedDigraph g = read_graph_text(slurp_file(graph_path));
            DagCover cover = read_cover_json(slurp_file(cover_path));
            if (t_override >= 1.0) cover.stretch_target = t_override;
            CoverCertificate cert = certify(g, cover, threads);
            emit(out_path, write_certificate_json(cert));
            return cert.pass() ? 0 : 1;
        }

        if (*cmd_bound) {
            star_mu_set = mu_opt->count() > 0;
            ordered_json j;
            j["format"] = 1;
            j["n"] = star_n;
            if (!cover_path.empty()) {
                DagCover cover = read_cover_json(slurp_file(cover_path));
                StarCoverAnalysis res = analyze_star_cover(star_n, cover);
                j["mu"] = res.mu;
                j["bound"] = res.bound;
                j["dags"] = res.dag_count;
                j["q_pairs"] = res.q_pairs.size();
                j["consistent"] = res.consistent;
                if (!res.counterexample.empty()) j["counterexample"] = res.counterexample;
                emit(out_path, j.dump(2) + "\n");
                return res.consistent ? 0 : 1;
            }
            if (!star_mu_set) star_mu = 0;
            j["mu"] = star_mu;
            j["bound"] = star_lower_bound(star_n, star_mu);
            emit(out_path, j.dump(2) + "\n");
            return 0;
        }

        if (*cmd_stats) {
            WeightedDigraph g = read_graph_text(slurp_file(graph_path));
            DistanceMatrix dm = all_pairs_distances(g, threads);
            int64_t reachable_pairs = 0;
            for (Vertex u = 0; u < g.n(); ++u)
                for (Vertex v = 0; v < g.n(); ++v)
                    if (u != v && reachable(dm(u, v))) ++reachable_pairs;
            double min_w = 0, max_w = 0;
            if (g.m() > 0) {
                min_w = max_w = g.edges()[0].weight;
                for (const Edge& e : g.edges()) {
                    min_w = std::min(min_w, e.weight);
                    max_w = std::max(max_w, e.weight);
                }
            }
            ordered_json j;
            j["format"] = 1;
            j["n"] = g.n();
            j["m"] = g.m();
            j["min_weight"] = min_w;
            j["max_weight"] = max_w;
            j["reachable_pairs"] = reachable_pairs;
            if (reachable_pairs > 0) j["aspect_ratio"] = aspect_ratio(dm);
            emit(out_path, j.dump(2) + "\n");
            return 0;
        }
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const structural_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
