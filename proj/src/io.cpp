#include "dagcover/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dagcover {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_weight(Weight w) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", w);
    return buf;
}

struct LineReader {
    std::istringstream in;
    int line_no = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    // Next non-comment, non-empty line; false at end of input.
    bool next(std::string& out, char comment = '#') {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            if (line[first] == comment) continue;
            out = line;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error("line " + std::to_string(line_no) + ": " + msg);
    }
};

}  // namespace

std::string write_graph_text(const WeightedDigraph& g) {
    std::ostringstream os;
    os << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges())
        os << e.tail << ' ' << e.head << ' ' << format_weight(e.weight) << '\n';
    return os.str();
}

WeightedDigraph read_graph_text(const std::string& text) {
    LineReader r(text);
    std::string line;
    if (!r.next(line)) r.fail("missing graph header");
    std::istringstream hdr(line);
    int n = -1, m = -1;
    if (!(hdr >> n >> m) || n < 0 || m < 0) r.fail("bad graph header, expected 'n m'");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        if (!r.next(line)) r.fail("expected " + std::to_string(m) + " edges");
        std::istringstream es(line);
        Edge e;
        if (!(es >> e.tail >> e.head >> e.weight)) r.fail("bad edge line");
        edges.push_back(e);
    }
    try {
        return WeightedDigraph(n, std::move(edges));
    } catch (const input_error& err) {
        throw parse_error(std::string("graph: ") + err.what());
    }
}

std::string write_td(const TreeDecomposition& td, int n) {
    std::ostringstream os;
    os << "s td " << td.bag_count() << ' ' << td.width() + 1 << ' ' << n << '\n';
    for (int i = 0; i < td.bag_count(); ++i) {
        os << "b " << i + 1;
        for (Vertex v : td.bags[i]) os << ' ' << v + 1;
        os << '\n';
    }
    for (const auto& [a, b] : td.tree_edges) os << a + 1 << ' ' << b + 1 << '\n';
    return os.str();
}

TreeDecomposition read_td(const std::string& text) {
    LineReader r(text);
    std::string line;
    if (!r.next(line, 'c')) r.fail("missing 's td' header");
    std::istringstream hdr(line);
    std::string s, td_tag;
    int bags = -1, width1 = -1, n = -1;
    if (!(hdr >> s >> td_tag >> bags >> width1 >> n) || s != "s" || td_tag != "td" || bags < 0)
        r.fail("bad header, expected 's td <bags> <width+1> <n>'");
    TreeDecomposition td;
    td.bags.assign(bags, {});
    int edges_expected = bags > 0 ? bags - 1 : 0;
    int edges_seen = 0;
    while (r.next(line, 'c')) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "b") {
            int idx;
            if (!(ls >> idx) || idx < 1 || idx > bags) r.fail("bad bag index");
            Vertex v;
            while (ls >> v) {
                if (v < 1 || v > n) r.fail("bag vertex out of range");
                td.bags[idx - 1].push_back(v - 1);
            }
            std::sort(td.bags[idx - 1].begin(), td.bags[idx - 1].end());
        } else {
            int a = -1, b = -1;
            std::istringstream es(line);
            if (!(es >> a >> b) || a < 1 || a > bags || b < 1 || b > bags)
                r.fail("bad tree edge line");
            td.tree_edges.emplace_back(a - 1, b - 1);
            ++edges_seen;
        }
    }
    if (edges_seen != edges_expected) r.fail("tree edge count does not match bag count");
    return td;
}

std::string write_embedding(const PlanarEmbedding& emb) {
    std::ostringstream os;
    for (int v = 0; v < static_cast<int>(emb.rotation.size()); ++v) {
        os << v << ':';
        for (Vertex w : emb.rotation[v]) os << ' ' << w;
        os << '\n';
    }
    return os.str();
}

PlanarEmbedding read_embedding(const std::string& text) {
    LineReader r(text);
    std::string line;
    PlanarEmbedding emb;
    while (r.next(line)) {
        size_t colon = line.find(':');
        if (colon == std::string::npos) r.fail("expected 'v: neighbors'");
        int v = -1;
        try {
            v = std::stoi(line.substr(0, colon));
        } catch (...) {
            r.fail("bad vertex id");
        }
        if (v < 0) r.fail("bad vertex id");
        if (v >= static_cast<int>(emb.rotation.size())) emb.rotation.resize(v + 1);
        std::istringstream ns(line.substr(colon + 1));
        Vertex w;
        while (ns >> w) emb.rotation[v].push_back(w);
    }
    return emb;
}

namespace {

ordered_json vertex_ref(const SteinerDag& dag, int dag_index, Vertex ref) {
    if (ref < dag.graph_n) return ref;
    return "s:" + std::to_string(dag_index) + ":" + std::to_string(ref - dag.graph_n);
}

Vertex parse_ref(const ordered_json& j, int graph_n, int dag_index, int steiner_count,
                 const char* what) {
    if (j.is_number_integer()) {
        Vertex v = j.get<Vertex>();
        if (v < 0 || v >= graph_n) throw parse_error(std::string(what) + ": original id out of range");
        return v;
    }
    if (!j.is_string()) throw parse_error(std::string(what) + ": bad vertex reference");
    std::string s = j.get<std::string>();
    int di = -1, k = -1;
    if (std::sscanf(s.c_str(), "s:%d:%d", &di, &k) != 2 || di != dag_index || k < 0 ||
        k >= steiner_count)
        throw parse_error(std::string(what) + ": bad Steiner reference '" + s + "'");
    return graph_n + k;
}

}  // namespace

std::string write_cover_json(const DagCover& cover, int graph_n) {
    ordered_json j;
    j["format"] = 1;
    j["graph_n"] = graph_n;
    j["t"] = cover.stretch_target;
    j["steiner"] = cover.steiner;
    j["dags"] = ordered_json::array();
    for (size_t di = 0; di < cover.dags.size(); ++di) {
        const SteinerDag& dag = cover.dags[di];
        ordered_json jd;
        jd["order"] = ordered_json::array();
        for (Vertex ref : dag.topo_order) jd["order"].push_back(vertex_ref(dag, di, ref));
        jd["steiner_vertices"] = ordered_json::array();
        for (int k = 0; k < dag.steiner_count; ++k)
            jd["steiner_vertices"].push_back("s:" + std::to_string(di) + ":" + std::to_string(k));
        jd["edges"] = ordered_json::array();
        for (const Edge& e : dag.edges)
            jd["edges"].push_back(ordered_json::array(
                {vertex_ref(dag, di, e.tail), vertex_ref(dag, di, e.head), e.weight}));
        j["dags"].push_back(std::move(jd));
    }
    ordered_json prov;
    prov["construction"] = cover.provenance.construction;
    prov["parameters"] = ordered_json::object();
    for (const auto& [k, v] : cover.provenance.parameters) prov["parameters"][k] = v;
    prov["seed"] = cover.provenance.seed;
    j["provenance"] = std::move(prov);
    return j.dump(2) + "\n";
}

DagCover read_cover_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("cover json: ") + e.what());
    }
    if (!j.contains("format") || j["format"] != 1) throw parse_error("cover json: unknown format");
    DagCover cover;
    int graph_n = j.at("graph_n").get<int>();
    cover.stretch_target = j.at("t").get<double>();
    cover.steiner = j.at("steiner").get<bool>();
    int di = 0;
    for (const auto& jd : j.at("dags")) {
        SteinerDag dag;
        dag.graph_n = graph_n;
        dag.steiner_count = static_cast<int>(jd.at("steiner_vertices").size());
        std::vector<char> present(graph_n, 0);
        for (const auto& jref : jd.at("order")) {
            Vertex ref = parse_ref(jref, graph_n, di, dag.steiner_count, "order");
            dag.topo_order.push_back(ref);
            if (ref < graph_n) present[ref] = 1;
        }
        for (Vertex v = 0; v < graph_n; ++v)
            if (present[v]) dag.original_vertices.push_back(v);
        for (const auto& je : jd.at("edges")) {
            if (!je.is_array() || je.size() != 3) throw parse_error("cover json: bad edge entry");
            Edge e;
            e.tail = parse_ref(je[0], graph_n, di, dag.steiner_count, "edge");
            e.head = parse_ref(je[1], graph_n, di, dag.steiner_count, "edge");
            e.weight = je[2].get<double>();
            dag.edges.push_back(e);
        }
        cover.dags.push_back(std::move(dag));
        ++di;
    }
    if (j.contains("provenance")) {
        const auto& prov = j["provenance"];
        cover.provenance.construction = prov.value("construction", "");
        cover.provenance.seed = prov.value("seed", 0ULL);
        if (prov.contains("parameters"))
            for (const auto& [k, v] : prov["parameters"].items())
                cover.provenance.parameters[k] = v.get<std::string>();
    }
    return cover;
}

std::string write_path_cover_json(const PathCover& pc) {
    ordered_json j;
    j["format"] = 1;
    j["eps"] = pc.eps;
    j["paths"] = pc.paths;
    j["path_prefix"] = pc.path_prefix;
    j["vertex_paths"] = pc.vertex_paths;
    j["covering"] = ordered_json::array();
    for (const auto& cov : pc.covering) {
        ordered_json jv = ordered_json::array();
        for (const auto& [pid, entries] : cov) {
            ordered_json je = ordered_json::array();
            for (const PortalEntry& e : entries) {
                ordered_json ent;
                ent["portal"] = e.portal;
                ent["d_to"] = reachable(e.dist_to) ? ordered_json(e.dist_to) : ordered_json(nullptr);
                ent["d_from"] =
                    reachable(e.dist_from) ? ordered_json(e.dist_from) : ordered_json(nullptr);
                je.push_back(std::move(ent));
            }
            jv.push_back(ordered_json::array({pid, std::move(je)}));
        }
        j["covering"].push_back(std::move(jv));
    }
    return j.dump(2) + "\n";
}

PathCover read_path_cover_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("path cover json: ") + e.what());
    }
    if (!j.contains("format") || j["format"] != 1)
        throw parse_error("path cover json: unknown format");
    PathCover pc;
    pc.eps = j.at("eps").get<double>();
    pc.paths = j.at("paths").get<std::vector<std::vector<Vertex>>>();
    pc.path_prefix = j.at("path_prefix").get<std::vector<std::vector<Weight>>>();
    pc.vertex_paths = j.at("vertex_paths").get<std::vector<std::vector<int>>>();
    for (const auto& jv : j.at("covering")) {
        std::vector<std::pair<int, std::vector<PortalEntry>>> cov;
        for (const auto& jp : jv) {
            int pid = jp.at(0).get<int>();
            std::vector<PortalEntry> entries;
            for (const auto& je : jp.at(1)) {
                PortalEntry e;
                e.portal = je.at("portal").get<Vertex>();
                e.dist_to = je.at("d_to").is_null() ? kUnreachable : je.at("d_to").get<double>();
                e.dist_from =
                    je.at("d_from").is_null() ? kUnreachable : je.at("d_from").get<double>();
                entries.push_back(e);
            }
            cov.emplace_back(pid, std::move(entries));
        }
        pc.covering.push_back(std::move(cov));
    }
    return pc;
}

std::string write_certificate_json(const CoverCertificate& cert) {
    ordered_json j;
    j["format"] = 1;
    j["pass"] = cert.pass();
    j["structure"] = {{"pass", cert.structure_ok}};
    if (!cert.structure_ok) j["structure"]["witness"] = cert.structure_witness;
    j["acyclic"] = {{"pass", cert.acyclic_ok}};
    j["dominating"] = {{"pass", cert.dominating_ok}};
    if (cert.dominating_witness) {
        const auto& w = *cert.dominating_witness;
        j["dominating"]["witness"] = {{"dag", w.dag},
                                      {"u", w.u},
                                      {"v", w.v},
                                      {"dag_dist", w.dag_dist},
                                      {"graph_dist", w.graph_dist}};
    }
    j["stretch"] = {{"pass", cert.stretch_ok},
                    {"max_ratio", reachable(cert.max_stretch_ratio)
                                      ? ordered_json(cert.max_stretch_ratio)
                                      : ordered_json(nullptr)}};
    if (cert.stretch_witness) {
        const auto& w = *cert.stretch_witness;
        j["stretch"]["worst"] = {{"u", w.u},
                                 {"v", w.v},
                                 {"best_dag_dist", reachable(w.best_dag_dist)
                                                       ? ordered_json(w.best_dag_dist)
                                                       : ordered_json(nullptr)},
                                 {"graph_dist", w.graph_dist}};
    }
    j["extra_edges"] = cert.extra_edges;
    j["steiner_vertices"] = cert.steiner_vertices;
    j["per_dag"] = ordered_json::array();
    for (const DagStats& st : cert.per_dag) {
        ordered_json jd = {{"edges", st.edge_count},
                           {"extra_edges", st.extra_edge_count},
                           {"steiner", st.steiner_count},
                           {"order_valid", st.order_valid},
                           {"acyclic", st.acyclic}};
        if (!st.cycle_witness.empty()) jd["cycle"] = st.cycle_witness;
        j["per_dag"].push_back(std::move(jd));
    }
    return j.dump(2) + "\n";
}

std::string write_dag_dot(const SteinerDag& dag, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=LR;\n";
    auto ref_name = [&](Vertex ref) {
        if (ref < dag.graph_n) return "v" + std::to_string(ref);
        return "s" + std::to_string(ref - dag.graph_n);
    };
    for (int k = 0; k < dag.steiner_count; ++k)
        os << "  s" << k << " [shape=point];\n";
    for (const Edge& e : dag.edges)
        os << "  " << ref_name(e.tail) << " -> " << ref_name(e.head) << " [label=\""
           << format_weight(e.weight) << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << content;
}

}  // namespace dagcover
