#include "hydra/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace hydra {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    int seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        if (blank(body)) continue;
        std::istringstream ls(body);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0) {
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected header \"n m\"");
            }
        } else {
            int u, v;
            if (!(ls >> u >> v)) {
                throw ParseError("line " + std::to_string(lineno) + ": expected \"u v\"");
            }
            if (u < 0 || v < 0 || u >= n || v >= n) {
                throw ParseError("line " + std::to_string(lineno) + ": vertex out of range");
            }
            if (u == v) {
                throw ParseError("line " + std::to_string(lineno) + ": self-loop");
            }
            edges.emplace_back(u, v);
            ++seen;
        }
        std::string trailing;
        if (ls >> trailing) {
            throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
        }
    }
    if (n < 0) throw ParseError("empty graph file");
    if (seen != m) {
        throw ParseError("expected " + std::to_string(m) + " edges, found " +
                         std::to_string(seen));
    }
    return Graph(n, std::move(edges));
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return read_graph(in);
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

DirectedHypergraph parse_certificate(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("certificate: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("arcs")) {
        throw ParseError("certificate: expected object with \"n\" and \"arcs\"");
    }
    if (!j["n"].is_number_integer()) throw ParseError("certificate: \"n\" must be an integer");
    int n = j["n"].get<int>();
    if (!j["arcs"].is_array()) throw ParseError("certificate: \"arcs\" must be an array");
    std::vector<Hyperarc> arcs;
    for (const auto& a : j["arcs"]) {
        if (!a.is_array() || a.size() != 3 || !a[0].is_number_integer() ||
            !a[1].is_number_integer() || !a[2].is_number_integer()) {
            throw ParseError("certificate: each arc must be [u, v, w]");
        }
        try {
            arcs.emplace_back(a[0].get<int>(), a[1].get<int>(), a[2].get<int>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("certificate: ") + e.what());
        }
    }
    try {
        return DirectedHypergraph(n, std::move(arcs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("certificate: ") + e.what());
    }
}

DirectedHypergraph read_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open certificate file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_certificate(buf.str());
}

std::string write_certificate(const DirectedHypergraph& h) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const Hyperarc& a : h.arcs()) arcs.push_back({a.u, a.v, a.w});
    nlohmann::json j;
    j["arcs"] = std::move(arcs);
    j["n"] = h.n();
    return j.dump();
}

}  // namespace hydra
