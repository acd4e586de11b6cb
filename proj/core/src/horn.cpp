#include "hydra/horn.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hydra/bounds.hpp"
#include "hydra/represent.hpp"

namespace hydra {

HornFormula::HornFormula(std::vector<std::string> variables, std::vector<Clause> clauses)
    : vars_(std::move(variables)), clauses_(std::move(clauses)) {
    for (const Clause& c : clauses_) {
        if (c.body.empty()) throw std::invalid_argument("clause with empty body");
        if (!std::is_sorted(c.body.begin(), c.body.end()) ||
            std::adjacent_find(c.body.begin(), c.body.end()) != c.body.end()) {
            throw std::invalid_argument("clause body must be sorted and duplicate-free");
        }
        for (int v : c.body) {
            if (v < 0 || v >= variable_count())
                throw std::invalid_argument("clause variable out of range");
        }
        if (c.head < 0 || c.head >= variable_count())
            throw std::invalid_argument("clause head out of range");
        if (std::binary_search(c.body.begin(), c.body.end(), c.head))
            throw std::invalid_argument("clause head occurs in its body");
    }
    std::sort(clauses_.begin(), clauses_.end());
    clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

std::optional<int> HornFormula::index_of(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

bool HornFormula::three_horn() const {
    return std::all_of(clauses_.begin(), clauses_.end(),
                       [](const Clause& c) { return c.body.size() == 2; });
}

namespace {

bool ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
}

struct LineParser {
    const std::string& line;
    int lineno;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(lineno) + ", col " +
                         std::to_string(pos + 1) + ": " + msg);
    }
    void skip_ws() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= line.size();
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < line.size() && ident_char(line[pos])) ++pos;
        if (pos == start) fail("expected identifier");
        return line.substr(start, pos - start);
    }
    bool eat(const std::string& tok) {
        skip_ws();
        if (line.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
};

}  // namespace

HornFormula parse_horn(const std::string& text) {
    std::vector<std::string> vars;
    std::map<std::string, int> index;
    auto intern = [&](const std::string& name) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(vars.size());
        vars.push_back(name);
        index.emplace(name, id);
        return id;
    };

    std::vector<Clause> clauses;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        LineParser p{line, lineno};
        if (p.done()) continue;
        std::vector<int> body{intern(p.ident())};
        while (p.eat("&")) body.push_back(intern(p.ident()));
        if (!p.eat("->")) p.fail("expected '&' or '->'");
        int head = intern(p.ident());
        if (!p.done()) p.fail("trailing input after clause");
        std::sort(body.begin(), body.end());
        if (std::adjacent_find(body.begin(), body.end()) != body.end()) {
            throw ParseError("line " + std::to_string(lineno) +
                             ": duplicate variable in body");
        }
        if (std::binary_search(body.begin(), body.end(), head)) {
            throw ParseError("line " + std::to_string(lineno) +
                             ": redundant clause (head occurs in body)");
        }
        clauses.push_back({std::move(body), head});
    }
    return HornFormula(std::move(vars), std::move(clauses));
}

std::string format_clause(const HornFormula& f, const Clause& c) {
    std::string out;
    for (size_t i = 0; i < c.body.size(); ++i) {
        if (i) out += " & ";
        out += f.name(c.body[i]);
    }
    out += " -> ";
    out += f.name(c.head);
    return out;
}

std::string format_horn(const HornFormula& f) {
    std::vector<std::string> lines;
    for (const Clause& c : f.clauses()) lines.push_back(format_clause(f, c));
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

bool implies(const HornFormula& f, const Clause& c) {
    std::vector<std::string> body;
    for (int v : c.body) body.push_back(f.name(v));
    return implies(f, body, f.name(c.head));
}

bool implies(const HornFormula& f, const std::vector<std::string>& body,
             const std::string& head) {
    // forward chaining with per-clause pending counters
    std::vector<char> marked(f.variable_count(), 0);
    std::vector<int> queue;
    bool head_in_body = false;
    for (const std::string& name : body) {
        if (name == head) head_in_body = true;
        if (auto idx = f.index_of(name)) {
            if (!marked[*idx]) {
                marked[*idx] = 1;
                queue.push_back(*idx);
            }
        }
        // unknown body variables are inert
    }
    if (head_in_body) return true;  // degenerate query
    auto head_idx = f.index_of(head);
    if (!head_idx) return false;  // unknown head can never be marked

    const auto& clauses = f.clauses();
    std::vector<int> pending(clauses.size());
    std::vector<std::vector<int>> watching(f.variable_count());
    for (size_t i = 0; i < clauses.size(); ++i) {
        pending[i] = static_cast<int>(clauses[i].body.size());
        for (int v : clauses[i].body) watching[v].push_back(static_cast<int>(i));
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        for (int ci : watching[x]) {
            if (--pending[ci] == 0) {
                int w = clauses[ci].head;
                if (!marked[w]) {
                    marked[w] = 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return marked[*head_idx];
}

bool is_hydra(const HornFormula& f) {
    if (!f.three_horn()) {
        throw std::invalid_argument("is_hydra: formula is not 3-Horn");
    }
    std::map<std::pair<int, int>, int> heads_per_body;
    for (const Clause& c : f.clauses()) {
        ++heads_per_body[{c.body[0], c.body[1]}];
    }
    for (auto [body, count] : heads_per_body) {
        if (count != f.variable_count() - 2) return false;
    }
    return true;
}

std::pair<Graph, std::vector<std::string>> body_graph(const HornFormula& f) {
    if (!is_hydra(f)) throw std::invalid_argument("body_graph: formula is not a hydra");
    std::vector<Edge> edges;
    for (const Clause& c : f.clauses()) edges.emplace_back(c.body[0], c.body[1]);
    return {Graph(f.variable_count(), std::move(edges)), f.variables()};
}

HornFormula expand_to_hydra(const Graph& g, std::vector<std::string> names) {
    if (g.n() < 3) throw std::invalid_argument("expand_to_hydra: needs n >= 3");
    if (names.empty()) {
        for (int i = 0; i < g.n(); ++i) names.push_back("x" + std::to_string(i));
    }
    if (static_cast<int>(names.size()) != g.n()) {
        throw std::invalid_argument("expand_to_hydra: name table size mismatch");
    }
    std::vector<Clause> clauses;
    for (const Edge& e : g.edges()) {
        for (Vertex w = 0; w < g.n(); ++w) {
            if (!e.contains(w)) clauses.push_back({{e.u, e.v}, w});
        }
    }
    return HornFormula(std::move(names), std::move(clauses));
}

HornMinimizeResult minimize_hydra(const HornFormula& f, const SolverOptions& opts) {
    auto [graph, names] = body_graph(f);  // validates the hydra property
    Normalized norm = normalize(graph);

    HornMinimizeResult result;
    auto emit = [&](const std::vector<Hyperarc>& arcs) {
        std::vector<Clause> clauses;
        for (const Hyperarc& a : arcs) clauses.push_back({{a.u, a.v}, a.w});
        result.formula = HornFormula(names, std::move(clauses));
    };

    // Isolated variables sit in no body; each costs exactly one extra clause
    // pointing at it from some fixed edge.
    std::vector<Hyperarc> isolated_arcs;
    if (graph.edge_count() > 0) {
        const Edge& e0 = graph.edge(0);
        for (Vertex v = 0; v < graph.n(); ++v)
            if (graph.degree(v) == 0) isolated_arcs.emplace_back(e0.u, e0.v, v);
    }

    if (graph.edge_count() == 0) {
        result.optimal = true;
        result.formula = HornFormula(names, {});
        return result;
    }
    if (norm.graph.n() == 2) {
        // a single edge reaches only the isolated variables
        emit(isolated_arcs);
        result.optimal = true;
        result.lower = result.upper = result.formula.size();
        return result;
    }

    result.solver = hydra_number(norm.graph, opts);
    if (result.solver.exact) {
        std::vector<Hyperarc> arcs = isolated_arcs;
        for (const Hyperarc& a : result.solver.certificate->arcs()) {
            arcs.emplace_back(norm.kept[a.u], norm.kept[a.v], norm.kept[a.w]);
        }
        emit(arcs);
        result.optimal = true;
        result.lower = result.upper = result.formula.size();
        return result;
    }

    // solver capped out: fall back to a verified construction
    UpperBound ub = upper_bound(norm.graph);
    std::vector<Hyperarc> arcs = isolated_arcs;
    for (const Hyperarc& a : ub.certificate.arcs()) {
        arcs.emplace_back(norm.kept[a.u], norm.kept[a.v], norm.kept[a.w]);
    }
    emit(arcs);
    result.optimal = false;
    result.lower = result.solver.lower + static_cast<int>(isolated_arcs.size());
    result.upper = result.formula.size();
    return result;
}

}  // namespace hydra
