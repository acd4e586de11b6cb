#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hydra/errors.hpp"
#include "hydra/graph.hpp"
#include "hydra/solver.hpp"

namespace hydra {

/// Definite Horn clause over a formula's variable table: body indices
/// (sorted, non-empty) and a head index outside the body.
struct Clause {
    std::vector<int> body;
    int head = 0;

    friend auto operator<=>(const Clause&, const Clause&) = default;
};

/// A definite Horn formula.  Variables keep their first-appearance order;
/// clauses are sorted and deduplicated.  Immutable after construction.
class HornFormula {
public:
    HornFormula() = default;
    HornFormula(std::vector<std::string> variables, std::vector<Clause> clauses);

    int variable_count() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& name(int i) const { return vars_[i]; }
    std::optional<int> index_of(const std::string& name) const;
    const std::vector<Clause>& clauses() const { return clauses_; }
    int size() const { return static_cast<int>(clauses_.size()); }

    /// All bodies have size exactly 2.
    bool three_horn() const;

private:
    std::vector<std::string> vars_;
    std::vector<Clause> clauses_;
};

/// Formula text: one clause per line, "x & y -> z"; '#' comments and blank
/// lines ignored; identifiers are alphanumeric/underscore words.
HornFormula parse_horn(const std::string& text);

std::string format_clause(const HornFormula& f, const Clause& c);
std::string format_horn(const HornFormula& f);

/// Forward-chaining implication check.  Variables of the query unknown to the
/// formula are inert: they are marked only when they appear in the query body.
bool implies(const HornFormula& f, const std::vector<std::string>& body,
             const std::string& head);
bool implies(const HornFormula& f, const Clause& c);

/// True iff every occurring body appears with every possible head.
bool is_hydra(const HornFormula& f);

/// The undirected graph formed by the bodies of a hydra formula, with the
/// variable names travelling alongside.
std::pair<Graph, std::vector<std::string>> body_graph(const HornFormula& f);

/// One clause u,v -> w per edge (u,v) and head w outside it: |E| * (n-2)
/// clauses.  Names default to x0..x{n-1}.
HornFormula expand_to_hydra(const Graph& g, std::vector<std::string> names = {});

struct HornMinimizeResult {
    HornFormula formula;
    bool optimal = false;
    int lower = 0;  // clause-count interval; lower == upper == size when optimal
    int upper = 0;
    HydraResult solver;
};

/// Minimizes a hydra formula via the exact solver on its body graph.  Every
/// output clause is a clause of the input, and the output is equivalent to
/// it.  When solver caps are exceeded, a verified non-optimal reduction is
/// returned with the bound interval.
HornMinimizeResult minimize_hydra(const HornFormula& f, const SolverOptions& opts = {});

}  // namespace hydra
