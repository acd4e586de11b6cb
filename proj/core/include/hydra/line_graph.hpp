#pragma once

#include "hydra/graph.hpp"

namespace hydra {

/// Line graph L(g): vertex i stands for g.edges()[i] (sorted edge order);
/// two vertices are adjacent iff the corresponding edges share an endpoint.
Graph line_graph(const Graph& g);

}  // namespace hydra
