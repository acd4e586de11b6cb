#pragma once

#include <iosfwd>
#include <string>

#include "hydra/errors.hpp"
#include "hydra/graph.hpp"
#include "hydra/hypergraph.hpp"

namespace hydra {

/// Graph text format: first non-comment line "n m", then m lines "u v"
/// (0-based, whitespace-separated).  '#' starts a comment anywhere on a line.
Graph parse_graph(const std::string& text);
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
std::string write_graph(const Graph& g);

/// Certificate format: JSON document {"arcs": [[u, v, w], ...], "n": int}
/// with arcs sorted by (min(u,v), max(u,v), w).  write_certificate emits the
/// canonical byte sequence, so parse/write round-trips are bit-exact.
DirectedHypergraph parse_certificate(const std::string& text);
DirectedHypergraph read_certificate_file(const std::string& path);
std::string write_certificate(const DirectedHypergraph& h);

}  // namespace hydra
