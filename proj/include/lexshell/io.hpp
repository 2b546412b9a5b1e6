#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "lexshell/checkers.hpp"
#include "lexshell/complex.hpp"
#include "lexshell/graph.hpp"
#include "lexshell/homology.hpp"

namespace lexshell {

using json = nlohmann::json;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// {"n": int, "edges": [[a, b], ...]} with a < b, sorted.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// {"n": int, "facets": [[v, ...], ...]} in canonical facet order.
json complex_to_json(const Complex& d);
Complex complex_from_json(const json& j);

// {"order": [facet-index, ...]}
json certificate_to_json(const ShellingCertificate& cert);
ShellingCertificate shelling_certificate_from_json(const json& j);

// {"shed": v, "del": ..., "link": ...} or {"leaf": "simplex|void|empty-face"}
json certificate_to_json(const ShedTree& tree);
ShedTree shed_tree_from_json(const json& j);

// {"betti": {"-1": b, "0": b, ...}, "torsion": {"-1": [...], ...}}
json profile_to_json(const HomologyProfile& p);

json stats_to_json(const SearchStats& s);

using Input = std::variant<Graph, Complex>;

// Accepted descriptors:
//   C16(1,4,8)        circulant shorthand
//   G4(0-1,2-3)       explicit vertex count and edge list
//   K4, E3            complete and edgeless graphs
//   A[B]              lexicographical product, left-associative: A[B][C] = (A[B])[C]
//   A^(2,1,1)         expansion of A by the given multiplicities
//   {...}             inline JSON graph or complex
//   anything else     path to a JSON graph or complex file
Input parse_input(std::string_view descriptor);
Graph parse_graph(std::string_view descriptor);

// Explicit form "G<n>(a-b,...)" accepted back by parse_input.
std::string describe(const Graph& g);

// Circular-layout DOT rendering with pinned vertex positions.
std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace lexshell
