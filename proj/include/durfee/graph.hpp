#ifndef DURFEE_GRAPH_HPP
#define DURFEE_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "durfee/exact.hpp"

namespace durfee {

// Dual graph of a good resolution: vertices are exceptional curves with
// self-intersection and genus, edges are transversal intersection points.
struct Vertex {
  std::string id;
  long long self_intersection = 0;
  long long genus = 0;
};

struct ResolutionGraph {
  std::vector<Vertex> vertices;             // declaration order
  std::vector<std::pair<int, int>> edges;   // index pairs i < j; repetition = multi-edge
  std::vector<std::string> warnings;        // e.g. non-minimal resolution

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int index_of(const std::string& id) const;
};

struct GramMatrix {
  int n = 0;
  std::vector<long long> entries;  // row-major, symmetric

  long long at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
  long long& at(int i, int j) { return entries[static_cast<size_t>(i) * n + j]; }
};

struct NegDefiniteResult {
  bool negative_definite = false;
  // 1-based index of the first leading principal minor with the wrong sign;
  // 0 when the form is negative definite.
  int failing_k = 0;
  // When not negative definite: integer vector w with (w, Gw) >= 0.
  std::vector<Int> witness;
};

// Parses the line-oriented graph format:
//   # comment
//   vertex <id> <self_intersection> <genus>
//   edge <id> <id>
// Repeated edge lines encode multi-edges; blank lines are ignored.
// Validates connectedness, no self-loops, unique ids and negative
// definiteness of the intersection form; throws ParseError / ValidationError.
ResolutionGraph parse_resolution_graph(const std::string& text);

// Canonical form: vertices in declaration order, then edges sorted by index pair.
std::string serialize_resolution_graph(const ResolutionGraph& g);

// FNV-1a of the canonical serialization, as fixed-width hex.
std::string graph_hash(const ResolutionGraph& g);

GramMatrix intersection_matrix(const ResolutionGraph& g);

// Exact test that (-1)^k * (k-th leading principal minor) > 0 for all k.
NegDefiniteResult check_negative_definite(const GramMatrix& m);

// b1 of the plumbed 3-manifold: 2*sum(genus) + cycle rank of the graph.
long long link_first_betti(const ResolutionGraph& g);

// #vertices - #edges of the topological realization.
long long graph_euler_characteristic(const ResolutionGraph& g);

// Built-in families. Each validates its output and throws ValidationError
// when the requested graph is not negative definite.
ResolutionGraph make_chain(int n, long long weight);
struct StarArm {
  int length = 1;
  long long weight = -2;
};
ResolutionGraph make_star(long long center_weight, long long center_genus,
                          const std::vector<StarArm>& arms);
ResolutionGraph make_cone(long long d);  // vertex (-d, genus (d-1)(d-2)/2)
ResolutionGraph make_random(int n, long long weight_min, long long weight_max,
                            long long genus_min, long long genus_max, uint64_t seed,
                            int retry_budget = 1000);

}  // namespace durfee

#endif
