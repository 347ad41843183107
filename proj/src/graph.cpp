#include "durfee/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "durfee/errors.hpp"
#include "durfee/rng.hpp"

namespace durfee {

namespace {

constexpr long long kMaxWeightMagnitude = 1000000000LL;
constexpr long long kMaxGenus = 1000000000LL;
constexpr int kMaxVertices = 64;

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

long long parse_int_token(const std::string& tok, int line_no, const char* what) {
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(tok.c_str(), &end, 10);
  if (errno != 0 || end != tok.c_str() + tok.size() || tok.empty())
    throw ParseError(line_no, std::string("expected integer ") + what + ", got '" + tok + "'");
  return v;
}

void validate(ResolutionGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw ValidationError("graph has no vertices");
  if (n > kMaxVertices)
    throw ValidationError("graph has " + std::to_string(n) + " vertices; at most " +
                          std::to_string(kMaxVertices) + " are supported");
  // magnitude caps keep the fixed-width scan kernels provably overflow-free
  for (const Vertex& v : g.vertices) {
    if (v.self_intersection < -kMaxWeightMagnitude || v.self_intersection > kMaxWeightMagnitude)
      throw ValidationError("self-intersection of '" + v.id + "' out of supported range");
    if (v.genus < 0 || v.genus > kMaxGenus)
      throw ValidationError("genus of '" + v.id + "' out of supported range");
  }
  if (g.edge_count() > 1000000) throw ValidationError("too many edges");
  // connectivity
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& [a, b] : g.edges) {
      int other = -1;
      if (a == v) other = b;
      else if (b == v) other = a;
      if (other >= 0 && !seen[other]) {
        seen[other] = 1;
        stack.push_back(other);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw ValidationError("graph is disconnected (vertex '" + g.vertices[i].id +
                                        "' unreachable from '" + g.vertices[0].id + "')");

  GramMatrix m = intersection_matrix(g);
  NegDefiniteResult nd = check_negative_definite(m);
  if (!nd.negative_definite) {
    std::vector<std::string> w;
    for (const Int& c : nd.witness) w.push_back(c.get_str());
    throw ValidationError("intersection form is not negative definite: leading minor k=" +
                          std::to_string(nd.failing_k) + " has the wrong sign (witness vector [" +
                          join(w, ", ") + "] pairs to a nonnegative square)");
  }

  for (const Vertex& v : g.vertices)
    if (v.self_intersection == -1 && v.genus == 0) {
      g.warnings.push_back("non-minimal input: vertex '" + v.id +
                           "' is a genus-0 (-1)-curve; bounds assume the minimal resolution");
      break;
    }
}

}  // namespace

int ResolutionGraph::index_of(const std::string& id) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertices[i].id == id) return i;
  return -1;
}

ResolutionGraph parse_resolution_graph(const std::string& text) {
  ResolutionGraph g;
  std::map<std::string, int> index;

  // Pass 1: vertices (so edges may reference vertices declared later).
  {
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
      ++line_no;
      std::vector<std::string> tok = split_ws(line);
      if (tok.empty() || tok[0][0] == '#') continue;
      if (tok[0] == "vertex") {
        if (tok.size() != 4)
          throw ParseError(line_no, "vertex line needs: vertex <id> <self_intersection> <genus>");
        if (index.count(tok[1])) throw ParseError(line_no, "duplicate vertex id '" + tok[1] + "'");
        long long w = parse_int_token(tok[2], line_no, "self-intersection");
        long long gen = parse_int_token(tok[3], line_no, "genus");
        if (w < -kMaxWeightMagnitude || w > kMaxWeightMagnitude)
          throw ParseError(line_no, "self-intersection out of supported range");
        if (gen < 0) throw ParseError(line_no, "genus must be nonnegative");
        if (gen > kMaxGenus) throw ParseError(line_no, "genus out of supported range");
        index[tok[1]] = g.vertex_count();
        g.vertices.push_back({tok[1], w, gen});
      } else if (tok[0] == "edge") {
        if (tok.size() != 3) throw ParseError(line_no, "edge line needs: edge <id> <id>");
      } else {
        throw ParseError(line_no, "unknown directive '" + tok[0] + "'");
      }
    }
  }

  // Pass 2: edges.
  {
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
      ++line_no;
      std::vector<std::string> tok = split_ws(line);
      if (tok.empty() || tok[0][0] == '#' || tok[0] != "edge") continue;
      auto a = index.find(tok[1]);
      auto b = index.find(tok[2]);
      if (a == index.end()) throw ParseError(line_no, "unknown vertex '" + tok[1] + "' in edge");
      if (b == index.end()) throw ParseError(line_no, "unknown vertex '" + tok[2] + "' in edge");
      if (a->second == b->second)
        throw ParseError(line_no, "self-loop on vertex '" + tok[1] +
                                      "' (resolve the node first: dual graphs of good "
                                      "resolutions have smooth curves)");
      g.edges.emplace_back(std::min(a->second, b->second), std::max(a->second, b->second));
    }
  }

  validate(g);
  return g;
}

std::string serialize_resolution_graph(const ResolutionGraph& g) {
  std::ostringstream os;
  for (const Vertex& v : g.vertices)
    os << "vertex " << v.id << " " << v.self_intersection << " " << v.genus << "\n";
  std::vector<std::pair<int, int>> es(g.edges);
  std::sort(es.begin(), es.end());
  for (const auto& [a, b] : es)
    os << "edge " << g.vertices[a].id << " " << g.vertices[b].id << "\n";
  return os.str();
}

std::string graph_hash(const ResolutionGraph& g) {
  const std::string s = serialize_resolution_graph(g);
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

GramMatrix intersection_matrix(const ResolutionGraph& g) {
  GramMatrix m;
  m.n = g.vertex_count();
  m.entries.assign(static_cast<size_t>(m.n) * m.n, 0);
  for (int i = 0; i < m.n; ++i) m.at(i, i) = g.vertices[i].self_intersection;
  for (const auto& [a, b] : g.edges) {
    m.at(a, b) += 1;
    m.at(b, a) += 1;
  }
  return m;
}

long long link_first_betti(const ResolutionGraph& g) {
  long long genus_sum = 0;
  for (const Vertex& v : g.vertices) genus_sum += v.genus;
  long long cycle_rank = g.edge_count() - g.vertex_count() + 1;
  return 2 * genus_sum + cycle_rank;
}

long long graph_euler_characteristic(const ResolutionGraph& g) {
  return g.vertex_count() - g.edge_count();
}

ResolutionGraph make_chain(int n, long long weight) {
  if (n < 1) throw ValidationError("chain: need at least one vertex");
  if (weight > -2) throw ValidationError("chain: weight must be <= -2");
  ResolutionGraph g;
  for (int i = 0; i < n; ++i) g.vertices.push_back({"v" + std::to_string(i + 1), weight, 0});
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  validate(g);
  return g;
}

ResolutionGraph make_star(long long center_weight, long long center_genus,
                          const std::vector<StarArm>& arms) {
  ResolutionGraph g;
  g.vertices.push_back({"c", center_weight, center_genus});
  int arm_no = 0;
  for (const StarArm& arm : arms) {
    ++arm_no;
    if (arm.length < 1) throw ValidationError("star: arm length must be >= 1");
    int prev = 0;
    for (int k = 1; k <= arm.length; ++k) {
      int idx = g.vertex_count();
      g.vertices.push_back({"a" + std::to_string(arm_no) + "_" + std::to_string(k), arm.weight, 0});
      g.edges.emplace_back(std::min(prev, idx), std::max(prev, idx));
      prev = idx;
    }
  }
  validate(g);
  return g;
}

ResolutionGraph make_cone(long long d) {
  if (d < 2) throw ValidationError("cone: degree must be >= 2");
  ResolutionGraph g;
  g.vertices.push_back({"v", -d, (d - 1) * (d - 2) / 2});
  validate(g);
  return g;
}

ResolutionGraph make_random(int n, long long weight_min, long long weight_max, long long genus_min,
                            long long genus_max, uint64_t seed, int retry_budget) {
  if (n < 1) throw ValidationError("random: need at least one vertex");
  if (weight_min > weight_max || genus_min > genus_max)
    throw ValidationError("random: empty weight or genus range");
  if (genus_min < 0) throw ValidationError("random: genus must be nonnegative");
  DetRng rng(seed);
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    ResolutionGraph g;
    for (int i = 0; i < n; ++i)
      g.vertices.push_back({"v" + std::to_string(i + 1), rng.range(weight_min, weight_max),
                            rng.range(genus_min, genus_max)});
    // random spanning tree, plus occasionally one extra edge (cycle or multi-edge)
    for (int i = 1; i < n; ++i) {
      int p = static_cast<int>(rng.range(0, i - 1));
      g.edges.emplace_back(p, i);
    }
    if (n >= 2 && rng.chance(1, 4)) {
      int a = static_cast<int>(rng.range(0, n - 1));
      int b = static_cast<int>(rng.range(0, n - 2));
      if (b >= a) ++b;
      g.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    GramMatrix m = intersection_matrix(g);
    if (!check_negative_definite(m).negative_definite) continue;
    validate(g);
    return g;
  }
  throw ValidationError("random: no negative-definite graph found within " +
                        std::to_string(retry_budget) + " attempts");
}

}  // namespace durfee
