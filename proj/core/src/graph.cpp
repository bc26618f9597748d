#include "colorcount/graph.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

namespace colorcount {

Edge make_edge(int u, int v) {
  if (u == v) throw InputError("loop edge {" + std::to_string(u) + "} is not allowed");
  if (u > v) std::swap(u, v);
  return Edge{u, v};
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw InputError("graph needs at least one vertex, got " + std::to_string(n_));
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw InputError("loop edge at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n_)
      throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} out of range for n=" + std::to_string(n_));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adj_.assign(n_, {});
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
  if (u == v) return -1;
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || !(*it == Edge{u, v})) return -1;
  return static_cast<int>(it - edges_.begin());
}

// ---- graph6 ----

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  const unsigned char first = static_cast<unsigned char>(text[0]);
  if (first < 63 || first > 126)
    throw ParseError("graph6 byte out of range [63,126] at offset 0", 0);
  const int n = first - 63;
  if (n == 0) throw ParseError("graph6 vertex count 0 is not supported", 0);
  if (n > 62) throw ParseError("only the short graph6 form (n <= 62) is supported", 0);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < 1 + body)
    throw ParseError("graph6 string truncated: expected " + std::to_string(1 + body) +
                         " bytes, got " + std::to_string(text.size()),
                     text.size());
  if (text.size() > 1 + body)
    throw ParseError("trailing garbage after graph6 payload at offset " + std::to_string(1 + body),
                     1 + body);

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < body; ++i) {
    const unsigned char c = static_cast<unsigned char>(text[1 + i]);
    if (c < 63 || c > 126)
      throw ParseError("graph6 byte out of range [63,126] at offset " + std::to_string(1 + i),
                       1 + i);
    const unsigned group = c - 63;
    for (int b = 5; b >= 0; --b, ++bit) {
      const bool set = (group >> b) & 1u;
      if (bit >= bits) {
        if (set)
          throw ParseError("nonzero padding bit in graph6 byte at offset " + std::to_string(1 + i),
                           1 + i);
        continue;
      }
      if (set) {
        // Upper triangle, column major: bit index runs over columns j=1..n-1,
        // rows i=0..j-1.
        std::size_t rem = bit;
        int col = 1;
        while (rem >= static_cast<std::size_t>(col)) {
          rem -= col;
          ++col;
        }
        edges.push_back(Edge{static_cast<int>(rem), col});
      }
    }
  }
  return Graph(n, std::move(edges));
}

std::string encode_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 62) throw InputError("graph6 short form only supports n <= 62");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t bit = 0;
  unsigned group = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      group = (group << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (bit % 6 == 5) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
      }
    }
  }
  if (bits % 6 != 0) {
    group <<= (6 - bits % 6);
    out.push_back(static_cast<char>(group + 63));
  }
  return out;
}

// ---- family generators ----

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw InputError(std::string(what) + " must be >= 1, got " + std::to_string(n));
}

}  // namespace

Graph make_empty_graph(int n) {
  require_positive(n, "empty graph size");
  return Graph(n, {});
}

Graph make_path(int n) {
  require_positive(n, "path size");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
  return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
  if (n < 3) throw InputError("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
  edges.push_back(Edge{0, n - 1});
  return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
  require_positive(n, "complete graph size");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back(Edge{u, v});
  return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(int m, int n) {
  return make_complete_multipartite({m, n});
}

Graph make_complete_multipartite(const std::vector<int>& part_sizes) {
  if (part_sizes.empty()) throw InputError("multipartite graph needs at least one part");
  int total = 0;
  for (int s : part_sizes) {
    require_positive(s, "part size");
    total += s;
  }
  // Parts occupy contiguous vertex blocks in declaration order.
  std::vector<int> part_of(total);
  int begin = 0;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    for (int i = 0; i < part_sizes[p]; ++i) part_of[begin + i] = static_cast<int>(p);
    begin += part_sizes[p];
  }
  std::vector<Edge> edges;
  for (int u = 0; u < total; ++u)
    for (int v = u + 1; v < total; ++v)
      if (part_of[u] != part_of[v]) edges.push_back(Edge{u, v});
  return Graph(total, std::move(edges));
}

Graph make_join(const Graph& a, const Graph& b) {
  const int na = a.vertex_count();
  const int nb = b.vertex_count();
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back(Edge{e.u + na, e.v + na});
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < nb; ++v) edges.push_back(Edge{u, na + v});
  return Graph(na + nb, std::move(edges));
}

namespace {

int parse_int(std::string_view s, std::string_view context) {
  int value = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError("bad integer '" + std::string(s) + "' in " + std::string(context), 0);
  return value;
}

std::vector<int> parse_int_list(std::string_view s, std::string_view context) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    out.push_back(parse_int(s.substr(pos, comma - pos), context));
    pos = comma + 1;
    if (comma == s.size()) break;
  }
  return out;
}

// Splits on commas that are not nested inside parentheses.
std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

std::string_view strip_parens(std::string_view s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

Graph parse_family_spec(std::string_view spec) {
  if (spec.empty()) throw ParseError("empty family spec", 0);
  const std::size_t colon = spec.find(':');
  std::string_view name = spec.substr(0, colon == std::string_view::npos ? spec.size() : colon);
  std::string_view args =
      colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  // kN / oN shorthands.
  if (colon == std::string_view::npos && name.size() >= 2 &&
      (name[0] == 'k' || name[0] == 'o') &&
      name.find_first_not_of("0123456789", 1) == std::string_view::npos) {
    const int n = parse_int(name.substr(1), "family shorthand");
    return name[0] == 'k' ? make_complete(n) : make_empty_graph(n);
  }

  if (name == "empty") return make_empty_graph(parse_int(args, "empty"));
  if (name == "path") return make_path(parse_int(args, "path"));
  if (name == "cycle") return make_cycle(parse_int(args, "cycle"));
  if (name == "complete") return make_complete(parse_int(args, "complete"));
  if (name == "kbip" || name == "complete_bipartite") {
    auto sizes = parse_int_list(args, "kbip");
    if (sizes.size() != 2) throw ParseError("kbip takes exactly two part sizes", 0);
    return make_complete_bipartite(sizes[0], sizes[1]);
  }
  if (name == "kpartite" || name == "complete_multipartite")
    return make_complete_multipartite(parse_int_list(args, "kpartite"));
  if (name == "join") {
    auto parts = split_top_level(args);
    if (parts.size() != 2)
      throw ParseError("join takes exactly two operands (parenthesize operands with commas)", 0);
    return make_join(parse_family_spec(strip_parens(parts[0])),
                     parse_family_spec(strip_parens(parts[1])));
  }
  throw ParseError("unknown graph family '" + std::string(name) + "'", 0);
}

Graph parse_graph_argument(std::string_view text, GraphInputKind kind) {
  if (kind == GraphInputKind::family) return parse_family_spec(text);
  if (kind == GraphInputKind::graph6) return parse_graph6(text);
  return text.find(':') != std::string_view::npos ? parse_family_spec(text) : parse_graph6(text);
}

// ---- decompositions ----

EdgePartition spanning_forest(const Graph& g) {
  const int n = g.vertex_count();
  EdgePartition part;
  std::vector<char> visited(n, 0);
  std::vector<char> in_forest(g.edge_count(), 0);
  std::vector<int> stack;
  std::vector<std::size_t> next(n, 0);
  for (int root = 0; root < n; ++root) {
    if (visited[root]) continue;
    visited[root] = 1;
    stack.assign(1, root);
    while (!stack.empty()) {
      const int u = stack.back();
      const auto& nbrs = g.neighbors(u);
      if (next[u] == nbrs.size()) {
        stack.pop_back();
        continue;
      }
      const int v = nbrs[next[u]++];
      if (visited[v]) continue;
      visited[v] = 1;
      const int ei = g.edge_index(u, v);
      in_forest[ei] = 1;
      part.forest_edges.push_back(g.edges()[ei]);
      stack.push_back(v);
    }
  }
  for (int ei = 0; ei < g.edge_count(); ++ei)
    if (!in_forest[ei]) part.cotree_edges.push_back(g.edges()[ei]);
  return part;
}

std::vector<ComponentSplit> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int comp_count = 0;
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    comp[root] = comp_count;
    stack.assign(1, root);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u)) {
        if (comp[v] < 0) {
          comp[v] = comp_count;
          stack.push_back(v);
        }
      }
    }
    ++comp_count;
  }

  std::vector<ComponentSplit> out(comp_count);
  std::vector<int> local(n);
  for (int v = 0; v < n; ++v) {
    local[v] = static_cast<int>(out[comp[v]].original_vertex.size());
    out[comp[v]].original_vertex.push_back(v);
  }
  std::vector<std::vector<Edge>> comp_edges(comp_count);
  for (const Edge& e : g.edges())
    comp_edges[comp[e.u]].push_back(Edge{local[e.u], local[e.v]});
  for (int c = 0; c < comp_count; ++c)
    out[c].graph = Graph(static_cast<int>(out[c].original_vertex.size()), std::move(comp_edges[c]));
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

}  // namespace colorcount
