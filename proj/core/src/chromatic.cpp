#include "colorcount/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

namespace colorcount {

ColorCount stirling2(int m, int i) {
  if (m < 0 || i < 0) throw InputError("stirling2 arguments must be nonnegative");
  if (i > m) return 0;
  if (m == 0) return 1;  // S(0,0)
  // Row DP over S(r, 0..i).
  std::vector<ColorCount> row(static_cast<std::size_t>(i) + 1, 0);
  row[0] = 1;  // r = 0
  for (int r = 1; r <= m; ++r) {
    for (int c = std::min(r, i); c >= 1; --c) row[c] = c * row[c] + row[c - 1];
    row[0] = 0;
  }
  return row[i];
}

ColorCount falling_factorial(long k, int j) {
  if (j < 0) throw InputError("falling_factorial needs j >= 0");
  if (k < 0) throw InputError("falling_factorial needs k >= 0");
  if (j > k) return 0;
  ColorCount r = 1;
  for (int t = 0; t < j; ++t) r *= (k - t);
  return r;
}

namespace {

// Convolution over parts of S(n_i, .), truncated at j_max total blocks.
std::vector<ColorCount> partition_block_counts(const std::vector<int>& part_sizes, int j_max) {
  std::vector<ColorCount> acc(static_cast<std::size_t>(j_max) + 1, 0);
  acc[0] = 1;
  for (int size : part_sizes) {
    std::vector<ColorCount> part(static_cast<std::size_t>(std::min(size, j_max)) + 1, 0);
    for (int j = 1; j <= std::min(size, j_max); ++j) part[j] = stirling2(size, j);
    std::vector<ColorCount> next(static_cast<std::size_t>(j_max) + 1, 0);
    for (int a = 0; a <= j_max; ++a) {
      if (acc[a] == 0) continue;
      for (int b = 1; b + a <= j_max && b < static_cast<int>(part.size()); ++b)
        next[a + b] += acc[a] * part[b];
    }
    acc = std::move(next);
  }
  return acc;
}

ColorCount multipartite_chromatic(const std::vector<int>& part_sizes, long k) {
  const long total = std::accumulate(part_sizes.begin(), part_sizes.end(), 0L);
  const int j_max = static_cast<int>(std::min<long>(k, total));
  if (j_max < static_cast<int>(part_sizes.size())) return 0;  // needs >= one block per part
  const auto blocks = partition_block_counts(part_sizes, j_max);
  ColorCount sum = 0;
  for (int j = static_cast<int>(part_sizes.size()); j <= j_max; ++j)
    if (blocks[j] != 0) sum += blocks[j] * falling_factorial(k, j);
  return sum;
}

ColorCount cycle_chromatic(int n, long k) {
  const ColorCount body = ipow(ColorCount(k - 1), static_cast<unsigned long>(n));
  return n % 2 == 0 ? ColorCount(body + (k - 1)) : ColorCount(body - (k - 1));
}

// Complement components when the graph is complete multipartite, else empty.
std::optional<std::vector<int>> multipartite_parts(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> part(n, -1);
  std::vector<int> sizes;
  std::vector<int> stack;
  long long non_edges_within = 0;
  for (int root = 0; root < n; ++root) {
    if (part[root] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    part[root] = id;
    sizes.push_back(0);
    stack.assign(1, root);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++sizes[id];
      for (int v = 0; v < n; ++v) {
        if (v == u || g.has_edge(u, v)) continue;
        ++non_edges_within;  // counts each non-edge twice
        if (part[v] < 0) {
          part[v] = id;
          stack.push_back(v);
        } else if (part[v] != id) {
          return std::nullopt;  // non-adjacency is not transitive
        }
      }
    }
  }
  long long expected = 0;
  for (int s : sizes) expected += static_cast<long long>(s) * (s - 1);
  if (non_edges_within != expected) return std::nullopt;
  return sizes;
}

// Dense intermediate representation for deletion-contraction; n <= 62 so each
// neighborhood fits one word.
struct MaskGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;

  int degree(int v) const { return std::popcount(adj[v]); }
  long long edge_count() const {
    long long twice = 0;
    for (int v = 0; v < n; ++v) twice += degree(v);
    return twice / 2;
  }
  void delete_edge(int u, int v) {
    adj[u] &= ~(1ULL << v);
    adj[v] &= ~(1ULL << u);
  }
  // Merge v into u (parallel edges collapse), then drop v by relabeling the
  // last vertex into its slot.
  void contract_edge(int u, int v) {
    delete_edge(u, v);
    adj[u] |= adj[v];
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (adj[w] & (1ULL << v)) {
        adj[w] &= ~(1ULL << v);
        adj[w] |= (1ULL << u);
      }
    }
    adj[u] &= ~(1ULL << u);
    // After the merge no neighborhood references v, so the last vertex can be
    // relabeled into its slot.
    const int last = n - 1;
    if (v != last) {
      adj[v] = adj[last];
      for (int w = 0; w < n - 1; ++w) {
        if (w == v) continue;
        if (adj[w] & (1ULL << last)) {
          adj[w] &= ~(1ULL << last);
          adj[w] |= (1ULL << v);
        }
      }
    }
    adj.pop_back();
    --n;
  }
};

MaskGraph to_mask_graph(const Graph& g) {
  MaskGraph m;
  m.n = g.vertex_count();
  m.adj.assign(m.n, 0);
  for (const Edge& e : g.edges()) {
    m.adj[e.u] |= (1ULL << e.v);
    m.adj[e.v] |= (1ULL << e.u);
  }
  return m;
}

std::vector<std::uint64_t> mask_components(const MaskGraph& g) {
  std::vector<std::uint64_t> comps;
  std::uint64_t seen = 0;
  const std::uint64_t all = g.n == 64 ? ~0ULL : ((1ULL << g.n) - 1);
  while (seen != all) {
    const int root = std::countr_zero(~seen & all);
    std::uint64_t comp = 1ULL << root;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.adj[v];
      }
      frontier = next & ~comp;
      comp |= next;
    }
    comps.push_back(comp);
    seen |= comp;
  }
  return comps;
}

MaskGraph induced(const MaskGraph& g, std::uint64_t verts) {
  MaskGraph out;
  std::vector<int> map(g.n, -1);
  for (int v = 0; v < g.n; ++v)
    if (verts & (1ULL << v)) map[v] = out.n++;
  out.adj.assign(out.n, 0);
  for (int v = 0; v < g.n; ++v) {
    if (map[v] < 0) continue;
    std::uint64_t nb = g.adj[v] & verts;
    while (nb) {
      const int w = std::countr_zero(nb);
      nb &= nb - 1;
      out.adj[map[v]] |= (1ULL << map[w]);
    }
  }
  return out;
}

std::optional<std::vector<int>> mask_multipartite_parts(const MaskGraph& g) {
  const std::uint64_t all = (g.n == 64 ? ~0ULL : (1ULL << g.n) - 1);
  MaskGraph comp;
  comp.n = g.n;
  comp.adj.assign(g.n, 0);
  for (int v = 0; v < g.n; ++v) comp.adj[v] = ~g.adj[v] & all & ~(1ULL << v);
  std::vector<int> sizes;
  for (std::uint64_t c : mask_components(comp)) {
    // complement component must be a complement clique
    std::uint64_t rest = c;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      if ((comp.adj[v] & c) != (c & ~(1ULL << v))) return std::nullopt;
    }
    sizes.push_back(std::popcount(c));
  }
  return sizes;
}

using Memo = std::unordered_map<std::string, ColorCount>;

// Deterministic relabel by (degree, index); equal keys imply isomorphic
// graphs, so memo hits are exact. Not canonical, just sound.
std::string memo_key(const MaskGraph& g) {
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });
  std::vector<int> pos(g.n);
  for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
  std::vector<std::uint64_t> relabeled(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    std::uint64_t nb = g.adj[v];
    while (nb) {
      const int w = std::countr_zero(nb);
      nb &= nb - 1;
      relabeled[pos[v]] |= (1ULL << pos[w]);
    }
  }
  std::string key(reinterpret_cast<const char*>(relabeled.data()),
                  relabeled.size() * sizeof(std::uint64_t));
  return key;
}

ColorCount eval_mask(MaskGraph g, long k, const ChromaticOptions& opts, Memo& memo);

ColorCount eval_connected(MaskGraph g, long k, const ChromaticOptions& opts, Memo& memo) {
  const long long edges = g.edge_count();
  if (edges == 0) return ipow(static_cast<unsigned long>(k), static_cast<unsigned long>(g.n));
  if (k == 0 || k == 1) return 0;  // connected with an edge

  if (opts.structural_shortcuts) {
    if (edges == g.n - 1)  // tree
      return k * ipow(ColorCount(k - 1), static_cast<unsigned long>(g.n - 1));
    bool all_two = true;
    for (int v = 0; v < g.n && all_two; ++v) all_two = g.degree(v) == 2;
    if (all_two && edges == g.n) return cycle_chromatic(g.n, k);
    if (auto parts = mask_multipartite_parts(g)) return multipartite_chromatic(*parts, k);
  }

  std::string key;
  if (opts.memoize) {
    key = memo_key(g);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  // Pick the edge whose endpoints carry the most edges; contraction then
  // collapses the most structure.
  int bu = -1, bv = -1, best = -1;
  for (int u = 0; u < g.n; ++u) {
    std::uint64_t nb = g.adj[u] & ~((1ULL << (u + 1)) - 1);  // v > u
    while (nb) {
      const int v = std::countr_zero(nb);
      nb &= nb - 1;
      const int score = g.degree(u) + g.degree(v);
      if (score > best) {
        best = score;
        bu = u;
        bv = v;
      }
    }
  }

  MaskGraph del = g;
  del.delete_edge(bu, bv);
  MaskGraph con = g;
  con.contract_edge(bu, bv);
  ColorCount result = eval_mask(std::move(del), k, opts, memo) -
                      eval_mask(std::move(con), k, opts, memo);
  if (opts.memoize) memo.emplace(std::move(key), result);
  return result;
}

ColorCount eval_mask(MaskGraph g, long k, const ChromaticOptions& opts, Memo& memo) {
  if (g.n == 0) return 1;
  auto comps = mask_components(g);
  if (comps.size() == 1) return eval_connected(std::move(g), k, opts, memo);
  ColorCount product = 1;
  for (std::uint64_t c : comps) {
    if (std::popcount(c) == 1) {
      product *= k;
      continue;
    }
    product *= eval_connected(induced(g, c), k, opts, memo);
    if (product == 0) return 0;
  }
  return product;
}

}  // namespace

ColorCount chromatic_eval(const Graph& g, long k, const ChromaticOptions& opts) {
  if (k < 0) throw InputError("chromatic_eval needs k >= 0");
  if (k == 0) return 0;  // graphs always have >= 1 vertex

  const int n = g.vertex_count();
  if (n <= 62) {
    Memo memo;
    return eval_mask(to_mask_graph(g), k, opts, memo);
  }

  // Structure checks keep closed-form families usable at any size.
  if (g.edge_count() == 0) return ipow(static_cast<unsigned long>(k), static_cast<unsigned long>(n));
  if (opts.structural_shortcuts) {
    if (auto parts = multipartite_parts(g)) return multipartite_chromatic(*parts, k);
  }
  auto comps = components(g);
  if (comps.size() > 1) {
    ColorCount product = 1;
    for (const auto& c : comps) {
      product *= chromatic_eval(c.graph, k, opts);
      if (product == 0) return 0;
    }
    return product;
  }
  if (opts.structural_shortcuts) {
    if (g.edge_count() == n - 1)  // tree
      return k == 1 ? ColorCount(0)
                    : ColorCount(k * ipow(ColorCount(k - 1), static_cast<unsigned long>(n - 1)));
    bool all_two = true;
    for (int v = 0; v < n && all_two; ++v) all_two = g.degree(v) == 2;
    if (all_two && g.edge_count() == n) return cycle_chromatic(n, k);
  }
  throw InputError("deletion-contraction is limited to graphs with n <= 62");
}

ColorCount brute_force_proper_colorings(const Graph& g, long k, long long budget) {
  if (k < 0) throw InputError("brute force needs k >= 0");
  const int n = g.vertex_count();
  if (k == 0) return 0;
  const ColorCount space = ipow(static_cast<unsigned long>(k), static_cast<unsigned long>(n));
  const ColorCount predicted = space * (g.edge_count() + 1);
  if (exceeds(predicted, budget))
    throw BudgetError("brute-force enumeration refused: k^n = " + to_decimal(space) +
                      " maps (about " + to_decimal(predicted) + " steps) exceeds budget " +
                      std::to_string(budget));

  std::vector<int> color(n, 0);
  ColorCount count = 0;
  while (true) {
    bool proper = true;
    for (const Edge& e : g.edges()) {
      if (color[e.u] == color[e.v]) {
        proper = false;
        break;
      }
    }
    if (proper) ++count;
    int v = n - 1;
    while (v >= 0 && color[v] == k - 1) color[v--] = 0;
    if (v < 0) break;
    ++color[v];
  }
  return count;
}

ColorCount closed_form_eval(ClosedFamily family, const std::vector<int>& params, long k) {
  if (k < 0) throw InputError("closed_form_eval needs k >= 0");
  switch (family) {
    case ClosedFamily::empty:
    case ClosedFamily::complete:
    case ClosedFamily::tree:
    case ClosedFamily::cycle: {
      if (params.size() != 1 || params[0] < 1)
        throw InputError("closed form needs a single positive size parameter");
      const int n = params[0];
      if (family == ClosedFamily::empty)
        return ipow(static_cast<unsigned long>(k), static_cast<unsigned long>(n));
      if (family == ClosedFamily::complete) return falling_factorial(k, n);
      if (family == ClosedFamily::tree)
        return k == 0 ? ColorCount(0)
                      : ColorCount(k * ipow(ColorCount(k - 1), static_cast<unsigned long>(n - 1)));
      if (n < 3) throw InputError("cycle closed form needs n >= 3");
      return cycle_chromatic(n, k);
    }
    case ClosedFamily::complete_multipartite: {
      if (params.empty()) throw InputError("multipartite closed form needs part sizes");
      for (int s : params)
        if (s < 1) throw InputError("part sizes must be positive");
      return multipartite_chromatic(params, k);
    }
  }
  throw InputError("unsupported closed-form family");
}

}  // namespace colorcount
