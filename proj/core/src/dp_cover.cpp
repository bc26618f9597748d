#include "colorcount/dp_cover.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "colorcount/parallel.hpp"

namespace colorcount {

void validate_cover(const Cover& c) {
  if (c.fold < 1) throw InputError("cover fold must be >= 1");
  if (static_cast<int>(c.maps.size()) != c.base.edge_count())
    throw InputError("cover has " + std::to_string(c.maps.size()) + " correspondences for " +
                     std::to_string(c.base.edge_count()) + " edges");
  for (const auto& map : c.maps) {
    if (static_cast<int>(map.size()) != c.fold)
      throw InputError("correspondence table size differs from fold");
    std::vector<char> hit(c.fold, 0);
    for (int image : map) {
      if (image == kUnmatched) continue;
      if (image < 0 || image >= c.fold) throw InputError("correspondence image out of range");
      if (hit[image]) throw InputError("correspondence is not injective");
      hit[image] = 1;
    }
  }
}

bool is_full_cover(const Cover& c) {
  for (const auto& map : c.maps)
    for (int image : map)
      if (image == kUnmatched) return false;
  return true;
}

namespace {

std::vector<int> identity_map(int k) {
  std::vector<int> id(k);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

// All k! permutations in lexicographic order.
std::vector<std::vector<int>> all_permutations(int k) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p = identity_map(k);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

// All partial injections [k] -> [k] in lexicographic order of the table with
// kUnmatched sorted first.
std::vector<std::vector<int>> all_partial_injections(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> table(k, kUnmatched);
  std::vector<char> used(k, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      out.push_back(table);
      return;
    }
    table[i] = kUnmatched;
    self(self, i + 1);
    for (int image = 0; image < k; ++image) {
      if (used[image]) continue;
      used[image] = 1;
      table[i] = image;
      self(self, i + 1);
      used[image] = 0;
    }
    table[i] = kUnmatched;
  };
  rec(rec, 0);
  return out;
}

// Backtracking counter reusable across covers of the same base graph.
class TransversalCounter {
 public:
  TransversalCounter(const Graph& g, int fold) : g_(g), fold_(fold) {
    const int n = g.vertex_count();
    int isolated = 0;
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) == 0)
        ++isolated;
      else
        order_.push_back(v);
    }
    free_factor_ = ipow(static_cast<unsigned long>(fold_), static_cast<unsigned long>(isolated));
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> position(n, -1);
    for (std::size_t i = 0; i < order_.size(); ++i) position[order_[i]] = static_cast<int>(i);
    earlier_.resize(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const int v = order_[i];
      for (int w : g.neighbors(v)) {
        if (position[w] < 0 || position[w] >= static_cast<int>(i)) continue;
        const int e = g.edge_index(v, w);
        // true when the current vertex is the higher endpoint (forward map).
        const bool forward = v > w;
        earlier_[i].push_back(Constraint{position[w], e, forward});
      }
    }
    labels_.assign(order_.size(), 0);
    inverse_.assign(g.edge_count(), std::vector<int>(fold_, kUnmatched));
  }

  // Exact count, or cap+1 as soon as the running total exceeds cap.
  ColorCount count(const Cover& c, const ColorCount* cap = nullptr) {
    maps_ = &c.maps;
    for (int e = 0; e < g_.edge_count(); ++e) {
      std::fill(inverse_[e].begin(), inverse_[e].end(), kUnmatched);
      for (int i = 0; i < fold_; ++i) {
        const int image = c.maps[e][i];
        if (image != kUnmatched) inverse_[e][image] = i;
      }
    }
    total_ = 0;
    cap_ = cap;
    walk(0);
    return total_ * free_factor_;
  }

 private:
  struct Constraint {
    int earlier_pos;
    int edge;
    bool forward;
  };

  bool walk(std::size_t pos) {
    if (pos == order_.size()) {
      ++total_;
      return cap_ == nullptr || total_ <= *cap_;
    }
    for (int label = 0; label < fold_; ++label) {
      bool ok = true;
      for (const Constraint& c : earlier_[pos]) {
        const int other = labels_[c.earlier_pos];
        const int forbidden = c.forward ? (*maps_)[c.edge][other] : inverse_[c.edge][other];
        if (forbidden == label) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      labels_[pos] = label;
      if (!walk(pos + 1)) return false;
    }
    return true;
  }

  const Graph& g_;
  int fold_;
  std::vector<int> order_;
  std::vector<std::vector<Constraint>> earlier_;
  std::vector<int> labels_;
  std::vector<std::vector<int>> inverse_;
  const std::vector<std::vector<int>>* maps_ = nullptr;
  ColorCount free_factor_ = 1;
  ColorCount total_ = 0;
  const ColorCount* cap_ = nullptr;
};

Cover decode_cover(const Graph& g, int k, const std::vector<int>& free_edges,
                   const std::vector<std::vector<int>>& choices,
                   const std::vector<std::vector<int>>& fixed, long long index,
                   bool gauge_fixed) {
  Cover c;
  c.base = g;
  c.fold = k;
  c.maps = fixed;
  const long long radix = static_cast<long long>(choices.size());
  for (std::size_t d = free_edges.size(); d-- > 0;) {
    c.maps[free_edges[d]] = choices[index % radix];
    index /= radix;
  }
  c.gauge_fixed = gauge_fixed;
  return c;
}

struct CoverDomain {
  std::vector<int> free_edges;             // most significant first
  std::vector<std::vector<int>> choices;   // per-edge choice table
  std::vector<std::vector<int>> fixed;     // preset maps (forest identity)
  bool gauge_fixed = false;
  ColorCount total;                        // choices^free_edges
};

CoverDomain gauge_fixed_domain(const Graph& g, int k) {
  CoverDomain d;
  d.choices = all_permutations(k);
  d.fixed.assign(g.edge_count(), identity_map(k));
  const EdgePartition part = spanning_forest(g);
  for (const Edge& e : part.cotree_edges) d.free_edges.push_back(g.edge_index(e.u, e.v));
  d.gauge_fixed = true;
  d.total = ipow(factorial(static_cast<unsigned long>(k)), d.free_edges.size());
  return d;
}

CoverDomain full_domain(const Graph& g, int k) {
  CoverDomain d;
  d.choices = all_permutations(k);
  d.fixed.assign(g.edge_count(), identity_map(k));
  d.free_edges.resize(g.edge_count());
  std::iota(d.free_edges.begin(), d.free_edges.end(), 0);
  d.total = ipow(factorial(static_cast<unsigned long>(k)), d.free_edges.size());
  return d;
}

CoverDomain partial_domain(const Graph& g, int k) {
  CoverDomain d;
  d.choices = all_partial_injections(k);
  d.fixed.assign(g.edge_count(), std::vector<int>(k, kUnmatched));
  d.free_edges.resize(g.edge_count());
  std::iota(d.free_edges.begin(), d.free_edges.end(), 0);
  d.total = ipow(ColorCount(static_cast<long>(d.choices.size())), d.free_edges.size());
  return d;
}

void stream_domain(const Graph& g, int k, const CoverDomain& d, long long budget,
                   const char* bound_name,
                   const std::function<bool(const Cover&)>& visit) {
  if (k < 1) throw InputError("cover enumeration needs k >= 1");
  if (exceeds(d.total, budget))
    throw BudgetError(std::string("cover enumeration refused: ") + bound_name + " = " +
                      to_decimal(d.total) + " covers exceeds budget " + std::to_string(budget));
  const long long total = d.total.get_si();
  for (long long i = 0; i < total; ++i) {
    if (!visit(decode_cover(g, k, d.free_edges, d.choices, d.fixed, i, d.gauge_fixed))) return;
  }
}

DpResult extreme_over_gauge_fixed(const Graph& g, int k, long long budget, int workers,
                                  bool maximize) {
  if (k < 1) throw InputError("DP color functions need k >= 1");
  CoverDomain domain = gauge_fixed_domain(g, k);
  int constrained = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) ++constrained;
  const ColorCount per_cover =
      ipow(static_cast<unsigned long>(k), static_cast<unsigned long>(constrained));
  const ColorCount predicted = domain.total * per_cover;
  if (exceeds(predicted, budget))
    throw BudgetError("DP scan refused: (k!)^{|E|-n+c} = " + to_decimal(domain.total) +
                      " covers, about " + to_decimal(predicted) + " steps, exceeds budget " +
                      std::to_string(budget));

  const long long total = domain.total.get_si();
  struct ChunkBest {
    bool set = false;
    ColorCount value;
    long long index = -1;
  };
  std::vector<ChunkBest> chunk_best(std::max(1, workers));

  // Shared cap for the minimum search: any cover whose running count passes
  // the best-so-far can be abandoned without affecting the result.
  std::mutex cap_mutex;
  ColorCount shared_cap;
  bool cap_set = false;

  parallel_chunks(total, workers, [&](int chunk, long long begin, long long end) {
    TransversalCounter counter(g, k);
    ChunkBest local;
    for (long long i = begin; i < end; ++i) {
      const Cover cover = decode_cover(g, k, domain.free_edges, domain.choices, domain.fixed, i,
                                       true);
      ColorCount value;
      if (maximize) {
        value = counter.count(cover);
      } else {
        ColorCount cap;
        bool have_cap = false;
        {
          std::lock_guard<std::mutex> lock(cap_mutex);
          if (cap_set) {
            cap = shared_cap;
            have_cap = true;
          }
        }
        value = counter.count(cover, have_cap ? &cap : nullptr);
        if (have_cap && value > cap) continue;  // abandoned, cannot beat the cap
        std::lock_guard<std::mutex> lock(cap_mutex);
        if (!cap_set || value < shared_cap) {
          shared_cap = value;
          cap_set = true;
        }
      }
      if (!local.set || (maximize ? value > local.value : value < local.value)) {
        local.set = true;
        local.value = std::move(value);
        local.index = i;
      }
    }
    chunk_best[chunk] = std::move(local);
  });

  ChunkBest best;
  for (const ChunkBest& cb : chunk_best) {
    if (!cb.set) continue;
    if (!best.set || (maximize ? cb.value > best.value : cb.value < best.value))
      best = cb;  // chunk order ascends by index, so ties keep the smaller index
  }
  DpResult result;
  result.value = best.value;
  result.witness =
      decode_cover(g, k, domain.free_edges, domain.choices, domain.fixed, best.index, true);
  return result;
}

}  // namespace

Cover canonical_cover(const Graph& g, int k) {
  if (k < 1) throw InputError("canonical cover needs k >= 1");
  Cover c;
  c.base = g;
  c.fold = k;
  c.maps.assign(g.edge_count(), identity_map(k));
  c.gauge_fixed = true;
  return c;
}

Cover doubled_cover(const Graph& g) {
  Cover c;
  c.base = g;
  c.fold = 2;
  c.maps.assign(g.edge_count(), {1, 0});
  c.gauge_fixed = g.edge_count() == 0;
  return c;
}

Cover restrict_cover(const Cover& c, const Subgraph& h) {
  const int n = c.base.vertex_count();
  std::vector<int> local(n, -1);
  for (std::size_t i = 0; i < h.vertices.size(); ++i) {
    const int v = h.vertices[i];
    if (v < 0 || v >= n) throw InputError("subgraph vertex out of range");
    if (i > 0 && h.vertices[i] <= h.vertices[i - 1])
      throw InputError("subgraph vertices must be strictly ascending");
    local[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  std::vector<int> source_edge;
  for (const Edge& e : h.edges) {
    const int ei = c.base.edge_index(e.u, e.v);
    if (ei < 0 || local[e.u] < 0 || local[e.v] < 0)
      throw InputError("subgraph edge is not an edge of the cover base");
    edges.push_back(Edge{local[e.u], local[e.v]});
    source_edge.push_back(ei);
  }

  Cover out;
  out.base = Graph(static_cast<int>(h.vertices.size()), edges);
  out.fold = c.fold;
  out.maps.assign(out.base.edge_count(), {});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    // Ascending relabel keeps edge orientation, so tables copy unchanged.
    const int new_index = out.base.edge_index(edges[i].u, edges[i].v);
    out.maps[new_index] = c.maps[source_edge[i]];
  }
  bool identity_full = true;
  for (const auto& map : out.maps)
    for (int i = 0; i < out.fold && identity_full; ++i) identity_full = map[i] == i;
  out.gauge_fixed = identity_full;
  return out;
}

ColorCount count_cover_colorings(const Graph& g, const Cover& c) {
  if (!(g == c.base)) throw InputError("cover base differs from the supplied graph");
  validate_cover(c);
  TransversalCounter counter(g, c.fold);
  return counter.count(c);
}

ColorCount gauge_fixed_cover_count(const Graph& g, int k) {
  const EdgePartition part = spanning_forest(g);
  return ipow(factorial(static_cast<unsigned long>(k)), part.cotree_edges.size());
}

void enumerate_full_covers(const Graph& g, int k, long long budget,
                           const std::function<bool(const Cover&)>& visit) {
  stream_domain(g, k, gauge_fixed_domain(g, k), budget, "(k!)^{|E|-n+c}", visit);
}

void enumerate_all_full_covers(const Graph& g, int k, long long budget,
                               const std::function<bool(const Cover&)>& visit) {
  stream_domain(g, k, full_domain(g, k), budget, "(k!)^{|E|}", visit);
}

void enumerate_all_covers(const Graph& g, int k, long long budget,
                          const std::function<bool(const Cover&)>& visit) {
  stream_domain(g, k, partial_domain(g, k), budget, "(partial injections)^{|E|}", visit);
}

DpResult dp_color_function(const Graph& g, int k, long long budget, int workers) {
  return extreme_over_gauge_fixed(g, k, budget, workers, /*maximize=*/false);
}

DpResult dual_dp_color_function(const Graph& g, int k, long long budget, int workers) {
  return extreme_over_gauge_fixed(g, k, budget, workers, /*maximize=*/true);
}

Cover gauge_transform(const Cover& c, const std::vector<std::vector<int>>& perms) {
  if (static_cast<int>(perms.size()) != c.base.vertex_count())
    throw InputError("gauge transform needs one permutation per vertex");
  Cover out = c;
  for (int e = 0; e < c.base.edge_count(); ++e) {
    const Edge edge = c.base.edges()[e];
    std::vector<int> table(c.fold, kUnmatched);
    for (int i = 0; i < c.fold; ++i) {
      const int image = c.maps[e][i];
      if (image != kUnmatched) table[perms[edge.u][i]] = perms[edge.v][image];
    }
    out.maps[e] = std::move(table);
  }
  out.gauge_fixed = false;
  return out;
}

std::string cover_to_json(const Cover& c) {
  nlohmann::json j;
  j["fold"] = c.fold;
  nlohmann::json forest = nlohmann::json::array();
  nlohmann::json cotree = nlohmann::json::array();
  const EdgePartition part = spanning_forest(c.base);
  std::vector<char> in_forest(c.base.edge_count(), 0);
  if (c.gauge_fixed)
    for (const Edge& e : part.forest_edges) in_forest[c.base.edge_index(e.u, e.v)] = 1;
  for (int e = 0; e < c.base.edge_count(); ++e) {
    const Edge edge = c.base.edges()[e];
    if (in_forest[e]) {
      forest.push_back({edge.u, edge.v});
    } else {
      nlohmann::json entry;
      entry["edge"] = {edge.u, edge.v};
      entry["perm"] = c.maps[e];
      cotree.push_back(entry);
    }
  }
  j["forest"] = forest;
  j["cotree"] = cotree;
  return j.dump();
}

std::string cover_to_dot(const Cover& c) {
  std::ostringstream out;
  out << "graph cover {\n";
  for (int v = 0; v < c.base.vertex_count(); ++v) {
    out << "  subgraph cluster_v" << v << " {\n    label=\"v" << v << "\";\n";
    for (int i = 0; i < c.fold; ++i)
      out << "    v" << v << "_" << i << " [label=\"(" << v << "," << i << ")\"];\n";
    for (int i = 0; i < c.fold; ++i)
      for (int j = i + 1; j < c.fold; ++j)
        out << "    v" << v << "_" << i << " -- v" << v << "_" << j << ";\n";
    out << "  }\n";
  }
  for (int e = 0; e < c.base.edge_count(); ++e) {
    const Edge edge = c.base.edges()[e];
    for (int i = 0; i < c.fold; ++i) {
      if (c.maps[e][i] == kUnmatched) continue;
      out << "  v" << edge.u << "_" << i << " -- v" << edge.v << "_" << c.maps[e][i] << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace colorcount
