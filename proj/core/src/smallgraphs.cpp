#include "colorcount/smallgraphs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace colorcount {

namespace {

// Edge slot for {i,j}, i < j, in lexicographic order.
int slot(int i, int j, int n) {
  int s = 0;
  for (int a = 0; a < i; ++a) s += n - a - 1;
  return s + (j - i - 1);
}

std::uint64_t permute_mask(std::uint64_t mask, const std::vector<int>& perm, int n) {
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!(mask & (1ULL << slot(i, j, n)))) continue;
      const int pi = std::min(perm[i], perm[j]);
      const int pj = std::max(perm[i], perm[j]);
      out |= 1ULL << slot(pi, pj, n);
    }
  return out;
}

Graph mask_to_graph(std::uint64_t mask, int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mask & (1ULL << slot(i, j, n))) edges.push_back(Edge{i, j});
  return Graph(n, std::move(edges));
}

}  // namespace

std::vector<Graph> all_graphs_up_to_iso(int n) {
  if (n < 1 || n > 6) throw InputError("brute-force iso enumeration supports 1 <= n <= 6");
  const int slots = n * (n - 1) / 2;

  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::uint64_t> canon;
  for (std::uint64_t mask = 0; mask < (1ULL << slots); ++mask) {
    bool minimal = true;
    for (const auto& perm : perms) {
      if (permute_mask(mask, perm, n) < mask) {
        minimal = false;
        break;
      }
    }
    if (minimal) canon.push_back(mask);
  }
  std::sort(canon.begin(), canon.end(), [&](std::uint64_t a, std::uint64_t b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });

  std::vector<Graph> out;
  out.reserve(canon.size());
  for (std::uint64_t mask : canon) out.push_back(mask_to_graph(mask, n));
  return out;
}

std::vector<Graph> connected_graphs_up_to_iso(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs_up_to_iso(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

Graph random_graph(int max_n, SplitMix64& rng) {
  const int n = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n))) + 1;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next() & 1ULL) edges.push_back(Edge{i, j});
  return Graph(n, std::move(edges));
}

}  // namespace colorcount
