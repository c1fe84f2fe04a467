#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "ramsey/clique.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// Edge (i, j) with i < j sits at bit j(j-1)/2 + i, so the first C(n,2) bits
// of an (n+1)-vertex graph are exactly its induced subgraph on 0..n-1.
constexpr int edge_index(int i, int j) { return j * (j - 1) / 2 + i; }

struct AdjGraph {
  int n = 0;
  uint32_t rows[11] = {};

  static AdjGraph from_mask(int n, uint64_t mask) {
    AdjGraph g;
    g.n = n;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if ((mask >> edge_index(i, j)) & 1) {
          g.rows[i] |= uint32_t{1} << j;
          g.rows[j] |= uint32_t{1} << i;
        }
      }
    }
    return g;
  }

  AdjGraph complement() const {
    AdjGraph g;
    g.n = n;
    uint32_t all = (uint32_t{1} << n) - 1;
    for (int v = 0; v < n; ++v) {
      g.rows[v] = all & ~rows[v] & ~(uint32_t{1} << v);
    }
    return g;
  }
};

bool has_clique_within(const AdjGraph& g, uint32_t allowed, int size) {
  if (size <= 0) return true;
  if (std::popcount(allowed) < size) return false;
  uint32_t rest = allowed;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (has_clique_within(g, rest & g.rows[v], size - 1)) return true;
  }
  return false;
}

// Finds a canonical labeling by placing vertices one role at a time.  Roles
// are compared by their edge blocks toward earlier roles, earlier blocks
// most significant, so a partial assignment that already exceeds the best
// found so far can be abandoned.  The comparison key packs block j at the
// high end; the returned value is the ordinary edge mask of the winner.
struct Canonicalizer {
  const AdjGraph* g = nullptr;
  int n = 0;
  int total_bits = 0;
  uint64_t best_key = 0;
  uint64_t best_mask = 0;
  int place[11] = {};
  bool used[11] = {};

  int key_shift(int role) const {
    return total_bits - role * (role + 1) / 2;
  }

  void search(int role, uint64_t partial_key, uint64_t partial_mask,
              bool tight) {
    if (role == n) {
      if (partial_key < best_key) {
        best_key = partial_key;
        best_mask = partial_mask;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      uint64_t block = 0;
      for (int i = 0; i < role; ++i) {
        if ((g->rows[v] >> place[i]) & 1) block |= uint64_t{1} << i;
      }
      uint64_t best_block =
          role == 0 ? 0
                    : (best_key >> key_shift(role)) &
                          ((uint64_t{1} << role) - 1);
      if (tight && block > best_block) continue;
      used[v] = true;
      place[role] = v;
      uint64_t key = role == 0 ? partial_key
                               : partial_key | (block << key_shift(role));
      uint64_t mask =
          role == 0 ? partial_mask
                    : partial_mask | (block << (role * (role - 1) / 2));
      search(role + 1, key, mask, tight && block == best_block);
      used[v] = false;
    }
  }

  uint64_t run(const AdjGraph& graph, uint64_t identity_mask) {
    g = &graph;
    n = graph.n;
    total_bits = n * (n - 1) / 2;
    best_mask = identity_mask;
    best_key = 0;
    for (int j = 1; j < n; ++j) {
      uint64_t block =
          (identity_mask >> (j * (j - 1) / 2)) & ((uint64_t{1} << j) - 1);
      best_key |= block << key_shift(j);
    }
    std::fill(std::begin(used), std::end(used), false);
    search(0, 0, 0, true);
    return best_mask;
  }
};

RamseyExactResult two_color_exact(int k, int l, int n_max) {
  constexpr int kCap = 10;
  constexpr size_t kLevelBudget = 20000;
  std::vector<uint64_t> level = {0};
  int n = 1;
  while (true) {
    if (n >= std::min(n_max, kCap)) {
      if (n_max <= kCap) return RamseyExactResult{false, n_max};
      throw BudgetError("two-color search is capped at 10 vertices");
    }
    if (level.size() > kLevelBudget) {
      throw BudgetError("too many distinct colorings to track");
    }
    std::unordered_set<uint64_t> next;
    int base = n * (n - 1) / 2;
    for (uint64_t g : level) {
      AdjGraph red = AdjGraph::from_mask(n, g);
      AdjGraph blue = red.complement();
      for (uint64_t ext = 0; ext < (uint64_t{1} << n); ++ext) {
        uint32_t red_nbrs = static_cast<uint32_t>(ext);
        uint32_t blue_nbrs =
            static_cast<uint32_t>(~ext) & ((uint32_t{1} << n) - 1);
        if (has_clique_within(red, red_nbrs, k - 1)) continue;
        if (has_clique_within(blue, blue_nbrs, l - 1)) continue;
        uint64_t mask = g | (ext << base);
        AdjGraph whole = AdjGraph::from_mask(n + 1, mask);
        Canonicalizer canon;
        next.insert(canon.run(whole, mask));
      }
    }
    ++n;
    if (next.empty()) return RamseyExactResult{true, n};
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
  }
}

struct MulticolorSearch {
  int n = 0;
  int num_colors = 0;
  std::vector<int> sizes;      // index 0 is red
  std::vector<uint32_t> rows;  // color-major: rows[c * n + v]
  std::vector<std::pair<int, int>> edges;

  bool completes_clique(int color, int i, int j) const {
    const uint32_t* adj = rows.data() + static_cast<size_t>(color) * n;
    AdjGraph g;
    g.n = n;
    for (int v = 0; v < n; ++v) g.rows[v] = adj[v];
    return has_clique_within(g, adj[i] & adj[j], sizes[color] - 2);
  }

  bool extend(size_t e) {
    if (e == edges.size()) return true;
    auto [i, j] = edges[e];
    for (int color = 0; color < num_colors; ++color) {
      if (sizes[color] == 2) continue;  // any edge of this color is a target
      rows[static_cast<size_t>(color) * n + i] |= uint32_t{1} << j;
      rows[static_cast<size_t>(color) * n + j] |= uint32_t{1} << i;
      bool ok = !completes_clique(color, i, j) && extend(e + 1);
      rows[static_cast<size_t>(color) * n + i] &= ~(uint32_t{1} << j);
      rows[static_cast<size_t>(color) * n + j] &= ~(uint32_t{1} << i);
      if (ok) return true;
    }
    return false;
  }
};

bool multicolor_survivor_exists(int n, int k, const std::vector<int>& ells) {
  MulticolorSearch s;
  s.n = n;
  s.num_colors = 1 + static_cast<int>(ells.size());
  s.sizes.push_back(k);
  for (int l : ells) s.sizes.push_back(l);
  s.rows.assign(static_cast<size_t>(s.num_colors) * n, 0);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) s.edges.emplace_back(i, j);
  }
  return s.extend(0);
}

RamseyExactResult multicolor_exact(int k, const std::vector<int>& ells,
                                   int n_max) {
  const int cap = ells.size() <= 2 ? 6 : 5;
  for (int n = 2; n <= std::min(n_max, cap); ++n) {
    if (!multicolor_survivor_exists(n, k, ells)) {
      return RamseyExactResult{true, n};
    }
  }
  if (n_max <= cap) return RamseyExactResult{false, n_max};
  throw BudgetError("multicolor search is capped at small vertex counts");
}

}  // namespace

RamseyExactResult ramsey_exact(int k, const MulticolorTarget& targets,
                               int n_max) {
  if (k < 1) throw PreconditionError("k must be positive");
  validate_target(targets);
  if (n_max < 1) throw PreconditionError("n_max must be positive");

  // A one-vertex complete graph meets any size-1 target vacuously.
  if (k == 1) return RamseyExactResult{true, 1};
  for (int part : targets.parts) {
    if (part == 1) return RamseyExactResult{true, 1};
  }

  if (targets.colors() == 1) {
    int l = targets.parts[0];
    if (k == 2) {
      return l <= n_max ? RamseyExactResult{true, l}
                        : RamseyExactResult{false, n_max};
    }
    if (l == 2) {
      return k <= n_max ? RamseyExactResult{true, k}
                        : RamseyExactResult{false, n_max};
    }
    return two_color_exact(k, l, n_max);
  }
  return multicolor_exact(k, targets.parts, n_max);
}

}  // namespace ramsey
