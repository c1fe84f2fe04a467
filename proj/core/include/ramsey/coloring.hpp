#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ramsey {

/// Subset of {0, ..., n-1} as a packed bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

  static VertexSet full(int n);

  int capacity() const { return n_; }
  void add(int v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
  void remove(int v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
  bool contains(int v) const {
    return (words_[v >> 6] >> (v & 63)) & 1;
  }

  int count() const;
  bool none() const;
  int first() const;  // -1 if empty
  std::vector<int> to_vector() const;

  VertexSet operator&(const VertexSet& o) const;
  VertexSet operator|(const VertexSet& o) const;
  VertexSet minus(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;
  bool operator==(const VertexSet& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> words_;
  friend class Coloring;
};

/// Complete graph on n vertices with every edge colored red (0) or one of
/// c non-red colors (1..c). Adjacency is kept per color as bitsets.
class Coloring {
 public:
  Coloring(int n, int c);

  int n() const { return n_; }
  int colors() const { return c_; }  // non-red colors

  void set_color(int u, int v, int color);
  int color(int u, int v) const;  // -1 if unassigned
  bool complete() const;

  const VertexSet& neighbors(int color, int v) const {
    return adj_[color][v];
  }

  long edges_between(int color, const VertexSet& a, const VertexSet& b) const;
  long edges_within(int color, const VertexSet& a) const;

  /// Subgraph induced on s, vertices renumbered in increasing order; the
  /// original index of new vertex i is written to back_map[i].
  Coloring induced(const VertexSet& s, std::vector<int>* back_map) const;

  /// Lexicographically least clique of the given size and color inside
  /// `within`, or nothing.
  std::optional<std::vector<int>> find_clique(int color, int size,
                                              const VertexSet& within) const;

  /// Every edge colored independently: probability weights[i] for color i,
  /// i = 0..c. Deterministic for a fixed seed.
  static Coloring random(int n, int c, uint64_t seed,
                         const std::vector<double>& weights);

  static Coloring read(std::istream& in);
  void write(std::ostream& out) const;

 private:
  int n_;
  int c_;
  std::vector<std::vector<VertexSet>> adj_;  // [color][vertex]
  std::vector<int8_t> edge_color_;           // n*n, -1 unassigned
};

/// Ordered pair of disjoint nonempty vertex sets.
struct Candidate {
  VertexSet X;
  VertexSet Y;
};

bool valid_candidate(const Candidate& cand, int n);

}  // namespace ramsey
