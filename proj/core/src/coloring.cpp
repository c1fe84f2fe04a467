#include "ramsey/coloring.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "ramsey/errors.hpp"

namespace ramsey {

VertexSet VertexSet::full(int n) {
  VertexSet s(n);
  for (size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~uint64_t{0};
  int spare = static_cast<int>(s.words_.size()) * 64 - n;
  if (spare > 0) s.words_.back() >>= spare;
  return s;
}

int VertexSet::count() const {
  int total = 0;
  for (uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::none() const {
  for (uint64_t w : words_) {
    if (w) return false;
  }
  return true;
}

int VertexSet::first() const {
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i]) return static_cast<int>(i) * 64 + std::countr_zero(words_[i]);
  }
  return -1;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for (size_t i = 0; i < words_.size(); ++i) {
    uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<int>(i) * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  VertexSet out(n_);
  for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & o.words_[i];
  return out;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
  VertexSet out(n_);
  for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | o.words_[i];
  return out;
}

VertexSet VertexSet::minus(const VertexSet& o) const {
  VertexSet out(n_);
  for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & ~o.words_[i];
  return out;
}

bool VertexSet::intersects(const VertexSet& o) const {
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & o.words_[i]) return true;
  }
  return false;
}

Coloring::Coloring(int n, int c) : n_(n), c_(c) {
  if (n < 1) throw PreconditionError("coloring needs at least one vertex");
  if (c < 1) throw PreconditionError("coloring needs at least one non-red color");
  adj_.assign(c + 1, std::vector<VertexSet>(n, VertexSet(n)));
  edge_color_.assign(static_cast<size_t>(n) * n, -1);
}

void Coloring::set_color(int u, int v, int color) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw PreconditionError("edge endpoints out of range");
  }
  if (color < 0 || color > c_) throw PreconditionError("color out of range");
  int old = edge_color_[static_cast<size_t>(u) * n_ + v];
  if (old >= 0) {
    adj_[old][u].remove(v);
    adj_[old][v].remove(u);
  }
  edge_color_[static_cast<size_t>(u) * n_ + v] = static_cast<int8_t>(color);
  edge_color_[static_cast<size_t>(v) * n_ + u] = static_cast<int8_t>(color);
  adj_[color][u].add(v);
  adj_[color][v].add(u);
}

int Coloring::color(int u, int v) const {
  return edge_color_[static_cast<size_t>(u) * n_ + v];
}

bool Coloring::complete() const {
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (color(u, v) < 0) return false;
    }
  }
  return true;
}

long Coloring::edges_between(int color, const VertexSet& a,
                             const VertexSet& b) const {
  long total = 0;
  for (int v : a.to_vector()) total += (adj_[color][v] & b).count();
  return total;
}

long Coloring::edges_within(int color, const VertexSet& a) const {
  long total = 0;
  for (int v : a.to_vector()) total += (adj_[color][v] & a).count();
  return total / 2;
}

Coloring Coloring::induced(const VertexSet& s, std::vector<int>* back_map) const {
  std::vector<int> verts = s.to_vector();
  if (verts.empty()) throw PreconditionError("induced subgraph is empty");
  Coloring sub(static_cast<int>(verts.size()), c_);
  for (size_t i = 0; i < verts.size(); ++i) {
    for (size_t j = i + 1; j < verts.size(); ++j) {
      int col = color(verts[i], verts[j]);
      if (col >= 0) {
        sub.set_color(static_cast<int>(i), static_cast<int>(j), col);
      }
    }
  }
  if (back_map) *back_map = std::move(verts);
  return sub;
}

namespace {

bool clique_search(const Coloring& col, int color, int size,
                   const VertexSet& allowed, int min_vertex,
                   std::vector<int>& acc) {
  if (size == 0) return true;
  if (allowed.count() < size) return false;
  for (int v : allowed.to_vector()) {
    if (v < min_vertex) continue;
    acc.push_back(v);
    if (clique_search(col, color, size - 1,
                      allowed & col.neighbors(color, v), v + 1, acc)) {
      return true;
    }
    acc.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> Coloring::find_clique(
    int color, int size, const VertexSet& within) const {
  if (size < 1) throw PreconditionError("clique size must be positive");
  std::vector<int> acc;
  if (clique_search(*this, color, size, within, 0, acc)) return acc;
  return std::nullopt;
}

Coloring Coloring::random(int n, int c, uint64_t seed,
                          const std::vector<double>& weights) {
  if (static_cast<int>(weights.size()) != c + 1) {
    throw PreconditionError("need one weight per color");
  }
  double total = 0;
  for (double w : weights) {
    if (w < 0) throw PreconditionError("negative color weight");
    total += w;
  }
  if (!(total > 0)) throw PreconditionError("weights sum to zero");

  Coloring col(n, c);
  std::mt19937_64 rng(seed);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      double r = (rng() >> 11) * 0x1.0p-53 * total;
      int chosen = c;
      double acc = 0;
      for (int i = 0; i <= c; ++i) {
        acc += weights[i];
        if (r < acc) {
          chosen = i;
          break;
        }
      }
      col.set_color(u, v, chosen);
    }
  }
  return col;
}

Coloring Coloring::read(std::istream& in) {
  int n = 0, c = 0;
  if (!(in >> n >> c)) throw ParseError("expected header: n c");
  if (n < 1 || c < 1) throw ParseError("invalid coloring header");
  Coloring col(n, c);
  int u, v, color;
  while (in >> u >> v >> color) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw ParseError("edge endpoints out of range");
    }
    if (color < 0 || color > c) throw ParseError("color index out of range");
    col.set_color(u, v, color);
  }
  if (!in.eof()) throw ParseError("malformed edge line");
  if (!col.complete()) throw ParseError("coloring does not cover every edge");
  return col;
}

void Coloring::write(std::ostream& out) const {
  out << n_ << " " << c_ << "\n";
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      out << u << " " << v << " " << color(u, v) << "\n";
    }
  }
}

bool valid_candidate(const Candidate& cand, int n) {
  if (cand.X.capacity() != n || cand.Y.capacity() != n) return false;
  if (cand.X.none() || cand.Y.none()) return false;
  return !cand.X.intersects(cand.Y);
}

}  // namespace ramsey
