#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ramsey/coloring.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

/// Clique targets (l_1, ..., l_c), one per non-red color.
struct MulticolorTarget {
  std::vector<int> parts;

  int colors() const { return static_cast<int>(parts.size()); }
  int total() const;
};

void validate_target(const MulticolorTarget& t);

/// f_p(X, Y) = e_R(X, Y) - p |X||Y|, exactly.
Rational excess_fp(const Coloring& col, const Candidate& cand,
                   const Rational& p);

/// Red density d(X, Y) = e_R(X, Y) / (|X||Y|).
Rational red_density(const Coloring& col, const Candidate& cand);

/// Both averaging inequalities evaluated in exact rationals:
///   sum_{v in X} f_p(X, N_R(v) cap Y)            >= p |X| f_p(X, Y)
///   sum_{v in X} d(X, N_R(v) cap Y) |N_R(v) cap Y| >= e_R(X, Y) d(X, Y)
/// Terms with empty N_R(v) cap Y contribute zero to either sum.
struct InequalityReport {
  Rational excess_lhs, excess_rhs;
  bool excess_holds = false;
  Rational convexity_lhs, convexity_rhs;
  bool convexity_holds = false;

  bool pass() const { return excess_holds && convexity_holds; }
};

InequalityReport inequality_suite(const Coloring& col, const Candidate& cand,
                                  const Rational& p);

struct Witness {
  enum class Kind { RedClique, MonoClique, BlueBook };
  enum class Side { None, X, Y };

  Kind kind = Kind::RedClique;
  std::vector<int> vertices;  // RedClique / MonoClique
  int color = 0;              // MonoClique: 1..c
  Side side = Side::None;     // MonoClique: which side it was found on
  std::vector<int> book_s, book_t;  // BlueBook
};

/// Replay the witness against the coloring: every required edge must have
/// the required color (red cliques red, mono cliques their color, book S-S
/// and S-T edges the book color, taken as color 1).
bool witness_validate(const Coloring& col, const Witness& w);

nlohmann::json to_json(const Witness& w);

/// Parameters of one goodness claim: a candidate is (k, l, t)-good when
/// X u Y holds a red K_k, or X a color-i K_{t_i}, or Y a color-i K_{l_i}.
struct GoodSpec {
  int k = 1;
  MulticolorTarget ell;      // Y-side targets
  std::vector<int> t;        // X-side targets, one per color
  std::vector<Rational> theta;  // positive, summing to 1
  Rational p, x;             // 0 < x < p < 1
};

void validate_good_spec(const GoodSpec& spec, int colors);

/// Right-hand side of the excess hypothesis:
/// (k + t) x^{-k+1} (1-x)^{-l+c} (p-x)^{-t+c} prod theta_i^{-l_i - t_i}.
Rational good_threshold(const GoodSpec& spec);

/// Execute the goodness recursion on a candidate whose excess meets
/// good_threshold (checked; HypothesisError otherwise): pivot on the vertex
/// maximizing f_p(X, N_R(v) cap Y), descend into the first branch meeting
/// its threshold, fall back to exhaustive search in Y. The returned witness
/// always validates.
Witness recurse_good(const Coloring& col, const Candidate& cand,
                     const GoodSpec& spec);

/// Two-color convenience: targets (k, l, t) with a single blue color.
Witness recurse_good(const Coloring& col, const Candidate& cand, int k, int l,
                     int t, const Rational& p, const Rational& x);

enum class PartitionStrategy {
  Auto,        // exhaustive for n <= 16, otherwise random + greedy
  Exhaustive,
  RandomGreedy,
};

struct DescendOptions {
  PartitionStrategy strategy = PartitionStrategy::Auto;
  uint64_t seed = 1;
  int random_tries = 512;
  // The theorem needs n at least its stated bound before the descent is
  // guaranteed; desk-scale fixtures run below it deliberately.
  bool enforce_size = true;
};

/// Outer induction of the density theorem: recurse into any oversized blue
/// neighborhood with that target reduced, otherwise partition into a
/// candidate meeting the goodness threshold and hand over to recurse_good.
/// x is chosen as a dyadic rational strictly below the golden x(p).
Witness descend(const Coloring& col, int k, const MulticolorTarget& targets,
                const Rational& p, const DescendOptions& opt = {});

/// Largest dyadic rational on the 2^-40 grid strictly below the golden
/// x(p), which keeps every goodness threshold rational.
Rational golden_x_below(const Rational& p);

/// Blue-book extraction from Xset: find W = {v : blue degree into Xset >=
/// mu |Xset|}, search W for a red K_k, else a blue K_m with m = ceil(5
/// b^2/mu), then pick the b-subset S of that K_m maximizing the common blue
/// neighborhood T in Xset. Blue is color 1.
Witness blue_book_extract(const Coloring& col, const VertexSet& xset,
                          const Rational& mu, int b, int k,
                          uint64_t seed = 1);

struct RamseyExactResult {
  bool exact = false;
  int value = 0;  // exact: R itself; otherwise R > value (searched bound)
};

/// Exhaustive Ramsey oracle: least N <= n_max such that every coloring of
/// K_N contains a red K_k or a color-i K_{l_i}. Two-color search uses
/// canonical-form BFS over isomorphism classes; small multicolor cases use
/// pruned DFS. Throws BudgetError when the search space is out of reach.
RamseyExactResult ramsey_exact(int k, const MulticolorTarget& targets,
                               int n_max);

}  // namespace ramsey
