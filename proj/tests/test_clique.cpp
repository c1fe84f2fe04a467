#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "ramsey/clique.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/errors.hpp"

using namespace ramsey;

namespace {

Coloring uniform_coloring(int n, int color) {
  Coloring col(n, 1);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) col.set_color(i, j, color);
  }
  return col;
}

Coloring all_red(int n) { return uniform_coloring(n, 0); }
Coloring all_blue(int n) { return uniform_coloring(n, 1); }

Candidate balanced_split(int n) {
  Candidate cand{VertexSet(n), VertexSet(n)};
  for (int i = 0; i < n; ++i) {
    if (i < n / 2) {
      cand.X.add(i);
    } else {
      cand.Y.add(i);
    }
  }
  return cand;
}

// Every ordered pair of disjoint nonempty subsets of {0..n-1}.
std::vector<Candidate> all_candidates(int n) {
  std::vector<Candidate> out;
  std::vector<int> assign(n, 0);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    long c = code;
    Candidate cand{VertexSet(n), VertexSet(n)};
    for (int i = 0; i < n; ++i) {
      int a = c % 3;
      c /= 3;
      if (a == 1) cand.X.add(i);
      if (a == 2) cand.Y.add(i);
    }
    if (cand.X.none() || cand.Y.none()) continue;
    out.push_back(std::move(cand));
  }
  return out;
}

Coloring from_mask(int n, uint64_t mask) {
  Coloring col(n, 1);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      col.set_color(i, j, (mask >> bit) & 1 ? 1 : 0);
    }
  }
  return col;
}

uint64_t canonical_mask(int n, uint64_t mask) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~uint64_t{0};
  do {
    uint64_t m = 0;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++bit) {
        int a = perm[i], b = perm[j];
        if (a > b) std::swap(a, b);
        if ((mask >> (b * (b - 1) / 2 + a)) & 1) m |= uint64_t{1} << bit;
      }
    }
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Representatives of the 2-coloring isomorphism classes of K_n, built by
// extending the classes one vertex at a time.
std::vector<uint64_t> iso_classes(int n) {
  std::vector<uint64_t> level{0};  // the 1-vertex graph
  for (int m = 2; m <= n; ++m) {
    std::set<uint64_t> next;
    int base = (m - 1) * (m - 2) / 2;
    for (uint64_t g : level) {
      for (uint64_t ext = 0; ext < (uint64_t{1} << (m - 1)); ++ext) {
        next.insert(canonical_mask(m, g | (ext << base)));
      }
    }
    level.assign(next.begin(), next.end());
  }
  return level;
}

}  // namespace

TEST_CASE("vertex set basics") {
  VertexSet s(70);
  s.add(0);
  s.add(69);
  s.add(33);
  CHECK(s.count() == 3);
  CHECK(s.contains(69));
  CHECK_FALSE(s.contains(1));
  CHECK(s.first() == 0);
  s.remove(0);
  CHECK(s.first() == 33);
  VertexSet t(70);
  t.add(33);
  CHECK(s.intersects(t));
  CHECK((s & t).count() == 1);
  CHECK((s | t).count() == 2);
  CHECK(s.minus(t).count() == 1);
  CHECK(s.minus(t).first() == 69);
  CHECK(VertexSet::full(70).count() == 70);
  std::vector<int> v = s.to_vector();
  CHECK(v == std::vector<int>{33, 69});
}

TEST_CASE("coloring stores and reports edge colors") {
  Coloring col(4, 2);
  col.set_color(0, 1, 0);
  col.set_color(1, 2, 1);
  col.set_color(2, 3, 2);
  CHECK(col.color(1, 0) == 0);
  CHECK(col.color(2, 1) == 1);
  CHECK(col.color(3, 2) == 2);
  CHECK(col.color(0, 3) == -1);
  CHECK_FALSE(col.complete());
  col.set_color(0, 2, 0);
  col.set_color(0, 3, 0);
  col.set_color(1, 3, 1);
  CHECK(col.complete());
  CHECK(col.neighbors(0, 0).count() == 3);
  CHECK(col.neighbors(1, 1).count() == 2);
}

TEST_CASE("edge counts between sets") {
  Coloring col = all_red(6);
  VertexSet a(6), b(6);
  a.add(0);
  a.add(1);
  b.add(2);
  b.add(3);
  b.add(4);
  CHECK(col.edges_between(0, a, b) == 6);
  CHECK(col.edges_between(1, a, b) == 0);
  CHECK(col.edges_within(0, b) == 3);
  // Overlapping sets count shared edges once.
  VertexSet c(6);
  c.add(1);
  c.add(2);
  CHECK(col.edges_between(0, a, c) == 3);
}

TEST_CASE("induced subgraph renumbers and back-maps") {
  Coloring col(5, 1);
  for (int j = 1; j < 5; ++j) {
    for (int i = 0; i < j; ++i) col.set_color(i, j, (i + j) % 2);
  }
  VertexSet s(5);
  s.add(1);
  s.add(3);
  s.add(4);
  std::vector<int> back;
  Coloring sub = col.induced(s, &back);
  CHECK(sub.n() == 3);
  CHECK(back == std::vector<int>{1, 3, 4});
  for (int j = 1; j < 3; ++j) {
    for (int i = 0; i < j; ++i) {
      CHECK(sub.color(i, j) == col.color(back[i], back[j]));
    }
  }
}

TEST_CASE("clique finder returns the least witness") {
  Coloring col = all_red(6);
  auto c = col.find_clique(0, 3, VertexSet::full(6));
  REQUIRE(c.has_value());
  CHECK(*c == std::vector<int>{0, 1, 2});
  CHECK_FALSE(col.find_clique(1, 2, VertexSet::full(6)).has_value());
  VertexSet within(6);
  within.add(2);
  within.add(4);
  within.add(5);
  auto d = col.find_clique(0, 3, within);
  REQUIRE(d.has_value());
  CHECK(*d == std::vector<int>{2, 4, 5});
}

TEST_CASE("random colorings are deterministic per seed and weight-driven") {
  Coloring a = Coloring::random(12, 1, 42, {0.97, 0.03});
  Coloring b = Coloring::random(12, 1, 42, {0.97, 0.03});
  int red = 0, blue = 0;
  for (int j = 1; j < 12; ++j) {
    for (int i = 0; i < j; ++i) {
      CHECK(a.color(i, j) == b.color(i, j));
      (a.color(i, j) == 0 ? red : blue)++;
    }
  }
  CHECK(a.complete());
  CHECK(red > blue);
  Coloring c = Coloring::random(12, 1, 43, {0.97, 0.03});
  bool differs = false;
  for (int j = 1; j < 12 && !differs; ++j) {
    for (int i = 0; i < j; ++i) {
      if (a.color(i, j) != c.color(i, j)) {
        differs = true;
        break;
      }
    }
  }
  CHECK(differs);
}

TEST_CASE("coloring text round trip") {
  Coloring col = Coloring::random(9, 2, 5, {0.5, 0.25, 0.25});
  std::stringstream buf;
  col.write(buf);
  Coloring back = Coloring::read(buf);
  CHECK(back.n() == col.n());
  CHECK(back.colors() == col.colors());
  for (int j = 1; j < 9; ++j) {
    for (int i = 0; i < j; ++i) CHECK(back.color(i, j) == col.color(i, j));
  }
}

TEST_CASE("excess and density on a fully red split") {
  Coloring col = all_red(28);
  Candidate cand = balanced_split(28);
  CHECK(excess_fp(col, cand, Rational(1, 2)) == Rational(98));
  CHECK(red_density(col, cand) == Rational(1));
  Coloring blue = all_blue(28);
  CHECK(excess_fp(blue, cand, Rational(1, 2)) == Rational(-98));
  CHECK(red_density(blue, cand) == Rational(0));
}

TEST_CASE("averaging inequalities on hand-checked fixtures") {
  // All red: every N_R(v) cap Y = Y, so the excess sums telescope.
  Coloring col = all_red(8);
  Candidate cand = balanced_split(8);
  InequalityReport rep = inequality_suite(col, cand, Rational(1, 2));
  CHECK(rep.pass());
  CHECK(rep.excess_lhs == Rational(32));  // 4 * (16 - 1/2 * 16)
  CHECK(rep.excess_rhs == Rational(16));  // 1/2 * 4 * 8
  CHECK(rep.convexity_lhs == Rational(16));
  CHECK(rep.convexity_rhs == Rational(16));

  // All blue: f_p is negative and the excess inequality is strict.
  Coloring blue = all_blue(8);
  InequalityReport rep2 = inequality_suite(blue, cand, Rational(1, 2));
  CHECK(rep2.pass());
  CHECK(rep2.excess_lhs == Rational(0));
  CHECK(rep2.excess_rhs == Rational(-16));
  CHECK(rep2.convexity_lhs == Rational(0));
  CHECK(rep2.convexity_rhs == Rational(0));
}

TEST_CASE("averaging inequalities hold exhaustively up to five vertices") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<Candidate> cands = all_candidates(n);
    uint64_t masks = uint64_t{1} << (n * (n - 1) / 2);
    for (uint64_t mask = 0; mask < masks; ++mask) {
      Coloring col = from_mask(n, mask);
      for (const Candidate& cand : cands) {
        for (const Rational& p : {Rational(1, 3), Rational(1, 2)}) {
          InequalityReport rep = inequality_suite(col, cand, p);
          REQUIRE(rep.pass());
        }
      }
    }
  }
}

TEST_CASE("averaging inequalities hold for random larger instances") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 13);  // up to 14
    double w = 0.15 + 0.7 * (rng() % 100) / 100.0;
    Coloring col = Coloring::random(n, 1, rng(), {w, 1.0 - w});
    Candidate cand{VertexSet(n), VertexSet(n)};
    for (int i = 0; i < n; ++i) {
      switch (rng() % 3) {
        case 1:
          cand.X.add(i);
          break;
        case 2:
          cand.Y.add(i);
          break;
        default:
          break;
      }
    }
    if (cand.X.none() || cand.Y.none()) continue;
    Rational p(1 + static_cast<long>(rng() % 15), 16);
    InequalityReport rep = inequality_suite(col, cand, p);
    REQUIRE(rep.pass());
  }
}

TEST_SUITE("slow") {

TEST_CASE("averaging inequalities over all isomorphism classes, n = 6, 7") {
  const int expected_classes[] = {0, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 6; n <= 7; ++n) {
    std::vector<uint64_t> classes = iso_classes(n);
    CHECK(static_cast<int>(classes.size()) == expected_classes[n]);
    std::vector<Candidate> cands = all_candidates(n);
    for (uint64_t mask : classes) {
      Coloring col = from_mask(n, mask);
      for (const Candidate& cand : cands) {
        InequalityReport rep = inequality_suite(col, cand, Rational(1, 2));
        REQUIRE(rep.pass());
      }
    }
  }
}

TEST_CASE("two-color search admits its vertex cap") {
  CHECK_THROWS_AS(ramsey_exact(3, MulticolorTarget{{6}}, 40), BudgetError);
}

TEST_CASE("inequality results are relabeling invariant") {
  std::mt19937_64 rng(99);
  Coloring col = Coloring::random(7, 1, 7, {0.6, 0.4});
  std::vector<int> perm{3, 1, 6, 0, 5, 2, 4};
  Coloring relabeled(7, 1);
  for (int j = 1; j < 7; ++j) {
    for (int i = 0; i < j; ++i) {
      relabeled.set_color(perm[i], perm[j], col.color(i, j));
    }
  }
  for (const Candidate& cand : all_candidates(7)) {
    Candidate mapped{VertexSet(7), VertexSet(7)};
    for (int v : cand.X.to_vector()) mapped.X.add(perm[v]);
    for (int v : cand.Y.to_vector()) mapped.Y.add(perm[v]);
    InequalityReport a = inequality_suite(col, cand, Rational(2, 5));
    InequalityReport b = inequality_suite(relabeled, mapped, Rational(2, 5));
    CHECK(a.excess_lhs == b.excess_lhs);
    CHECK(a.excess_rhs == b.excess_rhs);
    CHECK(a.convexity_lhs == b.convexity_lhs);
    CHECK(a.convexity_rhs == b.convexity_rhs);
  }
  (void)rng;
}

}  // TEST_SUITE("slow")

TEST_CASE("witness validation accepts correct structures and rejects others") {
  Coloring col(5, 2);
  for (int j = 1; j < 5; ++j) {
    for (int i = 0; i < j; ++i) col.set_color(i, j, 0);
  }
  col.set_color(0, 1, 1);
  col.set_color(0, 2, 1);
  col.set_color(1, 2, 1);
  col.set_color(3, 4, 2);

  Witness red;
  red.kind = Witness::Kind::RedClique;
  red.vertices = {0, 3};
  CHECK(witness_validate(col, red));
  red.vertices = {0, 1};  // that edge is color 1
  CHECK_FALSE(witness_validate(col, red));
  red.vertices = {2, 2};  // repeated vertex
  CHECK_FALSE(witness_validate(col, red));
  red.vertices = {2, 7};  // out of range
  CHECK_FALSE(witness_validate(col, red));

  Witness mono;
  mono.kind = Witness::Kind::MonoClique;
  mono.color = 1;
  mono.vertices = {0, 1, 2};
  CHECK(witness_validate(col, mono));
  mono.color = 2;
  CHECK_FALSE(witness_validate(col, mono));
  mono.vertices = {3, 4};
  CHECK(witness_validate(col, mono));

  Witness book;
  book.kind = Witness::Kind::BlueBook;
  book.book_s = {0, 1};
  book.book_t = {2};
  CHECK(witness_validate(col, book));  // S-S and S-T edges all color 1
  book.book_t = {3};                   // 0-3 is red
  CHECK_FALSE(witness_validate(col, book));
  book.book_s = {};
  book.book_t = {2};
  CHECK_FALSE(witness_validate(col, book));  // S must be nonempty
}

TEST_CASE("goodness threshold is an exact rational") {
  GoodSpec spec;
  spec.k = 2;
  spec.ell.parts = {2};
  spec.t = {2};
  spec.theta = {Rational(1)};
  spec.p = Rational(1, 2);
  spec.x = Rational(1, 5);
  // (2+2) x^{-1} (1-x)^{-1} (p-x)^{-1} = 4 * 5 * 5/4 * 10/3.
  CHECK(good_threshold(spec) == Rational(250, 3));
}

TEST_CASE("goodness recursion on a fully red candidate yields a red clique") {
  Coloring col = all_red(28);
  Candidate cand = balanced_split(28);
  Witness w =
      recurse_good(col, cand, 2, 2, 2, Rational(1, 2), golden_x_below(Rational(1, 2)));
  CHECK(w.kind == Witness::Kind::RedClique);
  CHECK(w.vertices.size() == 2);
  CHECK(witness_validate(col, w));
}

TEST_CASE("goodness recursion rejects candidates missing the hypothesis") {
  Coloring col = all_blue(12);
  Candidate cand = balanced_split(12);
  CHECK_THROWS_AS(recurse_good(col, cand, 2, 2, 2, Rational(1, 2),
                               golden_x_below(Rational(1, 2))),
                  HypothesisError);
}

TEST_CASE("single-color spec agrees with the two-color entry point") {
  Coloring col = Coloring::random(26, 1, 31, {0.96, 0.04});
  Candidate cand = balanced_split(26);
  Rational p(1, 2), x = golden_x_below(p);
  GoodSpec spec;
  spec.k = 2;
  spec.ell.parts = {2};
  spec.t = {2};
  spec.theta = {Rational(1)};
  spec.p = p;
  spec.x = x;
  REQUIRE(excess_fp(col, cand, p) >= good_threshold(spec));
  Witness a = recurse_good(col, cand, spec);
  Witness b = recurse_good(col, cand, 2, 2, 2, p, x);
  CHECK(a.kind == b.kind);
  CHECK(a.vertices == b.vertices);
  CHECK(a.color == b.color);
  CHECK(witness_validate(col, a));
}

TEST_CASE("goodness recursion fuzz: every hypothesis-holding run validates") {
  std::mt19937_64 rng(6011);
  int held = 0, attempts = 0;
  while (held < 200 && attempts < 1000) {
    ++attempts;
    int n = 26 + 2 * static_cast<int>(rng() % 4);  // 26..32
    double w = 0.94 + 0.01 * (rng() % 5);
    Coloring col = Coloring::random(n, 1, rng(), {w, 1.0 - w});
    Candidate cand = balanced_split(n);
    Rational p(1, 2), x = golden_x_below(p);
    GoodSpec spec;
    spec.k = 2;
    spec.ell.parts = {2};
    spec.t = {2};
    spec.theta = {Rational(1)};
    spec.p = p;
    spec.x = x;
    if (excess_fp(col, cand, p) < good_threshold(spec)) continue;
    ++held;
    Witness wtn = recurse_good(col, cand, spec);
    REQUIRE(witness_validate(col, wtn));
  }
  CHECK(held == 200);
}

TEST_CASE("dyadic abscissa sits just below the golden choice") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    long den = 5 + static_cast<long>(rng() % 995);
    long lo_num = 2 * den / 5 + 1;  // keeps p above 2/5, inside the domain
    long num = lo_num + static_cast<long>(rng() % (den - lo_num));
    Rational p(num, den);
    QuadraticSurd gx = golden_x(QuadraticSurd(p));
    Rational x = golden_x_below(p);
    CHECK(x > 0);
    CHECK(QuadraticSurd(x) < gx);
    // Off by at most a few steps of the 2^-40 grid.
    Rational step(1, int64_t{1} << 40);
    CHECK(QuadraticSurd(x + 4 * step) >= gx);
    // Dyadic: denominator divides 2^40.
    Rational scaled = x * pow_int(Rational(2), 40);
    CHECK(scaled.get_den() == 1);
  }
  // Below (sqrt(5)-1)/(sqrt(5)+1) there is no positive golden abscissa.
  CHECK_THROWS_AS(golden_x_below(Rational(38, 100)), DomainError);
}

TEST_CASE("descent finds a monochromatic clique through the blue dichotomy") {
  Coloring col = all_blue(12);
  MulticolorTarget targets{{3}};
  DescendOptions opt;
  opt.enforce_size = false;
  Witness w = descend(col, 2, targets, Rational(1, 2), opt);
  CHECK(w.kind == Witness::Kind::MonoClique);
  CHECK(w.color == 1);
  CHECK(w.vertices.size() == 3);
  CHECK(witness_validate(col, w));
}

TEST_CASE("descent partitions a red-heavy graph and recurses to a witness") {
  Coloring col = all_red(28);
  MulticolorTarget targets{{2}};
  DescendOptions opt;
  opt.enforce_size = false;
  Witness w = descend(col, 2, targets, Rational(1, 2), opt);
  CHECK(w.kind == Witness::Kind::RedClique);
  CHECK(witness_validate(col, w));
}

TEST_CASE("descent reports a partition shortfall at toy scale") {
  Coloring col = all_red(12);
  MulticolorTarget targets{{2}};
  DescendOptions opt;
  opt.enforce_size = false;
  CHECK_THROWS_AS(descend(col, 2, targets, Rational(1, 2), opt),
                  PartitionShortfallError);
}

TEST_CASE("descent enforces the theorem's size precondition by default") {
  Coloring col = all_red(100);
  MulticolorTarget targets{{2}};
  CHECK_THROWS_AS(descend(col, 2, targets, Rational(1, 2)), PreconditionError);
}

TEST_CASE("partition strategies: exhaustive budget and random-greedy parity") {
  Coloring col = all_red(28);
  MulticolorTarget targets{{2}};
  DescendOptions opt;
  opt.enforce_size = false;
  opt.strategy = PartitionStrategy::Exhaustive;
  CHECK_THROWS_AS(descend(col, 2, targets, Rational(1, 2), opt), BudgetError);
  opt.strategy = PartitionStrategy::RandomGreedy;
  Witness w = descend(col, 2, targets, Rational(1, 2), opt);
  CHECK(w.kind == Witness::Kind::RedClique);
  CHECK(witness_validate(col, w));
}

TEST_CASE("book extraction from an all-blue neighborhood") {
  Coloring col = all_blue(245);
  Witness w = blue_book_extract(col, VertexSet::full(245), Rational(3, 4), 1, 2);
  CHECK(w.kind == Witness::Kind::BlueBook);
  CHECK(w.book_s.size() == 1);
  CHECK(w.book_t.size() == 244);
  CHECK(witness_validate(col, w));
}

TEST_CASE("book extraction rejects an undersized ground set") {
  Coloring col = all_blue(20);
  CHECK_THROWS_AS(
      blue_book_extract(col, VertexSet::full(20), Rational(3, 4), 1, 2),
      PreconditionError);
}

TEST_CASE("book extraction short-circuits on a red clique among high-degree "
          "vertices") {
  Coloring col = all_blue(245);
  col.set_color(0, 1, 0);
  Witness w = blue_book_extract(col, VertexSet::full(245), Rational(3, 4), 1, 2);
  CHECK(w.kind == Witness::Kind::RedClique);
  CHECK(w.vertices == std::vector<int>{0, 1});
  CHECK(witness_validate(col, w));
}

TEST_CASE("exact small numbers") {
  CHECK(ramsey_exact(1, MulticolorTarget{{5}}, 10).value == 1);
  CHECK(ramsey_exact(4, MulticolorTarget{{1}}, 10).value == 1);
  CHECK(ramsey_exact(2, MulticolorTarget{{2}}, 10).value == 2);
  CHECK(ramsey_exact(3, MulticolorTarget{{2}}, 10).value == 3);
  CHECK(ramsey_exact(2, MulticolorTarget{{7}}, 10).value == 7);
  RamseyExactResult r33 = ramsey_exact(3, MulticolorTarget{{3}}, 10);
  CHECK(r33.exact);
  CHECK(r33.value == 6);
}

TEST_CASE("exact R(3,4) through the canonical search") {
  RamseyExactResult r = ramsey_exact(3, MulticolorTarget{{4}}, 10);
  CHECK(r.exact);
  CHECK(r.value == 9);
}

TEST_CASE("undecided searches report the bound they did reach") {
  RamseyExactResult r = ramsey_exact(4, MulticolorTarget{{4}}, 5);
  CHECK_FALSE(r.exact);
  CHECK(r.value == 5);
  RamseyExactResult m = ramsey_exact(3, MulticolorTarget{{3, 3}}, 6);
  CHECK_FALSE(m.exact);
  CHECK(m.value == 6);
}

TEST_CASE("out-of-reach searches refuse loudly") {
  CHECK_THROWS_AS(ramsey_exact(3, MulticolorTarget{{3, 3}}, 17), BudgetError);
}

TEST_CASE("multicolor shortcuts and small exact values") {
  CHECK(ramsey_exact(2, MulticolorTarget{{2, 2}}, 10).value == 2);
  RamseyExactResult r = ramsey_exact(2, MulticolorTarget{{3, 3}}, 10);
  CHECK(r.exact);
  CHECK(r.value == 6);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(validate_target(MulticolorTarget{{}}), PreconditionError);
  CHECK_THROWS_AS(validate_target(MulticolorTarget{{3, 0}}),
                  PreconditionError);
  GoodSpec bad;
  bad.k = 2;
  bad.ell.parts = {2};
  bad.t = {2};
  bad.theta = {Rational(1, 2)};  // does not sum to 1
  bad.p = Rational(1, 2);
  bad.x = Rational(1, 5);
  CHECK_THROWS_AS(validate_good_spec(bad, 1), PreconditionError);
  bad.theta = {Rational(1)};
  bad.x = Rational(3, 4);  // x must stay below p
  CHECK_THROWS_AS(validate_good_spec(bad, 1), PreconditionError);
}
