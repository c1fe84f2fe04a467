#include "ramsey/clique.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ramsey/bounds.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/surd.hpp"

namespace ramsey {

int MulticolorTarget::total() const {
  int sum = 0;
  for (int part : parts) sum += part;
  return sum;
}

void validate_target(const MulticolorTarget& t) {
  if (t.parts.empty()) throw PreconditionError("no clique targets given");
  for (int part : t.parts) {
    if (part < 1) throw PreconditionError("clique targets must be positive");
  }
}

Rational excess_fp(const Coloring& col, const Candidate& cand,
                   const Rational& p) {
  if (!valid_candidate(cand, col.n())) {
    throw PreconditionError("candidate sets must be disjoint and nonempty");
  }
  long e = col.edges_between(0, cand.X, cand.Y);
  return Rational(e) - p * cand.X.count() * cand.Y.count();
}

Rational red_density(const Coloring& col, const Candidate& cand) {
  if (!valid_candidate(cand, col.n())) {
    throw PreconditionError("candidate sets must be disjoint and nonempty");
  }
  long e = col.edges_between(0, cand.X, cand.Y);
  return Rational(e) / (Rational(cand.X.count()) * cand.Y.count());
}

InequalityReport inequality_suite(const Coloring& col, const Candidate& cand,
                                  const Rational& p) {
  if (!valid_candidate(cand, col.n())) {
    throw PreconditionError("candidate sets must be disjoint and nonempty");
  }
  long xs = cand.X.count();
  long ys = cand.Y.count();
  long e = col.edges_between(0, cand.X, cand.Y);
  Rational fp = Rational(e) - p * xs * ys;
  Rational d = Rational(e) / (Rational(xs) * ys);

  InequalityReport report;
  report.excess_lhs = 0;
  report.convexity_lhs = 0;
  for (int v : cand.X.to_vector()) {
    VertexSet nv = col.neighbors(0, v) & cand.Y;
    long nv_size = nv.count();
    long ev = col.edges_between(0, cand.X, nv);
    report.excess_lhs += Rational(ev) - p * xs * nv_size;
    if (nv_size > 0) {
      // d(X, nv) * |nv| = e_R(X, nv) / |X|
      report.convexity_lhs += Rational(ev) / xs;
    }
  }
  report.excess_rhs = p * xs * fp;
  report.convexity_rhs = Rational(e) * d;
  report.excess_holds = report.excess_lhs >= report.excess_rhs;
  report.convexity_holds = report.convexity_lhs >= report.convexity_rhs;
  return report;
}

namespace {

bool all_edges_colored(const Coloring& col, const std::vector<int>& verts,
                       int color) {
  for (size_t i = 0; i < verts.size(); ++i) {
    for (size_t j = i + 1; j < verts.size(); ++j) {
      if (col.color(verts[i], verts[j]) != color) return false;
    }
  }
  return true;
}

bool in_range_distinct(const std::vector<int>& verts, int n) {
  VertexSet seen(n);
  for (int v : verts) {
    if (v < 0 || v >= n || seen.contains(v)) return false;
    seen.add(v);
  }
  return true;
}

}  // namespace

bool witness_validate(const Coloring& col, const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::RedClique:
      return !w.vertices.empty() && in_range_distinct(w.vertices, col.n()) &&
             all_edges_colored(col, w.vertices, 0);
    case Witness::Kind::MonoClique:
      return !w.vertices.empty() && w.color >= 1 && w.color <= col.colors() &&
             in_range_distinct(w.vertices, col.n()) &&
             all_edges_colored(col, w.vertices, w.color);
    case Witness::Kind::BlueBook: {
      if (w.book_s.empty()) return false;
      std::vector<int> both = w.book_s;
      both.insert(both.end(), w.book_t.begin(), w.book_t.end());
      if (!in_range_distinct(both, col.n())) return false;
      if (!all_edges_colored(col, w.book_s, 1)) return false;
      for (int s : w.book_s) {
        for (int t : w.book_t) {
          if (col.color(s, t) != 1) return false;
        }
      }
      return true;
    }
  }
  return false;
}

nlohmann::json to_json(const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::RedClique:
      return nlohmann::json{{"kind", "red_clique"}, {"vertices", w.vertices}};
    case Witness::Kind::MonoClique: {
      nlohmann::json j{{"kind", "mono_clique"},
                       {"color", w.color},
                       {"vertices", w.vertices}};
      if (w.side == Witness::Side::X) j["side"] = "x";
      if (w.side == Witness::Side::Y) j["side"] = "y";
      return j;
    }
    default:
      return nlohmann::json{
          {"kind", "blue_book"}, {"s", w.book_s}, {"t", w.book_t}};
  }
}

void validate_good_spec(const GoodSpec& spec, int colors) {
  if (spec.k < 1) throw PreconditionError("k must be positive");
  validate_target(spec.ell);
  if (spec.ell.colors() != colors) {
    throw PreconditionError("one Y-side target needed per color");
  }
  if (static_cast<int>(spec.t.size()) != colors) {
    throw PreconditionError("one X-side target needed per color");
  }
  for (int t : spec.t) {
    if (t < 1) throw PreconditionError("X-side targets must be positive");
  }
  if (static_cast<int>(spec.theta.size()) != colors) {
    throw PreconditionError("one theta needed per color");
  }
  Rational theta_sum = 0;
  for (const Rational& th : spec.theta) {
    if (th <= 0) throw PreconditionError("theta components must be positive");
    theta_sum += th;
  }
  if (theta_sum != 1) throw PreconditionError("theta must sum to 1");
  if (!(0 < spec.x && spec.x < spec.p && spec.p < 1)) {
    throw PreconditionError("need 0 < x < p < 1");
  }
}

Rational good_threshold(const GoodSpec& spec) {
  int c = spec.ell.colors();
  long ell = spec.ell.total();
  long t = 0;
  for (int ti : spec.t) t += ti;
  Rational rhs = Rational(spec.k + t);
  rhs *= pow_int(spec.x, -(spec.k - 1));
  rhs *= pow_int(1 - spec.x, -(ell - c));
  rhs *= pow_int(spec.p - spec.x, -(t - c));
  for (int i = 0; i < c; ++i) {
    rhs *= pow_int(spec.theta[i], -(spec.ell.parts[i] + spec.t[i]));
  }
  return rhs;
}

namespace {

Rational excess_or_zero(const Coloring& col, const VertexSet& a,
                        const VertexSet& b, const Rational& p) {
  if (a.none() || b.none()) return Rational(0);
  long e = col.edges_between(0, a, b);
  return Rational(e) - p * a.count() * b.count();
}

Witness recurse_good_impl(const Coloring& col, const Candidate& cand,
                          int k, std::vector<int> tvec, const GoodSpec& base,
                          bool top_level) {
  // Trivial goodness: a single vertex realizes any 1-target.
  if (k == 1) {
    return Witness{Witness::Kind::RedClique, {cand.X.first()}};
  }
  for (size_t i = 0; i < tvec.size(); ++i) {
    if (tvec[i] == 1) {
      return Witness{Witness::Kind::MonoClique,
                     {cand.X.first()},
                     static_cast<int>(i) + 1,
                     Witness::Side::X};
    }
    if (base.ell.parts[i] == 1) {
      return Witness{Witness::Kind::MonoClique,
                     {cand.Y.first()},
                     static_cast<int>(i) + 1,
                     Witness::Side::Y};
    }
  }

  Rational fp = excess_fp(col, cand, base.p);
  GoodSpec here = base;
  here.k = k;
  here.t = tvec;
  Rational threshold = good_threshold(here);
  if (fp < threshold) {
    std::ostringstream msg;
    msg << "excess " << fp.get_str() << " below the required "
        << threshold.get_str();
    if (top_level) throw HypothesisError(msg.str());
    throw InternalContradictionError(
        "recursion lost the excess hypothesis: " + msg.str());
  }

  // Pivot: the averaging lemma guarantees the max is at least p * fp.
  int pivot = -1;
  Rational pivot_fp;
  for (int v : cand.X.to_vector()) {
    VertexSet nv = col.neighbors(0, v) & cand.Y;
    Rational fv = excess_or_zero(col, cand.X, nv, base.p);
    if (pivot < 0 || fv > pivot_fp) {
      pivot = v;
      pivot_fp = fv;
    }
  }
  if (pivot_fp < base.p * fp) {
    throw InternalContradictionError("pivot average fell below p * excess");
  }

  VertexSet yprime = col.neighbors(0, pivot) & cand.Y;
  int total = k;
  for (int ti : tvec) total += ti;
  Rational branch_scale = Rational(total - 1) / total * fp;

  VertexSet xr = col.neighbors(0, pivot) & cand.X;
  if (excess_or_zero(col, xr, yprime, base.p) >= base.x * branch_scale) {
    Witness w = recurse_good_impl(col, Candidate{xr, yprime}, k - 1, tvec,
                                  base, false);
    if (w.kind == Witness::Kind::RedClique) {
      w.vertices.insert(w.vertices.begin(), pivot);
    }
    return w;
  }
  for (size_t i = 0; i < tvec.size(); ++i) {
    VertexSet xb = col.neighbors(static_cast<int>(i) + 1, pivot) & cand.X;
    Rational need = base.theta[i] * (base.p - base.x) * branch_scale;
    if (excess_or_zero(col, xb, yprime, base.p) >= need) {
      std::vector<int> reduced = tvec;
      --reduced[i];
      Witness w = recurse_good_impl(col, Candidate{xb, yprime}, k,
                                    std::move(reduced), base, false);
      if (w.kind == Witness::Kind::MonoClique &&
          w.color == static_cast<int>(i) + 1 && w.side == Witness::Side::X) {
        w.vertices.insert(w.vertices.begin(), pivot);
      }
      return w;
    }
  }

  // No branch met its threshold, so Y is large enough to contain a target
  // outright.
  if (auto red = col.find_clique(0, k, cand.Y)) {
    return Witness{Witness::Kind::RedClique, *red};
  }
  for (int i = 0; i < base.ell.colors(); ++i) {
    if (auto mono = col.find_clique(i + 1, base.ell.parts[i], cand.Y)) {
      return Witness{Witness::Kind::MonoClique, *mono, i + 1,
                     Witness::Side::Y};
    }
  }
  throw InternalContradictionError(
      "no branch met its threshold and Y holds no target clique");
}

}  // namespace

Witness recurse_good(const Coloring& col, const Candidate& cand,
                     const GoodSpec& spec) {
  validate_good_spec(spec, col.colors());
  if (!valid_candidate(cand, col.n())) {
    throw PreconditionError("candidate sets must be disjoint and nonempty");
  }
  return recurse_good_impl(col, cand, spec.k, spec.t, spec, true);
}

Witness recurse_good(const Coloring& col, const Candidate& cand, int k, int l,
                     int t, const Rational& p, const Rational& x) {
  GoodSpec spec;
  spec.k = k;
  spec.ell.parts = {l};
  spec.t = {t};
  spec.theta = {Rational(1)};
  spec.p = p;
  spec.x = x;
  return recurse_good(col, cand, spec);
}

Rational golden_x_below(const Rational& p) {
  QuadraticSurd golden = golden_x(QuadraticSurd(p));
  Real lo = golden.to_real(96, Round::Down);
  mpfr_t scaled;
  mpfr_init2(scaled, 96);
  mpfr_mul_2si(scaled, lo.raw(), 40, MPFR_RNDD);
  mpz_class floor_scaled;
  mpfr_get_z(floor_scaled.get_mpz_t(), scaled, MPFR_RNDD);
  mpfr_clear(scaled);
  Rational x(floor_scaled, mpz_class(1) << 40);
  x.canonicalize();
  while (QuadraticSurd(x) >= golden) x -= Rational(1, mpz_class(1) << 40);
  if (x <= 0) {
    throw DomainError("golden x(p) leaves no positive rational below it");
  }
  return x;
}

namespace {

Candidate candidate_from_mask(int n, uint64_t mask) {
  Candidate cand{VertexSet(n), VertexSet(n)};
  for (int v = 0; v < n; ++v) {
    if ((mask >> v) & 1) {
      cand.X.add(v);
    } else {
      cand.Y.add(v);
    }
  }
  return cand;
}

Rational partition_excess(const Coloring& col, const Candidate& cand,
                          const Rational& p) {
  long e = col.edges_between(0, cand.X, cand.Y);
  return Rational(e) - p * cand.X.count() * cand.Y.count();
}

Candidate best_partition_exhaustive(const Coloring& col, const Rational& p) {
  int n = col.n();
  if (n > 20) throw BudgetError("exhaustive partition search beyond n = 20");
  Candidate best = candidate_from_mask(n, 1);
  Rational best_fp = partition_excess(col, best, p);
  uint64_t limit = (uint64_t{1} << n) - 1;
  for (uint64_t mask = 2; mask < limit; ++mask) {
    Candidate cand = candidate_from_mask(n, mask);
    Rational fp = partition_excess(col, cand, p);
    if (fp > best_fp) {
      best = std::move(cand);
      best_fp = fp;
    }
  }
  return best;
}

Candidate best_partition_random(const Coloring& col, const Rational& p,
                                uint64_t seed, int tries) {
  int n = col.n();
  std::mt19937_64 rng(seed);
  std::optional<Candidate> best;
  Rational best_fp;
  std::vector<int> order(n);
  for (int t = 0; t < tries; ++t) {
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i) {
      int j = static_cast<int>(rng() % (i + 1));
      std::swap(order[i], order[j]);
    }
    Candidate cand{VertexSet(n), VertexSet(n)};
    for (int i = 0; i < n; ++i) {
      if (i < n / 2) {
        cand.X.add(order[i]);
      } else {
        cand.Y.add(order[i]);
      }
    }
    Rational fp = partition_excess(col, cand, p);
    // Greedy single-vertex moves to a local optimum.
    bool improved = true;
    while (improved) {
      improved = false;
      for (int v = 0; v < n; ++v) {
        Candidate moved = cand;
        if (moved.X.contains(v)) {
          if (moved.X.count() == 1) continue;
          moved.X.remove(v);
          moved.Y.add(v);
        } else {
          if (moved.Y.count() == 1) continue;
          moved.Y.remove(v);
          moved.X.add(v);
        }
        Rational moved_fp = partition_excess(col, moved, p);
        if (moved_fp > fp) {
          cand = std::move(moved);
          fp = moved_fp;
          improved = true;
        }
      }
    }
    if (!best || fp > best_fp) {
      best = std::move(cand);
      best_fp = fp;
    }
  }
  return *best;
}

Candidate best_partition(const Coloring& col, const Rational& p,
                         const DescendOptions& opt) {
  switch (opt.strategy) {
    case PartitionStrategy::Exhaustive:
      return best_partition_exhaustive(col, p);
    case PartitionStrategy::RandomGreedy:
      return best_partition_random(col, p, opt.seed, opt.random_tries);
    default:
      return col.n() <= 16
                 ? best_partition_exhaustive(col, p)
                 : best_partition_random(col, p, opt.seed, opt.random_tries);
  }
}

void remap_vertices(std::vector<int>& verts, const std::vector<int>& back) {
  for (int& v : verts) v = back[v];
}

Witness descend_impl(const Coloring& col, int k, std::vector<int> targets,
                     const Rational& p, const Rational& x,
                     const DescendOptions& opt) {
  int n = col.n();
  int c = static_cast<int>(targets.size());

  if (k == 1) return Witness{Witness::Kind::RedClique, {0}};
  for (int i = 0; i < c; ++i) {
    if (targets[i] == 1) {
      return Witness{Witness::Kind::MonoClique, {0}, i + 1,
                     Witness::Side::None};
    }
  }

  long ell = 0;
  for (int t : targets) ell += t;
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < c; ++i) {
      // theta_i (k+l-1)/(k+l) (1-p) n, with theta_i = targets_i / l.
      Rational threshold = Rational(targets[i]) / ell *
                           Rational(k + ell - 1) / (k + ell) * (1 - p) * n;
      long degree = col.neighbors(i + 1, v).count();
      if (degree >= threshold) {
        std::vector<int> back;
        Coloring sub = col.induced(col.neighbors(i + 1, v), &back);
        std::vector<int> reduced = targets;
        --reduced[i];
        Witness w = descend_impl(sub, k, std::move(reduced), p, x, opt);
        remap_vertices(w.vertices, back);
        remap_vertices(w.book_s, back);
        remap_vertices(w.book_t, back);
        if (w.kind == Witness::Kind::MonoClique && w.color == i + 1) {
          w.vertices.insert(w.vertices.begin(), v);
        }
        return w;
      }
    }
  }

  GoodSpec spec;
  spec.k = k;
  spec.ell.parts = targets;
  spec.t = targets;
  spec.theta.reserve(c);
  for (int i = 0; i < c; ++i) spec.theta.push_back(Rational(targets[i]) / ell);
  spec.p = p;
  spec.x = x;
  Rational threshold = good_threshold(spec);

  Candidate cand = best_partition(col, p, opt);
  Rational fp = partition_excess(col, cand, p);
  if (fp < threshold) {
    std::ostringstream msg;
    msg << "best partition excess " << fp.get_str()
        << " is below the goodness threshold " << threshold.get_str();
    throw PartitionShortfallError(msg.str());
  }
  return recurse_good(col, cand, spec);
}

}  // namespace

Witness descend(const Coloring& col, int k, const MulticolorTarget& targets,
                const Rational& p, const DescendOptions& opt) {
  if (k < 1) throw PreconditionError("k must be positive");
  validate_target(targets);
  if (targets.colors() != col.colors()) {
    throw PreconditionError("one target needed per non-red color");
  }
  if (!(0 < p && p < 1)) throw PreconditionError("need 0 < p < 1");
  Rational x = golden_x_below(p);

  if (opt.enforce_size) {
    std::vector<long> parts(targets.parts.begin(), targets.parts.end());
    BoundValue required = thm_easy2_bound(k, parts, QuadraticSurd(p));
    mpz_class needed;
    mpfr_get_z(needed.get_mpz_t(), required.value.raw(), MPFR_RNDU);
    if (mpz_cmp_si(needed.get_mpz_t(), col.n()) > 0) {
      std::ostringstream msg;
      msg << "the density theorem needs at least " << needed.get_str()
          << " vertices here, got " << col.n();
      throw PreconditionError(msg.str());
    }
  }
  return descend_impl(col, k, targets.parts, p, x, opt);
}

Witness blue_book_extract(const Coloring& col, const VertexSet& xset,
                          const Rational& mu, int b, int k, uint64_t seed) {
  if (!(0 < mu && mu < 1)) throw PreconditionError("need 0 < mu < 1");
  if (b < 1 || k < 1) throw PreconditionError("b and k must be positive");
  if (xset.none()) throw PreconditionError("X must be nonempty");

  long m = mpz_class(ceil_rational(Rational(5) * b * b / mu)).get_si();
  long xsize = xset.count();
  if (xsize < 5 * m * m) {
    std::ostringstream msg;
    msg << "|X| = " << xsize << " is below the required 5 m^2 = "
        << 5 * m * m << " (m = " << m << ")";
    throw PreconditionError(msg.str());
  }

  VertexSet w(col.n());
  Rational degree_floor = mu * xsize;
  for (int v : xset.to_vector()) {
    if ((col.neighbors(1, v) & xset).count() >= degree_floor) w.add(v);
  }

  if (auto red = col.find_clique(0, k, w)) {
    return Witness{Witness::Kind::RedClique, *red};
  }
  auto blue = col.find_clique(1, static_cast<int>(m), w);
  if (!blue) {
    throw PreconditionError(
        "high-blue-degree vertices contain neither a red K_k nor a blue "
        "K_m, so the degree hypothesis is unmet at this scale");
  }

  std::vector<int> u = *blue;
  BigInt combos = binomial(static_cast<unsigned long>(m),
                           static_cast<unsigned long>(b));
  std::vector<int> best_s;
  VertexSet best_t(col.n());
  long best_t_size = -1;

  auto consider = [&](const std::vector<int>& s) {
    VertexSet t = xset;
    for (int sv : s) t = t & col.neighbors(1, sv);
    for (int sv : s) t.remove(sv);
    long size = t.count();
    if (size > best_t_size) {
      best_t_size = size;
      best_s = s;
      best_t = std::move(t);
    }
  };

  if (combos <= 100000) {
    std::vector<int> idx(b);
    for (int i = 0; i < b; ++i) idx[i] = i;
    while (true) {
      std::vector<int> s(b);
      for (int i = 0; i < b; ++i) s[i] = u[idx[i]];
      consider(s);
      int i = b - 1;
      while (i >= 0 && idx[i] == static_cast<int>(u.size()) - b + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < b; ++j) idx[j] = idx[j - 1] + 1;
    }
  } else {
    std::mt19937_64 rng(seed);
    std::vector<int> pool = u;
    for (int trial = 0; trial < 10000; ++trial) {
      for (int i = 0; i < b; ++i) {
        int j = i + static_cast<int>(rng() % (pool.size() - i));
        std::swap(pool[i], pool[j]);
      }
      std::vector<int> s(pool.begin(), pool.begin() + b);
      std::sort(s.begin(), s.end());
      consider(s);
    }
  }

  Rational floor_t = pow_int(mu, b) / 2 * xsize;
  if (Rational(best_t_size) < floor_t) {
    throw InternalContradictionError(
        "no b-subset of the blue clique reached the book floor");
  }
  Witness result;
  result.kind = Witness::Kind::BlueBook;
  result.book_s = best_s;
  result.book_t = best_t.to_vector();
  return result;
}

}  // namespace ramsey
